#pragma once

#include <memory>
#include <string>
#include <vector>

#include "recnum/intpoly.hpp"

namespace recnum {

struct CertifiedRoot {
  Ball re, im;   // midpoints; im is the exact zero for real roots
  double radius; // log2 bound on the distance from midpoint to the true root
  bool real = false;
  bool large = false; // |alpha| > 1

  CBall value() const { return CBall(re, im); }
};

// Certified, deterministically ordered roots of P: first the large roots
// (reals ascending, then one representative per conjugate pair by ascending
// argument followed by its conjugate), then the small roots in the same
// scheme.
struct RootSet {
  std::vector<CertifiedRoot> roots;
  int d = 0;
  int p = 0;  // count with |alpha| > 1
  int r1 = 0; // real large roots
  int r2 = 0; // conjugate pairs of large roots
  double radius = 0;
};

struct CompanionSpec {
  IntPoly P;
  int k = 0;
  int d = 0;
  int D = 0; // (k+1) * d
  IntPoly f;  // P^{k+1}; f.c are the recurrence weights A_0..A_D
  mpz_class B;
  long alphabet_bound = 0; // B as a machine integer
  RootSet roots;
  // exact arithmetic is possible when every large root is a rational integer
  bool exact_capable = false;
  std::vector<mpz_class> int_large_roots; // aligned with the r1 large reals

  const std::vector<mpz_class>& A() const { return f.c; }
  double log2_alpha_max = 1.0; // upper bound for log2 max |alpha_j|
};

using SpecPtr = std::shared_ptr<const CompanionSpec>;

inline constexpr mpfr_prec_t kPrecCap = 4096;

// Checks Assumptions 1-2 and builds the certified spec.
// Throws: NotMonic, ZeroConstantTerm, MultipleRoots, UnitCircleRoot,
// PrecisionExhausted.
SpecPtr validate_companion(const std::vector<mpz_class>& P_coeffs, int k,
                           double root_radius_log2 = -133.0);

// Certified roots with deterministic classification; P must be squarefree
// with no unit-circle roots.
RootSet compute_roots(const IntPoly& P, double radius_log2);

// Deterministic (p, r1, r2, ordering) from a raw certified root list.
// A root is treated as real iff its imaginary interval contains zero and
// conjugate-pair matching of the remaining roots succeeds.
RootSet classify_roots(std::vector<CertifiedRoot> raw);

// Newton-polish an existing root set to a tighter radius; ordering kept.
RootSet refine_roots(const IntPoly& P, const RootSet& rs, double radius_log2);

// Large-root views (the ones that parametrize initial values).
std::vector<const CertifiedRoot*> large_roots(const RootSet& rs);

} // namespace recnum

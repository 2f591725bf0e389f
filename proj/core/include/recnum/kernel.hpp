#pragma once

#include <iosfwd>
#include <mutex>
#include <vector>

#include "recnum/algebra.hpp"

namespace recnum {

// Certified envelope |rho_n| <= C * delta^{|n|}.
struct DecayBound {
  double C = 0;
  double delta = 0;
};

// Residue data at the roots: Res(z^{n-1}/f(z), alpha_j) = q_j(n) alpha_j^n
// with deg q_j <= k. Entries follow the order of `roots`; conjugate roots
// carry conjugate polynomials.
struct ResidueBasis {
  std::vector<std::vector<CBall>> q; // per root, coefficients of q_j ascending
  RootSet roots;                     // refined to match prec
  mpfr_prec_t prec = 0;
};

// The h-vector: q_j restricted to the large roots (the coefficients c_{j,l}
// driving reconstruction).
ResidueBasis h_vector(const SpecPtr& spec, mpfr_prec_t prec = 256);

// Residue basis over all roots (large and small) at the given precision.
ResidueBasis residue_basis(const SpecPtr& spec, mpfr_prec_t prec);

// Kernel coefficient rho_n, certified to 2^target_elog.
Ball rho(const SpecPtr& spec, long n, double target_elog);

// Independent check: trapezoidal approximation of the defining contour
// integral on |z| = 1; grid_points must be a power of two >= 64.
Ball rho_quadrature_oracle(const SpecPtr& spec, long n, long grid_points);

DecayBound decay_bound(const SpecPtr& spec);

// Window cache of certified rho values with lazy, synchronized extension.
class RhoTable {
public:
  RhoTable(SpecPtr spec, double target_elog);

  Ball get(long n) const;
  double target_elog() const { return target_; }
  const SpecPtr& spec() const { return spec_; }

  // columns: n, value (decimal string), err
  void dump_csv(std::ostream& os, long lo, long hi) const;

private:
  void ensure(long lo, long hi) const;

  SpecPtr spec_;
  double target_;
  mutable std::mutex mu_;
  mutable long lo_ = 1, hi_ = 0; // cached closed range, empty when lo_ > hi_
  mutable std::vector<Ball> cache_;
};

} // namespace recnum

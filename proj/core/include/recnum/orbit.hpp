#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recnum/kernel.hpp"

namespace recnum {

// Initial value: one polynomial of degree <= k per large root. Real
// coefficients at real large roots; one complex polynomial per conjugate
// pair, the partner being its mirror. The orbit is
//   x_n = sum_j g_j(n) alpha_j^n.
class InitialValue {
public:
  // float coordinates: r1 groups of k+1 real coefficients (ascending power),
  // then r2 groups of k+1 complex coefficients
  InitialValue(SpecPtr spec, std::vector<Ball> real_coords, std::vector<CBall> pair_coords);
  // exact rational coordinates; requires spec->exact_capable
  InitialValue(SpecPtr spec, std::vector<mpq_class> coords);

  static InitialValue zero(SpecPtr spec);
  static InitialValue random(SpecPtr spec, std::uint64_t seed);

  const SpecPtr& spec() const { return spec_; }
  bool exact() const { return exact_; }
  bool is_zero() const;
  int coords_per_group() const { return spec_->k + 1; }

  const std::vector<mpq_class>& rational_coords() const { return xq_; }
  const std::vector<Ball>& real_coords() const { return xr_; }
  const std::vector<CBall>& pair_coords() const { return xc_; }

  // flattened real view (pairs expanded to re, im) for distances and reports
  std::vector<Ball> flat() const;

private:
  SpecPtr spec_;
  bool exact_ = false;
  std::vector<mpq_class> xq_;
  std::vector<Ball> xr_;
  std::vector<CBall> xc_;
};

// x_n(g), certified to 2^target_elog. Throws PrecisionExhausted past the
// schedule cap.
Ball orbit_value(const InitialValue& g, long n, double target_elog);
std::optional<mpq_class> orbit_value_exact(const InitialValue& g, long n);

// tau^steps; negative steps apply the inverse shift.
InitialValue shift_initial(const InitialValue& g, long steps);

// R >= 0 such that s_m(g) = 0 for every m < -R.
long support_bound(const InitialValue& g);

// Canonical digits s_m for m in [m_lo, m_hi], inclusive. Every digit is
// certified exact; UndecidableRounding carries the offending index.
std::vector<long> canonical_digits(const InitialValue& g, long m_lo, long m_hi);

// A certified e-value; `exact` is set on the exact rational path where the
// value admits error-free comparisons.
struct EValue {
  double approx = 0;
  double elog = Ball::kExact; // log2 error bound valid for `approx`
  const mpq_class* exact = nullptr;
};

// Forward scanner over the orbit: yields e(x_m(g)) and canonical digits at
// amortized O(1) big-number work per step. Exact rational state when the
// spec admits it; otherwise stride-anchored iteration at full precision with
// certified error tracking.
class OrbitIter {
public:
  // Scans m in [start, end_hint); end_hint sizes the anchor precision and is
  // a hard bound for the float path.
  OrbitIter(const InitialValue& g, long start, long end_hint);
  ~OrbitIter();
  OrbitIter(OrbitIter&&) noexcept;

  long pos() const { return pos_; }
  // e(x_m) at the current position
  EValue e_current();
  // s_m at the current position, then advance to m+1
  long digit_and_advance();
  void advance();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  long pos_;
};

} // namespace recnum

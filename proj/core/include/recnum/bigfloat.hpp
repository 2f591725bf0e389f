#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <climits>
#include <string>

namespace recnum {

// RAII wrapper over mpfr_t. Each value carries its own precision; binary
// operations round to the larger precision of the two operands. All rounding
// is to nearest. The `*_t` variants return the MPFR ternary flag (0 means the
// stored result is exact), which the certified layer in ball.hpp uses.
class Real {
public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec = 64);
  static Real of(long x, mpfr_prec_t prec = 64);
  static Real of(const mpz_class& z, mpfr_prec_t prec);
  static Real of(const mpq_class& q, mpfr_prec_t prec);
  static Real parse(const std::string& s, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  // Rounds the current value to a new precision.
  Real at(mpfr_prec_t prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  // Exponent e with 2^{e-1} <= |x| < 2^e; exp_min() for zero.
  long exp2() const { return is_zero() ? exp_min() : static_cast<long>(mpfr_get_exp(v_)); }
  static constexpr long exp_min() { return LONG_MIN / 4; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal string, round-trip faithful for the stored precision.
  std::string str(size_t digits = 0) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend int cmpabs(const Real& a, const Real& b) { return mpfr_cmpabs(a.v_, b.v_); }
  int cmp_si(long x) const { return mpfr_cmp_si(v_, x); }

  friend Real operator-(const Real& a);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  // Ternary-reporting variants used by the certified layer.
  static Real add_t(const Real& a, const Real& b, int& t);
  static Real sub_t(const Real& a, const Real& b, int& t);
  static Real mul_t(const Real& a, const Real& b, int& t);
  static Real div_t(const Real& a, const Real& b, int& t);
  static Real sqrt_t(const Real& a, int& t);
  static Real pow_si_t(const Real& a, long e, int& t);

  friend Real abs(const Real& a);
  friend Real mul_2si(const Real& a, long e); // exact
  friend Real floor(const Real& a);

  // u(x) = floor(x + 1/2), the integer part under e(x) in [-1/2, 1/2).
  mpz_class round_half_up() const;
  mpz_class floor_mpz() const;

  static Real pi(mpfr_prec_t prec);
  friend Real sin(const Real& a);
  friend Real cos(const Real& a);
  friend Real sqrt(const Real& a);

private:
  mpfr_t v_;
};

} // namespace recnum

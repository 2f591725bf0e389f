#pragma once

#include <cmath>
#include <limits>

#include "recnum/bigfloat.hpp"

namespace recnum {

// Certified value: midpoint plus a log2-domain absolute error bound. Error
// bounds live in log2 space because magnitudes reach 2^(+-700000) in deep
// orbit evaluations, far outside double range.
struct Ball {
  Real mid;
  double elog = kExact; // log2 of the absolute error bound

  static constexpr double kExact = -std::numeric_limits<double>::infinity();

  Ball() = default;
  explicit Ball(Real m, double e = kExact) : mid(std::move(m)), elog(e) {}

  static Ball exact_int(long v, mpfr_prec_t prec = 64);
  static Ball exact_zero(mpfr_prec_t prec = 64) { return Ball(Real(prec)); }
  static Ball of(const mpz_class& z, mpfr_prec_t prec);
  static Ball of(const mpq_class& q, mpfr_prec_t prec);
  static Ball of_double(double d, double elog = kExact);

  bool is_exact() const { return elog == kExact; }
  // Upper bound for log2|x| over the ball.
  double logmag() const;
  // +1/-1 when the sign is certified, 0 when the ball straddles zero.
  int certified_sgn() const;

  double to_double() const { return mid.to_double(); }
  // log2 error bound valid for the double approximation.
  double double_elog() const;
};

double log2add(double a, double b);
// Certified lower bound for log2|x|, or -inf when the ball may contain zero.
double lower_logmag(const Ball& x);

Ball operator-(const Ball& a);
Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);
Ball abs(const Ball& a);
Ball mul_2si(const Ball& a, long e);
Ball sqrt(const Ball& a);
Ball pow_si(const Ball& a, long n);

bool certainly_less(const Ball& a, const Ball& b);
// |a - b| certified <= 2^eps_log
bool certified_within(const Ball& a, const Ball& b, double eps_log);

// Certified complex value with component-wise bounds.
struct CBall {
  Ball re, im;

  CBall() = default;
  CBall(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}
  static CBall real(Ball r) {
    CBall c;
    c.re = std::move(r);
    c.im = Ball::exact_zero();
    return c;
  }
  double logmag() const { return log2add(re.logmag(), im.logmag()); }
};

CBall operator-(const CBall& a);
CBall operator+(const CBall& a, const CBall& b);
CBall operator-(const CBall& a, const CBall& b);
CBall operator*(const CBall& a, const CBall& b);
CBall operator/(const CBall& a, const CBall& b);
CBall conj(const CBall& a);
CBall pow_si(const CBall& a, long n);

// Unique split x = u + e with e in [-1/2, 1/2).
struct UnitSplit {
  mpz_class u;
  Ball e;
};

// Throws Errc::undecidable_rounding when the ball straddles a half-integer.
UnitSplit split_unit(const Ball& x);

} // namespace recnum

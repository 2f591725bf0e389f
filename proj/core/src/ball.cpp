#include "recnum/ball.hpp"

#include <algorithm>

#include "recnum/errors.hpp"

namespace recnum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Safety pad so that double rounding in bound arithmetic stays conservative.
constexpr double kPad = 1e-9;

double round_term(const Real& r, int ternary) {
  if (ternary == 0) return Ball::kExact;
  return static_cast<double>(r.exp2() - r.prec()) + kPad;
}

double exp_or_neginf(const Real& r) {
  return r.is_zero() ? -kInf : static_cast<double>(r.exp2());
}

} // namespace

double log2add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -kInf) return a;
  return a + std::log1p(std::exp2(b - a)) * 1.4426950408889634 + kPad;
}

double lower_logmag(const Ball& x) {
  if (x.mid.is_zero()) return -kInf;
  double e = static_cast<double>(x.mid.exp2());
  if (x.elog > e - 2) return -kInf;
  return e - 2;
}

Ball Ball::exact_int(long v, mpfr_prec_t prec) { return Ball(Real::of(v, std::max<mpfr_prec_t>(prec, 64))); }

Ball Ball::of(const mpz_class& z, mpfr_prec_t prec) {
  Real m(prec);
  int t = mpfr_set_z(m.raw(), z.get_mpz_t(), MPFR_RNDN);
  double e = t == 0 ? kExact : static_cast<double>(m.exp2() - prec) + kPad;
  return Ball(std::move(m), e);
}

Ball Ball::of(const mpq_class& q, mpfr_prec_t prec) {
  Real m(prec);
  int t = mpfr_set_q(m.raw(), q.get_mpq_t(), MPFR_RNDN);
  double e = t == 0 ? kExact : static_cast<double>(m.exp2() - prec) + kPad;
  return Ball(std::move(m), e);
}

Ball Ball::of_double(double d, double elog) { return Ball(Real::of(d, 64), elog); }

double Ball::logmag() const { return log2add(exp_or_neginf(mid), elog); }

int Ball::certified_sgn() const {
  if (mid.is_zero()) return 0;
  double lb = static_cast<double>(mid.exp2() - 1);
  if (elog < lb) return mid.sgn();
  return 0;
}

double Ball::double_elog() const {
  // conversion to double adds at most one double ulp relative error
  double conv = mid.is_zero() ? -1075.0 : static_cast<double>(mid.exp2()) - 52.0;
  return log2add(elog, conv);
}

Ball operator-(const Ball& a) { return Ball(-a.mid, a.elog); }

Ball operator+(const Ball& a, const Ball& b) {
  int t;
  Real m = Real::add_t(a.mid, b.mid, t);
  double e = log2add(log2add(a.elog, b.elog), round_term(m, t));
  return Ball(std::move(m), e);
}

Ball operator-(const Ball& a, const Ball& b) {
  int t;
  Real m = Real::sub_t(a.mid, b.mid, t);
  double e = log2add(log2add(a.elog, b.elog), round_term(m, t));
  return Ball(std::move(m), e);
}

Ball operator*(const Ball& a, const Ball& b) {
  int t;
  Real m = Real::mul_t(a.mid, b.mid, t);
  double e = log2add(exp_or_neginf(a.mid) + b.elog, exp_or_neginf(b.mid) + a.elog);
  e = log2add(e, a.elog + b.elog);
  e = log2add(e, round_term(m, t));
  return Ball(std::move(m), e);
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.mid.is_zero() || b.elog >= static_cast<double>(b.mid.exp2() - 2))
    fail(Errc::precision_exhausted, "division by a ball straddling zero");
  int t;
  Real m = Real::div_t(a.mid, b.mid, t);
  // |a/b - m| <= (err_a + |q| err_b) / (|b| - err_b) + rounding, |b| - err_b >= 2^{eb-2}
  double denom = static_cast<double>(b.mid.exp2() - 2);
  double e = log2add(a.elog, exp_or_neginf(m) + b.elog);
  e = log2add(e - denom, round_term(m, t));
  return Ball(std::move(m), e);
}

Ball abs(const Ball& a) { return Ball(abs(a.mid), a.elog); }

Ball mul_2si(const Ball& a, long e) { return Ball(mul_2si(a.mid, e), a.elog == Ball::kExact ? Ball::kExact : a.elog + e); }

Ball sqrt(const Ball& a) {
  if (a.mid.sgn() < 0) fail(Errc::invalid_argument, "sqrt of negative ball");
  if (!a.mid.is_zero() && a.elog >= static_cast<double>(a.mid.exp2() - 2))
    fail(Errc::precision_exhausted, "sqrt of a ball straddling zero");
  int t;
  Real m = Real::sqrt_t(a.mid, t);
  double e;
  if (a.mid.is_zero()) {
    e = a.elog / 2 + kPad;
  } else {
    // |delta| <= err / (2 sqrt(lb)), lb >= 2^{exp-2}
    e = a.elog - 1.0 - 0.5 * static_cast<double>(a.mid.exp2() - 2);
  }
  e = log2add(e, round_term(m, t));
  return Ball(std::move(m), e);
}

Ball pow_si(const Ball& a, long n) {
  if (n == 0) return Ball::exact_int(1, a.mid.prec());
  if (n < 0) {
    Ball inv = Ball::exact_int(1, a.mid.prec()) / a;
    return pow_si(inv, -n);
  }
  if (a.mid.is_zero()) {
    // |x| <= err, so |x^n| <= err^n
    return Ball(Real(a.mid.prec()), a.elog * static_cast<double>(n));
  }
  // require small relative error so the first-order bound below is valid
  double rel = a.elog - static_cast<double>(a.mid.exp2() - 1);
  if (a.elog != Ball::kExact && rel + std::log2(static_cast<double>(n)) > -4)
    fail(Errc::precision_exhausted, "pow_si: relative error too large");
  int t;
  Real m = Real::pow_si_t(a.mid, n, t);
  double e = round_term(m, t);
  if (a.elog != Ball::kExact) {
    // |delta(a^n)| <= 1.2 n |a|^{n-1} err
    double d = std::log2(static_cast<double>(n)) + static_cast<double>(n - 1) * static_cast<double>(a.mid.exp2()) +
               a.elog + 0.3;
    e = log2add(e, d);
  }
  return Ball(std::move(m), e);
}

bool certainly_less(const Ball& a, const Ball& b) {
  Ball d = b - a;
  return d.certified_sgn() > 0;
}

bool certified_within(const Ball& a, const Ball& b, double eps_log) {
  Ball d = a - b;
  return d.logmag() <= eps_log;
}

CBall operator-(const CBall& a) { return CBall(-a.re, -a.im); }
CBall operator+(const CBall& a, const CBall& b) { return CBall(a.re + b.re, a.im + b.im); }
CBall operator-(const CBall& a, const CBall& b) { return CBall(a.re - b.re, a.im - b.im); }

CBall operator*(const CBall& a, const CBall& b) {
  return CBall(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

CBall operator/(const CBall& a, const CBall& b) {
  Ball n2 = b.re * b.re + b.im * b.im;
  CBall num = a * conj(b);
  return CBall(num.re / n2, num.im / n2);
}

CBall conj(const CBall& a) { return CBall(a.re, -a.im); }

CBall pow_si(const CBall& a, long n) {
  if (n == 0) return CBall::real(Ball::exact_int(1));
  if (n < 0) {
    CBall inv = CBall::real(Ball::exact_int(1, a.re.mid.prec())) / a;
    return pow_si(inv, -n);
  }
  CBall base = a;
  CBall acc = CBall::real(Ball::exact_int(1, a.re.mid.prec()));
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

UnitSplit split_unit(const Ball& x) {
  mpz_class u = x.mid.round_half_up();
  // distance from x.mid to the nearest half-integer boundary decides validity
  long e = x.mid.is_zero() ? 2 : std::max<long>(x.mid.exp2(), 2);
  mpfr_prec_t p = std::max<long>(x.mid.prec(), e + 2) + 8;
  Real y(p);
  mpfr_add_d(y.raw(), x.mid.raw(), 0.5, MPFR_RNDN); // exact at this precision
  Real f(p);
  mpfr_frac(f.raw(), y.raw(), MPFR_RNDN); // exact
  if (f.sgn() < 0) {
    mpfr_add_si(f.raw(), f.raw(), 1, MPFR_RNDN);
  }
  // f in [0,1): distance to boundary is min(f, 1-f)
  if (!x.is_exact()) {
    double df = std::abs(f.to_double());
    double dist = std::min(df, 1.0 - df);
    double dist_log = dist > 0 ? std::log2(dist) : -kInf;
    if (f.is_zero()) dist_log = -kInf; // exactly on boundary but midpoint inexact
    if (x.elog >= dist_log - 1e-6)
      fail(Errc::undecidable_rounding, "value within error bound of a half-integer");
  }
  Real em(std::max<mpfr_prec_t>(x.mid.prec(), 64));
  int t = mpfr_sub_z(em.raw(), x.mid.raw(), u.get_mpz_t(), MPFR_RNDN);
  double elog = log2add(x.elog, round_term(em, t));
  return UnitSplit{std::move(u), Ball(std::move(em), elog)};
}

} // namespace recnum

#include "recnum/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "recnum/errors.hpp"

namespace recnum {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_monic: return "NotMonic";
    case Errc::zero_constant_term: return "ZeroConstantTerm";
    case Errc::multiple_roots: return "MultipleRoots";
    case Errc::unit_circle_root: return "UnitCircleRoot";
    case Errc::precision_exhausted: return "PrecisionExhausted";
    case Errc::ambiguous_realness: return "AmbiguousRealness";
    case Errc::undecidable_rounding: return "UndecidableRounding";
    case Errc::digit_out_of_range: return "DigitOutOfRange";
    case Errc::gap_too_coarse: return "GapTooCoarse";
    case Errc::seed_rejected: return "SeedRejected";
    case Errc::horizon_exceeded: return "HorizonExceeded";
    case Errc::length_beyond_stages: return "LengthBeyondStages";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Real Real::of(double x, mpfr_prec_t prec) {
  Real r(std::max<mpfr_prec_t>(prec, 53));
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::of(long x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const mpq_class& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    fail(Errc::invalid_argument, "cannot parse real literal '" + s + "'");
  return r;
}

Real Real::at(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(size_t digits) const {
  if (digits == 0) digits = static_cast<size_t>(prec() * 0.3010299957) + 3;
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
  return std::string(buf.data());
}

static mpfr_prec_t join_prec(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}

Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

#define RECNUM_BINOP(name, fun)                       \
  Real operator name(const Real& a, const Real& b) { \
    Real r(join_prec(a, b));                          \
    fun(r.raw(), a.raw(), b.raw(), MPFR_RNDN);        \
    return r;                                         \
  }
RECNUM_BINOP(+, mpfr_add)
RECNUM_BINOP(-, mpfr_sub)
RECNUM_BINOP(*, mpfr_mul)
RECNUM_BINOP(/, mpfr_div)
#undef RECNUM_BINOP

Real Real::add_t(const Real& a, const Real& b, int& t) {
  Real r(join_prec(a, b));
  t = mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real Real::sub_t(const Real& a, const Real& b, int& t) {
  Real r(join_prec(a, b));
  t = mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real Real::mul_t(const Real& a, const Real& b, int& t) {
  Real r(join_prec(a, b));
  t = mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real Real::div_t(const Real& a, const Real& b, int& t) {
  Real r(join_prec(a, b));
  t = mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real Real::sqrt_t(const Real& a, int& t) {
  Real r(a.prec());
  t = mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}
Real Real::pow_si_t(const Real& a, long e, int& t) {
  Real r(a.prec());
  t = mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real mul_2si(const Real& a, long e) {
  Real r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

Real floor(const Real& a) {
  Real r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

mpz_class Real::round_half_up() const {
  // floor(x + 1/2), exactly: the sum is computed with enough precision that
  // floor is exact.
  Real y(prec() + 4);
  mpfr_add_d(y.v_, v_, 0.5, MPFR_RNDD); // directed rounding keeps ties exact
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), y.v_, MPFR_RNDD);
  return out;
}

mpz_class Real::floor_mpz() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDD);
  return out;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real sin(const Real& a) {
  Real r(a.prec());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real cos(const Real& a) {
  Real r(a.prec());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

} // namespace recnum

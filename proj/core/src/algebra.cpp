#include "recnum/algebra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "recnum/errors.hpp"

namespace recnum {

namespace {

void strip_err(Ball& b) { b.elog = Ball::kExact; }
void strip_err(CBall& z) {
  strip_err(z.re);
  strip_err(z.im);
}

// Cauchy bound: all roots have |z| < 1 + max |a_i| (monic).
mpq_class root_bound(const IntPoly& P) {
  mpz_class m = 0;
  for (size_t i = 0; i + 1 < P.c.size(); ++i) {
    mpz_class a = abs(P.c[i]);
    if (a > m) m = a;
  }
  return mpq_class(m + 2);
}

struct IsolatedRoot {
  mpq_class lo, hi; // root in (lo, hi], lo == hi for an exact rational root
};

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& P, const SturmChain& chain) {
  std::vector<IsolatedRoot> out;
  mpq_class M = root_bound(P);
  struct Seg {
    mpq_class lo, hi;
    long cnt;
  };
  std::vector<Seg> work;
  long total = chain.count_in(-M, M);
  if (total == 0) return out;
  work.push_back({-M, M, total});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.cnt == 0) continue;
    if (s.cnt == 1) {
      // tighten a little so later Newton starts close
      for (int i = 0; i < 8; ++i) {
        mpq_class mid = (s.lo + s.hi) / 2;
        if (P.eval_q(mid) == 0) {
          out.push_back({mid, mid});
          goto next;
        }
        long left = chain.count_in(s.lo, mid);
        if (left == 1)
          s.hi = mid;
        else
          s.lo = mid;
      }
      out.push_back({s.lo, s.hi});
    next:;
      continue;
    }
    mpq_class mid = (s.lo + s.hi) / 2;
    if (P.eval_q(mid) == 0) {
      // exact rational root at mid; carve out a width that isolates it
      mpq_class h(1, 2);
      while (chain.count_in(mid - h, mid) != 1) h /= 2;
      out.push_back({mid, mid});
      work.push_back({s.lo, mid - h, chain.count_in(s.lo, mid - h)});
      work.push_back({mid, s.hi, chain.count_in(mid, s.hi)});
      continue;
    }
    long left = chain.count_in(s.lo, mid);
    work.push_back({s.lo, mid, left});
    work.push_back({mid, s.hi, s.cnt - left});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.hi < b.hi; });
  return out;
}

// log2 of the classical inclusion radius d * |P(z)| / |P'(z)|.
double inclusion_radius(const IntPoly& P, const IntPoly& Pd, const CBall& z) {
  CBall pz = P.eval(z);
  CBall pdz = Pd.eval(z);
  Ball n2p = pz.re * pz.re + pz.im * pz.im;
  Ball n2d = pdz.re * pdz.re + pdz.im * pdz.im;
  double up = n2p.logmag() / 2;
  double lo = lower_logmag(n2d) / 2;
  if (lo == -std::numeric_limits<double>::infinity()) return std::numeric_limits<double>::infinity();
  return std::log2(static_cast<double>(P.degree())) + up - lo + 1e-9;
}

double inclusion_radius_real(const IntPoly& P, const IntPoly& Pd, const Ball& x) {
  Ball px = P.eval(x);
  Ball pdx = Pd.eval(x);
  double lo = lower_logmag(pdx);
  if (lo == -std::numeric_limits<double>::infinity()) return std::numeric_limits<double>::infinity();
  return std::log2(static_cast<double>(P.degree())) + px.logmag() - lo + 1e-9;
}

Ball newton_polish_real(const IntPoly& P, const IntPoly& Pd, Ball x, mpfr_prec_t prec, double target) {
  x.mid = x.mid.at(prec);
  strip_err(x);
  for (int it = 0; it < 80; ++it) {
    double r = inclusion_radius_real(P, Pd, x);
    if (r <= target) break;
    Ball px = P.eval(x);
    Ball pdx = Pd.eval(x);
    if (pdx.certified_sgn() == 0) break;
    Ball step = px / pdx;
    x = x - step;
    strip_err(x);
  }
  return x;
}

CBall newton_polish_complex(const IntPoly& P, const IntPoly& Pd, CBall z, mpfr_prec_t prec, double target) {
  z.re.mid = z.re.mid.at(prec);
  z.im.mid = z.im.mid.at(prec);
  strip_err(z);
  for (int it = 0; it < 80; ++it) {
    double r = inclusion_radius(P, Pd, z);
    if (r <= target) break;
    CBall pz = P.eval(z);
    CBall pdz = Pd.eval(z);
    Ball n2 = pdz.re * pdz.re + pdz.im * pdz.im;
    if (lower_logmag(n2) == -std::numeric_limits<double>::infinity()) break;
    CBall step = pz / pdz;
    z = z - step;
    strip_err(z);
  }
  return z;
}

std::vector<std::complex<double>> companion_eigenvalues(const IntPoly& P) {
  int d = P.degree();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -P.c[static_cast<size_t>(i)].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

// Modulus of z versus 1, certified: -1 small, +1 large, 0 undecided.
int modulus_vs_one(const CBall& z) {
  Ball n2 = z.re * z.re + z.im * z.im;
  Ball one = Ball::exact_int(1);
  if (certainly_less(one, n2)) return 1;
  if (certainly_less(n2, one)) return -1;
  return 0;
}

struct OrderKey {
  int group;   // 0 large-real, 1 large-pair, 2 small-real, 3 small-pair
  double a, b; // within-group keys
  int sub;     // 0 rep, 1 conj
};

} // namespace

std::vector<const CertifiedRoot*> large_roots(const RootSet& rs) {
  std::vector<const CertifiedRoot*> out;
  for (const auto& r : rs.roots)
    if (r.large) out.push_back(&r);
  return out;
}

RootSet classify_roots(std::vector<CertifiedRoot> raw) {
  const double inf = std::numeric_limits<double>::infinity();
  size_t n = raw.size();
  // realness: imaginary interval contains zero
  std::vector<bool> im_contains_zero(n), paired(n, false);
  for (size_t i = 0; i < n; ++i) {
    const Ball& im = raw[i].im;
    double mag = im.mid.is_zero() ? -inf : static_cast<double>(im.mid.exp2());
    im_contains_zero[i] = im.mid.is_zero() || mag <= raw[i].radius;
  }
  // conjugate matching among roots with nonzero imaginary midpoints
  std::vector<int> partner(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (im_contains_zero[i] || partner[i] >= 0) continue;
    int best = -1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i || partner[j] >= 0 || im_contains_zero[j]) continue;
      if (raw[i].im.mid.sgn() == raw[j].im.mid.sgn()) continue;
      Ball dre = raw[i].re - raw[j].re;
      Ball dim = raw[i].im + raw[j].im;
      double dist = log2add(dre.logmag(), dim.logmag());
      if (dist <= log2add(raw[i].radius, raw[j].radius) + 1) {
        if (best >= 0) fail(Errc::ambiguous_realness, "multiple conjugate candidates");
        best = static_cast<int>(j);
      }
    }
    if (best < 0) fail(Errc::ambiguous_realness, "no conjugate partner for a nonreal root");
    partner[i] = best;
    partner[static_cast<size_t>(best)] = static_cast<int>(i);
  }
  for (size_t i = 0; i < n; ++i) {
    if (im_contains_zero[i] && partner[i] < 0) {
      raw[i].real = true;
      raw[i].im = Ball::exact_zero(raw[i].re.mid.prec());
    } else if (partner[i] < 0) {
      fail(Errc::ambiguous_realness, "imaginary interval excludes zero but no partner found");
    }
  }
  // large/small flags
  for (auto& r : raw) {
    int side = modulus_vs_one(r.value());
    if (side == 0) fail(Errc::precision_exhausted, "root modulus not certified away from 1");
    r.large = side > 0;
  }
  // mirror pairs exactly: representative has positive imaginary part
  for (size_t i = 0; i < n; ++i) {
    int j = partner[i];
    if (j < 0 || j < static_cast<int>(i)) continue;
    size_t rep = raw[i].im.mid.sgn() > 0 ? i : static_cast<size_t>(j);
    size_t con = rep == i ? static_cast<size_t>(j) : i;
    raw[con].re = raw[rep].re;
    raw[con].im = -raw[rep].im;
    raw[con].radius = raw[rep].radius;
  }

  std::vector<OrderKey> keys(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& r = raw[i];
    if (r.real) {
      keys[i] = {r.large ? 0 : 2, r.re.to_double(), 0.0, 0};
    } else {
      double arg = std::atan2(std::abs(r.im.to_double()), r.re.to_double());
      double mod = std::hypot(r.re.to_double(), r.im.to_double());
      keys[i] = {r.large ? 1 : 3, arg, mod, r.im.mid.sgn() > 0 ? 0 : 1};
    }
  }
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const auto& ka = keys[a];
    const auto& kb = keys[b];
    if (ka.group != kb.group) return ka.group < kb.group;
    if (ka.a != kb.a) return ka.a < kb.a;
    if (ka.b != kb.b) return ka.b < kb.b;
    return ka.sub < kb.sub;
  });

  RootSet rs;
  rs.d = static_cast<int>(n);
  rs.radius = -inf;
  for (size_t idx : order) {
    const auto& r = raw[idx];
    if (r.large) {
      ++rs.p;
      if (r.real)
        ++rs.r1;
    }
    rs.radius = std::max(rs.radius, r.radius);
    rs.roots.push_back(r);
  }
  rs.r2 = (rs.p - rs.r1) / 2;
  if (rs.r1 + 2 * rs.r2 != rs.p) fail(Errc::ambiguous_realness, "inconsistent large-root pairing");
  return rs;
}

RootSet compute_roots(const IntPoly& P, double radius_log2) {
  int d = P.degree();
  if (d < 1) fail(Errc::invalid_argument, "constant polynomial has no roots");
  IntPoly Pd = derivative(P);
  SturmChain chain(P);
  auto iso = isolate_real_roots(P, chain);
  auto est = companion_eigenvalues(P);

  long n_real = static_cast<long>(iso.size());
  // the (d - n_real)/2 estimates with the largest |Im| are the pair reps
  std::sort(est.begin(), est.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              return std::abs(a.imag()) > std::abs(b.imag());
            });
  long n_pairs = (d - n_real) / 2;
  std::vector<std::complex<double>> reps;
  for (long i = 0; i < 2 * n_pairs; ++i) {
    if (est[static_cast<size_t>(i)].imag() > 0) reps.push_back(est[static_cast<size_t>(i)]);
  }
  if (static_cast<long>(reps.size()) != n_pairs)
    fail(Errc::ambiguous_realness, "estimate pairing inconsistent with exact real-root count");

  for (mpfr_prec_t prec = 192; prec <= kPrecCap; prec *= 2) {
    std::vector<CertifiedRoot> raw;
    bool ok = true;
    for (const auto& r : iso) {
      Ball x(Real(prec));
      if (r.lo == r.hi) {
        x = Ball::of(r.lo, prec);
      } else {
        mpq_class mid = (r.lo + r.hi) / 2;
        x = newton_polish_real(P, Pd, Ball::of(mid, prec), prec, radius_log2 - 2);
      }
      double rad = r.lo == r.hi ? -std::numeric_limits<double>::infinity()
                                : inclusion_radius_real(P, Pd, x);
      if (rad > radius_log2) {
        ok = false;
        break;
      }
      CertifiedRoot cr;
      cr.re = x;
      cr.re.elog = Ball::kExact;
      cr.im = Ball::exact_zero(prec);
      cr.radius = rad;
      cr.real = true;
      raw.push_back(cr);
    }
    if (ok) {
      for (const auto& e : reps) {
        CBall z(Ball::of_double(e.real()), Ball::of_double(e.imag()));
        z.re.mid = z.re.mid.at(prec);
        z.im.mid = z.im.mid.at(prec);
        z = newton_polish_complex(P, Pd, z, prec, radius_log2 - 2);
        double rad = inclusion_radius(P, Pd, z);
        if (rad > radius_log2) {
          ok = false;
          break;
        }
        // the pair must be certified off the real axis
        double immag = z.im.mid.is_zero() ? -std::numeric_limits<double>::infinity()
                                          : static_cast<double>(z.im.mid.exp2());
        if (immag <= rad + 1) {
          ok = false;
          break;
        }
        CertifiedRoot rep;
        rep.re = z.re;
        rep.im = z.im;
        rep.radius = rad;
        raw.push_back(rep);
        CertifiedRoot con = rep;
        con.im = -rep.im;
        raw.push_back(con);
      }
    }
    if (!ok) continue;
    // pairwise disk separation certifies the d disks hold d distinct roots
    bool sep = true;
    for (size_t i = 0; i < raw.size() && sep; ++i)
      for (size_t j = i + 1; j < raw.size() && sep; ++j) {
        Ball dre = raw[i].re - raw[j].re;
        Ball dim = raw[i].im - raw[j].im;
        double dist = lower_logmag(dre * dre + dim * dim) / 2;
        if (dist <= log2add(raw[i].radius, raw[j].radius) + 1) sep = false;
      }
    if (!sep) continue;
    try {
      return classify_roots(std::move(raw));
    } catch (const Error& e) {
      if (e.code() == Errc::precision_exhausted && prec < kPrecCap) continue;
      throw;
    }
  }
  fail(Errc::precision_exhausted, "cannot certify roots at the precision cap");
}

RootSet refine_roots(const IntPoly& P, const RootSet& rs, double radius_log2) {
  if (rs.radius <= radius_log2) return rs;
  IntPoly Pd = derivative(P);
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<double>(192, -radius_log2 + 64));
  RootSet out = rs;
  out.radius = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < out.roots.size(); ++i) {
    auto& r = out.roots[i];
    if (r.real) {
      r.re = newton_polish_real(P, Pd, r.re, prec, radius_log2 - 2);
      r.im = Ball::exact_zero(prec);
      r.radius = inclusion_radius_real(P, Pd, r.re);
    } else if (r.im.mid.sgn() > 0) {
      CBall z = newton_polish_complex(P, Pd, r.value(), prec, radius_log2 - 2);
      r.re = z.re;
      r.im = z.im;
      r.radius = inclusion_radius(P, Pd, z);
    } else {
      // mirror of the representative refined just before it
      auto& rep = out.roots[i - 1];
      r.re = rep.re;
      r.im = -rep.im;
      r.radius = rep.radius;
    }
    if (r.radius > radius_log2)
      fail(Errc::precision_exhausted, "root refinement stalled above the target radius");
    out.radius = std::max(out.radius, r.radius);
  }
  return out;
}

namespace {

// Exact pre-filter for Assumption 2: a unit-circle root of P is shared with
// the reciprocal polynomial, so gcd(P, X^d P(1/X)) constant certifies the
// assumption without any numerics.
void check_unit_circle(const IntPoly& P) {
  mpz_class at1 = P.eval_z(1), atm1 = P.eval_z(-1);
  if (at1 == 0 || atm1 == 0) fail(Errc::unit_circle_root, "P has a root at +-1");
  IntPoly g = poly_gcd(P, reverse(P));
  if (g.degree() <= 0) return;
  // candidate reciprocal pairs: decide each gcd root's modulus numerically
  try {
    RootSet rs = compute_roots(g, -80.0);
    (void)rs; // compute_roots certifies every modulus away from 1 or throws
  } catch (const Error& e) {
    if (e.code() == Errc::precision_exhausted)
      fail(Errc::unit_circle_root, "a root modulus is not separable from 1 at the precision cap");
    throw;
  }
}

} // namespace

SpecPtr validate_companion(const std::vector<mpz_class>& P_coeffs, int k, double root_radius_log2) {
  if (P_coeffs.empty()) fail(Errc::invalid_argument, "empty coefficient list");
  if (k < 0) fail(Errc::invalid_argument, "k must be nonnegative");
  if (P_coeffs.back() != 1) fail(Errc::not_monic, "leading coefficient must be 1");
  IntPoly P{std::vector<mpz_class>(P_coeffs)};
  if (P.degree() < 1) fail(Errc::invalid_argument, "degree must be positive");
  if (P.c.front() == 0) fail(Errc::zero_constant_term, "constant coefficient is zero");
  if (!is_squarefree(P)) fail(Errc::multiple_roots, "gcd(P, P') is nonconstant");
  check_unit_circle(P);

  auto spec = std::make_shared<CompanionSpec>();
  spec->P = P;
  spec->k = k;
  spec->d = P.degree();
  spec->D = (k + 1) * spec->d;
  spec->f = pow(P, static_cast<unsigned>(k + 1));
  mpz_class s = 0;
  for (const auto& a : spec->f.c) s += abs(a);
  spec->B = s / 2;
  spec->alphabet_bound = spec->B.get_si();
  spec->roots = compute_roots(P, root_radius_log2);

  spec->exact_capable = spec->roots.r2 == spec->roots.p - spec->roots.r1 && spec->roots.r2 == 0;
  for (const auto& r : spec->roots.roots) {
    if (!r.large) continue;
    if (!r.real) {
      spec->exact_capable = false;
      break;
    }
    mpz_class z = r.re.mid.round_half_up();
    Ball diff = r.re - Ball::of(z, r.re.mid.prec());
    if (P.eval_z(z) == 0 && diff.logmag() < -4) {
      spec->int_large_roots.push_back(z);
    } else {
      spec->exact_capable = false;
      break;
    }
  }
  if (!spec->exact_capable) spec->int_large_roots.clear();

  double lmax = 0.1;
  for (const auto& r : spec->roots.roots) {
    Ball n2 = r.re * r.re + r.im * r.im;
    lmax = std::max(lmax, n2.logmag() / 2);
  }
  spec->log2_alpha_max = lmax + 0.01;
  return spec;
}

} // namespace recnum

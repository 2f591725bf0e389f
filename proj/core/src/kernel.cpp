#include "recnum/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "recnum/errors.hpp"

namespace recnum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CBall root_ball(const CertifiedRoot& r, mpfr_prec_t prec) {
  CBall z(Ball(r.re.mid.at(prec), r.radius), Ball(r.im.mid.at(prec), r.real ? Ball::kExact : r.radius));
  return z;
}

// Taylor coefficients of P at z: P(z + w) = sum t_m w^m, m = 0..deg.
std::vector<CBall> taylor_at(const IntPoly& P, const CBall& z) {
  size_t n = P.c.size();
  mpfr_prec_t prec = z.re.mid.prec();
  std::vector<CBall> w(n);
  for (size_t i = 0; i < n; ++i) w[i] = CBall::real(Ball::of(P.c[i], prec));
  for (size_t m = 0; m + 1 < n; ++m)
    for (size_t i = n - 1; i > m; --i) w[i - 1] = w[i - 1] + z * w[i];
  return w;
}

std::vector<CBall> series_mul(const std::vector<CBall>& a, const std::vector<CBall>& b, size_t order) {
  std::vector<CBall> r(order, CBall::real(Ball::exact_zero(a[0].re.mid.prec())));
  for (size_t i = 0; i < std::min(order, a.size()); ++i)
    for (size_t j = 0; i + j < order && j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

std::vector<CBall> series_inverse(const std::vector<CBall>& s, size_t order) {
  mpfr_prec_t prec = s[0].re.mid.prec();
  std::vector<CBall> u(order, CBall::real(Ball::exact_zero(prec)));
  CBall one = CBall::real(Ball::exact_int(1, prec));
  u[0] = one / s[0];
  for (size_t m = 1; m < order; ++m) {
    CBall acc = CBall::real(Ball::exact_zero(prec));
    for (size_t i = 1; i <= m; ++i) {
      if (i < s.size()) acc = acc + s[i] * u[m - i];
    }
    u[m] = -(acc / s[0]);
  }
  return u;
}

// multiply polynomial (in n) by (n + c)
void poly_mul_linear(std::vector<CBall>& poly, long c, mpfr_prec_t prec) {
  poly.insert(poly.begin(), CBall::real(Ball::exact_zero(prec)));
  CBall cc = CBall::real(Ball::exact_int(c, prec));
  for (size_t i = 0; i + 1 < poly.size(); ++i) poly[i] = poly[i] + cc * poly[i + 1];
}

// q_j for one root: (1/k!) d^k/dz^k [z^{n-1} G(z)] at alpha = q_j(n) alpha^n,
// via G = S^{-(k+1)}, S(alpha + w) = P(alpha + w)/w.
std::vector<CBall> residue_poly_at(const SpecPtr& spec, const CBall& alpha) {
  int k = spec->k;
  mpfr_prec_t prec = alpha.re.mid.prec();
  size_t order = static_cast<size_t>(k) + 1;
  auto t = taylor_at(spec->P, alpha);
  std::vector<CBall> s(order, CBall::real(Ball::exact_zero(prec)));
  for (size_t m = 0; m < order; ++m)
    if (m + 1 < t.size()) s[m] = t[m + 1];
  auto u = series_inverse(s, order);
  std::vector<CBall> g = u;
  for (int rep = 1; rep <= k; ++rep) g = series_mul(g, u, order);
  // q(n) = sum_{i=0..k} g_{k-i} * FF_i(n-1) * alpha^{-1-i} / i!
  std::vector<CBall> q(order, CBall::real(Ball::exact_zero(prec)));
  mpz_class fact = 1;
  CBall alpha_inv_pow = CBall::real(Ball::exact_int(1, prec)) / alpha; // alpha^{-1}
  CBall apow = alpha_inv_pow;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) {
      fact *= i;
      apow = apow * alpha_inv_pow;
    }
    // FF_i(n-1) = (n-1)(n-2)...(n-i)
    std::vector<CBall> ff{CBall::real(Ball::exact_int(1, prec))};
    for (int tt = 1; tt <= i; ++tt) poly_mul_linear(ff, -tt, prec);
    CBall scale = (i == 0 ? alpha_inv_pow : apow) * CBall::real(Ball::of(mpq_class(1, fact), prec));
    CBall coef = CBall(g[static_cast<size_t>(k - i)].re, g[static_cast<size_t>(k - i)].im) * scale;
    for (size_t l = 0; l < ff.size(); ++l) q[l] = q[l] + coef * ff[l];
  }
  return q;
}

CBall eval_poly(const std::vector<CBall>& q, long n, mpfr_prec_t prec) {
  CBall x = CBall::real(Ball::exact_int(n, prec));
  CBall acc = CBall::real(Ball::exact_zero(prec));
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// sum of q_j(n) alpha_j^n over the chosen side, using mirrored pairs as 2*Re.
Ball side_sum(const ResidueBasis& basis, long n, bool large_side) {
  mpfr_prec_t prec = basis.prec;
  Ball acc = Ball::exact_zero(prec);
  for (size_t j = 0; j < basis.roots.roots.size(); ++j) {
    const auto& r = basis.roots.roots[j];
    if (r.large != large_side) continue;
    if (!r.real && r.im.mid.sgn() < 0) continue; // conjugate handled with its rep
    CBall alpha = root_ball(r, prec);
    CBall term = eval_poly(basis.q[j], n, prec) * pow_si(alpha, n);
    if (r.real) {
      acc = acc + term.re;
    } else {
      acc = acc + mul_2si(term.re, 1);
    }
  }
  return acc;
}

} // namespace

ResidueBasis residue_basis(const SpecPtr& spec, mpfr_prec_t prec) {
  ResidueBasis basis;
  basis.roots = refine_roots(spec->P, spec->roots, -static_cast<double>(prec) - 8);
  basis.prec = prec;
  basis.q.resize(basis.roots.roots.size());
  for (size_t j = 0; j < basis.roots.roots.size(); ++j) {
    const auto& r = basis.roots.roots[j];
    if (!r.real && r.im.mid.sgn() < 0) {
      // conjugate of the representative just before it
      basis.q[j] = basis.q[j - 1];
      for (auto& c : basis.q[j]) c = conj(c);
      continue;
    }
    basis.q[j] = residue_poly_at(spec, root_ball(r, prec));
  }
  return basis;
}

ResidueBasis h_vector(const SpecPtr& spec, mpfr_prec_t prec) {
  ResidueBasis all = residue_basis(spec, prec);
  ResidueBasis large;
  large.prec = all.prec;
  large.roots = all.roots;
  for (size_t j = 0; j < all.roots.roots.size(); ++j)
    if (all.roots.roots[j].large) large.q.push_back(all.q[j]);
  large.roots.roots.resize(large.q.size()); // large roots come first in the order
  return large;
}

Ball rho(const SpecPtr& spec, long n, double target_elog) {
  double alpha_bits = 1.0;
  for (const auto& r : spec->roots.roots)
    alpha_bits = std::max(alpha_bits, std::abs(static_cast<double>(r.re.mid.exp2())) + 1);
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(
      std::max<double>(192, std::abs(static_cast<double>(n)) * alpha_bits + 2 * -target_elog + 64));
  for (;; prec *= 2) {
    ResidueBasis basis = residue_basis(spec, prec);
    Ball v = Ball::exact_zero(prec);
    if (n >= 1) {
      if (spec->roots.p < spec->roots.d) v = -side_sum(basis, n, /*large=*/false);
    } else {
      v = side_sum(basis, n, /*large=*/true);
    }
    if (n >= 1 && n <= spec->D - 1) {
      // both residue formulas apply; they must agree within certified bounds
      Ball other = side_sum(basis, n, /*large=*/true);
      Ball diff = v - other;
      if (diff.certified_sgn() != 0)
        fail(Errc::precision_exhausted, "residue branch disagreement beyond certified bounds");
    }
    if (v.elog <= target_elog) return v;
    if (prec > 8 * kPrecCap) fail(Errc::precision_exhausted, "rho did not reach the target bound");
  }
}

Ball rho_quadrature_oracle(const SpecPtr& spec, long n, long grid_points) {
  if (grid_points < 64 || (grid_points & (grid_points - 1)) != 0)
    fail(Errc::invalid_argument, "grid_points must be a power of two >= 64");
  mpfr_prec_t prec = 384;
  Real two_pi = mul_2si(Real::pi(prec), 1);
  Ball acc_re = Ball::exact_zero(prec);
  Ball acc_im = Ball::exact_zero(prec);
  double ulp = -static_cast<double>(prec) + 4;
  for (long t = 0; t < grid_points; ++t) {
    Real theta = two_pi * Real::of(t, prec) / Real::of(grid_points, prec);
    CBall z(Ball(cos(theta), ulp), Ball(sin(theta), ulp));
    // z^n with the angle reduced exactly: n*t mod grid
    long red = static_cast<long>((static_cast<unsigned long long>(std::llabs(n)) % static_cast<unsigned long long>(grid_points)) * static_cast<unsigned long long>(t) % static_cast<unsigned long long>(grid_points));
    Real phin = two_pi * Real::of(red, prec) / Real::of(grid_points, prec);
    CBall zn(Ball(cos(phin), ulp), Ball(sin(phin), ulp));
    if (n < 0) zn = conj(zn);
    CBall fz = spec->f.eval(z);
    CBall term = zn / fz;
    acc_re = acc_re + term.re;
    acc_im = acc_im + term.im;
  }
  Ball g = Ball::exact_int(grid_points, prec);
  Ball re = -(acc_re / g);
  Ball im = acc_im / g;
  re.elog = log2add(re.elog, im.logmag());
  return re;
}

DecayBound decay_bound(const SpecPtr& spec) {
  const RootSet& rs = spec->roots;
  // delta0: slowest decay rate over both sides, from certified moduli
  double delta0 = 0;
  for (const auto& r : rs.roots) {
    Ball n2 = r.re * r.re + r.im * r.im;
    double up = std::exp2(n2.logmag() / 2);
    double lo = std::exp2(lower_logmag(n2) / 2);
    delta0 = std::max(delta0, r.large ? 1.0 / lo : up);
  }
  DecayBound out;
  out.delta = delta0 + (1 - delta0) / 4;
  // coefficient magnitude bounds from the residue basis at modest precision
  ResidueBasis basis = residue_basis(spec, 192);
  int k = spec->k;
  double C = 0;
  long scan = 2 * (spec->D + 4) + static_cast<long>(4 * k / std::max(1e-9, out.delta / delta0 - 1) + 16);
  for (long n = -scan; n <= scan; ++n) {
    double bound = 0;
    for (size_t j = 0; j < rs.roots.size(); ++j) {
      const auto& r = rs.roots[j];
      bool use = (n >= 1) ? !r.large : r.large;
      if (!use) continue;
      Ball n2 = r.re * r.re + r.im * r.im;
      double mod = r.large ? std::exp2(lower_logmag(n2) / 2) : std::exp2(n2.logmag() / 2);
      double qmag = 0;
      double np = 1;
      for (int l = 0; l <= k; ++l) {
        qmag += std::exp2(basis.q[j][static_cast<size_t>(l)].logmag()) * np;
        np *= static_cast<double>(std::max<long>(std::labs(n), 1));
      }
      bound += qmag * std::pow(mod, static_cast<double>(n));
    }
    C = std::max(C, bound / std::pow(out.delta, static_cast<double>(std::labs(n))));
  }
  out.C = C * 1.0001 + 1e-30;
  return out;
}

RhoTable::RhoTable(SpecPtr spec, double target_elog) : spec_(std::move(spec)), target_(target_elog) {}

void RhoTable::ensure(long lo, long hi) const {
  if (lo_ <= hi_ && lo >= lo_ && hi <= hi_) return;
  long nlo = lo_ <= hi_ ? std::min(lo, lo_) : lo;
  long nhi = lo_ <= hi_ ? std::max(hi, hi_) : hi;
  std::vector<Ball> fresh(static_cast<size_t>(nhi - nlo + 1));
  for (long n = nlo; n <= nhi; ++n) {
    if (lo_ <= hi_ && n >= lo_ && n <= hi_)
      fresh[static_cast<size_t>(n - nlo)] = cache_[static_cast<size_t>(n - lo_)];
    else
      fresh[static_cast<size_t>(n - nlo)] = rho(spec_, n, target_);
  }
  cache_ = std::move(fresh);
  lo_ = nlo;
  hi_ = nhi;
}

Ball RhoTable::get(long n) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (lo_ > hi_ || n < lo_ || n > hi_) {
    long w = std::max<long>(8, std::labs(n) + 4);
    ensure(std::min(-w, n), std::max(w, n));
  }
  return cache_[static_cast<size_t>(n - lo_)];
}

void RhoTable::dump_csv(std::ostream& os, long lo, long hi) const {
  os << "n,value,err\n";
  for (long n = lo; n <= hi; ++n) {
    Ball v = get(n);
    os << n << "," << v.mid.str() << "," << std::exp2(v.elog) << "\n";
  }
}

} // namespace recnum

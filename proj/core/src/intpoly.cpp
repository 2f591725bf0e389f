#include "recnum/intpoly.hpp"

#include <algorithm>

#include "recnum/errors.hpp"

namespace recnum {

namespace {

void strip(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void strip_q(std::vector<mpq_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// remainder of a by b over Q
std::vector<mpq_class> rem_q(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    strip_q(a);
  }
  return a;
}

int sgn_q(const mpq_class& x) { return mpq_sgn(x.get_mpq_t()); }

} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { strip(c); }

mpz_class IntPoly::eval_z(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::eval_q(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Ball IntPoly::eval(const Ball& x) const {
  mpfr_prec_t p = x.mid.prec();
  Ball acc = Ball::exact_zero(p);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Ball::of(*it, p);
  return acc;
}

CBall IntPoly::eval(const CBall& x) const {
  mpfr_prec_t p = x.re.mid.prec();
  CBall acc = CBall::real(Ball::exact_zero(p));
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + CBall::real(Ball::of(*it, p));
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& a, unsigned e) {
  IntPoly acc(std::vector<mpz_class>{1});
  IntPoly base = a;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

IntPoly derivative(const IntPoly& a) {
  if (a.c.size() <= 1) return IntPoly();
  std::vector<mpz_class> r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * static_cast<long>(i);
  return IntPoly(std::move(r));
}

IntPoly reverse(const IntPoly& a) {
  std::vector<mpz_class> r(a.c.rbegin(), a.c.rend());
  return IntPoly(std::move(r));
}

mpz_class content(const IntPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  mpz_class g = content(a);
  std::vector<mpz_class> r(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i] / g;
  return IntPoly(std::move(r));
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = a.is_zero() ? a : primitive_part(a);
  b = b.is_zero() ? b : primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder: lc(b)^(da-db+1) * a mod b
    long da = a.degree(), db = b.degree();
    mpz_class lb = b.leading();
    std::vector<mpz_class> r = a.c;
    for (long i = da; i >= db; --i) {
      if (r[static_cast<size_t>(i)] == 0) continue;
      mpz_class f = r[static_cast<size_t>(i)];
      for (long j = static_cast<long>(r.size()) - 1; j >= 0; --j) r[static_cast<size_t>(j)] *= lb;
      for (long j = 0; j <= db; ++j)
        r[static_cast<size_t>(i - db + j)] -= f * b.c[static_cast<size_t>(j)];
    }
    strip(r);
    IntPoly rem(std::move(r));
    a = std::move(b);
    b = rem.is_zero() ? rem : primitive_part(rem);
  }
  return a;
}

bool is_squarefree(const IntPoly& a) {
  if (a.degree() <= 1) return true;
  IntPoly g = poly_gcd(a, derivative(a));
  return g.degree() == 0;
}

SturmChain::SturmChain(const IntPoly& p) {
  std::vector<mpq_class> s0(p.c.begin(), p.c.end());
  IntPoly dp = derivative(p);
  std::vector<mpq_class> s1(dp.c.begin(), dp.c.end());
  seq.push_back(s0);
  if (s1.empty()) return;
  seq.push_back(s1);
  while (seq.back().size() > 1) {
    auto r = rem_q(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    seq.push_back(std::move(r));
  }
}

long SturmChain::variations_at(const mpq_class& x) const {
  long v = 0;
  int prev = 0;
  for (const auto& poly : seq) {
    mpq_class acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    int s = sgn_q(acc);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long SturmChain::variations_at_pos_inf() const {
  long v = 0;
  int prev = 0;
  for (const auto& poly : seq) {
    if (poly.empty()) continue;
    int s = sgn_q(poly.back());
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long SturmChain::variations_at_neg_inf() const {
  long v = 0;
  int prev = 0;
  for (const auto& poly : seq) {
    if (poly.empty()) continue;
    int s = sgn_q(poly.back());
    if ((poly.size() - 1) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long SturmChain::count_in(const mpq_class& a, const mpq_class& b) const {
  return variations_at(a) - variations_at(b);
}

long SturmChain::count_above(const mpq_class& a) const {
  return variations_at(a) - variations_at_pos_inf();
}

long SturmChain::count_below(const mpq_class& b) const {
  return variations_at_neg_inf() - variations_at(b);
}

long SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

} // namespace recnum

#pragma once

#include <gmpxx.h>

#include <vector>

#include "recnum/ball.hpp"

namespace recnum {

// Exact integer polynomial, coefficients in ascending degree order.
// The zero polynomial is the empty vector; otherwise no trailing zeros.
struct IntPoly {
  std::vector<mpz_class> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const mpz_class& leading() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  mpz_class eval_z(const mpz_class& x) const;
  mpq_class eval_q(const mpq_class& x) const;
  Ball eval(const Ball& x) const;
  CBall eval(const CBall& x) const;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& a, unsigned e);
IntPoly derivative(const IntPoly& a);
// X^deg * P(1/X)
IntPoly reverse(const IntPoly& a);
mpz_class content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);
// gcd over Z up to sign, primitive; via subresultant pseudo-remainders
IntPoly poly_gcd(IntPoly a, IntPoly b);
bool is_squarefree(const IntPoly& a);

// Counts of real roots via exact Sturm chains (valid for squarefree input).
struct SturmChain {
  std::vector<std::vector<mpq_class>> seq;
  explicit SturmChain(const IntPoly& p);
  // number of real roots in (a, b]
  long count_in(const mpq_class& a, const mpq_class& b) const;
  long count_above(const mpq_class& a) const; // (a, +inf)
  long count_below(const mpq_class& b) const; // (-inf, b]
  long count_all() const;

private:
  long variations_at(const mpq_class& x) const;
  long variations_at_pos_inf() const;
  long variations_at_neg_inf() const;
};

} // namespace recnum

#pragma once

// Integer multivariate polynomials used only by the gcd routine.

#include <map>

#include "dcorr/laurent.hpp"

namespace dcorr::detail {

struct ZPoly {
  std::size_t nvars = 0;
  std::map<Exponents, BigInt> terms;

  explicit ZPoly(std::size_t n) : nvars(n) {}
  static ZPoly constant(std::size_t n, const BigInt& c);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  void add_term(const Exponents& e, const BigInt& c);
};

ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);

/// Degree in variable v; -1 for the zero polynomial.
int degree(const ZPoly& a, std::size_t v);
/// Coefficient of x_v^d as a polynomial in the remaining variables.
ZPoly coeff(const ZPoly& a, std::size_t v, int d);
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b, std::size_t v);
/// gcd over ℤ[x], normalized to a positive leading coefficient. Tries integer
/// evaluation first and falls back to subresultant sequences.
ZPoly zgcd(const ZPoly& a, const ZPoly& b);
/// The subresultant path alone, for inputs with integer content 1.
ZPoly prs_gcd(const ZPoly& a, const ZPoly& b);
ZPoly heuristic_or_prs_gcd(const ZPoly& a, const ZPoly& b, bool heuristic);

}  // namespace dcorr::detail

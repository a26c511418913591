#include <doctest.h>

#include "support/generators.hpp"
#include "zpoly.hpp"

using namespace dcorr;
using dcorr::detail::ZPoly;
using dcorr::testing::Gen;

namespace {

ZPoly random_zpoly(Gen& g, std::size_t nvars, int max_terms, int max_deg) {
  ZPoly p(nvars);
  const int terms = g.integer(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    Exponents e(nvars);
    for (auto& x : e) x = g.integer(0, max_deg);
    p.add_term(e, BigInt(g.integer(-9, 9)));
  }
  if (p.is_zero()) p.add_term(Exponents(nvars, 0), BigInt(1));
  return p;
}

}  // namespace

TEST_CASE("integer-evaluation gcd agrees with the subresultant gcd (property)") {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t nv = static_cast<std::size_t>(g.integer(1, 3));
    ZPoly common = random_zpoly(g, nv, 3, 2);
    ZPoly a = common * random_zpoly(g, nv, 3, 2);
    ZPoly b = common * random_zpoly(g, nv, 3, 2);
    ZPoly fast = detail::heuristic_or_prs_gcd(a, b, true);
    ZPoly slow = detail::heuristic_or_prs_gcd(a, b, false);
    CHECK(fast.terms == slow.terms);
    // The planted factor divides the gcd.
    CHECK_NOTHROW(detail::exact_quotient(fast, common));
  }
}

TEST_CASE("gcd of coprime and identical inputs") {
  ZPoly x(1), one = ZPoly::constant(1, 1);
  x.add_term({1}, BigInt(1));
  ZPoly xm1 = x - one;
  ZPoly xp1 = x * x;
  xp1.add_term({0}, BigInt(1));
  CHECK(detail::zgcd(xm1, xp1).is_constant());
  CHECK(detail::zgcd(xm1 * xp1, xm1 * xp1).terms == (xm1 * xp1).terms);
  ZPoly six = ZPoly::constant(1, 6), four = ZPoly::constant(1, 4);
  CHECK(detail::zgcd(six * xm1, four * xm1).terms == (ZPoly::constant(1, 2) * xm1).terms);
}

#include <doctest.h>

#include "dcorr/errors.hpp"
#include "dcorr/series.hpp"
#include "support/generators.hpp"

using namespace dcorr;
using dcorr::testing::Gen;
using dcorr::testing::t_table;

namespace {

LaurentPoly mono(const VarTablePtr& v, Exponents e, BigRational c = 1) { return LaurentPoly::monomial(v, std::move(e), c); }

/// t^{½} − t^{−½} in a one-variable table.
LaurentPoly theta_factor(const VarTablePtr& v) { return mono(v, {1}) - mono(v, {-1}); }

}  // namespace

TEST_CASE("rationals and half-integers parse exactly") {
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("0.5"), UsageError);
  CHECK(HalfInt::parse("9/2").x2 == 9);
  CHECK(HalfInt::parse("-3").x2 == -6);
  CHECK_THROWS_AS(HalfInt::parse("1/3"), UsageError);
  CHECK(HalfInt::from_x2(-1).str() == "-1/2");
  CHECK(power(BigRational(2, 3), -2) == BigRational(9, 4));
}

TEST_CASE("Laurent products") {
  auto t = t_table(1);
  CHECK(theta_factor(t) * (mono(t, {1}) + mono(t, {-1})) == mono(t, {2}) - mono(t, {-2}));
  LaurentPoly p = mono(t, {3}, 2) - mono(t, {-1});
  CHECK(p * LaurentPoly(t, 1) == p);
  auto t2 = t_table(2);
  CHECK((mono(t2, {2, 0}) - mono(t2, {0, 2})) * (mono(t2, {2, 0}) + mono(t2, {0, 2})) ==
        mono(t2, {4, 0}) - mono(t2, {0, 4}));
}

TEST_CASE("mixing variable tables is a usage error") {
  auto a = t_table(1);
  auto b = VarTable::make({{"s", VarKind::T}});
  CHECK_THROWS_AS(mono(a, {1}) + mono(b, {1}), UsageError);
  CHECK_THROWS_AS(mono(a, {1}) * mono(b, {1}), UsageError);
}

TEST_CASE("t d/dt halves the stored exponent") {
  auto t = t_table(1);
  CHECK(mono(t, {3}).tddt(0) == mono(t, {3}, BigRational(3, 2)));
  CHECK(LaurentPoly(t, 7).tddt(0).is_zero());
  CHECK((mono(t, {2}) + mono(t, {-2})).tddt(0) == mono(t, {2}) - mono(t, {-2}));
  auto z = VarTable::make({{"z1", VarKind::Z}});
  CHECK_THROWS_AS(mono(z, {2}).tddt(0), UsageError);
}

TEST_CASE("rational functions reduce to a canonical form") {
  auto t = t_table(1);
  RatFunc r = RatFunc::reduce(mono(t, {2}) - LaurentPoly(t, 1), theta_factor(t));
  CHECK(r == RatFunc(mono(t, {1})));
  LaurentPoly p = mono(t, {2}) + mono(t, {-3}, 5);
  CHECK(RatFunc::reduce(p, p).is_one());
  auto t2 = t_table(2);
  CHECK(RatFunc::reduce(mono(t2, {4, 0}) - mono(t2, {0, 4}), mono(t2, {2, 0}) - mono(t2, {0, 2})) ==
        RatFunc(mono(t2, {2, 0}) + mono(t2, {0, 2})));
  CHECK_THROWS_AS(RatFunc::reduce(p, LaurentPoly(t)), DivisionByZero);
  // Denominator is monomial-free with leading coefficient 1.
  RatFunc s = RatFunc::reduce(LaurentPoly(t, 1), mono(t, {3}, 2) - mono(t, {1}, 2));
  CHECK(s.den() == mono(t, {2}) - LaurentPoly(t, 1));
  CHECK(s.num() == mono(t, {-1}, BigRational(1, 2)));
}

TEST_CASE("gcd of Laurent polynomials") {
  auto t2 = t_table(2);
  LaurentPoly a = mono(t2, {2, 0}) - mono(t2, {0, 2});
  LaurentPoly b = mono(t2, {2, 0}) + mono(t2, {0, 2});
  LaurentPoly g = gcd(a * b * BigRational(6), a * mono(t2, {0, 3}) * BigRational(4));
  CHECK(divide_exact(g, a).has_value());
  CHECK(divide_exact(a, g).has_value());
  CHECK(gcd(a, b).is_one());
  CHECK(gcd(LaurentPoly(t2, 2), LaurentPoly(t2, 4)).is_one());
}

TEST_CASE("series products and truncation") {
  auto e = VarTable::empty();
  HalfSeries one = HalfSeries::one(e);
  HalfSeries q = HalfSeries::monomial(2, RatFunc(e, 1));
  HalfSeries half = HalfSeries::monomial(1, RatFunc(e, 1));
  HalfSeries prod = HalfSeries::multiply(one + q, one - q, 4);
  HalfSeries expect = one - HalfSeries::monomial(4, RatFunc(e, 1));
  CHECK(agree(prod, expect));
  CHECK(prod.order_x2() == 4);
  CHECK(half * half == q);
  HalfSeries a = (one + half).truncated(5);
  CHECK(a * one == a);
  // Known through q^{N} times valuation of the other factor.
  HalfSeries b = HalfSeries(e, 3) + half;
  CHECK((b * q).order_x2() == 5);
}

TEST_CASE("series inversion") {
  auto e = VarTable::empty();
  HalfSeries one = HalfSeries::one(e);
  HalfSeries q = HalfSeries::monomial(2, RatFunc(e, 1));
  HalfSeries inv = (one - q).inverse(6);
  HalfSeries geo(e, 6);
  for (int k = 0; k <= 3; ++k) geo.add_term(2 * k, RatFunc(e, 1));
  CHECK(inv == geo);
  CHECK(HalfSeries::monomial(1, RatFunc(e, 1)).inverse() == HalfSeries::monomial(-1, RatFunc(e, 1)));
  CHECK_THROWS_AS(HalfSeries(e, 4).inverse(), DivisionByZero);
  CHECK_THROWS(HalfSeries(e, std::nullopt).inverse());
  auto t = t_table(1);
  // Inverting Θ's leading factor forces fractions.
  HalfSeries th = HalfSeries::constant(RatFunc(theta_factor(t)), 4);
  CHECK(th.inverse().coefficient(0) == RatFunc::reduce(LaurentPoly(t, 1), theta_factor(t)));
}

TEST_CASE("monomial substitution") {
  auto t2 = t_table(2);
  HalfSeries s = HalfSeries::constant(RatFunc(mono(t2, {1, 0}) - mono(t2, {-1, 0})), 2);
  HalfSeries prod = substitute_monomial(s, 0, {1, 1});
  CHECK(prod.coefficient(0) == RatFunc(mono(t2, {1, 1}) - mono(t2, {-1, -1})));
  CHECK(substitute_monomial(s, 0, {0, 0}).is_zero());
  HalfSeries w = HalfSeries::constant(RatFunc(mono(t2, {3, -2}, 2)));
  CHECK(substitute_monomial(w, 0, {-1, 0}).coefficient(0) == RatFunc(mono(t2, {-3, -2}, 2)));
}

TEST_CASE("numeric evaluation of u = t^{1/2}") {
  auto t = t_table(1);
  HalfSeries s = HalfSeries::constant(RatFunc::reduce(LaurentPoly(t, 1), theta_factor(t)), 0);
  CHECK(evaluate(s, {{0, BigRational(2)}}).coefficient(0).constant_value() == BigRational(2, 3));
  HalfSeries tt = HalfSeries::constant(RatFunc(mono(t, {2})));
  CHECK(evaluate(tt, {{0, BigRational(3)}}).coefficient(0).constant_value() == 9);
  CHECK_THROWS_AS(evaluate(s, {{0, BigRational(1)}}), EvaluationPointError);
}

TEST_CASE("public accessors report true exponents") {
  auto t = t_table(1);
  LaurentPoly p = mono(t, {3});
  CHECK(LaurentPoly::true_exponent(p.leading_exponents(), 0) == HalfInt::parse("3/2"));
  CHECK(p.str() == "t1^{3/2}");
  HalfSeries s = HalfSeries::monomial(3, RatFunc(t, 1), 5);
  CHECK(s.str().find("q^{3/2}") != std::string::npos);
}

TEST_CASE("ring laws on random series (property)") {
  auto t = t_table(2);
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    HalfSeries a = g.series(t, 0, 4), b = g.series(t, 0, 4), c = g.series(t, 0, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("inversion round trips (property)") {
  auto t = t_table(2);
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    HalfSeries a = g.invertible_series(t, g.integer(-2, 2), 4);
    HalfSeries prod = a * a.inverse();
    CHECK(agree(prod, HalfSeries::one(t)));
    RatFunc r = g.nonzero_ratfunc(t);
    CHECK((r * r.inverse()).is_one());
  }
}

TEST_CASE("reduction is idempotent and canonical (property)") {
  auto t = t_table(2);
  Gen g(13);
  for (int i = 0; i < 200; ++i) {
    RatFunc r = g.ratfunc(t);
    CHECK(RatFunc::reduce(r.num(), r.den()) == r);
    LaurentPoly k = g.nonzero_laurent(t, 2, 2);
    CHECK(RatFunc::reduce(r.num() * k, r.den() * k) == r);
    LaurentPoly a = g.nonzero_laurent(t, 3, 3);
    CHECK(divide_exact(a, gcd(a, a)).has_value());
    CHECK(divide_exact(gcd(a, a), a).has_value());
  }
}

TEST_CASE("evaluation is a ring homomorphism (property)") {
  auto t = t_table(2);
  Gen g(14);
  int done = 0;
  while (done < 200) {
    HalfSeries a = g.series(t, 0, 4), b = g.series(t, 0, 4);
    std::map<std::size_t, BigRational> at{{0, g.nonzero_rational(7, 5)}, {1, g.nonzero_rational(7, 5)}};
    try {
      HalfSeries ea = evaluate(a, at), eb = evaluate(b, at);
      CHECK(evaluate(a * b, at) == ea * eb);
      CHECK(evaluate(a + b, at) == ea + eb);
      ++done;
    } catch (const EvaluationPointError&) {
    }
  }
}

#include <doctest.h>

#include "dcorr/errors.hpp"
#include "dcorr/special_series.hpp"
#include "support/generators.hpp"

using namespace dcorr;

namespace {

HalfSeries from_coeffs(const VarTablePtr& v, int order_x2, std::initializer_list<std::pair<int, int>> terms) {
  HalfSeries s(v, order_x2);
  for (auto [e, c] : terms) s.add_term(e, RatFunc(v, c));
  return s;
}

LaurentPoly u(const VarTablePtr& v, int e) { return LaurentPoly::monomial(v, {e}); }

/// Swaps t1 and t2.
VarMap swap12(const VarTablePtr& v) {
  return VarMap(v, v, {VarImage{1, {0, 1}}, VarImage{1, {1, 0}}});
}

HalfSeries invert_argument(const HalfSeries& s) {
  return s.map(VarMap(s.vars(), s.vars(), {VarImage{1, {-1}}}));
}

}  // namespace

TEST_CASE("Euler product") {
  auto e = VarTable::empty();
  CHECK(pochhammer_inf(RatFunc(e, 1), 2, 10) == from_coeffs(e, 10, {{0, 1}, {2, -1}, {4, -1}, {10, 1}}));
}

TEST_CASE("Pochhammer with half-integral start") {
  auto e = VarTable::empty();
  CHECK(pochhammer_inf(RatFunc(e, 1), 1, 3) == from_coeffs(e, 3, {{0, 1}, {1, -1}, {3, -1}}));
}

TEST_CASE("Pochhammer with a t-monomial") {
  auto t = formal_table();
  HalfSeries p = pochhammer_inf(RatFunc(u(t, 2)), 2, 6);
  CHECK(p.coefficient(2) == RatFunc(-u(t, 2)));
}

TEST_CASE("non-truncating Pochhammer argument") {
  auto e = VarTable::empty();
  CHECK_THROWS_WITH_AS(pochhammer_inf(RatFunc(e, 1), 0, 4), "non-truncating Pochhammer argument", UsageError);
  CHECK_THROWS_AS(pochhammer_inf(RatFunc(e, 1), -1, 4), UsageError);
}

TEST_CASE("Pochhammer equals the rebuilt finite product (property)") {
  dcorr::testing::Gen g(31);
  auto t = formal_table();
  for (int i = 0; i < 60; ++i) {
    const int alpha = g.integer(1, 3), step = g.integer(1, 3), order = g.integer(0, 9);
    RatFunc c(u(t, g.integer(-2, 2)) * g.nonzero_rational());
    HalfSeries direct = HalfSeries::one(t, order);
    for (int e = alpha; e <= order; e += step)
      direct = HalfSeries::multiply(direct, HalfSeries::one(t) - HalfSeries::monomial(e, c), order);
    CHECK(pochhammer_inf(c, alpha, order, step) == direct);
  }
}

TEST_CASE("theta leading coefficients") {
  auto t = formal_table();
  ThetaArg x{t, {1}};
  HalfSeries th = theta(x, 4);
  LaurentPoly d = u(t, 1) - u(t, -1);
  CHECK(th.coefficient(0) == RatFunc(d));
  CHECK(th.coefficient(2) == RatFunc(d * (LaurentPoly(t, 2) - u(t, 2) - u(t, -2))));
  CHECK(theta(ThetaArg{t, {0}}, 4).is_zero());
}

TEST_CASE("theta derivatives") {
  auto t = formal_table();
  ThetaArg x{t, {1}};
  CHECK(theta_deriv(0, x, 5) == theta(x, 5));
  CHECK(theta_deriv(1, x, 3).coefficient(0) == RatFunc((u(t, 1) + u(t, -1)) * BigRational(1, 2)));
}

TEST_CASE("theta is odd under inversion") {
  auto t = formal_table();
  CHECK(theta(ThetaArg{t, {-1}}, 12) == -theta(ThetaArg{t, {1}}, 12));
  CHECK(invert_argument(theta(ThetaArg{t, {1}}, 12)) == -theta(ThetaArg{t, {1}}, 12));
  for (int k = 0; k <= 3; ++k) {
    HalfSeries d = theta_deriv(k, ThetaArg{t, {1}}, 12);
    HalfSeries di = theta_deriv(k, ThetaArg{t, {-1}}, 12);
    CHECK(di == (k % 2 == 0 ? -d : d));
  }
}

TEST_CASE("theta at a product of points") {
  auto ws = Workspace::symbolic(2);
  HalfSeries th = theta_deriv_at(*ws, 0, {1, 1}, 4);
  LaurentPoly u12 = LaurentPoly::monomial(ws->table(), {1, 1}) - LaurentPoly::monomial(ws->table(), {-1, -1});
  CHECK(th.coefficient(0) == RatFunc(u12));
  CHECK_THROWS(inverse_theta_at(*ws, {0, 0}, 4));
}

TEST_CASE("F_bo normalizations") {
  auto ws0 = Workspace::symbolic(0);
  CHECK(f_bo(*ws0, 6) == euler_inverse(ws0->table(), 6));
  auto ws = Workspace::symbolic(1);
  HalfSeries f = f_bo(*ws, 4);
  CHECK(f.coefficient(0) == RatFunc::reduce(LaurentPoly(ws->table(), 1), ws->t_diff(0)));
}

TEST_CASE("F_bo one point: determinant path = closed form") {
  auto ws = Workspace::symbolic(1);
  CHECK(f_bo(*ws, 10) == f_bo_one_point(*ws, {1}, 10));
}

TEST_CASE("F_bo two points is symmetric") {
  HalfSeries f = f_bo(2, 8);
  CHECK(f.map(swap12(f.vars())) == f);
}

TEST_CASE("series t d/dt and univariate maps") {
  auto t = formal_table();
  HalfSeries s = HalfSeries::constant(RatFunc(u(t, 2) + u(t, -1)), 2);
  CHECK(series_tddt(s, 0).coefficient(0) == RatFunc(u(t, 2) - u(t, -1) * BigRational(1, 2)));
  auto ws = Workspace::symbolic(2);
  HalfSeries m = map_univariate(s, ws->table(), ws->image_of({1, -1}));
  CHECK(m.coefficient(0) == RatFunc(LaurentPoly::monomial(ws->table(), {2, -2}) +
                                    LaurentPoly::monomial(ws->table(), {-1, 1})));
}

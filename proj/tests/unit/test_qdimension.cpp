#include <doctest.h>

#include "dcorr/qdimension.hpp"

using namespace dcorr;

namespace {

/// Number of sets of distinct numbers in ℤ≥0+½ with the given parity of size,
/// by total, as a series through order_x2. Independent of the library.
HalfSeries half_odd_sets(bool odd, int order_x2) {
  // counts[size parity][energy_x2]
  std::vector<std::vector<long>> c(2, std::vector<long>(order_x2 + 1, 0));
  c[0][0] = 1;
  for (int part = 1; part <= order_x2; part += 2)
    for (int e = order_x2; e >= part; --e)
      for (int p = 0; p < 2; ++p) c[p][e] += c[1 - p][e - part];
  auto vars = VarTable::empty();
  HalfSeries s(vars, order_x2);
  for (int e = 0; e <= order_x2; ++e) s.add_term(e, RatFunc(vars, BigRational(c[odd ? 1 : 0][e])));
  return s;
}

bool natural_coefficients(const HalfSeries& s) {
  for (const auto& [e, c] : s.terms()) {
    if (!c.den().is_one() || !c.num().is_constant()) return false;
    BigRational v = c.constant_value();
    if (v < 0 || v.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank zero q-dimensions") {
  auto e = VarTable::empty();
  CHECK(q_plus(Partition{}, 0, 9) == pochhammer_inf(RatFunc(e, -1), 1, 9));
  CHECK(q_minus(Partition{}, 0, 9) == pochhammer_inf(RatFunc(e, 1), 1, 9));
}

TEST_CASE("rank one Q+ for the trivial label") {
  auto e = VarTable::empty();
  const int N = 10;
  HalfSeries expect = HalfSeries::multiply(
      HalfSeries::multiply(pochhammer_inf(RatFunc(e, -1), 1, N),
                           HalfSeries::one(e) - HalfSeries::monomial(1, RatFunc(e, 1)), N),
      euler_inverse(e, N), N);
  CHECK(q_plus(Partition({0}), 1, N) == expect);
}

TEST_CASE("rank zero irreducible q-dimensions count half-odd sets") {
  CHECK(qdim_irreducible(BLabel{Partition{}, false}, 0, 8) == half_odd_sets(false, 8));
  CHECK(qdim_irreducible(BLabel{Partition{}, true}, 0, 9) == half_odd_sets(true, 9));
  HalfSeries even = qdim_irreducible(BLabel{Partition{}, false}, 0, 8);
  CHECK(even.coefficient(0).constant_value() == 1);
  CHECK(even.coefficient(2).is_zero());
  CHECK(even.coefficient(4).constant_value() == 1);
  CHECK(even.coefficient(6).constant_value() == 1);
  CHECK(even.coefficient(8).constant_value() == 2);
  CHECK(natural_coefficients(even));
  HalfSeries odd = qdim_irreducible(BLabel{Partition{}, true}, 0, 7);
  for (int e : {1, 3, 5, 7}) CHECK(odd.coefficient(e).constant_value() == 1);
}

TEST_CASE("Weyl sum equals the product (sweep)") {
  auto e = VarTable::empty();
  for (std::size_t l = 0; l <= 2; ++l) {
    for (const auto& lam : partitions_in_box(l, 2)) {
      CHECK(weyl_q_sum(e, lam, l) == weyl_q_product(e, lam, l));
      QDimForm prod{QDimForm::Shape::Product};
      CHECK(q_plus(lam, l, 12) == q_plus(lam, l, 12, prod));
      CHECK(q_minus(lam, l, 12) == q_minus(lam, l, 12, prod));
    }
  }
}

TEST_CASE("det sectors sum to Q+") {
  for (std::size_t l = 0; l <= 2; ++l)
    for (const auto& lam : partitions_in_box(l, 2))
      CHECK(qdim_irreducible(BLabel{lam, false}, l, 8) + qdim_irreducible(BLabel{lam, true}, l, 8) ==
            q_plus(lam, l, 8));
}

TEST_CASE("as-printed prefactor produces negative q-powers") {
  QDimForm printed;
  printed.reading = QDimForm::Reading::AsPrinted;
  HalfSeries s = q_plus(Partition{}, 0, 6, printed);
  CHECK(s.valuation_bound_x2() < 0);
  CHECK(!agree(s, q_plus(Partition{}, 0, 6)));
}

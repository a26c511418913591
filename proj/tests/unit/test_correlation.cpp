#include <doctest.h>

#include "dcorr/correlation.hpp"
#include "dcorr/errors.hpp"

using namespace dcorr;

namespace {

VarMap swap12(const VarTablePtr& v) {
  std::vector<VarImage> im(v->size());
  for (std::size_t i = 0; i < v->size(); ++i) {
    im[i].mono.assign(v->size(), 0);
    im[i].mono[i < 2 ? 1 - i : i] = 1;
  }
  return VarMap(v, v, im);
}

HalfSeries q_to(const VarTablePtr& v, int e) { return HalfSeries::monomial(e, RatFunc(v, 1)); }

}  // namespace

TEST_CASE("gl function, one point and rank one") {
  auto ws = Workspace::symbolic(1);
  const int N = 6;
  for (int m : {-1, 0, 1, 2}) {
    HalfSeries expect = HalfSeries::multiply(
        HalfSeries::monomial(m * m, ws->t_monomial({2 * m})), f_bo_one_point(*ws, {1}, N), N);
    CHECK(gl_function(*ws, GenPartition({m}), N) == expect);
  }
  CHECK(gl_function(*ws, GenPartition({0}), N) == f_bo(*ws, N));
}

TEST_CASE("gl function, rank two") {
  auto ws = Workspace::symbolic(2);
  const int N = 4;
  HalfSeries f = f_bo(*ws, N);
  HalfSeries expect = HalfSeries::multiply(HalfSeries::one(ws->table()) - q_to(ws->table(), 2), f * f, N);
  CHECK(gl_function(*ws, GenPartition({0, 0}), N) == expect);
  CHECK(gl_function(GenPartition({0, 0}), 2, N) == expect);
}

TEST_CASE("closed Fock trace") {
  auto ws = Workspace::symbolic(1, 1);
  HalfSeries c = fock_trace_closed(*ws, ZWeight::Formal, 2);
  CHECK(c.coefficient(0) == RatFunc::reduce(LaurentPoly(ws->table(), 2), ws->t_diff(0)));

  auto w0 = Workspace::symbolic(0, 1);
  const int N = 8;
  HalfSeries sum(w0->table(), N);
  for (int k = -4; k <= 4; ++k) sum.add_term(k * k, w0->z_monomial({2 * k}));
  CHECK(fock_trace_closed(*w0, ZWeight::Formal, N) == HalfSeries::multiply(sum, euler_inverse(w0->table(), N), N));
}

TEST_CASE("vacuum functions") {
  auto ws0 = Workspace::symbolic(0);
  auto e = ws0->table();
  CHECK(d_half_vacuum(*ws0, true, 9) == pochhammer_inf(RatFunc(e, 1), 1, 9));
  CHECK(d_half_vacuum(*ws0, false, 9) == pochhammer_inf(RatFunc(e, -1), 1, 9));
  auto ws = Workspace::symbolic(1);
  CHECK(d_half_vacuum(*ws, true, 3).coefficient(0) == RatFunc::reduce(LaurentPoly(ws->table(), 1), ws->t_diff(0)));
}

TEST_CASE("subset convolution identity") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ws = Workspace::symbolic(n);
    const Subset all = full_subset(*ws);
    CHECK(fock_trace_closed(*ws, all, ZWeight::MinusOne, 4) == vacuum_convolution(*ws, all, true, 4));
    CHECK(fock_trace_closed(*ws, all, ZWeight::PlusOne, 4) == vacuum_convolution(*ws, all, false, 4));
  }
}

TEST_CASE("one-point readings") {
  auto ws = Workspace::symbolic(1);
  HalfSeries v = d_half_vacuum(*ws, true, 6);
  HalfSeries a = w2_one_point(*ws, PochReading::BaseQ, 6);
  HalfSeries b = w2_one_point(*ws, PochReading::BaseHalfQ, 6);
  CHECK(agree(a, v));
  CHECK(agree(a, b, 1));
  CHECK(first_mismatch(a, b) == 2);
}

TEST_CASE("level one-half functions") {
  auto ws = Workspace::symbolic(2);
  CHECK(d_sum_function(*ws, Partition{}, 0, 4) == d_half_vacuum(*ws, false, 4));
  CHECK(d_twisted_function(*ws, Partition{}, 0, 4) == d_half_vacuum(*ws, true, 4));
}

TEST_CASE("rank one sum function at q^0") {
  auto ws = Workspace::symbolic(1);
  LaurentPoly d = ws->t_diff(0);
  CHECK(d_sum_function(*ws, Partition({0}), 1, 2).coefficient(0) == RatFunc::reduce(LaurentPoly(ws->table(), 2), d * d));
}

TEST_CASE("irreducible functions sum to the sum function") {
  auto ws = Workspace::symbolic(2);
  for (std::size_t l : {0u, 1u}) {
    for (int m : {0, 1, 2}) {
      if (l == 0 && m > 0) continue;
      Partition lam(l == 0 ? std::vector<int>{} : std::vector<int>{m});
      HalfSeries s = irreducible_function(*ws, BLabel{lam, false}, l, 3) + irreducible_function(*ws, BLabel{lam, true}, l, 3);
      CHECK(s == d_sum_function(*ws, lam, l, 3));
    }
  }
}

TEST_CASE("functions are symmetric in the points") {
  auto ws = Workspace::symbolic(2);
  VarMap sw = swap12(ws->table());
  for (int m : {0, 1}) {
    Partition lam({m});
    HalfSeries s = d_sum_function(*ws, lam, 1, 3);
    HalfSeries t = d_twisted_function(*ws, lam, 1, 3);
    HalfSeries i = irreducible_function(*ws, BLabel{lam, true}, 1, 3);
    CHECK(s.map(sw) == s);
    CHECK(t.map(sw) == t);
    CHECK(i.map(sw) == i);
  }
}

TEST_CASE("evaluated workspaces agree with symbolic evaluation") {
  std::vector<BigRational> u{BigRational(3, 2), BigRational(-5)};
  auto sym = Workspace::symbolic(2);
  auto num = Workspace::evaluated(u, 0);
  HalfSeries s = d_twisted_function(*sym, Partition({1}), 1, 3);
  CHECK(evaluate(s, {{0, u[0]}, {1, u[1]}}) == d_twisted_function(*num, Partition({1}), 1, 3));
}

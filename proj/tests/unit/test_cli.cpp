#include <doctest.h>

#include "dcorr/correlation.hpp"
#include "dcorr/errors.hpp"
#include "dcorr/tools/job.hpp"
#include "dcorr/tools/serialize.hpp"
#include "dcorr/tools/verify.hpp"
#include "support/generators.hpp"

using namespace dcorr;
using namespace dcorr::tools;

namespace {

JobRequest compute(std::string family, std::string order) {
  JobRequest r;
  r.command = "compute";
  r.family = std::move(family);
  r.order = std::move(order);
  return r;
}

}  // namespace

TEST_CASE("JSON round trip (property)") {
  dcorr::testing::Gen g(51);
  std::vector<VarTablePtr> tables{VarTable::empty(), dcorr::testing::t_table(1), dcorr::testing::t_table(2),
                                  VarTable::make({{"t1", VarKind::T}, {"z1", VarKind::Z}})};
  for (int i = 0; i < 200; ++i) {
    const auto& t = tables[static_cast<std::size_t>(i) % tables.size()];
    HalfSeries s = g.series(t, g.integer(-3, 0), g.integer(0, 6));
    json doc = to_json(s);
    CHECK(series_from_json(doc) == s);
    CHECK(series_from_json(json::parse(doc.dump())) == s);
  }
}

TEST_CASE("JSON for exact series and evaluation points") {
  auto e = VarTable::empty();
  HalfSeries s = HalfSeries::one(e) - HalfSeries::monomial(2, RatFunc(e, 1));
  json doc = to_json(s, EvalPoint{{"t1"}, {BigRational(3, 2)}});
  CHECK(doc["order_x2"].is_null());
  CHECK(series_from_json(doc) == s);
  auto p = point_from_json(doc);
  REQUIRE(p);
  CHECK(p->values[0] == BigRational(3, 2));
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"variables": [], "terms": []})")), UsageError);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"variables": ["t1"], "order_x2": 0, "terms": [
      {"q_x2": 0, "coeff": {"num": [{"exps_x2": [1, 2], "val": "1"}], "den": [{"exps_x2": [0], "val": "1"}]}}]})")),
                  UsageError);
}

TEST_CASE("text format uses true exponents") {
  Computed c = run_compute(compute("theta", "1"));
  std::string text = to_text(c.series);
  CHECK(text.find("q^{0}: t^{1/2} - t^{-1/2}") != std::string::npos);
  CHECK(text.find("order: 1") != std::string::npos);
}

TEST_CASE("compute theta at order zero") {
  Computed c = run_compute(compute("theta", "0"));
  REQUIRE(c.series.terms().size() == 1);
  CHECK(c.series.terms().begin()->first == 0);
}

TEST_CASE("compute gl, simplest case") {
  JobRequest r = compute("gl", "2");
  r.l = 1;
  r.lambda = "1";
  r.n = 1;
  Computed c = run_compute(r);
  auto ws = Workspace::symbolic(1);
  CHECK(c.series == HalfSeries::multiply(HalfSeries::monomial(1, ws->t_monomial({2})), f_bo(*ws, 4), 4));
}

TEST_CASE("compute the odd rank-zero q-dimension") {
  JobRequest r = compute("d-irreducible", "7/2");
  r.det = true;
  Computed c = run_compute(r);
  std::vector<int> expect_x2{1, 3, 5, 7};
  REQUIRE(c.series.terms().size() == expect_x2.size());
  for (int e : expect_x2) CHECK(c.series.coefficient(e).constant_value() == 1);
}

TEST_CASE("evaluation mode reports its point and is deterministic") {
  JobRequest r = compute("d-twisted", "2");
  r.l = 1;
  r.n = 2;
  r.mode = "eval";
  r.seed = 5;
  JobOutput a = run_job(r), b = run_job(r);
  CHECK(a.exit_code == kPass);
  CHECK(a.out == b.out);
  json doc = json::parse(a.out);
  REQUIRE(doc.contains("point"));
  CHECK(doc["point"].size() == 2);
  r.seed = 6;
  CHECK(run_job(r).out != a.out);
}

TEST_CASE("bad input exits with 2") {
  JobRequest r = compute("gl", "1/3");
  CHECK(run_job(r).exit_code == kBadInput);
  r = compute("d-sum", "-1");
  CHECK(run_job(r).exit_code == kBadInput);
  r = compute("d-sum", "2");
  r.lambda = "1,1";
  r.l = 1;
  CHECK(run_job(r).exit_code == kBadInput);
  r = compute("d-sum", "2");
  r.l = 2;
  r.lambda = "1,2";
  CHECK(run_job(r).exit_code == kBadInput);
  r = compute("nonsense", "2");
  CHECK(run_job(r).exit_code == kBadInput);
  r = compute("q-plus", "2");
  r.mode = "eval";
  CHECK(run_job(r).exit_code == kBadInput);
  JobRequest v;
  v.command = "verify";
  v.suite = "nope";
  CHECK(run_job(v).exit_code == kBadInput);
  CHECK(parse_int_list("2, 1,0") == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(parse_int_list("2,,1"), UsageError);
}

TEST_CASE("verify reports pass and mismatch by exit code") {
  JobRequest v;
  v.command = "verify";
  v.suite = "vacuum-recursion";
  v.n = 2;
  v.order = "3";
  JobOutput ok = run_job(v);
  CHECK(ok.exit_code == kPass);
  CHECK(json::parse(ok.out)["status"] == "PASS");

  Report r;
  auto e = VarTable::empty();
  r.checks.push_back(compare("one = q", HalfSeries::one(e, 4), HalfSeries::monomial(2, RatFunc(e, 1), 4)));
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->q_x2 == 0);
  CHECK(r.first_failure()->lhs == "1");
  CHECK(r.first_failure()->rhs == "0");
  CHECK(r.text().find("first mismatch: FAIL one = q at q^{0}: 1 vs 0") != std::string::npos);
}

TEST_CASE("evaluation points avoid t = 1") {
  PointSource p(9);
  for (int i = 0; i < 100; ++i)
    for (const auto& u : p.next(3)) {
      CHECK(u != 0);
      CHECK(u * u != 1);
    }
}

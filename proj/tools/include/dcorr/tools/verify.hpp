#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcorr/lie.hpp"
#include "dcorr/series.hpp"
#include "dcorr/workspace.hpp"

namespace dcorr::tools {

/// Outcome of one identity. A failed comparison records the first differing
/// q-exponent and both coefficients.
struct Check {
  std::string identity;
  bool pass = true;
  std::optional<int> q_x2;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> findings;
  /// u-values of the evaluation point, eval mode only.
  std::vector<BigRational> point;

  bool passed() const;
  const Check* first_failure() const;
  void append(const Report& other);

  std::string text() const;
  nlohmann::json to_json() const;
};

Check compare(std::string identity, const HalfSeries& lhs, const HalfSeries& rhs,
              std::optional<int> limit_x2 = std::nullopt);
Check predicate(std::string identity, bool holds, std::string note = {});

/// "agrees" or "first mismatch at q^{e}: a vs b".
std::string agreement(const HalfSeries& lhs, const HalfSeries& rhs);

struct SuiteParams {
  std::size_t l = 0;
  /// Unset means the suite's default range (all of them for qdim, ∅ otherwise).
  std::optional<Partition> lambda;
  bool det = false;
  std::size_t n = 1;
  int order_x2 = 0;
  bool eval = false;
  std::uint64_t seed = 1;
};

/// Deterministic source of evaluation points: nonzero rationals u with u² ≠ 1.
class PointSource {
 public:
  explicit PointSource(std::uint64_t seed);
  std::vector<BigRational> next(std::size_t n);

 private:
  std::mt19937_64 rng_;
};

/// Runs `body` on symbolic workspaces, or in eval mode on workspaces at a drawn
/// point, redrawing while a denominator vanishes. `make(n_z)` builds a workspace.
Report with_points(const SuiteParams& p, std::size_t n,
                   const std::function<Report(const std::function<WorkspacePtr(std::size_t)>&)>& body);

Report suite_vacuum_recursion(const SuiteParams& p);
Report suite_one_point(const SuiteParams& p);
Report suite_needed(const SuiteParams& p);
Report suite_twisted(const SuiteParams& p);
Report suite_sum(const SuiteParams& p);
Report suite_irreducible(const SuiteParams& p);
Report suite_qdim(const SuiteParams& p);
Report suite_denominator(const SuiteParams& p);

const std::vector<std::string>& suite_names();
/// Dispatch by name; UsageError for an unknown suite.
Report run_suite(const std::string& name, const SuiteParams& p);

}  // namespace dcorr::tools

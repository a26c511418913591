#include "dcorr/tools/verify.hpp"

#include <sstream>

#include "dcorr/correlation.hpp"
#include "dcorr/errors.hpp"
#include "dcorr/fock.hpp"
#include "dcorr/qdimension.hpp"
#include "dcorr/tools/serialize.hpp"

namespace dcorr::tools {

bool Report::passed() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  if (point.empty()) point = other.point;
}

namespace {

std::string check_line(const Check& c) {
  std::string line = (c.pass ? "PASS " : "FAIL ") + c.identity;
  if (!c.pass && c.q_x2) line += " at " + q_power(*c.q_x2) + ": " + c.lhs + " vs " + c.rhs;
  if (!c.note.empty()) line += " (" + c.note + ")";
  return line;
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  out << "suite " << suite << '\n';
  if (!point.empty()) {
    out << "point:";
    for (std::size_t i = 0; i < point.size(); ++i) out << " t" << (i + 1) << "^{1/2}=" << to_string(point[i]);
    out << '\n';
  }
  for (const auto& c : checks) out << check_line(c) << '\n';
  for (const auto& f : findings) out << "finding: " << f << '\n';
  if (const Check* f = first_failure())
    out << "first mismatch: " << check_line(*f) << '\n';
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["status"] = passed() ? "PASS" : "FAIL";
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"identity", c.identity}, {"pass", c.pass}};
    if (c.q_x2) j["q_x2"] = *c.q_x2;
    if (!c.pass && c.q_x2) {
      j["lhs"] = c.lhs;
      j["rhs"] = c.rhs;
    }
    if (!c.note.empty()) j["note"] = c.note;
    cs.push_back(j);
  }
  doc["checks"] = cs;
  doc["findings"] = findings;
  if (!point.empty()) {
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i = 0; i < point.size(); ++i)
      pts.push_back({{"name", "t" + std::to_string(i + 1)}, {"sqrt", to_string(point[i])}});
    doc["point"] = pts;
  }
  if (const Check* f = first_failure()) doc["first_mismatch"] = f->identity;
  return doc;
}

Check compare(std::string identity, const HalfSeries& lhs, const HalfSeries& rhs, std::optional<int> limit_x2) {
  Check c;
  c.identity = std::move(identity);
  if (!same_table(lhs.vars(), rhs.vars())) {
    c.pass = false;
    c.note = "series live over different variable tables";
    return c;
  }
  if (auto m = first_mismatch(lhs, rhs, limit_x2)) {
    c.pass = false;
    c.q_x2 = *m;
    c.lhs = lhs.coefficient(*m).str();
    c.rhs = rhs.coefficient(*m).str();
  }
  return c;
}

Check predicate(std::string identity, bool holds, std::string note) {
  Check c;
  c.identity = std::move(identity);
  c.pass = holds;
  c.note = std::move(note);
  return c;
}

std::string agreement(const HalfSeries& lhs, const HalfSeries& rhs) {
  auto m = first_mismatch(lhs, rhs);
  if (!m) return "agrees";
  return "first mismatch at " + q_power(*m) + ": " + lhs.coefficient(*m).str() + " vs " + rhs.coefficient(*m).str();
}

PointSource::PointSource(std::uint64_t seed) : rng_(seed) {}

std::vector<BigRational> PointSource::next(std::size_t n) {
  std::vector<BigRational> u;
  while (u.size() < n) {
    const long num = static_cast<long>(rng_() % 19) - 9;
    const long den = static_cast<long>(rng_() % 9) + 1;
    if (num == 0 || num == den || num == -den) continue;
    BigRational v(num, den);
    v.canonicalize();
    u.push_back(v);
  }
  return u;
}

Report with_points(const SuiteParams& p, std::size_t n,
                   const std::function<Report(const std::function<WorkspacePtr(std::size_t)>&)>& body) {
  if (!p.eval) return body([n](std::size_t n_z) { return Workspace::symbolic(n, n_z); });
  PointSource source(p.seed);
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<BigRational> u = source.next(n);
    try {
      Report r = body([&u](std::size_t n_z) { return Workspace::evaluated(u, n_z); });
      r.point = u;
      return r;
    } catch (const EvaluationPointError&) {
      // a denominator vanished at u; draw again
    }
  }
  throw InvariantError("no usable evaluation point after repeated draws");
}

namespace {

std::string subset_name(Subset s, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(s & (1u << j))) continue;
    if (!first) out += ",";
    first = false;
    out += "t" + std::to_string(j + 1);
  }
  return out + "}";
}

void require_order(const SuiteParams& p) {
  if (p.order_x2 < 0) throw UsageError("order must be non-negative");
}

Partition lambda_or_empty(const SuiteParams& p) {
  Partition lam = p.lambda.value_or(Partition{});
  if (lam.length() > p.l) throw UsageError("lambda has more parts than l");
  return Partition(lam.padded(p.l));
}

std::string label(const Partition& lam, std::size_t l, std::size_t n) {
  return "l=" + std::to_string(l) + " lambda=" + lam.str() + " n=" + std::to_string(n);
}

}  // namespace

Report suite_vacuum_recursion(const SuiteParams& p) {
  require_order(p);
  if (p.n < 1 || p.n > 8) throw UsageError("vacuum-recursion needs 1 <= n <= 8");
  const int N = p.order_x2;
  Report out = with_points(p, p.n, [&](const auto& make) {
    Report r;
    WorkspacePtr ws = make(0);
    const Subset all = full_subset(*ws);
    for (bool twisted : {false, true}) {
      const std::string tag = twisted ? "twisted, z=-1" : "untwisted, z=+1";
      HalfSeries conv = vacuum_convolution(*ws, all, twisted, N);
      r.checks.push_back(compare("closed trace = subset convolution (" + tag + ")",
                                 fock_trace_closed(*ws, all, twisted ? ZWeight::MinusOne : ZWeight::PlusOne, N), conv));
      TraceOptions pair;
      pair.charge_parity_sign = twisted;
      r.checks.push_back(compare("subset convolution = one-pair oracle (" + tag + ")", conv,
                                 oracle_trace(FockSpace{1, false}, *ws, N, pair)));
      for (Subset s = 1; s <= all; ++s) {
        TraceOptions neutral;
        neutral.parity_sign = twisted;
        for (std::size_t j = 0; j < ws->n(); ++j)
          if (s & (1u << j)) neutral.points.push_back(j);
        r.checks.push_back(compare("vacuum function on " + subset_name(s, ws->n()) + " = neutral oracle (" + tag + ")",
                                   d_half_vacuum(*ws, s, twisted, N), oracle_trace(FockSpace{0, true}, *ws, N, neutral)));
      }
    }
    return r;
  });
  out.suite = "vacuum-recursion";
  return out;
}

Report suite_one_point(const SuiteParams& p) {
  require_order(p);
  const int N = p.order_x2;
  Report out = with_points(p, 1, [&](const auto& make) {
    Report r;
    WorkspacePtr ws = make(0);
    TraceOptions twisted;
    twisted.parity_sign = true;
    HalfSeries oracle = oracle_trace(FockSpace{0, true}, *ws, N, twisted);
    r.checks.push_back(compare("twisted one-point recursion = neutral oracle", d_half_vacuum(*ws, true, N), oracle));
    const bool base_q = agree(w2_one_point(*ws, PochReading::BaseQ, N), oracle);
    const bool base_half = agree(w2_one_point(*ws, PochReading::BaseHalfQ, N), oracle);
    r.findings.push_back(std::string("one-point prefactor (q^{1/2};q)_inf: ") + (base_q ? "matches" : "does not match"));
    r.findings.push_back(std::string("one-point prefactor (q^{1/2};q^{1/2})_inf: ") +
                         (base_half ? "matches" : "does not match"));
    r.checks.push_back(predicate("exactly one prefactor reading matches the oracle", base_q != base_half));
    return r;
  });
  out.suite = "one-point";
  return out;
}

Report suite_needed(const SuiteParams& p) {
  require_order(p);
  if (p.n > 8) throw UsageError("needed supports n <= 8");
  const int N = p.order_x2;
  Report out = with_points(p, p.n, [&](const auto& make) {
    Report r;
    WorkspacePtr ws = make(1);
    TraceOptions z;
    z.z_grading = true;
    HalfSeries closed = fock_trace_closed(*ws, ZWeight::Formal, N);
    HalfSeries oracle = oracle_trace(FockSpace{1, false}, *ws, N, z);
    int max_k = 0;
    const std::size_t zi = ws->z_index(0);
    for (const auto& [e, c] : oracle.terms())
      for (const auto& [exps, v] : c.num().terms()) max_k = std::max(max_k, std::abs(exps[zi]) / 2);
    r.checks.push_back(compare("closed z-graded trace = one-pair oracle", closed, oracle));
    r.findings.push_back("z-degrees compared: |k| <= " + std::to_string(max_k));
    return r;
  });
  out.suite = "needed";
  return out;
}

namespace {

enum class Family { Twisted, Sum, Irreducible };

Report module_suite(const SuiteParams& p, Family family) {
  require_order(p);
  if (p.n > 4) throw UsageError("module suites support n <= 4");
  if (p.l > 3) throw UsageError("module suites support l <= 3");
  const int N = p.order_x2;
  const Partition lam = lambda_or_empty(p);
  const std::string where = label(lam, p.l, p.n);
  return with_points(p, p.n, [&](const auto& make) {
    Report r;
    WorkspacePtr ws = make(0);
    WorkspacePtr wz = make(p.l);
    const FockSpace space{p.l, true};
    TraceOptions opt;
    opt.z_grading = true;
    std::string name;
    HalfSeries formula(ws->table(), std::nullopt);
    switch (family) {
      case Family::Twisted:
        opt.parity_sign = true;
        name = "twisted function = oracle extraction";
        formula = d_twisted_function(*ws, lam, p.l, N);
        break;
      case Family::Sum:
        name = "sum function = oracle extraction";
        formula = d_sum_function(*ws, lam, p.l, N);
        break;
      case Family::Irreducible:
        opt.projector = p.det ? TraceOptions::Projector::Odd : TraceOptions::Projector::Even;
        name = std::string("irreducible function") + (p.det ? " (det)" : "") + " = projected oracle extraction";
        formula = irreducible_function(*ws, BLabel{lam, p.det}, p.l, N);
        break;
    }
    HalfSeries oracle = extract_module_function(oracle_trace(space, *wz, N, opt), lam, p.l);
    r.checks.push_back(compare(name + " [" + where + "]", formula, oracle));
    if (!r.checks.back().pass || family == Family::Twisted) {
      TraceOptions fac = opt;
      fac.realization = Realization::Factorized;
      HalfSeries tr = oracle_trace(space, *wz, N, fac);
      r.findings.push_back("[" + where + "] against the species-factorized realization of D(t): " +
                           agreement(formula, extract_module_function(tr, lam, p.l)));
      if (family == Family::Twisted) {
        HalfSeries perm = d_twisted_function(*ws, lam, p.l, N, WeylSign::Permutation);
        r.findings.push_back("[" + where + "] permutation-sign sum against the factorized trace with the \"+\" denominator: " +
                             agreement(perm, extract_module_function(tr, lam, p.l, DenominatorReading::Plus)));
      }
    }
    return r;
  });
}

}  // namespace

Report suite_twisted(const SuiteParams& p) {
  Report r = module_suite(p, Family::Twisted);
  r.suite = "twisted";
  return r;
}

Report suite_sum(const SuiteParams& p) {
  Report r = module_suite(p, Family::Sum);
  r.suite = "sum";
  return r;
}

Report suite_irreducible(const SuiteParams& p) {
  Report r = module_suite(p, Family::Irreducible);
  r.suite = "irreducible";
  return r;
}

namespace {

/// First coefficient that is not a non-negative integer constant.
std::optional<std::pair<int, std::string>> first_non_natural(const HalfSeries& s) {
  for (const auto& [e, c] : s.terms()) {
    bool ok = c.num().is_constant() && c.den().is_one();
    if (ok) {
      BigRational v = c.constant_value();
      ok = v > 0 && v.get_den() == 1;
    }
    if (!ok) return std::make_pair(e, c.str());
  }
  return std::nullopt;
}

}  // namespace

Report suite_qdim(const SuiteParams& p) {
  require_order(p);
  if (p.l > 3) throw UsageError("qdim supports l <= 3");
  const int N = p.order_x2;
  std::vector<Partition> lambdas;
  if (p.lambda) {
    lambdas.push_back(lambda_or_empty(p));
  } else {
    lambdas = partitions_in_box(p.l, 2);
  }
  WorkspacePtr wz = Workspace::symbolic(0, p.l);
  const FockSpace space{p.l, true};
  TraceOptions plain, alpha, full;
  plain.z_grading = alpha.z_grading = full.z_grading = true;
  alpha.parity_sign = full.parity_sign = true;
  full.charge_parity_sign = true;
  HalfSeries tr_plain = oracle_trace(space, *wz, N, plain);
  HalfSeries tr_alpha = oracle_trace(space, *wz, N, alpha);
  HalfSeries tr_full = oracle_trace(space, *wz, N, full);

  Report r;
  r.suite = "qdim";
  const QDimForm sum_form{QDimForm::Shape::WeylSum};
  const QDimForm product_form{QDimForm::Shape::Product};
  QDimForm printed;
  printed.reading = QDimForm::Reading::AsPrinted;
  QDimForm perm;
  perm.sign = WeylSign::Permutation;
  for (const auto& lam : lambdas) {
    const std::string where = " [l=" + std::to_string(p.l) + " lambda=" + lam.str() + "]";
    const HalfSeries qp = q_plus(lam, p.l, N);
    const HalfSeries qm = q_minus(lam, p.l, N);
    r.checks.push_back(compare("Q+ Weyl sum = product" + where, qp, q_plus(lam, p.l, N, product_form)));
    r.checks.push_back(compare("Q- Weyl sum = product" + where, q_minus(lam, p.l, N, sum_form),
                               q_minus(lam, p.l, N, product_form)));
    r.checks.push_back(compare("Q+ = oracle extraction" + where, qp, extract_module_function(tr_plain, lam, p.l)));
    r.checks.push_back(compare("Q- = oracle extraction with (-1)^alpha" + where, qm,
                               extract_module_function(tr_alpha, lam, p.l)));
    r.findings.push_back("Q+ with the (-q^{-1/2};q)_inf prefactor" + where + ": " +
                         agreement(q_plus(lam, p.l, N, printed), qp));
    r.findings.push_back("Q- with the (q^{-1/2};q)_inf prefactor" + where + ": " +
                         agreement(q_minus(lam, p.l, N, printed), qm));

    HalfSeries sectors = qdim_irreducible(BLabel{lam, false}, p.l, N) + qdim_irreducible(BLabel{lam, true}, p.l, N);
    r.checks.push_back(compare("det sectors sum to Q+" + where, sectors, qp));
    for (bool det : {false, true}) {
      const BLabel b{lam, det};
      auto bad = first_non_natural(qdim_irreducible(b, p.l, N));
      r.checks.push_back(predicate("q-dimension of " + b.str() + " has non-negative integer coefficients" + where, !bad,
                                   bad ? "coefficient of " + q_power(bad->first) + " is " + bad->second : ""));
    }

    // -1 in O(2l+1) acts on the Fock space by (-1)^{alpha + total charge}.
    HalfSeries full_ex = extract_module_function(tr_full, lam, p.l);
    if (lam.size() % 2 != 0) full_ex = -full_ex;
    const HalfSeries qm_perm = q_minus(lam, p.l, N, perm);
    r.findings.push_back("permutation-sign Q- against the (-1)^{alpha+charge} trace" + where + ": " +
                         agreement(qm_perm, full_ex));
    bool natural = true;
    for (int s : {1, -1}) {
      HalfSeries h = qp + qm_perm * BigRational(s);
      h *= BigRational(1, 2);
      if (first_non_natural(h)) natural = false;
    }
    r.findings.push_back("(Q+ +/- permutation-sign Q-)/2" + where + (natural ? " has" : " lacks") +
                         " non-negative integer coefficients");
  }
  return r;
}

Report suite_denominator(const SuiteParams& p) {
  if (p.l < 1 || p.l > 4) throw UsageError("denominator needs 1 <= l <= 4");
  Report r;
  r.suite = "denominator";
  for (std::size_t l = 1; l <= p.l; ++l) {
    const LaurentPoly sum = weyl_denominator_B(l);
    const LaurentPoly minus = alternant(rho_B(l), EntrySign::Minus);
    r.checks.push_back(predicate("Weyl sum over W(B_" + std::to_string(l) + ") = det(z^rho - z^-rho)", sum == minus));
    const LaurentPoly plus = alternant(rho_B(l), EntrySign::Plus);
    const LaurentPoly diff = plus - sum;
    r.findings.push_back("l=" + std::to_string(l) + ": det(z^rho + z^-rho) " +
                         (diff.is_zero() ? std::string("agrees with the Weyl sum")
                                         : "differs from the Weyl sum in " + std::to_string(diff.size()) +
                                               " terms, e.g. " + diff.str().substr(0, 120)));
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"vacuum-recursion", "one-point", "needed", "twisted",
                                              "sum", "irreducible", "qdim", "denominator"};
  return names;
}

Report run_suite(const std::string& name, const SuiteParams& p) {
  if (name == "vacuum-recursion") return suite_vacuum_recursion(p);
  if (name == "one-point") return suite_one_point(p);
  if (name == "needed") return suite_needed(p);
  if (name == "twisted") return suite_twisted(p);
  if (name == "sum") return suite_sum(p);
  if (name == "irreducible") return suite_irreducible(p);
  if (name == "qdim") return suite_qdim(p);
  if (name == "denominator") return suite_denominator(p);
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace dcorr::tools

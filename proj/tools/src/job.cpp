#include "dcorr/tools/job.hpp"

#include <charconv>

#include "dcorr/correlation.hpp"
#include "dcorr/errors.hpp"
#include "dcorr/fock.hpp"
#include "dcorr/qdimension.hpp"
#include "dcorr/tools/verify.hpp"

namespace dcorr::tools {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    int v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (item.empty() || ec != std::errc() || ptr != last) throw UsageError("bad integer '" + item + "' in list");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

bool one_of(const std::string& v, std::initializer_list<const char*> options) {
  for (const char* o : options)
    if (v == o) return true;
  return false;
}

int order_x2(const JobRequest& req) { return HalfInt::parse(req.order).x2; }

Partition partition_of(const JobRequest& req) {
  std::vector<int> parts = parse_int_list(req.lambda);
  if (parts.size() > req.l) throw UsageError("lambda has more parts than l");
  Partition lam(parts);
  return Partition(lam.padded(req.l));
}

GenPartition gen_partition_of(const JobRequest& req) {
  std::vector<int> parts = parse_int_list(req.lambda);
  if (parts.size() > req.l) throw UsageError("lambda has more parts than l");
  parts.resize(req.l, 0);
  return GenPartition(parts);
}

QDimForm form_of(const JobRequest& req) {
  QDimForm f;
  f.shape = req.shape == "product" ? QDimForm::Shape::Product : QDimForm::Shape::WeylSum;
  f.reading = req.reading == "as-printed" ? QDimForm::Reading::AsPrinted : QDimForm::Reading::Corrected;
  f.sign = req.weyl_sign == "permutation" ? WeylSign::Permutation : WeylSign::Length;
  return f;
}

bool needs_points(const JobRequest& req) {
  if (req.command == "oracle") return true;
  return req.command == "compute" && one_of(req.family, {"gl", "d-sum", "d-twisted", "d-irreducible", "fbo"});
}

HalfSeries compute_on(const JobRequest& req, const std::function<WorkspacePtr(std::size_t)>& make) {
  const int N = order_x2(req);
  if (req.command == "oracle") {
    const FockSpace space{req.l, req.neutral};
    TraceOptions opt;
    opt.z_grading = req.z_grading || req.extract;
    opt.parity_sign = req.parity_sign;
    opt.charge_parity_sign = req.charge_parity_sign;
    opt.projector = req.projector == "even"  ? TraceOptions::Projector::Even
                    : req.projector == "odd" ? TraceOptions::Projector::Odd
                                             : TraceOptions::Projector::None;
    opt.realization = req.realization == "factorized" ? Realization::Factorized : Realization::Additive;
    WorkspacePtr ws = make(opt.z_grading ? req.l : 0);
    HalfSeries tr = oracle_trace(space, *ws, N, opt);
    if (!req.extract) return tr;
    if (!req.neutral) throw UsageError("--extract needs the neutral fermion");
    return extract_module_function(tr, partition_of(req), req.l);
  }
  WorkspacePtr ws = make(0);
  if (req.family == "gl") return gl_function(*ws, gen_partition_of(req), N);
  if (req.family == "fbo") return f_bo(*ws, N);
  const Partition lam = partition_of(req);
  const QDimForm form = form_of(req);
  if (req.family == "d-sum") return d_sum_function(*ws, lam, req.l, N);
  if (req.family == "d-twisted") return d_twisted_function(*ws, lam, req.l, N, form.sign);
  return irreducible_function(*ws, BLabel{lam, req.det}, req.l, N, form.sign);
}

}  // namespace

void validate(const JobRequest& req) {
  if (!one_of(req.command, {"compute", "oracle", "verify", "qdim"}))
    throw UsageError("unknown command '" + req.command + "'");
  if (!one_of(req.mode, {"symbolic", "eval"})) throw UsageError("mode must be symbolic or eval");
  if (!one_of(req.format, {"json", "text"})) throw UsageError("format must be json or text");
  if (!one_of(req.shape, {"weyl-sum", "product"})) throw UsageError("shape must be weyl-sum or product");
  if (!one_of(req.reading, {"corrected", "as-printed"})) throw UsageError("reading must be corrected or as-printed");
  if (!one_of(req.weyl_sign, {"length", "permutation"})) throw UsageError("weyl sign must be length or permutation");
  if (!one_of(req.projector, {"none", "even", "odd"})) throw UsageError("projector must be none, even or odd");
  if (!one_of(req.realization, {"additive", "factorized"}))
    throw UsageError("realization must be additive or factorized");
  if (HalfInt::parse(req.order).x2 < 0) throw UsageError("order must be non-negative");
  if (parse_int_list(req.lambda).size() > req.l) throw UsageError("lambda has more parts than l");
  if (req.command == "compute") {
    if (!one_of(req.family, {"gl", "d-sum", "d-twisted", "d-irreducible", "fbo", "theta", "q-plus", "q-minus"}))
      throw UsageError("unknown family '" + req.family + "'");
    if (req.family == "gl") {
      gen_partition_of(req);
    } else if (!one_of(req.family, {"fbo", "theta"})) {
      partition_of(req);
    }
    if (req.mode == "eval" && one_of(req.family, {"q-plus", "q-minus"}))
      throw UsageError("q-dimensions have no t-variables to evaluate");
  } else if (req.command == "qdim") {
    partition_of(req);
    if (req.mode == "eval") throw UsageError("q-dimensions have no t-variables to evaluate");
  } else if (req.command == "verify") {
    if (req.suite.empty()) throw UsageError("verify needs --suite");
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == req.suite;
    if (!known) throw UsageError("unknown suite '" + req.suite + "'");
    partition_of(req);
  }
  if (req.n > 12) throw UsageError("n is limited to 12");
  if (req.l > 6) throw UsageError("l is limited to 6");
}

Computed run_compute(const JobRequest& req) {
  validate(req);
  const int N = order_x2(req);
  if (req.command == "qdim") return {qdim_irreducible(BLabel{partition_of(req), req.det}, req.l, N, form_of(req)), {}};
  if (req.command == "compute") {
    if (req.family == "q-plus") return {q_plus(partition_of(req), req.l, N, form_of(req)), {}};
    if (req.family == "q-minus") return {q_minus(partition_of(req), req.l, N, form_of(req)), {}};
    if (req.family == "theta") {
      HalfSeries th = theta(ThetaArg{formal_table(), {1}}, N);
      if (req.mode == "symbolic") return {th, {}};
      PointSource source(req.seed);
      for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<BigRational> u = source.next(1);
        try {
          return {evaluate(th, {{0, u[0]}}), EvalPoint{{"t"}, u}};
        } catch (const EvaluationPointError&) {
        }
      }
      throw InvariantError("no usable evaluation point after repeated draws");
    }
  }
  if (!needs_points(req)) throw UsageError("command '" + req.command + "' does not produce a series");
  if (req.mode == "symbolic")
    return {compute_on(req, [&](std::size_t n_z) { return Workspace::symbolic(req.n, n_z); }), {}};
  PointSource source(req.seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<BigRational> u = source.next(req.n);
    try {
      HalfSeries s = compute_on(req, [&](std::size_t n_z) { return Workspace::evaluated(u, n_z); });
      EvalPoint p;
      for (std::size_t j = 0; j < u.size(); ++j) p.names.push_back("t" + std::to_string(j + 1));
      p.values = u;
      return {std::move(s), std::move(p)};
    } catch (const EvaluationPointError&) {
    }
  }
  throw InvariantError("no usable evaluation point after repeated draws");
}

JobOutput run_job(const JobRequest& req) {
  JobOutput out;
  try {
    validate(req);
    if (req.command == "verify") {
      SuiteParams p;
      p.l = req.l;
      if (!req.lambda.empty() || req.suite != "qdim") p.lambda = partition_of(req);
      p.det = req.det;
      p.n = req.n;
      p.order_x2 = order_x2(req);
      p.eval = req.mode == "eval";
      p.seed = req.seed;
      Report r = run_suite(req.suite, p);
      out.out = req.format == "json" ? r.to_json().dump(2) + "\n" : r.text();
      if (const Check* f = r.first_failure()) {
        out.err = "first mismatch: " + f->identity;
        if (f->q_x2) out.err += " at " + q_power(*f->q_x2) + ": " + f->lhs + " vs " + f->rhs;
        if (!f->note.empty()) out.err += " (" + f->note + ")";
        out.err += "\n";
        out.exit_code = kMismatch;
      }
      return out;
    }
    Computed c = run_compute(req);
    out.out = req.format == "json" ? to_json(c.series, c.point).dump(2) + "\n" : to_text(c.series, c.point);
  } catch (const UsageError& e) {
    out = {kBadInput, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvariantError& e) {
    out = {kInvariant, "", std::string("internal invariant failed: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    out = {kInvariant, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return out;
}

}  // namespace dcorr::tools

#include <iostream>

#include <CLI11.hpp>

#include "dcorr/tools/job.hpp"

namespace {

void add_common(CLI::App* sub, dcorr::tools::JobRequest& req) {
  sub->add_option("--l", req.l, "rank l (number of fermion pairs)");
  sub->add_option("--lambda", req.lambda, "partition as a comma list, e.g. \"2,1\"; empty for the trivial one")
      ->expected(0, 1);
  sub->add_flag("--det", req.det, "select the lambda (x) det sector");
  sub->add_option("--n", req.n, "number of points t1..tn");
  sub->add_option("--order", req.order, "truncation order in q, e.g. \"9/2\"");
  sub->add_option("--mode", req.mode, "symbolic | eval");
  sub->add_option("--seed", req.seed, "seed for evaluation points");
  sub->add_option("--format", req.format, "json | text");
  sub->add_option("--weyl-sign", req.weyl_sign, "length | permutation");
}

}  // namespace

int main(int argc, char** argv) {
  dcorr::tools::JobRequest req;
  CLI::App app{"Exact q-series for d-infinity correlation functions and their Fock-space oracle"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute one function to the requested order");
  add_common(compute, req);
  compute->add_option("--family", req.family, "gl | d-sum | d-twisted | d-irreducible | fbo | theta | q-plus | q-minus")
      ->required();
  compute->add_option("--shape", req.shape, "weyl-sum | product");
  compute->add_option("--reading", req.reading, "corrected | as-printed");

  auto* qdim = app.add_subcommand("qdim", "q-dimension of an irreducible module");
  add_common(qdim, req);
  qdim->add_option("--shape", req.shape, "weyl-sum | product");
  qdim->add_option("--reading", req.reading, "corrected | as-printed");

  auto* oracle = app.add_subcommand("oracle", "brute-force Fock-space trace");
  add_common(oracle, req);
  oracle->add_flag("!--no-neutral", req.neutral, "drop the neutral fermion");
  oracle->add_flag("--z-grading", req.z_grading, "grade by the torus charges");
  oracle->add_flag("--parity-sign", req.parity_sign, "insert (-1)^alpha");
  oracle->add_flag("--charge-parity-sign", req.charge_parity_sign, "insert (-1)^(total charge)");
  oracle->add_option("--projector", req.projector, "none | even | odd");
  oracle->add_option("--realization", req.realization, "additive | factorized");
  oracle->add_flag("--extract", req.extract, "read off the lambda component");

  auto* verify = app.add_subcommand("verify", "check closed formulas against the oracle");
  add_common(verify, req);
  verify->add_option("--suite", req.suite,
                     "vacuum-recursion | one-point | needed | twisted | sum | irreducible | qdim | denominator")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dcorr::tools::kBadInput;
  }
  req.command = app.get_subcommands().front()->get_name();

  dcorr::tools::JobOutput result = dcorr::tools::run_job(req);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

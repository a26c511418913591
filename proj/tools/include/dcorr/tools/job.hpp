#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dcorr/lie.hpp"
#include "dcorr/series.hpp"
#include "dcorr/tools/serialize.hpp"

namespace dcorr::tools {

enum ExitCode : int { kPass = 0, kMismatch = 1, kBadInput = 2, kInvariant = 3 };

struct JobRequest {
  std::string command;  // compute | oracle | verify | qdim
  std::string family;   // gl | d-sum | d-twisted | d-irreducible | fbo | theta | q-plus | q-minus
  std::size_t l = 0;
  std::string lambda;   // comma list, possibly empty
  bool det = false;
  std::size_t n = 0;
  std::string order = "0";
  std::string mode = "symbolic";  // symbolic | eval
  std::uint64_t seed = 1;
  std::string format = "json";    // json | text
  std::string suite;

  // q-plus / q-minus / qdim
  std::string shape = "weyl-sum";    // weyl-sum | product
  std::string reading = "corrected"; // corrected | as-printed
  std::string weyl_sign = "length";  // length | permutation

  // oracle
  bool neutral = true;
  bool z_grading = false;
  bool parity_sign = false;
  bool charge_parity_sign = false;
  std::string projector = "none";         // none | even | odd
  std::string realization = "additive";   // additive | factorized
  bool extract = false;
};

/// Parsed "a,b,c"; an empty string is the empty list.
std::vector<int> parse_int_list(const std::string& text);

/// Checks the invariants common to every command; UsageError on violation.
void validate(const JobRequest& req);

struct Computed {
  HalfSeries series;
  std::optional<EvalPoint> point;
};

/// compute, oracle and qdim commands.
Computed run_compute(const JobRequest& req);

struct JobOutput {
  int exit_code = kPass;
  std::string out;  // standard output
  std::string err;  // diagnostics
};

/// Full command execution with error mapping to exit codes.
JobOutput run_job(const JobRequest& req);

}  // namespace dcorr::tools

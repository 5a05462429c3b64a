#pragma once

// Seeded random instances for every checker, and the harness that runs them.
// An Instance carries everything evaluate() needs, so a dumped instance can be
// re-evaluated bit-for-bit without the generator.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qel/channels.hpp"
#include "qel/io.hpp"
#include "qel/lab.hpp"
#include "qel/states.hpp"

namespace qel {

struct SuiteConfig {
  Dims dims{2, 2, 2};
  double tol = tol::ineq;
  double eps = 1e-6;
  Index nmax = 64;
  std::vector<double> t_samples = kDefaultTSamples;
  /// Overrides the per-checker alpha grid when non-empty.
  std::vector<double> alphas;
  Index twirl_samples = 10000;
};

struct Instance {
  std::string checker;
  Dims dims;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::map<std::string, MultipartiteState> states;
  std::map<std::string, KrausChannel> channels;
  std::map<std::string, Mat> matrices;
  std::map<std::string, std::vector<double>> params;

  const MultipartiteState& state(const std::string& key) const;
  const KrausChannel& channel(const std::string& key) const;
  const Mat& matrix(const std::string& key) const;
  const std::vector<double>& param(const std::string& key) const;
  double scalar(const std::string& key) const;
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

struct Checker {
  std::string name;
  std::function<Instance(const SuiteConfig&, std::uint64_t seed, std::uint64_t trial)> generate;
  std::function<CheckResult(const Instance&, const SuiteConfig&)> evaluate;
};

const std::vector<Checker>& checkers();
/// Throws BadArgument for unknown names.
const Checker& find_checker(std::string_view name);
/// Expands "all" and validates names, keeping the registry order for "all".
std::vector<std::string> resolve_suite(const std::vector<std::string>& names);

/// Evaluates an instance with its checker and stamps dims/seed/trial.
CheckResult evaluate_instance(const Instance& inst, const SuiteConfig& cfg);

struct TrialRecord {
  Instance instance;
  CheckResult result;
};

/// Runs trials 0..trials-1; the output is ordered by trial regardless of `threads`.
std::vector<TrialRecord> run_checker(const Checker& checker, const SuiteConfig& cfg,
                                     std::uint64_t seed, std::uint64_t trials,
                                     unsigned threads = 1);

/// Single-system dimension used by the channel and matrix checkers.
Index single_dim(const Dims& dims);

}  // namespace qel

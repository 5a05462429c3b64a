#pragma once

// Random searches against conjectured strengthenings. Nothing here asserts:
// the report only records how close the conjectures come to failing.

#include <cstdint>
#include <string>
#include <vector>

#include "qel/suite.hpp"

namespace qel {

enum class Ensemble { random, markov };

/// stronger-mono, ptrace-petz, cmi-petz, trotter-monotone.
const std::vector<std::string>& explore_kinds();
/// Throws BadArgument for an unknown kind.
void require_explore_kind(const std::string& kind);
Ensemble parse_ensemble(const std::string& text);
std::string to_string(Ensemble e);

struct Histogram {
  std::vector<double> edges;  // bins + 1 edges
  std::vector<std::uint64_t> counts;
};
Histogram make_histogram(const std::vector<double>& values, std::size_t bins = 20);

struct Candidate {
  std::uint64_t trial = 0;
  double slack = 0;
};

struct ExploreReport {
  std::string kind;
  Ensemble ensemble = Ensemble::random;
  Dims dims;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  double threshold = 0;  // candidates have slack below this
  double min_slack = 0;
  std::uint64_t worst_trial = 0;
  Instance worst;
  std::vector<double> slacks;
  Histogram histogram;
  std::vector<Candidate> candidates;
};

/// The instance explored at one trial, and its slack.
Instance explore_instance(const std::string& kind, Ensemble ensemble, const SuiteConfig& cfg,
                          std::uint64_t seed, std::uint64_t trial);
double explore_slack(const Instance& inst);

ExploreReport explore_conjecture(const std::string& kind, Ensemble ensemble, const SuiteConfig& cfg,
                                 std::uint64_t seed, std::uint64_t trials, unsigned threads = 1);

Json report_to_json(const ExploreReport& r);

}  // namespace qel

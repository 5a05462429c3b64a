#pragma once

// One checker per inequality, identity or limit. Each evaluates both sides on
// concrete operators and returns a verdict whose slack is oriented so that a
// nonnegative value means the statement holds.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qel/channels.hpp"
#include "qel/entropy.hpp"
#include "qel/linalg.hpp"
#include "qel/states.hpp"

namespace qel {

using Quantities = std::vector<std::pair<std::string, double>>;

struct TrialMeta {
  Dims dims;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

struct CheckResult {
  std::string name;
  Quantities quantities;
  double slack = 0;
  bool pass = false;
  double tolerance = tol::ineq;
  TrialMeta meta;

  static CheckResult make(std::string name, double slack, Quantities quantities,
                          double tolerance = tol::ineq);

  /// pass must equal (slack >= -tolerance).
  bool consistent() const { return pass == (slack >= -tolerance); }
  /// Looks up a recorded quantity; throws BadArgument when absent.
  double quantity(std::string_view key) const;
};

/// An asserted side condition with its own tolerance.
struct Condition {
  std::string label;
  double slack = 0;
  double tolerance = tol::ineq;
};

/// links[0] >= links[1] >= ... ; slacks[i] = links[i] - links[i+1].
struct ChainResult {
  std::string name;
  std::vector<std::pair<std::string, double>> links;
  std::vector<double> slacks;
  std::vector<Condition> conditions;
  Quantities quantities;
  bool pass = false;
  double tolerance = tol::ineq;
  TrialMeta meta;

  static ChainResult make(std::string name, std::vector<std::pair<std::string, double>> links,
                          std::vector<Condition> conditions = {}, Quantities quantities = {},
                          double tolerance = tol::ineq);

  /// Smallest slack, every condition rescaled to the chain tolerance.
  double min_slack() const;
  double quantity(std::string_view key) const;
  double link(std::string_view key) const;
  /// Flattened verdict: links, slacks, conditions and quantities in one record.
  CheckResult to_check() const;
};

/// The three lower bounds shared by every strengthened inequality:
/// -2 log Tr sqrt(rho) sqrt(omega), ||sqrt(rho) - sqrt(omega)||_2^2, and
/// 1/4 ||rho - omega||_1^2.
struct OverlapBounds {
  double overlap = 0;
  double two_norm_sq = 0;
  double quarter_one_norm_sq = 0;
  double one_norm = 0;
};
OverlapBounds overlap_bounds(const Mat& rho, const Mat& omega);

/// exp(log sigma + Phi^*(log Phi(rho)) - Phi^*(log Phi(sigma))).
Mat omega_channel(const Mat& rho, const Mat& sigma, const KrausChannel& phi);
/// exp(log sigma_AB - log sigma_A + log rho_A) for bipartite states.
Mat omega_ptrace(const MultipartiteState& rho_ab, const MultipartiteState& sigma_ab);

/// Tr[(rho_AB^{a/2} sigma_B^{-a/2} tau_BC^a sigma_B^{-a/2} rho_AB^{a/2})^{1/a}].
double sandwiched_trace(const MultipartiteState& rho, const MultipartiteState& sigma,
                        const MultipartiteState& tau, double alpha);

/// Tr[{sigma^{a/2} Phi^*(Phi(sigma)^{-a/2} Phi(rho)^a Phi(sigma)^{-a/2}) sigma^{a/2}}^{1/a}]
/// together with the operator inside the trace raised to 1/a.
struct AlphaOperator {
  Mat op;
  double trace = 0;
};
AlphaOperator dw_operator(const Mat& rho, const Mat& sigma, const KrausChannel& phi, double alpha);

CheckResult check_monotonicity(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                               double tol = tol::ineq);
ChainResult check_stronger_monotonicity(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                                        double tol = tol::ineq);
ChainResult check_ptrace_strengthening(const MultipartiteState& rho_ab,
                                       const MultipartiteState& sigma_ab, double tol = tol::ineq);
ChainResult check_ssa_strengthened(const MultipartiteState& rho, double tol = tol::ineq);
CheckResult check_trace_exp_bound(const MultipartiteState& rho, const MultipartiteState& sigma,
                                  const MultipartiteState& tau, double tol = tol::ineq);
CheckResult check_unital_trace_bound(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                                     double tol = tol::ineq);
CheckResult check_bsw_identity(const MultipartiteState& rho, const MultipartiteState& sigma,
                               const MultipartiteState& tau, const MultipartiteState& omega,
                               double tol = tol::identity);
CheckResult check_super_ssa(const MultipartiteState& rho, const MultipartiteState& sigma,
                            double tol = tol::ineq);
ChainResult check_three_state_chain(const MultipartiteState& rho, const MultipartiteState& sigma,
                                    const MultipartiteState& tau, const MultipartiteState& omega,
                                    double tol = tol::ineq);
ChainResult check_subadd_exp(const MultipartiteState& rho, double tol = tol::ineq);

/// Default sample points for the modular-flow characterization.
inline const std::vector<double> kDefaultTSamples = {0.3, 0.7, 1.1, 1.9};

/// Thresholds deciding "Markov-like": CMI below kMarkovCmi, residuals below kMarkovResidual.
inline constexpr double kMarkovCmi = 1e-8;
inline constexpr double kMarkovResidual = 1e-7;
CheckResult markov_characterizations(const MultipartiteState& rho,
                                     std::span<const double> t_samples = kDefaultTSamples);

ChainResult trotter_sequence(const MultipartiteState& rho, std::span<const Index> n_values,
                             double tol = tol::ineq);

CheckResult check_dw_alpha(const Mat& rho, const Mat& sigma, const KrausChannel& phi, double alpha,
                           double tol = tol::ineq);
CheckResult check_dw_tripartite(const MultipartiteState& rho, double alpha, double tol = tol::ineq);

inline constexpr double kSbwFinalError = 1e-4;
CheckResult check_sbw_limit(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                            std::span<const double> alpha_seq);

CheckResult check_lieb_concavity(const Mat& h, const Mat& x1, const Mat& x2, double lambda,
                                 double tol = tol::ineq);
CheckResult check_cl_concavity(const Mat& m, const Mat& x1, const Mat& x2, double lambda,
                               double alpha, double tol = tol::ineq);
CheckResult check_golden_thompson(const Mat& a, const Mat& b, double tol = tol::ineq);
ChainResult check_audenaert_ps(const Mat& m, const Mat& n, std::span<const double> t_values,
                               double tol = tol::ineq);
CheckResult check_squashed_proxy(const MultipartiteState& rho, double tol = tol::ineq);
CheckResult check_twirl_identity(const Mat& x, Index da, Index db, Index n, Rng& rng);

CheckResult check_renyi_monotonicity(const Mat& rho, const Mat& sigma,
                                     std::span<const double> alphas, double tol = tol::ineq);
/// S(rho||sigma) >= -2 log Tr sqrt(rho) sqrt(sigma) >= ||sqrt(rho)-sqrt(sigma)||_2^2
/// >= 1/4 ||rho-sigma||_1^2 for Tr sigma <= 1, plus Pinsker and the norm
/// sandwich when sigma is normalized.
ChainResult check_univ_chain(const Mat& rho, const Mat& sigma, double tol = tol::ineq);

}  // namespace qel

#include "qel/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qel {

namespace {

constexpr double kMarginalTol = 1e-8;

void require_tripartite(const MultipartiteState& rho, const char* what) {
  if (rho.parties() != 3)
    throw Error(ErrorKind::NotTripartite, std::string(what) + ": expected 3 subsystems");
}

void require_same_shape(const MultipartiteState& a, const MultipartiteState& b, const char* what) {
  if (a.dims() != b.dims())
    throw Error(ErrorKind::DimMismatch, std::string(what) + ": states have different shapes");
}

double finite_or_throw(const EntropyValue& v, const char* what) {
  if (v.infinite)
    throw Error(ErrorKind::SingularInput, std::string(what) + " is infinite; inputs must be full rank");
  return v.value;
}

double rel(const Mat& rho, const Mat& sigma) {
  return finite_or_throw(relative_entropy(rho, sigma), "relative entropy");
}

bool marginals_match(const Mat& x, const Mat& y) { return trace_norm(Mat(x - y)) <= kMarginalTol; }

std::vector<std::pair<std::string, double>> bound_links(std::string head_label, double head,
                                                        const OverlapBounds& b) {
  return {{std::move(head_label), head},
          {"overlap", b.overlap},
          {"two_norm_sq", b.two_norm_sq},
          {"quarter_one_norm_sq", b.quarter_one_norm_sq}};
}

}  // namespace

CheckResult CheckResult::make(std::string name, double slack, Quantities quantities,
                              double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.quantities = std::move(quantities);
  r.slack = slack;
  r.tolerance = tolerance;
  r.pass = slack >= -tolerance;
  return r;
}

double CheckResult::quantity(std::string_view key) const {
  for (const auto& [k, v] : quantities)
    if (k == key) return v;
  throw Error(ErrorKind::BadArgument, "no quantity '" + std::string(key) + "' in " + name);
}

ChainResult ChainResult::make(std::string name, std::vector<std::pair<std::string, double>> links,
                              std::vector<Condition> conditions, Quantities quantities,
                              double tolerance) {
  ChainResult r;
  r.name = std::move(name);
  r.links = std::move(links);
  r.conditions = std::move(conditions);
  r.quantities = std::move(quantities);
  r.tolerance = tolerance;
  for (std::size_t i = 0; i + 1 < r.links.size(); ++i)
    r.slacks.push_back(r.links[i].second - r.links[i + 1].second);
  r.pass = true;
  for (double s : r.slacks) r.pass = r.pass && s >= -tolerance;
  for (const auto& c : r.conditions) r.pass = r.pass && c.slack >= -c.tolerance;
  return r;
}

double ChainResult::min_slack() const {
  double m = std::numeric_limits<double>::infinity();
  for (double s : slacks) m = std::min(m, s);
  // Scale each condition to the chain tolerance so that pass == (min_slack >= -tolerance).
  for (const auto& c : conditions) {
    double scaled = c.slack;
    if (c.slack < 0) {
      scaled = c.tolerance > 0 ? c.slack * (tolerance / c.tolerance)
                               : -std::numeric_limits<double>::infinity();
    }
    m = std::min(m, scaled);
  }
  return m;
}

double ChainResult::quantity(std::string_view key) const {
  for (const auto& [k, v] : quantities)
    if (k == key) return v;
  throw Error(ErrorKind::BadArgument, "no quantity '" + std::string(key) + "' in " + name);
}

double ChainResult::link(std::string_view key) const {
  for (const auto& [k, v] : links)
    if (k == key) return v;
  throw Error(ErrorKind::BadArgument, "no link '" + std::string(key) + "' in " + name);
}

CheckResult ChainResult::to_check() const {
  Quantities q;
  for (const auto& [k, v] : links) q.emplace_back("link:" + k, v);
  for (std::size_t i = 0; i < slacks.size(); ++i)
    q.emplace_back("slack:" + links[i].first + ">=" + links[i + 1].first, slacks[i]);
  for (const auto& c : conditions) q.emplace_back("cond:" + c.label, c.slack);
  q.insert(q.end(), quantities.begin(), quantities.end());
  CheckResult r;
  r.name = name;
  r.quantities = std::move(q);
  r.slack = links.empty() && conditions.empty() ? 0.0 : min_slack();
  r.tolerance = tolerance;
  r.pass = pass;
  r.meta = meta;
  return r;
}

OverlapBounds overlap_bounds(const Mat& rho, const Mat& omega) {
  OverlapBounds b;
  const Mat sr = sqrtm(rho);
  const Mat so = sqrtm(omega);
  const double f = (sr * so).trace().real();
  b.overlap = f > 0 ? -2.0 * std::log(f) : std::numeric_limits<double>::infinity();
  const double two = (sr - so).norm();
  b.two_norm_sq = two * two;
  b.one_norm = trace_norm(Mat(rho - omega));
  b.quarter_one_norm_sq = 0.25 * b.one_norm * b.one_norm;
  return b;
}

Mat omega_channel(const Mat& rho, const Mat& sigma, const KrausChannel& phi) {
  const DualMap phi_dual = dual(phi);
  const Mat log_phi_rho = logm(hermitize(phi(rho)));
  const Mat log_phi_sigma = logm(hermitize(phi(sigma)));
  const Mat exponent = logm(sigma) + phi_dual(log_phi_rho) - phi_dual(log_phi_sigma);
  return expm(hermitize(exponent));
}

Mat omega_ptrace(const MultipartiteState& rho_ab, const MultipartiteState& sigma_ab) {
  if (rho_ab.parties() != 2)
    throw Error(ErrorKind::DimMismatch, "omega_ptrace: expected bipartite states");
  require_same_shape(rho_ab, sigma_ab, "omega_ptrace");
  return exp_log_combination({{1, sigma_ab.mat(), {0, 1}},
                              {-1, sigma_ab.marginal({0}), {0}},
                              {1, rho_ab.marginal({0}), {0}}},
                             rho_ab.dims());
}

double sandwiched_trace(const MultipartiteState& rho, const MultipartiteState& sigma,
                        const MultipartiteState& tau, double alpha) {
  require_tripartite(rho, "sandwiched_trace");
  require_same_shape(rho, sigma, "sandwiched_trace");
  require_same_shape(rho, tau, "sandwiched_trace");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::BadAlpha, "sandwiched_trace: alpha must lie in (0,1]");
  const auto& d = rho.dims();
  const Index ab[] = {0, 1};
  const Index b[] = {1};
  const Index bc[] = {1, 2};
  const Mat left = embed(powm(rho.marginal(ab), alpha / 2), d, ab) *
                   embed(powm(sigma.marginal(b), -alpha / 2), d, b);
  const Mat middle = embed(powm(tau.marginal(bc), alpha), d, bc);
  const Mat g = hermitize(Mat(left * middle * left.adjoint()));
  const auto e = herm_eig(g);
  double t = 0;
  for (Index i = 0; i < e.dim(); ++i) t += std::pow(std::max(e.eigenvalues(i), 0.0), 1.0 / alpha);
  return t;
}

AlphaOperator dw_operator(const Mat& rho, const Mat& sigma, const KrausChannel& phi, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorKind::BadAlpha, "alpha must lie in (0,1), got " + std::to_string(alpha));
  const DualMap phi_dual = dual(phi);
  Mat phi_sigma = hermitize(phi(sigma));
  if (!herm_eig(phi_sigma).full_rank()) {
    const Index d = phi_sigma.rows();
    phi_sigma = (1.0 - 1e-10) * phi_sigma + (1e-10 / static_cast<double>(d)) * eye(d);
  }
  const Mat s_half = powm(phi_sigma, -alpha / 2);
  const Mat inner = hermitize(Mat(s_half * powm(hermitize(phi(rho)), alpha) * s_half));
  const Mat outer = powm(sigma, alpha / 2);
  const Mat x = hermitize(Mat(outer * phi_dual(inner) * outer));
  const auto e = herm_eig(x);
  AlphaOperator out;
  out.op = e.apply([alpha](double v) { return std::pow(std::max(v, 0.0), 1.0 / alpha); });
  out.trace = 0;
  for (Index i = 0; i < e.dim(); ++i)
    out.trace += std::pow(std::max(e.eigenvalues(i), 0.0), 1.0 / alpha);
  return out;
}

CheckResult check_monotonicity(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                               double tol) {
  const auto before = relative_entropy(rho, sigma);
  const auto after = relative_entropy(hermitize(phi(rho)), hermitize(phi(sigma)));
  double slack;
  if (before.infinite) {
    slack = std::numeric_limits<double>::infinity();
  } else if (after.infinite) {
    slack = -std::numeric_limits<double>::infinity();
  } else {
    slack = before.value - after.value;
  }
  return CheckResult::make("monotonicity", slack,
                           {{"lhs", before.infinite ? INFINITY : before.value},
                            {"rhs", after.infinite ? INFINITY : after.value}},
                           tol);
}

ChainResult check_stronger_monotonicity(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                                        double tol) {
  if (!phi.unital()) throw Error(ErrorKind::NotUnital, "stronger monotonicity needs a unital channel");
  const double lhs = rel(rho, sigma) - rel(hermitize(phi(rho)), hermitize(phi(sigma)));
  const Mat omega = omega_channel(rho, sigma, phi);
  const double tr = trace_re(omega);
  const auto b = overlap_bounds(rho, omega);
  return ChainResult::make("stronger-monotonicity", bound_links("relative_entropy_gap", lhs, b),
                           {{"trace_omega<=1", 1.0 - tr, tol}},
                           {{"trace_omega", tr}, {"one_norm", b.one_norm}}, tol);
}

ChainResult check_ptrace_strengthening(const MultipartiteState& rho_ab,
                                       const MultipartiteState& sigma_ab, double tol) {
  const Mat omega = omega_ptrace(rho_ab, sigma_ab);
  const double lhs = rel(rho_ab.mat(), sigma_ab.mat()) -
                     rel(rho_ab.marginal({0}), sigma_ab.marginal({0}));
  const double tr = trace_re(omega);
  const auto b = overlap_bounds(rho_ab.mat(), omega);
  return ChainResult::make("ptrace-strengthening", bound_links("relative_entropy_gap", lhs, b),
                           {{"trace_omega<=1", 1.0 - tr, tol}},
                           {{"trace_omega", tr}, {"one_norm", b.one_norm}}, tol);
}

ChainResult check_ssa_strengthened(const MultipartiteState& rho, double tol) {
  require_tripartite(rho, "check_ssa_strengthened");
  const double i = cmi(rho);
  const Mat omega = omega_ssa(rho);
  const double tr = trace_re(omega);
  const auto b = overlap_bounds(rho.mat(), omega);
  return ChainResult::make("ssa", bound_links("cmi", i, b), {{"trace_omega<=1", 1.0 - tr, tol}},
                           {{"trace_omega", tr}, {"one_norm", b.one_norm}}, tol);
}

CheckResult check_trace_exp_bound(const MultipartiteState& rho, const MultipartiteState& sigma,
                                  const MultipartiteState& tau, double tol) {
  require_tripartite(rho, "check_trace_exp_bound");
  const bool rho_sigma = marginals_match(rho.marginal({1}), sigma.marginal({1}));
  const bool sigma_tau = marginals_match(sigma.marginal({1}), tau.marginal({1}));
  if (!rho_sigma && !sigma_tau)
    throw Error(ErrorKind::MarginalMismatch, "need rho_B = sigma_B or sigma_B = tau_B");
  const double tr = trace_re(omega_three(rho, sigma, tau));
  return CheckResult::make("trace-exp-bound", 1.0 - tr, {{"trace", tr}}, tol);
}

CheckResult check_unital_trace_bound(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                                     double tol) {
  if (!phi.unital()) throw Error(ErrorKind::NotUnital, "trace bound needs a unital channel");
  const double tr = trace_re(omega_channel(rho, sigma, phi));
  return CheckResult::make("unital-trace-bound", 1.0 - tr, {{"trace", tr}}, tol);
}

CheckResult check_bsw_identity(const MultipartiteState& rho, const MultipartiteState& sigma,
                               const MultipartiteState& tau, const MultipartiteState& omega,
                               double tol) {
  require_tripartite(rho, "check_bsw_identity");
  const double lhs = rel(rho.mat(), omega_bsw(sigma, tau, omega));
  const double rhs = cmi(rho) + rel(rho.marginal({0, 1}), sigma.marginal({0, 1})) +
                     rel(rho.marginal({1, 2}), tau.marginal({1, 2})) -
                     rel(rho.marginal({1}), omega.marginal({1}));
  const double residual = std::abs(lhs - rhs);
  return CheckResult::make("bsw", -residual, {{"lhs", lhs}, {"rhs", rhs}, {"residual", residual}},
                           tol);
}

CheckResult check_super_ssa(const MultipartiteState& rho, const MultipartiteState& sigma,
                            double tol) {
  require_tripartite(rho, "check_super_ssa");
  const double lhs = rel(rho.mat(), omega_bsw(sigma, sigma, sigma));
  const double rhs = cmi(rho) + 0.5 * rel(rho.marginal({0, 1}), sigma.marginal({0, 1})) +
                     0.5 * rel(rho.marginal({1, 2}), sigma.marginal({1, 2}));
  return CheckResult::make("super-ssa", lhs - rhs, {{"lhs", lhs}, {"rhs", rhs}}, tol);
}

ChainResult check_three_state_chain(const MultipartiteState& rho, const MultipartiteState& sigma,
                                    const MultipartiteState& tau, const MultipartiteState& omega,
                                    double tol) {
  require_tripartite(rho, "check_three_state_chain");
  const bool st = marginals_match(sigma.marginal({1}), tau.marginal({1}));
  const bool tw = marginals_match(tau.marginal({1}), omega.marginal({1}));
  if (!st && !tw) throw Error(ErrorKind::MarginalMismatch, "need sigma_B = tau_B or tau_B = omega_B");
  const Mat big_omega = omega_three(sigma, tau, omega);
  const double tr = trace_re(big_omega);
  const double head = rel(rho.mat(), big_omega);
  const auto b = overlap_bounds(rho.mat(), big_omega);
  return ChainResult::make("three-state", bound_links("relative_entropy", head, b),
                           {{"trace_omega<=1", 1.0 - tr, tol}},
                           {{"trace_omega", tr}, {"one_norm", b.one_norm}}, tol);
}

ChainResult check_subadd_exp(const MultipartiteState& rho, double tol) {
  require_tripartite(rho, "check_subadd_exp");
  const auto& d = rho.dims();
  const Mat rho_ab = rho.marginal({0, 1});
  const Mat rho_bc = rho.marginal({1, 2});
  const Mat rho_b = rho.marginal({1});
  const double lhs = von_neumann(rho_ab) + von_neumann(rho_bc) - von_neumann(rho.mat());
  const Mat omega = omega_subadd(rho);
  const double tr = trace_re(omega);
  const auto b = overlap_bounds(rho.mat(), omega);
  const Index ab[] = {0, 1};
  const Index bc[] = {1, 2};
  const double tr_product = (embed(rho_ab, d, ab) * embed(rho_bc, d, bc)).trace().real();
  const double purity = (rho_b * rho_b).trace().real();
  constexpr double kMiddleEquality = 1e-10;
  return ChainResult::make(
      "subadd-exp", bound_links("entropy_gap", lhs, b),
      {{"golden_thompson", tr_product - tr, tol},
       {"product_trace=purity_B", -std::abs(tr_product - purity), kMiddleEquality},
       {"purity_B<=1", 1.0 - purity, tol},
       {"trace_omega<=1", 1.0 - tr, tol}},
      {{"trace_omega", tr},
       {"trace_product", tr_product},
       {"purity_B", purity},
       {"entropy_B_plus_cmi", von_neumann(rho_b) + cmi(rho)}},
      tol);
}

CheckResult markov_characterizations(const MultipartiteState& rho,
                                     std::span<const double> t_samples) {
  require_tripartite(rho, "markov_characterizations");
  const auto& d = rho.dims();
  const Index ab[] = {0, 1};
  const Index b[] = {1};
  const Index bc[] = {1, 2};
  const Mat m_ab = rho.marginal(ab);
  const Mat m_b = rho.marginal(b);
  const Mat m_bc = rho.marginal(bc);

  const Mat ruskai = logm(rho.mat()) + embed(logm(m_b), d, b) - embed(logm(m_ab), d, ab) -
                     embed(logm(m_bc), d, bc);
  const double r_log = op_norm(ruskai);

  double r_petz = 0;
  for (double t : t_samples) {
    const Mat lhs = ipowm(rho.mat(), t) * embed(ipowm(m_bc, -t), d, bc);
    const Mat rhs = embed(ipowm(m_ab, t), d, ab) * embed(ipowm(m_b, -t), d, b);
    r_petz = std::max(r_petz, op_norm(Mat(lhs - rhs)));
  }

  const Mat m = embed(sqrtm(m_ab), d, ab) * embed(powm(m_b, -0.5), d, b) * embed(sqrtm(m_bc), d, bc);
  const double r_mm = trace_norm(Mat(rho.mat() - m * m.adjoint()));
  const double r_mdm = trace_norm(Mat(rho.mat() - m.adjoint() * m));
  const double r_omega = trace_norm(Mat(rho.mat() - omega_ssa(rho)));
  const double i = cmi(rho);

  const bool markov_like = i < kMarkovCmi;
  bool consistent = true;
  for (double r : {r_log, r_petz, r_mm, r_mdm, r_omega}) consistent = consistent && ((r < kMarkovResidual) == markov_like);
  return CheckResult::make("markov", consistent ? 0.0 : -1.0,
                           {{"cmi", i},
                            {"r_log", r_log},
                            {"r_petz", r_petz},
                            {"r_mmdag", r_mm},
                            {"r_mdagm", r_mdm},
                            {"r_omega", r_omega},
                            {"markov_like", markov_like ? 1.0 : 0.0}},
                           0.0);
}

ChainResult trotter_sequence(const MultipartiteState& rho, std::span<const Index> n_values,
                             double tol) {
  require_tripartite(rho, "trotter_sequence");
  if (n_values.empty()) throw Error(ErrorKind::BadArgument, "trotter_sequence: no n values");
  for (std::size_t k = 0; k < n_values.size(); ++k) {
    if (n_values[k] < 1) throw Error(ErrorKind::BadArgument, "trotter_sequence: n must be >= 1");
    if (k > 0 && n_values[k] <= n_values[k - 1])
      throw Error(ErrorKind::BadArgument, "trotter_sequence: n values must ascend");
  }
  const double tr_omega = trace_re(omega_ssa(rho));
  std::vector<Condition> conditions;
  Quantities q;
  std::vector<double> t_values;
  for (Index n : n_values) {
    const double t = sandwiched_trace(rho, rho, rho, 1.0 / static_cast<double>(n));
    t_values.push_back(t);
    conditions.push_back({"t_" + std::to_string(n) + "<=1", 1.0 - t, tol});
    q.emplace_back("t_" + std::to_string(n), t);
  }
  const double first_gap = std::abs(t_values.front() - tr_omega);
  const double last_gap = std::abs(t_values.back() - tr_omega);
  conditions.push_back({"converges_to_trace_omega", first_gap - last_gap, tol});
  double min_decrease = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < t_values.size(); ++k)
    min_decrease = std::min(min_decrease, t_values[k] - t_values[k + 1]);
  q.emplace_back("trace_omega", tr_omega);
  q.emplace_back("first_gap", first_gap);
  q.emplace_back("last_gap", last_gap);
  if (t_values.size() > 1) {
    q.emplace_back("min_decrease", min_decrease);
    q.emplace_back("monotone", min_decrease >= -tol ? 1.0 : 0.0);
  }
  return ChainResult::make("trotter", {}, std::move(conditions), std::move(q), tol);
}

CheckResult check_dw_alpha(const Mat& rho, const Mat& sigma, const KrausChannel& phi, double alpha,
                           double tol) {
  const double tr = dw_operator(rho, sigma, phi, alpha).trace;
  return CheckResult::make("dw-alpha", 1.0 - tr, {{"alpha", alpha}, {"trace", tr}}, tol);
}

CheckResult check_dw_tripartite(const MultipartiteState& rho, double alpha, double tol) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorKind::BadAlpha, "alpha must lie in (0,1), got " + std::to_string(alpha));
  const double tr = sandwiched_trace(rho, rho, rho, alpha);
  return CheckResult::make("dw-tripartite", 1.0 - tr, {{"alpha", alpha}, {"trace", tr}}, tol);
}

CheckResult check_sbw_limit(const Mat& rho, const Mat& sigma, const KrausChannel& phi,
                            std::span<const double> alpha_seq) {
  if (alpha_seq.empty()) throw Error(ErrorKind::BadArgument, "check_sbw_limit: empty alpha sequence");
  for (std::size_t k = 1; k < alpha_seq.size(); ++k)
    if (!(alpha_seq[k] < alpha_seq[k - 1]))
      throw Error(ErrorKind::BadArgument, "check_sbw_limit: alpha sequence must descend");
  const Mat omega = omega_channel(rho, sigma, phi);
  Quantities q;
  std::vector<double> errors;
  for (double a : alpha_seq) {
    const double e = op_norm(Mat(dw_operator(rho, sigma, phi, a).op - omega));
    errors.push_back(e);
    q.emplace_back("e_alpha=" + std::to_string(a), e);
  }
  // Non-increasing up to roundoff (amplified by the 1/alpha power), and small at the
  // end of the sequence.
  constexpr double kRoundoff = 1e-10;
  double slack = kSbwFinalError - errors.back();
  for (std::size_t k = 0; k + 1 < errors.size(); ++k)
    slack = std::min(slack, errors[k] + kRoundoff - errors[k + 1]);
  q.emplace_back("final_error", errors.back());
  return CheckResult::make("sbw-limit", slack, std::move(q), 0.0);
}

CheckResult check_squashed_proxy(const MultipartiteState& rho, double tol) {
  require_tripartite(rho, "check_squashed_proxy");
  const Mat omega = omega_ssa(rho);
  const Index ac[] = {0, 2};
  const Mat omega_ac = ptrace(omega, rho.dims(), ac);
  const double dist = trace_norm(Mat(rho.marginal(ac) - omega_ac));
  const double lhs = 0.5 * cmi(rho);
  const double rhs = dist * dist / 8.0;
  return CheckResult::make("squashed-proxy", lhs - rhs,
                           {{"lhs", lhs}, {"rhs", rhs}, {"trace_omega_ac", trace_re(omega_ac)}}, tol);
}

CheckResult check_twirl_identity(const Mat& x, Index da, Index db, Index n, Rng& rng) {
  const Mat exact = twirl_exact(x, da, db);
  const Mat mc = twirl_mc(x, da, db, n, rng);
  const double err = max_abs(Mat(mc - exact));
  const double bound = 5.0 * op_norm(x) / std::sqrt(static_cast<double>(n));
  return CheckResult::make("twirl", bound - err,
                           {{"max_error", err}, {"bound", bound}, {"samples", static_cast<double>(n)}},
                           0.0);
}

CheckResult check_renyi_monotonicity(const Mat& rho, const Mat& sigma,
                                     std::span<const double> alphas, double tol) {
  if (alphas.size() < 2)
    throw Error(ErrorKind::BadArgument, "check_renyi_monotonicity: need at least two alphas");
  Quantities q;
  std::vector<double> values;
  for (double a : alphas) {
    const auto v = renyi(a, rho, sigma);
    values.push_back(v.infinite ? std::numeric_limits<double>::infinity() : v.value);
    q.emplace_back("S_" + std::to_string(a), values.back());
  }
  double slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(alphas[k] > alphas[k - 1]))
      throw Error(ErrorKind::BadArgument, "check_renyi_monotonicity: alphas must ascend");
    slack = std::min(slack, values[k] - values[k - 1]);
  }
  return CheckResult::make("renyi-monotone", slack, std::move(q), tol);
}

ChainResult check_univ_chain(const Mat& rho, const Mat& sigma, double tol) {
  const double tr_sigma = trace_re(sigma);
  if (tr_sigma > 1.0 + tol::trace)
    throw Error(ErrorKind::InvalidState, "check_univ_chain: Tr sigma > 1");
  const double s = rel(rho, sigma);
  const auto b = overlap_bounds(rho, sigma);
  std::vector<Condition> conditions;
  Quantities q{{"trace_sigma", tr_sigma}, {"one_norm", b.one_norm}};
  if (std::abs(tr_sigma - 1.0) <= tol::trace) {
    conditions.push_back({"pinsker", s - 0.5 * b.one_norm * b.one_norm, tol});
    const double plus = (sqrtm(rho) + sqrtm(sigma)).norm();
    conditions.push_back({"sqrt_sum_norm>=sqrt2", plus - std::sqrt(2.0), tol});
    conditions.push_back({"sqrt_sum_norm<=2", 2.0 - plus, tol});
    q.emplace_back("sqrt_sum_norm", plus);
  }
  return ChainResult::make("univ-chain", bound_links("relative_entropy", s, b),
                           std::move(conditions), std::move(q), tol);
}

}  // namespace qel

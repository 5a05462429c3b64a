#include "qel/entropy.hpp"

#include <cmath>

namespace qel {

namespace {

constexpr double kSupportTol = 1e-9;

void require_tripartite(const MultipartiteState& rho) {
  if (rho.parties() != 3)
    throw Error(ErrorKind::NotTripartite,
                "expected 3 subsystems, got " + std::to_string(rho.parties()));
}

void require_same_shape(const MultipartiteState& a, const MultipartiteState& b) {
  if (a.dims() != b.dims()) throw Error(ErrorKind::DimMismatch, "states have different shapes");
}

double entropy_of_spectrum(const HermitianEigen<double>& e) {
  const double c = e.cutoff();
  double s = 0;
  for (Index i = 0; i < e.dim(); ++i) {
    const double lam = e.eigenvalues(i);
    if (lam > c) s -= lam * std::log(lam);
  }
  return s;
}

}  // namespace

double von_neumann(const Mat& rho) { return entropy_of_spectrum(herm_eig(rho)); }

bool support_contained(const Mat& rho, const Mat& sigma) {
  const auto es = herm_eig(sigma);
  const Mat q = eye(sigma.rows()) - es.support_projector();
  return op_norm(Mat(q * rho * q)) < kSupportTol;
}

EntropyValue relative_entropy(const Mat& rho, const Mat& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw Error(ErrorKind::DimMismatch, "relative_entropy: operand shapes differ");
  const auto es = herm_eig(sigma);
  {
    const Mat q = eye(sigma.rows()) - es.support_projector();
    if (op_norm(Mat(q * rho * q)) >= kSupportTol) return EntropyValue::inf();
  }
  const auto er = herm_eig(rho);
  // Tr rho log rho from the spectrum of rho, Tr rho log sigma from sigma's
  // eigenbasis restricted to its support.
  double rho_log_rho = -entropy_of_spectrum(er);
  const double c = es.cutoff();
  double rho_log_sigma = 0;
  for (Index j = 0; j < es.dim(); ++j) {
    const double mu = es.eigenvalues(j);
    if (mu <= c) continue;
    const auto v = es.eigenvectors.col(j);
    const double weight = (v.adjoint() * rho * v)(0, 0).real();
    rho_log_sigma += weight * std::log(mu);
  }
  return {rho_log_rho - rho_log_sigma, false};
}

EntropyValue renyi(double alpha, const Mat& rho, const Mat& sigma) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorKind::BadAlpha, "renyi: alpha must lie in (0,1), got " + std::to_string(alpha));
  if (rho.rows() != sigma.rows())
    throw Error(ErrorKind::DimMismatch, "renyi: operand shapes differ");
  const Mat ra = powm(rho, alpha, Support::only);
  const Mat sb = powm(sigma, 1.0 - alpha, Support::only);
  const double q = (ra * sb).trace().real();
  if (!(q > 0.0)) return EntropyValue::inf();
  return {std::log(q) / (alpha - 1.0), false};
}

double sqrt_overlap(const Mat& rho, const Mat& sigma) {
  if (rho.rows() != sigma.rows())
    throw Error(ErrorKind::DimMismatch, "sqrt_overlap: operand shapes differ");
  return (sqrtm(rho) * sqrtm(sigma)).trace().real();
}

double overlap_lower_bound(const Mat& rho, const Mat& sigma) {
  const double f = sqrt_overlap(rho, sigma);
  if (!(f > 1e-300)) throw Error(ErrorKind::ZeroOverlap, "Tr sqrt(rho) sqrt(sigma) = 0");
  return -2.0 * std::log(f);
}

double cmi(const MultipartiteState& rho) {
  require_tripartite(rho);
  return von_neumann(rho.marginal({0, 1})) + von_neumann(rho.marginal({1, 2})) -
         von_neumann(rho.mat()) - von_neumann(rho.marginal({1}));
}

double cmi_relative_form(const MultipartiteState& rho) {
  require_tripartite(rho);
  const Mat rho_c = rho.marginal({2});
  const Mat first = kron(rho.marginal({0, 1}), rho_c);
  const Mat second = kron(rho.marginal({1}), rho_c);
  const auto s1 = relative_entropy(rho.mat(), first);
  const auto s2 = relative_entropy(rho.marginal({1, 2}), second);
  if (s1.infinite || s2.infinite)
    throw Error(ErrorKind::SingularInput, "cmi_relative_form: infinite relative entropy");
  return s1.value - s2.value;
}

Mat exp_log_combination(const std::vector<LogTerm>& terms, const Dims& dims) {
  if (terms.empty()) throw Error(ErrorKind::BadArgument, "exp_log_combination: no terms");
  const Index d = dims.empty() ? terms.front().op.rows() : product(dims);
  Mat exponent = Mat::Zero(d, d);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.sign != 1 && t.sign != -1)
      throw Error(ErrorKind::BadArgument, "exp_log_combination: sign must be +1 or -1");
    const auto e = herm_eig(t.op);
    if (!e.full_rank())
      throw Error(ErrorKind::SingularTerm,
                  "term " + std::to_string(i) + " is rank deficient (min eigenvalue " +
                      std::to_string(e.min_eigenvalue()) + ")");
    Mat log_term = e.apply([](double x) { return std::log(x); });
    if (!t.on.empty()) {
      log_term = embed(log_term, dims, t.on);
    } else if (t.op.rows() != d) {
      throw Error(ErrorKind::DimMismatch, "exp_log_combination: terms differ in dimension");
    }
    exponent += static_cast<double>(t.sign) * log_term;
  }
  return expm(hermitize(exponent));
}

Mat omega_ssa(const MultipartiteState& rho) { return omega_three(rho, rho, rho); }

Mat omega_subadd(const MultipartiteState& rho) {
  require_tripartite(rho);
  const auto& d = rho.dims();
  return exp_log_combination({{1, rho.marginal({0, 1}), {0, 1}}, {1, rho.marginal({1, 2}), {1, 2}}},
                             d);
}

Mat omega_three(const MultipartiteState& s, const MultipartiteState& t,
                const MultipartiteState& w) {
  require_tripartite(s);
  require_same_shape(s, t);
  require_same_shape(s, w);
  const auto& d = s.dims();
  return exp_log_combination(
      {{1, s.marginal({0, 1}), {0, 1}}, {-1, t.marginal({1}), {1}}, {1, w.marginal({1, 2}), {1, 2}}},
      d);
}

Mat omega_bsw(const MultipartiteState& s, const MultipartiteState& t,
              const MultipartiteState& w) {
  require_tripartite(s);
  require_same_shape(s, t);
  require_same_shape(s, w);
  const auto& d = s.dims();
  return exp_log_combination(
      {{1, s.marginal({0, 1}), {0, 1}}, {1, t.marginal({1, 2}), {1, 2}}, {-1, w.marginal({1}), {1}}},
      d);
}

}  // namespace qel

#include "qel/lab.hpp"

#include <cmath>
#include <limits>

// Matrix trace inequalities used along the way: Lieb and Carlen-Lieb
// concavity, Golden-Thompson, Audenaert and Powers-Stormer.

namespace qel {

namespace {

void require_positive_definite(const Mat& x, const char* what) {
  if (!herm_eig(x).full_rank())
    throw Error(ErrorKind::SingularInput, std::string(what) + ": operator must be positive definite");
}

void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw Error(ErrorKind::BadArgument, "lambda must lie in [0,1]");
}

void require_psd(const Mat& x, const char* what) {
  const auto e = herm_eig(x);
  if (e.min_eigenvalue() < -tol::psd)
    throw Error(ErrorKind::NotPSD, std::string(what) + " has eigenvalue " +
                                       std::to_string(e.min_eigenvalue()));
}

double trace_of_power(const Mat& x, double p) {
  const auto e = herm_eig(hermitize(x));
  double t = 0;
  for (Index i = 0; i < e.dim(); ++i) t += std::pow(std::max(e.eigenvalues(i), 0.0), p);
  return t;
}

}  // namespace

CheckResult check_lieb_concavity(const Mat& h, const Mat& x1, const Mat& x2, double lambda,
                                 double tol) {
  require_lambda(lambda);
  if (!is_hermitian(h)) throw Error(ErrorKind::NotHermitian, "check_lieb_concavity: H");
  require_positive_definite(x1, "check_lieb_concavity");
  require_positive_definite(x2, "check_lieb_concavity");
  const auto f = [&h](const Mat& x) { return trace_re(expm(hermitize(Mat(h + logm(x))))); };
  const Mat mix = hermitize(Mat(lambda * x1 + (1.0 - lambda) * x2));
  const double lhs = f(mix);
  const double rhs = lambda * f(x1) + (1.0 - lambda) * f(x2);
  return CheckResult::make("lieb-concavity", lhs - rhs, {{"lhs", lhs}, {"rhs", rhs}}, tol);
}

CheckResult check_cl_concavity(const Mat& m, const Mat& x1, const Mat& x2, double lambda,
                               double alpha, double tol) {
  if (!(alpha >= 1.0))
    throw Error(ErrorKind::BadAlpha, "check_cl_concavity: alpha must be >= 1");
  require_lambda(lambda);
  require_positive_definite(x1, "check_cl_concavity");
  require_positive_definite(x2, "check_cl_concavity");
  if (m.cols() != x1.rows() || x1.rows() != x2.rows())
    throw Error(ErrorKind::DimMismatch, "check_cl_concavity: shapes differ");
  const auto f = [&](const Mat& x) {
    return trace_of_power(Mat(m * powm(x, 1.0 / alpha) * m.adjoint()), alpha);
  };
  const Mat mix = hermitize(Mat(lambda * x1 + (1.0 - lambda) * x2));
  const double lhs = f(mix);
  const double rhs = lambda * f(x1) + (1.0 - lambda) * f(x2);
  return CheckResult::make("cl-concavity", lhs - rhs,
                           {{"alpha", alpha}, {"lhs", lhs}, {"rhs", rhs}}, tol);
}

CheckResult check_golden_thompson(const Mat& a, const Mat& b, double tol) {
  if (!is_hermitian(a) || !is_hermitian(b))
    throw Error(ErrorKind::NotHermitian, "check_golden_thompson: inputs must be Hermitian");
  const double lhs = trace_re(expm(hermitize(Mat(a + b))));
  const double rhs = (expm(a) * expm(b)).trace().real();
  return CheckResult::make("golden-thompson", rhs - lhs, {{"lhs", lhs}, {"rhs", rhs}}, tol);
}

ChainResult check_audenaert_ps(const Mat& m, const Mat& n, std::span<const double> t_values,
                               double tol) {
  if (m.rows() != n.rows()) throw Error(ErrorKind::DimMismatch, "check_audenaert_ps: shapes differ");
  require_psd(m, "M");
  require_psd(n, "N");
  const Mat sm = sqrtm(m);
  const Mat sn = sqrtm(n);
  const double minus2 = (sm - sn).norm();
  const double plus2 = (sm + sn).norm();
  const Mat diff = m - n;
  const double one = trace_norm(diff);

  std::vector<Condition> conditions;
  Quantities q{{"one_norm", one}, {"two_norm_diff", minus2}, {"two_norm_sum", plus2}};
  // 1/2 Tr(M + N - |M - N|) = 1/2 (Tr M + Tr N - ||M - N||_1).
  const double audenaert_rhs = 0.5 * (trace_re(m) + trace_re(n) - one);
  for (double t : t_values) {
    if (!(t >= 0.0 && t <= 1.0))
      throw Error(ErrorKind::BadArgument, "check_audenaert_ps: t must lie in [0,1]");
    const double lhs =
        (powm(m, t, Support::only) * powm(n, 1.0 - t, Support::only)).trace().real();
    conditions.push_back({"audenaert_t=" + std::to_string(t), lhs - audenaert_rhs, tol});
    q.emplace_back("audenaert_lhs_t=" + std::to_string(t), lhs);
  }
  q.emplace_back("audenaert_rhs", audenaert_rhs);

  if (trace_re(m) <= 1.0 + tol::trace && trace_re(n) <= 1.0 + tol::trace) {
    const double f = (sm * sn).trace().real();
    const double overlap = f > 0 ? -2.0 * std::log(f) : std::numeric_limits<double>::infinity();
    conditions.push_back({"overlap>=two_norm_sq", overlap - minus2 * minus2, tol});
    q.emplace_back("overlap", overlap);
  }
  return ChainResult::make("audenaert-ps",
                           {{"two_norm_product", minus2 * plus2},
                            {"one_norm", one},
                            {"two_norm_sq", minus2 * minus2}},
                           std::move(conditions), std::move(q), tol);
}

}  // namespace qel

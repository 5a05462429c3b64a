#pragma once

// Dense complex linear algebra for small Hermitian operators.
//
// Every routine is a free function over Eigen expressions and is templated on
// the underlying real scalar, so the same code runs in double or long double.
// Composite indices follow the convention that the first subsystem is the
// slowest-varying one: for dims (dA, dB, dC) the index of |a b c> is
// (a*dB + b)*dC + c.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "qel/error.hpp"

namespace qel {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Mat = CMatrix<double>;
using Vec = RVector<double>;
using Index = Eigen::Index;
using Dims = std::vector<Index>;

namespace tol {
/// Relative Hermiticity tolerance, ||H - H^dag|| <= herm * ||H||.
inline constexpr double herm = 1e-10;
inline constexpr double recon = 1e-10;
/// Eigenvalues at or below rank_cutoff * lambda_max are treated as zero.
inline constexpr double rank_cutoff = 1e-12;
inline constexpr double psd = 1e-10;
inline constexpr double trace = 1e-10;
/// Absolute tolerance on inequality slacks.
inline constexpr double ineq = 1e-8;
inline constexpr double identity = 1e-8;
}  // namespace tol

enum class Support { full, only };

template <typename Derived>
using PlainOf = CMatrix<typename Derived::RealScalar>;

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& x) {
  if (x.size() == 0) return 0;
  return x.cwiseAbs().maxCoeff();
}

template <typename Derived>
PlainOf<Derived> hermitize(const Eigen::MatrixBase<Derived>& x) {
  using Real = typename Derived::RealScalar;
  PlainOf<Derived> m = x;
  return (m + m.adjoint()) * Real(0.5);
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& x,
                  typename Derived::RealScalar rel_tol = tol::herm) {
  if (x.rows() != x.cols()) return false;
  PlainOf<Derived> m = x;
  return max_abs(m - m.adjoint()) <= rel_tol * max_abs(m);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& x) {
  return x.allFinite();
}

template <typename Derived>
typename Derived::RealScalar trace_re(const Eigen::MatrixBase<Derived>& x) {
  return x.trace().real();
}

template <typename Real>
CMatrix<Real> identity(Index d) {
  return CMatrix<Real>::Identity(d, d);
}

inline Mat eye(Index d) { return Mat::Identity(d, d); }

/// Spectral decomposition H = V diag(lambda) V^dag, eigenvalues ascending.
template <typename Real>
struct HermitianEigen {
  RVector<Real> eigenvalues;
  CMatrix<Real> eigenvectors;

  Index dim() const { return eigenvalues.size(); }

  Real max_eigenvalue() const {
    return dim() == 0 ? Real(0) : eigenvalues(dim() - 1);
  }
  Real min_eigenvalue() const { return dim() == 0 ? Real(0) : eigenvalues(0); }

  /// Threshold below which an eigenvalue counts as zero.
  Real cutoff() const {
    return std::max(max_eigenvalue(), Real(0)) * Real(tol::rank_cutoff);
  }

  bool full_rank() const {
    return dim() > 0 && max_eigenvalue() > Real(0) && min_eigenvalue() > cutoff();
  }

  Index rank() const {
    const Real c = cutoff();
    Index r = 0;
    for (Index i = 0; i < dim(); ++i)
      if (eigenvalues(i) > c) ++r;
    return r;
  }

  CMatrix<Real> reconstruct() const {
    return eigenvectors * eigenvalues.template cast<std::complex<Real>>().asDiagonal() *
           eigenvectors.adjoint();
  }

  /// Projector onto the span of eigenvectors with eigenvalue above the cutoff.
  CMatrix<Real> support_projector() const {
    const Real c = cutoff();
    CMatrix<Real> p = CMatrix<Real>::Zero(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (eigenvalues(i) > c) p += eigenvectors.col(i) * eigenvectors.col(i).adjoint();
    return p;
  }

  /// V diag(f(lambda)) V^dag. Real-valued f yields a Hermitized result.
  template <typename F>
  CMatrix<Real> apply(F&& f, Support support = Support::full) const {
    using Out = std::invoke_result_t<F&, Real>;
    const Real c = cutoff();
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> diag(dim());
    for (Index i = 0; i < dim(); ++i) {
      const Real lam = eigenvalues(i);
      if (support == Support::only && lam <= c) {
        diag(i) = std::complex<Real>(0);
      } else {
        diag(i) = std::complex<Real>(f(lam));
      }
    }
    CMatrix<Real> out = eigenvectors * diag.asDiagonal() * eigenvectors.adjoint();
    if constexpr (std::is_floating_point_v<Out>) {
      return hermitize(out);
    } else {
      return out;
    }
  }
};

template <typename Derived>
HermitianEigen<typename Derived::RealScalar> herm_eig(const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Derived::RealScalar;
  if (h.rows() != h.cols())
    throw Error(ErrorKind::DimMismatch, "herm_eig needs a square matrix, got " +
                                            std::to_string(h.rows()) + "x" +
                                            std::to_string(h.cols()));
  PlainOf<Derived> m = h;
  if (!m.allFinite()) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
  const Real scale = max_abs(m);
  const Real defect = max_abs(PlainOf<Derived>(m - m.adjoint()));
  if (defect > Real(tol::herm) * scale)
    throw Error(ErrorKind::NotHermitian,
                "||H - H^dag|| = " + std::to_string(static_cast<double>(defect)));
  HermitianEigen<Real> out;
  if (m.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<PlainOf<Derived>> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    // Eigen's tridiagonal QR gives up after 30 sweeps per dimension.
    throw Error(ErrorKind::NoConvergence,
                "no convergence after " + std::to_string(30 * m.rows()) + " iterations");
  }
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

template <typename Derived, typename F>
PlainOf<Derived> matrix_fn(const Eigen::MatrixBase<Derived>& h, F&& f,
                           Support support = Support::full) {
  return herm_eig(h).apply(std::forward<F>(f), support);
}

namespace detail {

template <typename Real>
void require_invertible(const HermitianEigen<Real>& e, const char* what) {
  if (!e.full_rank())
    throw Error(ErrorKind::SingularInput,
                std::string(what) + " of a rank-deficient matrix (min eigenvalue " +
                    std::to_string(static_cast<double>(e.min_eigenvalue())) + ")");
}

}  // namespace detail

template <typename Derived>
PlainOf<Derived> expm(const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Derived::RealScalar;
  return matrix_fn(h, [](Real x) { return std::exp(x); });
}

/// Matrix logarithm. With Support::only the kernel is mapped to zero.
template <typename Derived>
PlainOf<Derived> logm(const Eigen::MatrixBase<Derived>& h, Support support = Support::full) {
  using Real = typename Derived::RealScalar;
  const auto e = herm_eig(h);
  if (support == Support::full) detail::require_invertible(e, "log");
  return e.apply([](Real x) { return std::log(x); }, support);
}

/// Real power. Nonnegative exponents clamp tiny negative eigenvalues to zero;
/// negative exponents need an invertible input unless Support::only.
template <typename Derived>
PlainOf<Derived> powm(const Eigen::MatrixBase<Derived>& h, typename Derived::RealScalar p,
                      Support support = Support::full) {
  using Real = typename Derived::RealScalar;
  const auto e = herm_eig(h);
  if (p < 0 && support == Support::full) detail::require_invertible(e, "negative power");
  return e.apply([p](Real x) { return std::pow(std::max(x, Real(0)), p); }, support);
}

template <typename Derived>
PlainOf<Derived> sqrtm(const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Derived::RealScalar;
  return powm(h, Real(0.5));
}

/// Complex power rho^{it}: exp(i t ln lambda) on the support, identity elsewhere.
template <typename Derived>
PlainOf<Derived> ipowm(const Eigen::MatrixBase<Derived>& h, typename Derived::RealScalar t) {
  using Real = typename Derived::RealScalar;
  const auto e = herm_eig(h);
  const Real c = e.cutoff();
  return e.apply([t, c](Real x) {
    if (x <= c) return std::complex<Real>(1);
    return std::polar(Real(1), t * std::log(x));
  });
}

/// Kronecker product; the left factor carries the slow index.
template <typename DA, typename DB>
PlainOf<DA> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  PlainOf<DA> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Index product(std::span<const Index> dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

namespace detail {

/// Offsets (into the full composite index) of every multi-index over the
/// subsystems in `which`, enumerated with the first listed subsystem slowest.
inline std::vector<Index> subsystem_offsets(std::span<const Index> dims,
                                            std::span<const Index> which) {
  std::vector<Index> stride(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  std::vector<Index> offsets{0};
  for (Index s : which) {
    std::vector<Index> next;
    next.reserve(offsets.size() * dims[s]);
    for (Index base : offsets)
      for (Index i = 0; i < dims[s]; ++i) next.push_back(base + i * stride[s]);
    offsets = std::move(next);
  }
  return offsets;
}

inline void validate_subsystems(std::span<const Index> dims, std::span<const Index> which,
                                Index order, const char* op) {
  for (Index d : dims)
    if (d < 1) throw Error(ErrorKind::DimMismatch, std::string(op) + ": subsystem dim < 1");
  if (product(dims) != order)
    throw Error(ErrorKind::DimMismatch,
                std::string(op) + ": product of dims " + std::to_string(product(dims)) +
                    " != matrix order " + std::to_string(order));
  if (which.empty())
    throw Error(ErrorKind::DimMismatch, std::string(op) + ": empty subsystem selection");
  for (std::size_t i = 0; i < which.size(); ++i) {
    if (which[i] < 0 || which[i] >= static_cast<Index>(dims.size()))
      throw Error(ErrorKind::DimMismatch, std::string(op) + ": subsystem index out of range");
    if (i > 0 && which[i] <= which[i - 1])
      throw Error(ErrorKind::DimMismatch,
                  std::string(op) + ": subsystem indices must be strictly ascending");
  }
}

inline std::vector<Index> complement(std::size_t n, std::span<const Index> which) {
  std::vector<Index> rest;
  for (Index k = 0; k < static_cast<Index>(n); ++k)
    if (std::find(which.begin(), which.end(), k) == which.end()) rest.push_back(k);
  return rest;
}

}  // namespace detail

/// Partial trace keeping the (ascending) subsystems in `keep`.
template <typename Derived>
PlainOf<Derived> ptrace(const Eigen::MatrixBase<Derived>& x, std::span<const Index> dims,
                        std::span<const Index> keep) {
  if (x.rows() != x.cols()) throw Error(ErrorKind::DimMismatch, "ptrace: non-square input");
  detail::validate_subsystems(dims, keep, x.rows(), "ptrace");
  const auto traced = detail::complement(dims.size(), keep);
  const auto kept_off = detail::subsystem_offsets(dims, keep);
  const auto traced_off = detail::subsystem_offsets(dims, traced);
  const Index n = static_cast<Index>(kept_off.size());
  PlainOf<Derived> out = PlainOf<Derived>::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index t : traced_off) out(i, j) += x(kept_off[i] + t, kept_off[j] + t);
  return out;
}

template <typename Derived>
PlainOf<Derived> ptrace(const Eigen::MatrixBase<Derived>& x, std::initializer_list<Index> dims,
                        std::initializer_list<Index> keep) {
  return ptrace(x, std::span<const Index>(dims.begin(), dims.size()),
                std::span<const Index>(keep.begin(), keep.size()));
}

/// X on the subsystems `which`, tensored with the identity on the rest and
/// placed in the global subsystem order.
template <typename Derived>
PlainOf<Derived> embed(const Eigen::MatrixBase<Derived>& x, std::span<const Index> dims,
                       std::span<const Index> which) {
  const Index total = product(dims);
  std::vector<Index> sub;
  for (Index w : which) {
    if (w < 0 || w >= static_cast<Index>(dims.size()))
      throw Error(ErrorKind::DimMismatch, "embed: subsystem index out of range");
    sub.push_back(dims[w]);
  }
  if (x.rows() != x.cols() || x.rows() != product(sub))
    throw Error(ErrorKind::DimMismatch, "embed: operator order does not match subsystems");
  detail::validate_subsystems(dims, which, total, "embed");
  const auto rest = detail::complement(dims.size(), which);
  const auto in_off = detail::subsystem_offsets(dims, which);
  const auto rest_off = detail::subsystem_offsets(dims, rest);
  const Index n = static_cast<Index>(in_off.size());
  PlainOf<Derived> out = PlainOf<Derived>::Zero(total, total);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto v = x(i, j);
      if (v == typename Derived::Scalar(0)) continue;
      for (Index t : rest_off) out(in_off[i] + t, in_off[j] + t) = v;
    }
  return out;
}

template <typename Derived>
PlainOf<Derived> embed(const Eigen::MatrixBase<Derived>& x, std::initializer_list<Index> dims,
                       std::initializer_list<Index> which) {
  return embed(x, std::span<const Index>(dims.begin(), dims.size()),
               std::span<const Index>(which.begin(), which.size()));
}

template <typename Derived>
RVector<typename Derived::RealScalar> singular_values(const Eigen::MatrixBase<Derived>& x) {
  Eigen::JacobiSVD<PlainOf<Derived>> svd(x);
  return svd.singularValues();
}

/// Schatten p-norm (Tr|X|^p)^{1/p}; p = infinity gives the operator norm.
template <typename Derived>
typename Derived::RealScalar schatten_norm(const Eigen::MatrixBase<Derived>& x, double p) {
  using Real = typename Derived::RealScalar;
  if (!(p >= 1)) throw Error(ErrorKind::BadArgument, "schatten_norm: p must be >= 1");
  if (x.size() == 0) return Real(0);
  if (p == 2) return x.norm();
  const auto s = singular_values(x);
  if (std::isinf(p)) return s.maxCoeff();
  if (p == 1) return s.sum();
  return std::pow(s.array().pow(Real(p)).sum(), Real(1) / Real(p));
}

template <typename Derived>
typename Derived::RealScalar trace_norm(const Eigen::MatrixBase<Derived>& x) {
  return schatten_norm(x, 1.0);
}

template <typename Derived>
typename Derived::RealScalar op_norm(const Eigen::MatrixBase<Derived>& x) {
  return schatten_norm(x, std::numeric_limits<double>::infinity());
}

}  // namespace qel

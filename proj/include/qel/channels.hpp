#pragma once

#include <vector>

#include "qel/linalg.hpp"
#include "qel/states.hpp"

namespace qel {

/// Trace-preserving completely positive map X -> sum_mu K_mu X K_mu^dag.
class KrausChannel {
 public:
  /// Throws NotTracePreserving when ||sum K^dag K - 1|| exceeds 1e-10.
  explicit KrausChannel(std::vector<Mat> kraus);

  const std::vector<Mat>& kraus() const { return kraus_; }
  Index d_in() const { return d_in_; }
  Index d_out() const { return d_out_; }
  bool unital() const { return unital_; }

  Mat operator()(const Mat& x) const;

 private:
  std::vector<Mat> kraus_;
  Index d_in_ = 0;
  Index d_out_ = 0;
  bool unital_ = false;
};

/// The Hilbert-Schmidt adjoint Y -> sum_mu K_mu^dag Y K_mu.
class DualMap {
 public:
  explicit DualMap(const KrausChannel& channel) : kraus_(channel.kraus()) {}

  Index d_in() const { return kraus_.empty() ? 0 : kraus_.front().rows(); }
  Index d_out() const { return kraus_.empty() ? 0 : kraus_.front().cols(); }

  Mat operator()(const Mat& y) const;

 private:
  std::vector<Mat> kraus_;
};

/// X -> sigma^{1/2} Phi^*(Phi(sigma)^{-1/2} X Phi(sigma)^{-1/2}) sigma^{1/2}.
class PetzMap {
 public:
  PetzMap(const KrausChannel& channel, const Mat& sigma);

  Mat operator()(const Mat& x) const;

 private:
  DualMap dual_;
  Mat sigma_half_;
  Mat phi_sigma_inv_half_;
};

Mat apply(const KrausChannel& channel, const Mat& x);
DualMap dual(const KrausChannel& channel);
PetzMap petz_map(const KrausChannel& channel, const Mat& sigma);

KrausChannel identity_channel(Index d);
KrausChannel unitary_channel(const Mat& u);
/// rho -> Tr(rho) 1/d.
KrausChannel depolarizing_channel(Index d);
/// Partial trace over subsystem `traced` via Kraus operators 1 (x) <i| (x) 1.
KrausChannel ptrace_channel(const Dims& dims, Index traced);
/// Mixed-unitary channel sum_i p_i U_i . U_i^dag with Haar U_i.
KrausChannel random_unital_channel(Index d, Index m, Rng& rng);
/// Generic channel with m Kraus operators cut from a Haar isometry.
KrausChannel random_channel(Index d_in, Index d_out, Index m, Rng& rng);

/// Haar average over U_B of (1 (x) U) X (1 (x) U)^dag, in closed form.
Mat twirl_exact(const Mat& x, Index da, Index db);
/// Monte Carlo estimate of the same average with n Haar samples.
Mat twirl_mc(const Mat& x, Index da, Index db, Index n, Rng& rng);

}  // namespace qel

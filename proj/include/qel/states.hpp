#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qel/linalg.hpp"

namespace qel {

using Rng = std::mt19937_64;

/// Independent generator for one trial, derived from (master seed, trial index).
Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial);

/// Positive semidefinite, unit trace. Construction validates and Hermitizes.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat m);

  const Mat& mat() const { return mat_; }
  Index dim() const { return mat_.rows(); }

 private:
  Mat mat_;
};

/// Positive semidefinite with trace at most one.
class SubnormalizedOperator {
 public:
  explicit SubnormalizedOperator(Mat m);
  SubnormalizedOperator(const DensityMatrix& rho) : mat_(rho.mat()) {}  // NOLINT

  const Mat& mat() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  double trace() const { return trace_re(mat_); }

 private:
  Mat mat_;
};

class MultipartiteState {
 public:
  MultipartiteState(DensityMatrix state, Dims dims, std::vector<std::string> labels = {});

  const DensityMatrix& state() const { return state_; }
  const Mat& mat() const { return state_.mat(); }
  const Dims& dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t parties() const { return dims_.size(); }
  Index dim() const { return state_.dim(); }

  /// Reduced operator on the ascending subsystem list `keep`.
  Mat marginal(std::span<const Index> keep) const;
  Mat marginal(std::initializer_list<Index> keep) const {
    return marginal(std::span<const Index>(keep.begin(), keep.size()));
  }

 private:
  DensityMatrix state_;
  Dims dims_;
  std::vector<std::string> labels_;
};

/// One summand p * rho_{A bL} (x) rho_{bR C} of a Markov decomposition.
struct MarkovBlock {
  double p = 0;
  Index d_bl = 1;
  Index d_br = 1;
  Mat rho_abl;
  Mat rho_brc;
};

struct MarkovSpec {
  Index d_a = 1;
  Index d_c = 1;
  std::vector<MarkovBlock> blocks;

  Index d_b() const;
};

Mat random_ginibre(Index rows, Index cols, Rng& rng);

DensityMatrix random_density(Index d, Index rank, Rng& rng);
inline DensityMatrix random_density(Index d, Rng& rng) { return random_density(d, d, rng); }

Mat random_unitary(Index d, Rng& rng);

/// Random Hermitian matrix with i.i.d. Gaussian entries (GUE scaling).
Mat random_hermitian(Index d, Rng& rng);

MultipartiteState random_tripartite(Index da, Index db, Index dc, Index rank, Rng& rng);
MultipartiteState random_multipartite(const Dims& dims, Index rank, Rng& rng);

/// (1 - eps) rho + eps 1/d, for 0 < eps < 1.
DensityMatrix regularize(const DensityMatrix& rho, double eps);
MultipartiteState regularize(const MultipartiteState& rho, double eps);

DensityMatrix maximally_mixed(Index d);

MultipartiteState product_state(std::span<const DensityMatrix> factors);

/// Exact quantum Markov chain from its block decomposition.
MarkovSpec validated(MarkovSpec spec);
MultipartiteState markov_state(const MarkovSpec& spec);

/// Random Markov decomposition whose B dimension is exactly `db`, with
/// between 1 and min(max_blocks, db) blocks and full-rank block states.
MarkovSpec random_markov_spec(Index da, Index db, Index dc, Index max_blocks, Rng& rng);

/// A state with the same global shape as `source` whose marginal on `party`
/// equals `target`: (T^{1/2} S^{-1/2} (x) 1) source (S^{-1/2} T^{1/2} (x) 1),
/// S being the source marginal. Both marginals must be full rank.
MultipartiteState transplant_marginal(const MultipartiteState& source, Index party,
                                      const Mat& target);

}  // namespace qel

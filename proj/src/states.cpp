#include "qel/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void validate_psd(const Mat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorKind::InvalidState, std::string(what) + ": matrix must be square and non-empty");
  if (!m.allFinite()) throw Error(ErrorKind::InvalidState, std::string(what) + ": non-finite entry");
  if (!is_hermitian(m))
    throw Error(ErrorKind::InvalidState, std::string(what) + ": not Hermitian");
  const double min_eig = herm_eig(m).min_eigenvalue();
  if (min_eig < -tol::psd)
    throw Error(ErrorKind::InvalidState,
                std::string(what) + ": min eigenvalue " + std::to_string(min_eig));
}

}  // namespace

Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
  const std::uint64_t a = splitmix64(master_seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

DensityMatrix::DensityMatrix(Mat m) : mat_(hermitize(m)) {
  validate_psd(m, "DensityMatrix");
  const double tr = trace_re(mat_);
  if (std::abs(tr - 1.0) > tol::trace)
    throw Error(ErrorKind::InvalidState, "DensityMatrix: trace " + std::to_string(tr));
}

SubnormalizedOperator::SubnormalizedOperator(Mat m) : mat_(hermitize(m)) {
  validate_psd(m, "SubnormalizedOperator");
  const double tr = trace_re(mat_);
  if (tr > 1.0 + tol::trace)
    throw Error(ErrorKind::InvalidState, "SubnormalizedOperator: trace " + std::to_string(tr));
}

MultipartiteState::MultipartiteState(DensityMatrix state, Dims dims,
                                     std::vector<std::string> labels)
    : state_(std::move(state)), dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) throw Error(ErrorKind::DimMismatch, "MultipartiteState: no subsystems");
  for (Index d : dims_)
    if (d < 1) throw Error(ErrorKind::DimMismatch, "MultipartiteState: subsystem dim < 1");
  if (product(dims_) != state_.dim())
    throw Error(ErrorKind::DimMismatch, "MultipartiteState: product of dims " +
                                            std::to_string(product(dims_)) + " != " +
                                            std::to_string(state_.dim()));
  if (labels_.empty()) {
    for (std::size_t k = 0; k < dims_.size(); ++k)
      labels_.push_back(dims_.size() <= 26 ? std::string(1, static_cast<char>('A' + k))
                                           : "S" + std::to_string(k));
  } else if (labels_.size() != dims_.size()) {
    throw Error(ErrorKind::DimMismatch, "MultipartiteState: one label per subsystem");
  }
}

Mat MultipartiteState::marginal(std::span<const Index> keep) const {
  return hermitize(ptrace(state_.mat(), dims_, keep));
}

Index MarkovSpec::d_b() const {
  Index total = 0;
  for (const auto& b : blocks) total += b.d_bl * b.d_br;
  return total;
}

Mat random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Mat g(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  return g;
}

DensityMatrix random_density(Index d, Index rank, Rng& rng) {
  if (d < 1 || rank < 1 || rank > d)
    throw Error(ErrorKind::BadRank, "random_density: need 1 <= rank <= d, got rank " +
                                        std::to_string(rank) + ", d " + std::to_string(d));
  const Mat g = random_ginibre(d, rank, rng);
  Mat w = g * g.adjoint();
  w /= trace_re(w);
  return DensityMatrix(hermitize(w));
}

Mat random_unitary(Index d, Rng& rng) {
  if (d < 1) throw Error(ErrorKind::BadArgument, "random_unitary: d < 1");
  const Mat z = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const auto rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0) q.col(j) *= rjj / mag;
  }
  return q;
}

Mat random_hermitian(Index d, Rng& rng) {
  return hermitize(random_ginibre(d, d, rng));
}

MultipartiteState random_multipartite(const Dims& dims, Index rank, Rng& rng) {
  const Index d = product(dims);
  return MultipartiteState(random_density(d, rank, rng), dims);
}

MultipartiteState random_tripartite(Index da, Index db, Index dc, Index rank, Rng& rng) {
  return random_multipartite(Dims{da, db, dc}, rank, rng);
}

DensityMatrix regularize(const DensityMatrix& rho, double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw Error(ErrorKind::BadArgument, "regularize: need 0 < eps < 1");
  const Index d = rho.dim();
  return DensityMatrix((1.0 - eps) * rho.mat() + (eps / static_cast<double>(d)) * eye(d));
}

MultipartiteState regularize(const MultipartiteState& rho, double eps) {
  return MultipartiteState(regularize(rho.state(), eps), rho.dims(), rho.labels());
}

DensityMatrix maximally_mixed(Index d) {
  return DensityMatrix(eye(d) / static_cast<double>(d));
}

MultipartiteState product_state(std::span<const DensityMatrix> factors) {
  if (factors.empty()) throw Error(ErrorKind::BadArgument, "product_state: no factors");
  Mat m = factors[0].mat();
  Dims dims{factors[0].dim()};
  for (std::size_t k = 1; k < factors.size(); ++k) {
    m = kron(m, factors[k].mat());
    dims.push_back(factors[k].dim());
  }
  return MultipartiteState(DensityMatrix(std::move(m)), std::move(dims));
}

MarkovSpec validated(MarkovSpec spec) {
  if (spec.blocks.empty()) throw Error(ErrorKind::InconsistentBlocks, "Markov spec has no blocks");
  if (spec.d_a < 1 || spec.d_c < 1)
    throw Error(ErrorKind::InconsistentBlocks, "Markov spec: d_A and d_C must be >= 1");
  double total = 0;
  for (std::size_t k = 0; k < spec.blocks.size(); ++k) {
    const auto& b = spec.blocks[k];
    const std::string where = "block " + std::to_string(k);
    if (!(b.p >= 0) || !std::isfinite(b.p))
      throw Error(ErrorKind::InconsistentBlocks, where + ": negative or non-finite probability");
    if (b.d_bl < 1 || b.d_br < 1)
      throw Error(ErrorKind::InconsistentBlocks, where + ": block dims must be >= 1");
    if (b.rho_abl.rows() != spec.d_a * b.d_bl || b.rho_abl.cols() != b.rho_abl.rows())
      throw Error(ErrorKind::InconsistentBlocks, where + ": rho_AbL must be (d_A*d_bL) square");
    if (b.rho_brc.rows() != b.d_br * spec.d_c || b.rho_brc.cols() != b.rho_brc.rows())
      throw Error(ErrorKind::InconsistentBlocks, where + ": rho_bRC must be (d_bR*d_C) square");
    try {
      DensityMatrix check_abl(b.rho_abl);
      DensityMatrix check_brc(b.rho_brc);
    } catch (const Error& e) {
      throw Error(ErrorKind::InconsistentBlocks, where + ": " + e.what());
    }
    total += b.p;
  }
  if (std::abs(total - 1.0) > tol::trace)
    throw Error(ErrorKind::InconsistentBlocks,
                "block probabilities sum to " + std::to_string(total));
  for (auto& b : spec.blocks) {
    b.p /= total;
    b.rho_abl = hermitize(b.rho_abl);
    b.rho_brc = hermitize(b.rho_brc);
  }
  return spec;
}

MultipartiteState markov_state(const MarkovSpec& raw) {
  const MarkovSpec spec = validated(raw);
  const Index da = spec.d_a;
  const Index dc = spec.d_c;
  const Index db = spec.d_b();
  Mat rho = Mat::Zero(da * db * dc, da * db * dc);
  Index offset = 0;
  for (const auto& blk : spec.blocks) {
    const Index dbl = blk.d_bl;
    const Index dbr = blk.d_br;
    // Within block k the B index is offset + bl*dbr + br.
    for (Index a = 0; a < da; ++a)
      for (Index bl = 0; bl < dbl; ++bl)
        for (Index br = 0; br < dbr; ++br)
          for (Index c = 0; c < dc; ++c) {
            const Index row = (a * db + offset + bl * dbr + br) * dc + c;
            for (Index a2 = 0; a2 < da; ++a2)
              for (Index bl2 = 0; bl2 < dbl; ++bl2)
                for (Index br2 = 0; br2 < dbr; ++br2)
                  for (Index c2 = 0; c2 < dc; ++c2) {
                    const Index col = (a2 * db + offset + bl2 * dbr + br2) * dc + c2;
                    rho(row, col) += blk.p * blk.rho_abl(a * dbl + bl, a2 * dbl + bl2) *
                                     blk.rho_brc(br * dc + c, br2 * dc + c2);
                  }
          }
    offset += dbl * dbr;
  }
  return MultipartiteState(DensityMatrix(hermitize(rho)), Dims{da, db, dc});
}

MarkovSpec random_markov_spec(Index da, Index db, Index dc, Index max_blocks, Rng& rng) {
  if (da < 1 || db < 1 || dc < 1 || max_blocks < 1)
    throw Error(ErrorKind::BadArgument, "random_markov_spec: dims and max_blocks must be >= 1");
  const Index nblocks =
      std::uniform_int_distribution<Index>(1, std::min(max_blocks, db))(rng);
  // Random composition of db into nblocks positive parts.
  std::vector<Index> cuts(db - 1);
  std::iota(cuts.begin(), cuts.end(), Index{1});
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(nblocks - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(db);
  std::vector<double> weights;
  MarkovSpec spec;
  spec.d_a = da;
  spec.d_c = dc;
  Index prev = 0;
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  for (Index cut : cuts) {
    const Index size = cut - prev;
    prev = cut;
    std::vector<Index> divisors;
    for (Index f = 1; f <= size; ++f)
      if (size % f == 0) divisors.push_back(f);
    const Index dbl =
        divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
    MarkovBlock blk;
    blk.d_bl = dbl;
    blk.d_br = size / dbl;
    blk.p = unit(rng);
    blk.rho_abl = random_density(da * blk.d_bl, rng).mat();
    blk.rho_brc = random_density(blk.d_br * dc, rng).mat();
    weights.push_back(blk.p);
    spec.blocks.push_back(std::move(blk));
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& b : spec.blocks) b.p /= total;
  return spec;
}

MultipartiteState transplant_marginal(const MultipartiteState& source, Index party,
                                      const Mat& target) {
  if (party < 0 || party >= static_cast<Index>(source.parties()))
    throw Error(ErrorKind::DimMismatch, "transplant_marginal: party out of range");
  const Index dp = source.dims()[party];
  if (target.rows() != dp || target.cols() != dp)
    throw Error(ErrorKind::DimMismatch, "transplant_marginal: target has wrong dimension");
  const Index which[] = {party};
  const Mat s = source.marginal(which);
  const Mat k = powm(target, 0.5) * powm(s, -0.5);
  const Mat big = embed(k, source.dims(), which);
  const Mat out = big * source.mat() * big.adjoint();
  Mat normalized = hermitize(out);
  normalized /= trace_re(normalized);
  return MultipartiteState(DensityMatrix(std::move(normalized)), source.dims(), source.labels());
}

}  // namespace qel

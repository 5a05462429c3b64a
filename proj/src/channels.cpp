#include "qel/channels.hpp"

#include <cmath>

namespace qel {

namespace {

constexpr double kChannelTol = 1e-10;

void require_square(const Mat& x, Index d, const char* what) {
  if (x.rows() != d || x.cols() != d)
    throw Error(ErrorKind::DimMismatch, std::string(what) + ": expected " + std::to_string(d) +
                                            "x" + std::to_string(d) + " operator, got " +
                                            std::to_string(x.rows()) + "x" +
                                            std::to_string(x.cols()));
}

}  // namespace

KrausChannel::KrausChannel(std::vector<Mat> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorKind::BadArgument, "KrausChannel: empty Kraus family");
  d_out_ = kraus_.front().rows();
  d_in_ = kraus_.front().cols();
  if (d_in_ < 1 || d_out_ < 1) throw Error(ErrorKind::DimMismatch, "KrausChannel: empty operator");
  Mat tp = Mat::Zero(d_in_, d_in_);
  Mat un = Mat::Zero(d_out_, d_out_);
  for (const auto& k : kraus_) {
    if (k.rows() != d_out_ || k.cols() != d_in_)
      throw Error(ErrorKind::DimMismatch, "KrausChannel: Kraus operators differ in shape");
    tp += k.adjoint() * k;
    un += k * k.adjoint();
  }
  const double tp_defect = max_abs(Mat(tp - eye(d_in_)));
  if (tp_defect > kChannelTol)
    throw Error(ErrorKind::NotTracePreserving,
                "||sum K^dag K - 1|| = " + std::to_string(tp_defect));
  unital_ = d_in_ == d_out_ && max_abs(Mat(un - eye(d_out_))) <= kChannelTol;
}

Mat KrausChannel::operator()(const Mat& x) const {
  require_square(x, d_in_, "apply");
  Mat out = Mat::Zero(d_out_, d_out_);
  for (const auto& k : kraus_) out.noalias() += k * x * k.adjoint();
  return out;
}

Mat DualMap::operator()(const Mat& y) const {
  require_square(y, d_in(), "dual");
  Mat out = Mat::Zero(d_out(), d_out());
  for (const auto& k : kraus_) out.noalias() += k.adjoint() * y * k;
  return out;
}

PetzMap::PetzMap(const KrausChannel& channel, const Mat& sigma) : dual_(channel) {
  require_square(sigma, channel.d_in(), "petz_map");
  const auto es = herm_eig(sigma);
  if (!es.full_rank())
    throw Error(ErrorKind::SingularSigma,
                "sigma is rank deficient (min eigenvalue " + std::to_string(es.min_eigenvalue()) +
                    ")");
  sigma_half_ = es.apply([](double x) { return std::sqrt(x); });
  Mat phi_sigma = hermitize(channel(sigma));
  auto ep = herm_eig(phi_sigma);
  if (!ep.full_rank()) {
    constexpr double eps = 1e-10;
    const Index d = phi_sigma.rows();
    phi_sigma = (1.0 - eps) * phi_sigma + (eps * trace_re(phi_sigma) / static_cast<double>(d)) * eye(d);
    ep = herm_eig(phi_sigma);
  }
  phi_sigma_inv_half_ = ep.apply([](double x) { return 1.0 / std::sqrt(std::max(x, 0.0)); });
}

Mat PetzMap::operator()(const Mat& x) const {
  return sigma_half_ * dual_(phi_sigma_inv_half_ * x * phi_sigma_inv_half_) * sigma_half_;
}

Mat apply(const KrausChannel& channel, const Mat& x) { return channel(x); }

DualMap dual(const KrausChannel& channel) { return DualMap(channel); }

PetzMap petz_map(const KrausChannel& channel, const Mat& sigma) {
  return PetzMap(channel, sigma);
}

KrausChannel identity_channel(Index d) { return KrausChannel({eye(d)}); }

KrausChannel unitary_channel(const Mat& u) { return KrausChannel({u}); }

KrausChannel depolarizing_channel(Index d) {
  std::vector<Mat> kraus;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Mat k = Mat::Zero(d, d);
      k(i, j) = scale;
      kraus.push_back(std::move(k));
    }
  return KrausChannel(std::move(kraus));
}

KrausChannel ptrace_channel(const Dims& dims, Index traced) {
  if (traced < 0 || traced >= static_cast<Index>(dims.size()))
    throw Error(ErrorKind::DimMismatch, "ptrace_channel: traced index out of range");
  Index before = 1;
  Index after = 1;
  for (Index k = 0; k < static_cast<Index>(dims.size()); ++k) {
    if (k < traced) before *= dims[k];
    if (k > traced) after *= dims[k];
  }
  const Index dt = dims[traced];
  std::vector<Mat> kraus;
  for (Index i = 0; i < dt; ++i) {
    Mat bra = Mat::Zero(1, dt);
    bra(0, i) = 1.0;
    kraus.push_back(kron(kron(eye(before), bra), eye(after)));
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel random_unital_channel(Index d, Index m, Rng& rng) {
  if (m < 1) throw Error(ErrorKind::BadArgument, "random_unital_channel: m must be >= 1");
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> p(static_cast<std::size_t>(m));
  double total = 0;
  for (auto& x : p) total += (x = unit(rng));
  std::vector<Mat> kraus;
  for (Index i = 0; i < m; ++i)
    kraus.push_back(std::sqrt(p[static_cast<std::size_t>(i)] / total) * random_unitary(d, rng));
  return KrausChannel(std::move(kraus));
}

KrausChannel random_channel(Index d_in, Index d_out, Index m, Rng& rng) {
  if (m < 1) throw Error(ErrorKind::BadArgument, "random_channel: m must be >= 1");
  const Index big = std::max(d_out * m, d_in);
  const Mat u = random_unitary(big, rng);
  // First d_in columns form an isometry; rows split into m blocks of d_out.
  const Mat v = u.leftCols(d_in);
  std::vector<Mat> kraus;
  if (d_out * m >= d_in) {
    for (Index i = 0; i < m; ++i) kraus.push_back(v.middleRows(i * d_out, d_out));
  } else {
    throw Error(ErrorKind::BadArgument, "random_channel: need d_out*m >= d_in");
  }
  return KrausChannel(std::move(kraus));
}

Mat twirl_exact(const Mat& x, Index da, Index db) {
  require_square(x, da * db, "twirl_exact");
  const Index dims[] = {da, db};
  const Index keep[] = {0};
  return kron(ptrace(x, dims, keep), eye(db) / static_cast<double>(db));
}

Mat twirl_mc(const Mat& x, Index da, Index db, Index n, Rng& rng) {
  require_square(x, da * db, "twirl_mc");
  if (n < 1) throw Error(ErrorKind::BadArgument, "twirl_mc: n must be >= 1");
  const bool hermitian = is_hermitian(x);
  Mat acc = Mat::Zero(x.rows(), x.cols());
  const Mat ia = eye(da);
  for (Index s = 0; s < n; ++s) {
    const Mat u = kron(ia, random_unitary(db, rng));
    acc.noalias() += u * x * u.adjoint();
  }
  acc /= static_cast<double>(n);
  return hermitian ? hermitize(acc) : acc;
}

}  // namespace qel

#include "qel/explore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace qel {

namespace {

constexpr const char* kPrefix = "explore:";
constexpr Index kTrotterConsecutive = 8;

double rel(const Mat& rho, const Mat& sigma) {
  const auto v = relative_entropy(rho, sigma);
  if (v.infinite) throw Error(ErrorKind::SingularInput, "explorer: infinite relative entropy");
  return v.value;
}

double quarter_sq(const Mat& x) {
  const double n = trace_norm(x);
  return 0.25 * n * n;
}

Dims tripartite(const Dims& dims) {
  if (dims.size() != 3) throw Error(ErrorKind::BadArgument, "explorer needs three subsystems");
  return dims;
}

MultipartiteState full_rank_state(const Dims& dims, double eps, Rng& rng) {
  return regularize(random_multipartite(dims, product(dims), rng), eps);
}

MultipartiteState markov_sample(const Dims& dims, Rng& rng) {
  return markov_state(random_markov_spec(dims[0], dims[1], dims[2], 3, rng));
}

std::vector<double> trotter_ns(Index nmax) {
  std::vector<double> n;
  for (Index k = 1; k <= std::min(nmax, kTrotterConsecutive); ++k) n.push_back(static_cast<double>(k));
  for (Index k = 2 * kTrotterConsecutive; k <= nmax; k *= 2) n.push_back(static_cast<double>(k));
  return n;
}

}  // namespace

const std::vector<std::string>& explore_kinds() {
  static const std::vector<std::string> kinds{"stronger-mono", "ptrace-petz", "cmi-petz",
                                              "trotter-monotone"};
  return kinds;
}

void require_explore_kind(const std::string& kind) {
  const auto& k = explore_kinds();
  if (std::find(k.begin(), k.end(), kind) == k.end())
    throw Error(ErrorKind::BadArgument, "unknown exploration kind '" + kind + "'");
}

Ensemble parse_ensemble(const std::string& text) {
  if (text == "random") return Ensemble::random;
  if (text == "markov") return Ensemble::markov;
  throw Error(ErrorKind::BadArgument, "unknown ensemble '" + text + "'");
}

std::string to_string(Ensemble e) { return e == Ensemble::random ? "random" : "markov"; }

Histogram make_histogram(const std::vector<double>& values, std::size_t bins) {
  Histogram h;
  std::vector<double> finite;
  for (double v : values)
    if (std::isfinite(v)) finite.push_back(v);
  if (finite.empty() || bins == 0) return h;
  const auto [lo_it, hi_it] = std::minmax_element(finite.begin(), finite.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (hi <= lo) hi = lo + 1e-300 + std::abs(lo) * 1e-12;
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges.push_back(lo + width * static_cast<double>(i));
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (double v : finite) {
    auto b = static_cast<std::size_t>((v - lo) / width);
    h.counts[std::min(b, bins - 1)]++;
  }
  return h;
}

Instance explore_instance(const std::string& kind, Ensemble ensemble, const SuiteConfig& cfg,
                          std::uint64_t seed, std::uint64_t trial) {
  require_explore_kind(kind);
  Rng rng = trial_rng(seed, trial);
  Instance inst;
  inst.checker = kPrefix + kind;
  inst.dims = cfg.dims;
  inst.seed = seed;
  inst.trial = trial;
  const bool markov = ensemble == Ensemble::markov;

  if (kind == "stronger-mono") {
    if (markov) {
      // Partial trace over A with sigma = rho_AB (x) 1/d_C; the Petz recovery
      // of rho is then the one appearing in the CMI conjecture.
      const Dims dims = tripartite(cfg.dims);
      const auto rho = markov_sample(dims, rng);
      const Mat sigma = kron(rho.marginal({0, 1}), Mat(eye(dims[2]) / static_cast<double>(dims[2])));
      inst.states.emplace("rho", MultipartiteState(rho.state(), {rho.dim()}));
      inst.states.emplace("sigma", MultipartiteState(DensityMatrix(sigma), {rho.dim()}));
      inst.channels.emplace("phi", ptrace_channel(dims, 0));
    } else {
      const Index d = single_dim(cfg.dims);
      const auto rho = regularize(random_density(d, rng), cfg.eps);
      const auto sigma = regularize(random_density(d, rng), cfg.eps);
      inst.states.emplace("rho", MultipartiteState(rho, {d}));
      inst.states.emplace("sigma", MultipartiteState(sigma, {d}));
      inst.channels.emplace("phi", random_channel(d, d, 2, rng));
    }
  } else if (kind == "ptrace-petz") {
    if (cfg.dims.size() < 2) throw Error(ErrorKind::BadArgument, "ptrace-petz needs two subsystems");
    if (markov) {
      const Dims dims = tripartite(cfg.dims);
      const auto rho = markov_sample(dims, rng);
      const Dims two{dims[0], dims[1] * dims[2]};
      inst.states.emplace("rho", MultipartiteState(rho.state(), two));
      inst.states.emplace("sigma", full_rank_state(two, cfg.eps, rng));
    } else {
      Index rest = 1;
      for (std::size_t i = 1; i < cfg.dims.size(); ++i) rest *= cfg.dims[i];
      const Dims two{cfg.dims[0], rest};
      inst.states.emplace("rho", full_rank_state(two, cfg.eps, rng));
      inst.states.emplace("sigma", full_rank_state(two, cfg.eps, rng));
    }
  } else {
    const Dims dims = tripartite(cfg.dims);
    inst.states.emplace("rho", markov ? markov_sample(dims, rng) : full_rank_state(dims, cfg.eps, rng));
    if (kind == "trotter-monotone") inst.params["n"] = trotter_ns(cfg.nmax);
  }
  return inst;
}

double explore_slack(const Instance& inst) {
  const std::string& name = inst.checker;
  if (name.rfind(kPrefix, 0) != 0) throw Error(ErrorKind::Parse, "not an exploration instance: " + name);
  const std::string kind = name.substr(std::char_traits<char>::length(kPrefix));
  require_explore_kind(kind);

  if (kind == "stronger-mono") {
    const Mat& rho = inst.state("rho").mat();
    const Mat& sigma = inst.state("sigma").mat();
    const auto& phi = inst.channel("phi");
    const double gap = rel(rho, sigma) - rel(hermitize(phi(rho)), hermitize(phi(sigma)));
    const Mat recovered = petz_map(phi, sigma)(phi(rho));
    return gap - quarter_sq(Mat(rho - recovered));
  }
  if (kind == "ptrace-petz") {
    const auto& rho = inst.state("rho");
    const auto& sigma = inst.state("sigma");
    const auto& d = rho.dims();
    const Index a[] = {0};
    const Mat sigma_a_inv = embed(powm(sigma.marginal(a), -0.5), d, a);
    const Mat rho_a = embed(rho.marginal(a), d, a);
    const Mat s_half = sqrtm(sigma.mat());
    const Mat omega = s_half * sigma_a_inv * rho_a * sigma_a_inv * s_half;
    const double gap = rel(rho.mat(), sigma.mat()) - rel(rho.marginal(a), sigma.marginal(a));
    return gap - quarter_sq(Mat(rho.mat() - omega));
  }
  const auto& rho = inst.state("rho");
  if (kind == "cmi-petz") {
    const auto& d = rho.dims();
    const Index ab[] = {0, 1};
    const Index b[] = {1};
    const Index bc[] = {1, 2};
    const Mat left = embed(sqrtm(rho.marginal(ab)), d, ab) * embed(powm(rho.marginal(b), -0.5), d, b);
    const Mat recovered = left * embed(rho.marginal(bc), d, bc) * left.adjoint();
    return cmi(rho) - quarter_sq(Mat(rho.mat() - recovered));
  }
  // trotter-monotone: smallest step t_n - t_{n'} along the increasing n list.
  const auto& ns = inst.param("n");
  if (ns.size() < 2) return 0.0;
  double slack = std::numeric_limits<double>::infinity();
  double prev = sandwiched_trace(rho, rho, rho, 1.0 / ns[0]);
  for (std::size_t k = 1; k < ns.size(); ++k) {
    const double t = sandwiched_trace(rho, rho, rho, 1.0 / ns[k]);
    slack = std::min(slack, prev - t);
    prev = t;
  }
  return slack;
}

ExploreReport explore_conjecture(const std::string& kind, Ensemble ensemble, const SuiteConfig& cfg,
                                 std::uint64_t seed, std::uint64_t trials, unsigned threads) {
  require_explore_kind(kind);
  if (trials == 0) throw Error(ErrorKind::BadArgument, "trials must be >= 1");
  ExploreReport r;
  r.kind = kind;
  r.ensemble = ensemble;
  r.dims = cfg.dims;
  r.seed = seed;
  r.trials = trials;
  r.threshold = -10.0 * cfg.tol;
  r.slacks.assign(trials, 0.0);

  const auto work = [&](std::uint64_t begin, std::uint64_t stride) {
    for (std::uint64_t t = begin; t < trials; t += stride)
      r.slacks[t] = explore_slack(explore_instance(kind, ensemble, cfg, seed, t));
  };
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k)
      pool.emplace_back([&, k] {
        try {
          work(k, threads);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  r.min_slack = std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (r.slacks[t] < r.min_slack) {
      r.min_slack = r.slacks[t];
      r.worst_trial = t;
    }
    if (r.slacks[t] < r.threshold) r.candidates.push_back({t, r.slacks[t]});
  }
  r.worst = explore_instance(kind, ensemble, cfg, seed, r.worst_trial);
  r.histogram = make_histogram(r.slacks);
  return r;
}

Json report_to_json(const ExploreReport& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates)
    candidates.push_back(Json{{"seed", r.seed}, {"trial", c.trial}, {"slack", c.slack}});
  return Json{{"kind", r.kind},
              {"ensemble", to_string(r.ensemble)},
              {"dims", r.dims},
              {"seed", r.seed},
              {"trials", r.trials},
              {"min_slack", r.min_slack},
              {"candidate_threshold", r.threshold},
              {"worst", Json{{"trial", r.worst_trial}, {"slack", r.min_slack},
                             {"instance", instance_to_json(r.worst)}}},
              {"histogram", Json{{"edges", r.histogram.edges}, {"counts", r.histogram.counts}}},
              {"candidates", std::move(candidates)}};
}

}  // namespace qel

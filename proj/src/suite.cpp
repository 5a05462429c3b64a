#include "qel/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

namespace qel {

namespace {

using Generate = std::function<Instance(const SuiteConfig&, std::uint64_t, std::uint64_t)>;
using Evaluate = std::function<CheckResult(const Instance&, const SuiteConfig&)>;

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& key, const char* kind) {
  const auto it = m.find(key);
  if (it == m.end()) throw Error(ErrorKind::Parse, std::string("instance has no ") + kind + " '" + key + "'");
  return it->second;
}

Instance blank(const SuiteConfig& cfg, std::string name, std::uint64_t seed, std::uint64_t trial) {
  Instance inst;
  inst.checker = std::move(name);
  inst.dims = cfg.dims;
  inst.seed = seed;
  inst.trial = trial;
  return inst;
}

Dims tripartite_dims(const Dims& dims) {
  if (dims.size() != 3)
    throw Error(ErrorKind::BadArgument,
                "this checker needs three subsystems, got dims " + dims_label(dims));
  return dims;
}

Dims bipartite_dims(const Dims& dims) {
  if (dims.size() < 2)
    throw Error(ErrorKind::BadArgument, "this checker needs at least two subsystems");
  Index rest = 1;
  for (std::size_t i = 1; i < dims.size(); ++i) rest *= dims[i];
  return {dims[0], rest};
}

MultipartiteState full_rank_state(const Dims& dims, double eps, Rng& rng) {
  return regularize(random_multipartite(dims, product(dims), rng), eps);
}

MultipartiteState single(const DensityMatrix& rho) {
  return MultipartiteState(rho, {rho.dim()});
}

DensityMatrix full_rank_density(Index d, double eps, Rng& rng) {
  return regularize(random_density(d, rng), eps);
}

/// A state whose `party` marginal equals that of `target`.
MultipartiteState matched_to(const MultipartiteState& target, Index party, double eps, Rng& rng) {
  const Index keep[] = {party};
  return transplant_marginal(full_rank_state(target.dims(), eps, rng), party, target.marginal(keep));
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> dyadic(int from, int to) {
  std::vector<double> a;
  for (int k = from; k <= to; ++k) a.push_back(std::ldexp(1.0, -k));
  return a;
}

std::vector<double> dw_grid() {
  std::vector<double> a{0.9, 0.5, 0.1};
  for (double x : dyadic(2, 10)) a.push_back(x);
  return a;
}

std::vector<double> renyi_grid() {
  std::vector<double> a;
  for (int k = 1; k <= 9; ++k) a.push_back(k / 10.0);
  return a;
}

std::vector<double> audenaert_grid() {
  std::vector<double> a;
  for (int k = 0; k <= 10; ++k) a.push_back(k / 10.0);
  return a;
}

std::vector<double> trotter_grid(Index nmax) {
  if (nmax < 1) throw Error(ErrorKind::BadArgument, "nmax must be >= 1");
  std::vector<double> n;
  for (Index k = 1; k <= nmax; k *= 2) n.push_back(static_cast<double>(k));
  return n;
}

std::vector<double> or_default(const std::vector<double>& override_, std::vector<double> fallback) {
  return override_.empty() ? std::move(fallback) : override_;
}

std::vector<Index> as_indices(const std::vector<double>& v) {
  std::vector<Index> out;
  for (double x : v) out.push_back(static_cast<Index>(std::llround(x)));
  return out;
}

CheckResult merge_alpha_results(std::string name, const std::vector<CheckResult>& parts,
                                double tol) {
  Quantities q;
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& r : parts) {
    q.emplace_back("trace_alpha=" + format_double(r.quantity("alpha")), r.quantity("trace"));
    slack = std::min(slack, r.slack);
  }
  return CheckResult::make(std::move(name), slack, std::move(q), tol);
}

// --- generators and evaluators -------------------------------------------

Generate gen_pair_channel(std::string name, bool unital) {
  return [name, unital](const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
    Rng rng = trial_rng(seed, trial);
    const Index d = single_dim(cfg.dims);
    Instance inst = blank(cfg, name, seed, trial);
    inst.states.emplace("rho", single(full_rank_density(d, cfg.eps, rng)));
    inst.states.emplace("sigma", single(full_rank_density(d, cfg.eps, rng)));
    inst.channels.emplace("phi", unital ? random_unital_channel(d, 3, rng) : random_channel(d, d, 2, rng));
    return inst;
  };
}

Generate gen_tripartite(std::string name, std::vector<std::string> keys) {
  return [name, keys](const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
    Rng rng = trial_rng(seed, trial);
    const Dims dims = tripartite_dims(cfg.dims);
    Instance inst = blank(cfg, name, seed, trial);
    for (const auto& k : keys) inst.states.emplace(k, full_rank_state(dims, cfg.eps, rng));
    return inst;
  };
}

Instance gen_ptrace(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Dims dims = bipartite_dims(cfg.dims);
  Instance inst = blank(cfg, "ptrace-strengthening", seed, trial);
  inst.states.emplace("rho", full_rank_state(dims, cfg.eps, rng));
  inst.states.emplace("sigma", full_rank_state(dims, cfg.eps, rng));
  return inst;
}

// Even trials share the B marginal between the first two states, odd trials
// between the last two.
Instance gen_trace_exp(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Dims dims = tripartite_dims(cfg.dims);
  Instance inst = blank(cfg, "trace-exp-bound", seed, trial);
  const auto sigma = full_rank_state(dims, cfg.eps, rng);
  const auto other = matched_to(sigma, 1, cfg.eps, rng);
  const auto free_state = full_rank_state(dims, cfg.eps, rng);
  inst.states.emplace("sigma", sigma);
  inst.states.emplace("rho", trial % 2 == 0 ? other : free_state);
  inst.states.emplace("tau", trial % 2 == 0 ? free_state : other);
  return inst;
}

Instance gen_three_state(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Dims dims = tripartite_dims(cfg.dims);
  Instance inst = blank(cfg, "three-state", seed, trial);
  inst.states.emplace("rho", full_rank_state(dims, cfg.eps, rng));
  const auto tau = full_rank_state(dims, cfg.eps, rng);
  const auto other = matched_to(tau, 1, cfg.eps, rng);
  const auto free_state = full_rank_state(dims, cfg.eps, rng);
  inst.states.emplace("tau", tau);
  inst.states.emplace("sigma", trial % 2 == 0 ? other : free_state);
  inst.states.emplace("omega", trial % 2 == 0 ? free_state : other);
  return inst;
}

// Even trials are exact Markov chains, odd trials generic states, so both
// directions of the characterization are exercised.
Instance gen_markov(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Dims dims = tripartite_dims(cfg.dims);
  Instance inst = blank(cfg, "markov", seed, trial);
  if (trial % 2 == 0) {
    inst.states.emplace("rho", markov_state(random_markov_spec(dims[0], dims[1], dims[2], 3, rng)));
  } else {
    inst.states.emplace("rho", full_rank_state(dims, cfg.eps, rng));
  }
  inst.params["t"] = cfg.t_samples;
  return inst;
}

Instance gen_trotter(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Instance inst = gen_tripartite("trotter", {"rho"})(cfg, seed, trial);
  inst.params["n"] = trotter_grid(cfg.nmax);
  return inst;
}

Instance gen_dw_alpha(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Instance inst = gen_pair_channel("dw-alpha", true)(cfg, seed, trial);
  inst.params["alpha"] = or_default(cfg.alphas, dw_grid());
  return inst;
}

Instance gen_dw_tripartite(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Instance inst = gen_tripartite("dw-tripartite", {"rho"})(cfg, seed, trial);
  inst.params["alpha"] = or_default(cfg.alphas, dw_grid());
  return inst;
}

Instance gen_sbw(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Instance inst = gen_pair_channel("sbw-limit", true)(cfg, seed, trial);
  inst.params["alpha"] = or_default(cfg.alphas, dyadic(1, 12));
  return inst;
}

Instance gen_lieb(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Index d = single_dim(cfg.dims);
  Instance inst = blank(cfg, "lieb-concavity", seed, trial);
  inst.matrices.emplace("H", random_hermitian(d, rng));
  inst.matrices.emplace("X1", full_rank_density(d, cfg.eps, rng).mat());
  inst.matrices.emplace("X2", full_rank_density(d, cfg.eps, rng).mat());
  inst.params["lambda"] = {uniform(rng, 0.0, 1.0)};
  return inst;
}

Instance gen_cl(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Index d = single_dim(cfg.dims);
  Instance inst = blank(cfg, "cl-concavity", seed, trial);
  inst.matrices.emplace("M", random_ginibre(d, d, rng));
  inst.matrices.emplace("X1", full_rank_density(d, cfg.eps, rng).mat());
  inst.matrices.emplace("X2", full_rank_density(d, cfg.eps, rng).mat());
  inst.params["lambda"] = {uniform(rng, 0.0, 1.0)};
  constexpr double kAlphas[] = {1.5, 2.0, 4.0};
  inst.params["alpha"] = {kAlphas[trial % 3]};
  return inst;
}

Instance gen_gt(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Index d = single_dim(cfg.dims);
  Instance inst = blank(cfg, "golden-thompson", seed, trial);
  inst.matrices.emplace("A", random_hermitian(d, rng));
  inst.matrices.emplace("B", random_hermitian(d, rng));
  return inst;
}

// Even trials draw subnormalized pairs (so the overlap link applies), odd
// trials unnormalized Wishart matrices.
Instance gen_audenaert(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Index d = single_dim(cfg.dims);
  Instance inst = blank(cfg, "audenaert-ps", seed, trial);
  for (const char* key : {"M", "N"}) {
    if (trial % 2 == 0) {
      inst.matrices.emplace(key, uniform(rng, 0.5, 1.0) * random_density(d, rng).mat());
    } else {
      const Mat g = random_ginibre(d, d, rng);
      inst.matrices.emplace(key, hermitize(Mat(g * g.adjoint())));
    }
  }
  inst.params["t"] = audenaert_grid();
  return inst;
}

Instance gen_twirl(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  if (cfg.dims.size() < 2) throw Error(ErrorKind::BadArgument, "twirl needs two subsystems");
  const Index da = cfg.dims[0];
  const Index db = cfg.dims[1];
  Instance inst = blank(cfg, "twirl", seed, trial);
  inst.matrices.emplace("X", random_hermitian(da * db, rng));
  inst.params["d"] = {static_cast<double>(da), static_cast<double>(db)};
  inst.params["samples"] = {static_cast<double>(cfg.twirl_samples)};
  // 53-bit seed so it survives the round trip through a double.
  inst.params["mc_seed"] = {static_cast<double>(rng() >> 11)};
  return inst;
}

Instance gen_renyi(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Index d = single_dim(cfg.dims);
  Instance inst = blank(cfg, "renyi-monotone", seed, trial);
  inst.states.emplace("rho", single(full_rank_density(d, cfg.eps, rng)));
  inst.states.emplace("sigma", single(full_rank_density(d, cfg.eps, rng)));
  inst.params["alpha"] = or_default(cfg.alphas, renyi_grid());
  return inst;
}

// Odd trials scale sigma below unit trace.
Instance gen_univ(const SuiteConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Index d = single_dim(cfg.dims);
  Instance inst = blank(cfg, "univ-chain", seed, trial);
  inst.states.emplace("rho", single(full_rank_density(d, cfg.eps, rng)));
  const double scale = trial % 2 == 0 ? 1.0 : uniform(rng, 0.3, 1.0);
  inst.matrices.emplace("sigma", scale * full_rank_density(d, cfg.eps, rng).mat());
  return inst;
}

std::vector<Checker> build_registry() {
  std::vector<Checker> r;
  const auto add = [&r](std::string name, Generate g, Evaluate e) {
    r.push_back({std::move(name), std::move(g), std::move(e)});
  };

  add("monotonicity", gen_pair_channel("monotonicity", false),
      [](const Instance& i, const SuiteConfig& c) {
        return check_monotonicity(i.state("rho").mat(), i.state("sigma").mat(), i.channel("phi"), c.tol);
      });
  add("stronger-monotonicity", gen_pair_channel("stronger-monotonicity", true),
      [](const Instance& i, const SuiteConfig& c) {
        return check_stronger_monotonicity(i.state("rho").mat(), i.state("sigma").mat(),
                                           i.channel("phi"), c.tol)
            .to_check();
      });
  add("ptrace-strengthening", gen_ptrace, [](const Instance& i, const SuiteConfig& c) {
    return check_ptrace_strengthening(i.state("rho"), i.state("sigma"), c.tol).to_check();
  });
  add("ssa", gen_tripartite("ssa", {"rho"}), [](const Instance& i, const SuiteConfig& c) {
    return check_ssa_strengthened(i.state("rho"), c.tol).to_check();
  });
  add("trace-exp-bound", gen_trace_exp, [](const Instance& i, const SuiteConfig& c) {
    return check_trace_exp_bound(i.state("rho"), i.state("sigma"), i.state("tau"), c.tol);
  });
  add("unital-trace-bound", gen_pair_channel("unital-trace-bound", true),
      [](const Instance& i, const SuiteConfig& c) {
        return check_unital_trace_bound(i.state("rho").mat(), i.state("sigma").mat(),
                                        i.channel("phi"), c.tol);
      });
  add("bsw", gen_tripartite("bsw", {"rho", "sigma", "tau", "omega"}),
      [](const Instance& i, const SuiteConfig& c) {
        return check_bsw_identity(i.state("rho"), i.state("sigma"), i.state("tau"), i.state("omega"),
                                  std::min(c.tol, tol::identity));
      });
  add("super-ssa", gen_tripartite("super-ssa", {"rho", "sigma"}),
      [](const Instance& i, const SuiteConfig& c) {
        return check_super_ssa(i.state("rho"), i.state("sigma"), c.tol);
      });
  add("three-state", gen_three_state, [](const Instance& i, const SuiteConfig& c) {
    return check_three_state_chain(i.state("rho"), i.state("sigma"), i.state("tau"),
                                   i.state("omega"), c.tol)
        .to_check();
  });
  add("subadd-exp", gen_tripartite("subadd-exp", {"rho"}), [](const Instance& i, const SuiteConfig& c) {
    return check_subadd_exp(i.state("rho"), c.tol).to_check();
  });
  add("markov", gen_markov, [](const Instance& i, const SuiteConfig&) {
    return markov_characterizations(i.state("rho"), i.param("t"));
  });
  add("trotter", gen_trotter, [](const Instance& i, const SuiteConfig& c) {
    return trotter_sequence(i.state("rho"), as_indices(i.param("n")), c.tol).to_check();
  });
  add("dw-alpha", gen_dw_alpha, [](const Instance& i, const SuiteConfig& c) {
    std::vector<CheckResult> parts;
    for (double a : i.param("alpha"))
      parts.push_back(check_dw_alpha(i.state("rho").mat(), i.state("sigma").mat(), i.channel("phi"), a, c.tol));
    return merge_alpha_results("dw-alpha", parts, c.tol);
  });
  add("dw-tripartite", gen_dw_tripartite, [](const Instance& i, const SuiteConfig& c) {
    std::vector<CheckResult> parts;
    for (double a : i.param("alpha")) parts.push_back(check_dw_tripartite(i.state("rho"), a, c.tol));
    return merge_alpha_results("dw-tripartite", parts, c.tol);
  });
  add("sbw-limit", gen_sbw, [](const Instance& i, const SuiteConfig&) {
    return check_sbw_limit(i.state("rho").mat(), i.state("sigma").mat(), i.channel("phi"),
                           i.param("alpha"));
  });
  add("lieb-concavity", gen_lieb, [](const Instance& i, const SuiteConfig& c) {
    return check_lieb_concavity(i.matrix("H"), i.matrix("X1"), i.matrix("X2"), i.scalar("lambda"), c.tol);
  });
  add("cl-concavity", gen_cl, [](const Instance& i, const SuiteConfig& c) {
    return check_cl_concavity(i.matrix("M"), i.matrix("X1"), i.matrix("X2"), i.scalar("lambda"),
                              i.scalar("alpha"), c.tol);
  });
  add("golden-thompson", gen_gt, [](const Instance& i, const SuiteConfig& c) {
    return check_golden_thompson(i.matrix("A"), i.matrix("B"), c.tol);
  });
  add("audenaert-ps", gen_audenaert, [](const Instance& i, const SuiteConfig& c) {
    return check_audenaert_ps(i.matrix("M"), i.matrix("N"), i.param("t"), c.tol).to_check();
  });
  add("squashed-proxy", gen_tripartite("squashed-proxy", {"rho"}),
      [](const Instance& i, const SuiteConfig& c) { return check_squashed_proxy(i.state("rho"), c.tol); });
  add("twirl", gen_twirl, [](const Instance& i, const SuiteConfig&) {
    const auto& d = i.param("d");
    if (d.size() != 2) throw Error(ErrorKind::Parse, "twirl instance needs d = [dA, dB]");
    Rng rng(static_cast<std::uint64_t>(i.scalar("mc_seed")));
    return check_twirl_identity(i.matrix("X"), static_cast<Index>(d[0]), static_cast<Index>(d[1]),
                                static_cast<Index>(i.scalar("samples")), rng);
  });
  add("renyi-monotone", gen_renyi, [](const Instance& i, const SuiteConfig& c) {
    return check_renyi_monotonicity(i.state("rho").mat(), i.state("sigma").mat(), i.param("alpha"), c.tol);
  });
  add("univ-chain", gen_univ, [](const Instance& i, const SuiteConfig& c) {
    return check_univ_chain(i.state("rho").mat(), i.matrix("sigma"), c.tol).to_check();
  });
  return r;
}

}  // namespace

const MultipartiteState& Instance::state(const std::string& key) const {
  return lookup(states, key, "state");
}
const KrausChannel& Instance::channel(const std::string& key) const {
  return lookup(channels, key, "channel");
}
const Mat& Instance::matrix(const std::string& key) const { return lookup(matrices, key, "matrix"); }
const std::vector<double>& Instance::param(const std::string& key) const {
  return lookup(params, key, "parameter");
}
double Instance::scalar(const std::string& key) const {
  const auto& v = param(key);
  if (v.size() != 1) throw Error(ErrorKind::Parse, "parameter '" + key + "' must hold one value");
  return v.front();
}

Json instance_to_json(const Instance& inst) {
  Json states = Json::object();
  for (const auto& [k, v] : inst.states) states[k] = state_to_json(v);
  Json channels = Json::object();
  for (const auto& [k, v] : inst.channels) channels[k] = channel_to_json(v);
  Json matrices = Json::object();
  for (const auto& [k, v] : inst.matrices) matrices[k] = matrix_to_json(v);
  Json params = Json::object();
  for (const auto& [k, v] : inst.params) params[k] = v;
  return Json{{"checker", inst.checker}, {"dims", inst.dims},       {"seed", inst.seed},
              {"trial", inst.trial},     {"states", states},        {"channels", channels},
              {"matrices", matrices},    {"params", params}};
}

Instance instance_from_json(const Json& j) {
  try {
    Instance inst;
    inst.checker = j.at("checker").get<std::string>();
    inst.dims = j.at("dims").get<Dims>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.trial = j.at("trial").get<std::uint64_t>();
    if (j.contains("states"))
      for (const auto& [k, v] : j.at("states").items()) inst.states.emplace(k, state_from_json(v));
    if (j.contains("channels"))
      for (const auto& [k, v] : j.at("channels").items()) inst.channels.emplace(k, channel_from_json(v));
    if (j.contains("matrices"))
      for (const auto& [k, v] : j.at("matrices").items()) inst.matrices.emplace(k, matrix_from_json(v));
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items())
        inst.params.emplace(k, v.get<std::vector<double>>());
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed instance: ") + e.what());
  }
}

const std::vector<Checker>& checkers() {
  static const std::vector<Checker> registry = build_registry();
  return registry;
}

const Checker& find_checker(std::string_view name) {
  for (const auto& c : checkers())
    if (c.name == name) return c;
  throw Error(ErrorKind::BadArgument, "unknown checker '" + std::string(name) + "'");
}

std::vector<std::string> resolve_suite(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& c : checkers())
        if (std::find(out.begin(), out.end(), c.name) == out.end()) out.push_back(c.name);
      continue;
    }
    find_checker(n);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  if (out.empty()) throw Error(ErrorKind::BadArgument, "empty suite");
  return out;
}

CheckResult evaluate_instance(const Instance& inst, const SuiteConfig& cfg) {
  CheckResult r = find_checker(inst.checker).evaluate(inst, cfg);
  r.name = inst.checker;
  r.meta = {inst.dims, inst.seed, inst.trial};
  return r;
}

std::vector<TrialRecord> run_checker(const Checker& checker, const SuiteConfig& cfg,
                                     std::uint64_t seed, std::uint64_t trials, unsigned threads) {
  if (trials == 0) throw Error(ErrorKind::BadArgument, "trials must be >= 1");
  std::vector<std::optional<TrialRecord>> slots(trials);
  const auto work = [&](std::uint64_t begin, std::uint64_t stride) {
    for (std::uint64_t t = begin; t < trials; t += stride) {
      Instance inst = checker.generate(cfg, seed, t);
      CheckResult res = evaluate_instance(inst, cfg);
      slots[t].emplace(TrialRecord{std::move(inst), std::move(res)});
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(trials, 64))));
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
  std::vector<TrialRecord> out;
  out.reserve(trials);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Index single_dim(const Dims& dims) {
  if (dims.empty()) throw Error(ErrorKind::BadArgument, "empty dims");
  return dims.size() == 1 ? dims[0] : dims[0] * dims[1];
}

}  // namespace qel

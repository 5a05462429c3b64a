#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "qel/explore.hpp"
#include "qel/io.hpp"
#include "qel/suite.hpp"

namespace qel::cli {

namespace {

struct Options {
  std::string suite = "all";
  std::string dims = "2,2,2";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double tol = tol::ineq;
  double eps = 1e-6;
  std::string out;
  std::string format = "json";
  Index nmax = 64;
  std::string alpha;
  std::string t_samples;
  unsigned threads = 1;
  std::string ensemble = "random";
  std::string kind;
  std::string file;
  std::string state_file;
};

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  const char* env = std::getenv("QEL_SEED");
  if (env == nullptr || *env == '\0') return flag_seed;
  const std::string text(env);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "QEL_SEED is not an unsigned integer: '" + text + "'");
  return v;
}

SuiteConfig make_config(const Options& o) {
  SuiteConfig cfg;
  cfg.dims = parse_dims(o.dims);
  if (!(o.tol > 0)) throw Error(ErrorKind::BadArgument, "--tol must be positive");
  if (!(o.eps > 0 && o.eps < 1)) throw Error(ErrorKind::BadArgument, "--eps must lie in (0,1)");
  if (o.nmax < 1) throw Error(ErrorKind::BadArgument, "--nmax must be >= 1");
  cfg.tol = o.tol;
  cfg.eps = o.eps;
  cfg.nmax = o.nmax;
  if (!o.alpha.empty()) cfg.alphas = parse_doubles(o.alpha);
  if (!o.t_samples.empty()) cfg.t_samples = parse_doubles(o.t_samples);
  return cfg;
}

void require_format(const std::string& f) {
  if (f != "json" && f != "csv") throw Error(ErrorKind::BadArgument, "--format must be json or csv");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  f << text;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text(o.out, text);
  }
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format);
  const SuiteConfig cfg = make_config(o);
  const std::uint64_t seed = effective_seed(o.seed);
  const auto names = resolve_suite(split(o.suite));

  std::vector<CheckResult> results;
  const TrialRecord* worst = nullptr;
  std::vector<std::vector<TrialRecord>> runs;
  runs.reserve(names.size());
  std::ostringstream summary;
  std::uint64_t failures = 0;
  for (const auto& name : names) {
    runs.push_back(run_checker(find_checker(name), cfg, seed, o.trials, o.threads));
    double min_slack = std::numeric_limits<double>::infinity();
    std::uint64_t failed = 0;
    for (const auto& rec : runs.back()) {
      results.push_back(rec.result);
      min_slack = std::min(min_slack, rec.result.slack);
      if (!rec.result.pass) {
        ++failed;
        if (worst == nullptr || rec.result.slack < worst->result.slack) worst = &rec;
      }
    }
    failures += failed;
    summary << name << ": trials=" << o.trials << " failed=" << failed
            << " min_slack=" << format_double(min_slack) << "\n";
  }

  if (o.format == "csv") {
    std::ostringstream csv;
    write_csv(csv, results);
    emit(o, out, csv.str());
  } else {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(result_to_json(r));
    emit(o, out, dump(arr));
  }
  err << summary.str();
  if (failures == 0) {
    err << "all " << results.size() << " checks passed\n";
    return kOk;
  }
  const std::string path = o.out.empty() ? std::string("qel_worst.json") : o.out + ".worst.json";
  write_text(path, dump(Json{{"instance", instance_to_json(worst->instance)},
                             {"result", result_to_json(worst->result)}}));
  err << failures << " of " << results.size() << " checks failed; worst instance written to " << path
      << "\n";
  return kCheckFailed;
}

int cmd_markov(const Options& o, std::ostream& out, std::ostream& err) {
  const MarkovSpec spec = markov_spec_from_json(read_json_file(o.file));
  const auto rho = markov_state(spec);
  const std::vector<double> t = o.t_samples.empty() ? kDefaultTSamples : parse_doubles(o.t_samples);
  const CheckResult r = markov_characterizations(rho, t);
  Json report{{"dims", rho.dims()}, {"blocks", spec.blocks.size()}};
  for (const auto& [k, v] : r.quantities) report[k] = v;
  report["t_samples"] = t;
  report["consistent"] = r.pass;
  emit(o, out, dump(report));
  err << "cmi=" << format_double(r.quantity("cmi")) << " r_log=" << format_double(r.quantity("r_log"))
      << " r_petz=" << format_double(r.quantity("r_petz"))
      << " r_mmdag=" << format_double(r.quantity("r_mmdag"))
      << " r_mdagm=" << format_double(r.quantity("r_mdagm"))
      << " r_omega=" << format_double(r.quantity("r_omega")) << "\n";
  return r.pass ? kOk : kCheckFailed;
}

std::vector<Index> trotter_ns(Index nmax) {
  std::vector<Index> ns;
  for (Index n = 1; n <= nmax; n *= 2) ns.push_back(n);
  if (ns.back() != nmax) ns.push_back(nmax);
  return ns;
}

MultipartiteState trotter_state(const Options& o, const SuiteConfig& cfg, std::uint64_t seed,
                                std::uint64_t trial) {
  Rng rng = trial_rng(seed, trial);
  const Dims& d = cfg.dims;
  if (d.size() != 3) throw Error(ErrorKind::BadArgument, "trotter needs three subsystems");
  if (o.ensemble == "random")
    return regularize(random_multipartite(d, product(d), rng), cfg.eps);
  if (o.ensemble == "markov") return markov_state(random_markov_spec(d[0], d[1], d[2], 3, rng));
  if (o.ensemble == "product") {
    std::vector<DensityMatrix> f;
    for (Index k : d) f.push_back(regularize(random_density(k, rng), cfg.eps));
    return product_state(f);
  }
  throw Error(ErrorKind::BadArgument, "unknown ensemble '" + o.ensemble + "'");
}

int cmd_trotter(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format);
  const SuiteConfig cfg = make_config(o);
  const std::uint64_t seed = effective_seed(o.seed);
  const auto ns = trotter_ns(cfg.nmax);

  std::vector<MultipartiteState> states;
  if (!o.state_file.empty()) {
    states.push_back(state_from_json(read_json_file(o.state_file)));
  } else {
    for (std::uint64_t t = 0; t < o.trials; ++t) states.push_back(trotter_state(o, cfg, seed, t));
  }

  Json arr = Json::array();
  std::ostringstream csv;
  csv << "trial,n,t_n,t_n_minus_trace_omega,flag\n";
  std::uint64_t flagged = 0;
  for (std::size_t trial = 0; trial < states.size(); ++trial) {
    const ChainResult r = trotter_sequence(states[trial], ns, cfg.tol);
    const double tr = r.quantity("trace_omega");
    Json rows = Json::array();
    for (Index n : ns) {
      const double tn = r.quantity("t_" + std::to_string(n));
      const bool flag = tn > 1.0 + cfg.tol;
      flagged += flag;
      rows.push_back(Json{{"n", n}, {"t_n", tn}, {"t_n_minus_trace_omega", tn - tr}, {"flag", flag}});
      csv << trial << ',' << n << ',' << format_double(tn) << ',' << format_double(tn - tr) << ','
          << (flag ? "true" : "false") << '\n';
    }
    arr.push_back(Json{{"trial", trial}, {"trace_omega", tr}, {"rows", std::move(rows)}});
  }
  emit(o, out, o.format == "csv" ? csv.str() : dump(arr));
  err << states.size() << " trials, " << flagged << " values above 1 + tol\n";
  return flagged == 0 ? kOk : kCheckFailed;
}

int cmd_explore(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format);
  require_explore_kind(o.kind);
  const SuiteConfig cfg = make_config(o);
  const std::uint64_t seed = effective_seed(o.seed);
  const auto report =
      explore_conjecture(o.kind, parse_ensemble(o.ensemble), cfg, seed, o.trials, o.threads);
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "trial,slack\n";
    for (std::size_t t = 0; t < report.slacks.size(); ++t)
      csv << t << ',' << format_double(report.slacks[t]) << '\n';
    emit(o, out, csv.str());
  } else {
    emit(o, out, dump(report_to_json(report)));
  }
  err << o.kind << ": trials=" << report.trials << " min_slack=" << format_double(report.min_slack)
      << " worst_trial=" << report.worst_trial << " candidates=" << report.candidates.size() << "\n";
  return report.candidates.empty() ? kOk : kCandidateFound;
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  const SuiteConfig cfg = make_config(o);
  const Json doc = read_json_file(o.file);
  std::vector<Json> items;
  if (doc.is_array()) {
    for (const auto& x : doc) items.push_back(x.contains("instance") ? x.at("instance") : x);
  } else {
    items.push_back(doc.contains("instance") ? doc.at("instance") : doc);
  }
  Json arr = Json::array();
  int code = kOk;
  for (const auto& item : items) {
    const Instance inst = instance_from_json(item);
    if (inst.checker.rfind("explore:", 0) == 0) {
      const double slack = explore_slack(inst);
      arr.push_back(Json{{"checker", inst.checker}, {"seed", inst.seed}, {"trial", inst.trial},
                         {"slack", slack}});
      err << inst.checker << " trial " << inst.trial << ": slack=" << format_double(slack) << "\n";
      if (slack < -10.0 * cfg.tol && code == kOk) code = kCandidateFound;
      continue;
    }
    const CheckResult r = evaluate_instance(inst, cfg);
    arr.push_back(result_to_json(r));
    err << r.name << " trial " << inst.trial << ": slack=" << format_double(r.slack)
        << (r.pass ? " pass" : " FAIL") << "\n";
    if (!r.pass) code = kCheckFailed;
  }
  emit(o, out, dump(arr));
  return code;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--dims", o.dims, "Comma-separated subsystem dimensions")->capture_default_str();
  sub->add_option("--trials", o.trials, "Number of seeded trials")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "Master seed (QEL_SEED overrides)")->capture_default_str();
  sub->add_option("--tol", o.tol, "Slack tolerance")->capture_default_str();
  sub->add_option("--eps", o.eps, "Regularization weight of the maximally mixed state")
      ->capture_default_str();
  sub->add_option("--out", o.out, "Report file (default: stdout)");
  sub->add_option("--format", o.format, "json or csv")->capture_default_str();
  sub->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  sub->add_option("--nmax", o.nmax, "Largest Trotter step count")->capture_default_str();
  sub->add_option("--alpha", o.alpha, "Comma-separated alpha grid override");
  sub->add_option("--t-samples", o.t_samples, "Comma-separated modular-flow sample points");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical laboratory for strengthened quantum entropy inequalities", "qel"};
  app.require_subcommand(0, 1);
  std::string replay_flag;
  app.add_option("--replay", replay_flag, "Re-evaluate a dumped instance file");
  app.add_option("--tol", o.tol, "Slack tolerance for --replay");
  app.add_option("--out", o.out, "Report file for --replay (default: stdout)");

  auto* check = app.add_subcommand("check", "Run checker suites on seeded random instances");
  add_common(check, o);
  check->add_option("--suite", o.suite, "Comma-separated checker names, or all")
      ->capture_default_str();

  auto* markov = app.add_subcommand("markov", "Build a Markov state from a block spec and test it");
  markov->add_option("spec", o.file, "MarkovSpec JSON file")->required();
  markov->add_option("--t-samples", o.t_samples, "Comma-separated modular-flow sample points");
  markov->add_option("--out", o.out, "Report file (default: stdout)");

  auto* trotter = app.add_subcommand("trotter", "Tabulate the Lie-Trotter trace sequence");
  add_common(trotter, o);
  trotter->add_option("--ensemble", o.ensemble, "random, markov or product")->capture_default_str();
  trotter->add_option("--state", o.state_file, "Use this state JSON instead of random trials");

  auto* explore = app.add_subcommand("explore", "Search for counterexamples to open conjectures");
  add_common(explore, o);
  explore->add_option("kind", o.kind, "stronger-mono, ptrace-petz, cmi-petz or trotter-monotone")
      ->required();
  explore->add_option("--ensemble", o.ensemble, "random or markov")->capture_default_str();

  auto* replay = app.add_subcommand("replay", "Re-evaluate a dumped instance file");
  replay->add_option("file", o.file, "Instance JSON file")->required();
  replay->add_option("--tol", o.tol, "Slack tolerance")->capture_default_str();
  replay->add_option("--out", o.out, "Report file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kConfigError;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (markov->parsed()) return cmd_markov(o, out, err);
    if (trotter->parsed()) return cmd_trotter(o, out, err);
    if (explore->parsed()) return cmd_explore(o, out, err);
    if (replay->parsed()) return cmd_replay(o, out, err);
    if (!replay_flag.empty()) {
      o.file = replay_flag;
      return cmd_replay(o, out, err);
    }
    err << app.help();
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace qel::cli

#include <doctest.h>

#include <cmath>
#include <vector>

#include "qel/lab.hpp"

using namespace qel;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception thrown");
  return ErrorKind::BadArgument;
}

Mat diag(const std::vector<double>& v) {
  const auto n = static_cast<Index>(v.size());
  Mat m = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = v[static_cast<std::size_t>(i)];
  return m;
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> p(n);
  double s = 0;
  for (auto& x : p) s += (x = u(rng));
  for (auto& x : p) x /= s;
  return p;
}

// Classical tripartite distribution with the first party slowest.
struct Joint {
  int da, db, dc;
  std::vector<double> p;

  double at(int a, int b, int c) const { return p[static_cast<std::size_t>((a * db + b) * dc + c)]; }
  double ab(int a, int b) const {
    double s = 0;
    for (int c = 0; c < dc; ++c) s += at(a, b, c);
    return s;
  }
  double bc(int b, int c) const {
    double s = 0;
    for (int a = 0; a < da; ++a) s += at(a, b, c);
    return s;
  }
  double b(int b) const {
    double s = 0;
    for (int c = 0; c < dc; ++c) s += bc(b, c);
    return s;
  }
  MultipartiteState state() const { return MultipartiteState(DensityMatrix(diag(p)), {da, db, dc}); }
};

Joint random_joint(int da, int db, int dc, Rng& rng) {
  return {da, db, dc, random_simplex(static_cast<std::size_t>(da * db * dc), rng)};
}

// A joint distribution whose B marginal equals that of `target`.
Joint with_b_marginal(const Joint& target, Rng& rng) {
  Joint out{target.da, target.db, target.dc, std::vector<double>(target.p.size())};
  for (int b = 0; b < target.db; ++b) {
    const auto cond = random_simplex(static_cast<std::size_t>(target.da * target.dc), rng);
    for (int a = 0; a < target.da; ++a)
      for (int c = 0; c < target.dc; ++c)
        out.p[static_cast<std::size_t>((a * target.db + b) * target.dc + c)] =
            target.b(b) * cond[static_cast<std::size_t>(a * target.dc + c)];
  }
  return out;
}

double kl(const Joint& p, const std::vector<double>& q) {
  double s = 0;
  for (std::size_t i = 0; i < p.p.size(); ++i) s += p.p[i] * std::log(p.p[i] / q[i]);
  return s;
}

double kl_ab(const Joint& p, const Joint& q) {
  double s = 0;
  for (int a = 0; a < p.da; ++a)
    for (int b = 0; b < p.db; ++b) s += p.ab(a, b) * std::log(p.ab(a, b) / q.ab(a, b));
  return s;
}

double kl_bc(const Joint& p, const Joint& q) {
  double s = 0;
  for (int b = 0; b < p.db; ++b)
    for (int c = 0; c < p.dc; ++c) s += p.bc(b, c) * std::log(p.bc(b, c) / q.bc(b, c));
  return s;
}

double kl_b(const Joint& p, const Joint& q) {
  double s = 0;
  for (int b = 0; b < p.db; ++b) s += p.b(b) * std::log(p.b(b) / q.b(b));
  return s;
}

double classical_cmi(const Joint& p) {
  double s = 0;
  for (int a = 0; a < p.da; ++a)
    for (int b = 0; b < p.db; ++b)
      for (int c = 0; c < p.dc; ++c)
        s += p.at(a, b, c) * std::log(p.at(a, b, c) * p.b(b) / (p.ab(a, b) * p.bc(b, c)));
  return s;
}

// q_abc = x_ab * y_bc / z_b, the classical image of exp(log x_AB + log y_BC - log z_B).
std::vector<double> classical_omega(const Joint& x, const Joint& y, const Joint& z) {
  std::vector<double> q(x.p.size());
  for (int a = 0; a < x.da; ++a)
    for (int b = 0; b < x.db; ++b)
      for (int c = 0; c < x.dc; ++c)
        q[static_cast<std::size_t>((a * x.db + b) * x.dc + c)] = x.ab(a, b) * y.bc(b, c) / z.b(b);
  return q;
}

double sum(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s;
}

MultipartiteState full_rank(const Dims& dims, Rng& rng) {
  Index n = 1;
  for (Index d : dims) n *= d;
  return regularize(random_multipartite(dims, n, rng), 1e-6);
}

Mat full_rank(Index d, Rng& rng) { return regularize(random_density(d, rng), 1e-6).mat(); }

MultipartiteState product_of(Index da, Index db, Index dc, Rng& rng) {
  std::vector<DensityMatrix> f{regularize(random_density(da, rng), 1e-6),
                               regularize(random_density(db, rng), 1e-6),
                               regularize(random_density(dc, rng), 1e-6)};
  return product_state(f);
}

void check_all_links_zero(const ChainResult& r, double tol) {
  for (const auto& [name, v] : r.links) {
    CAPTURE(name);
    CHECK(std::abs(v) < tol);
  }
}

}  // namespace

TEST_CASE("CheckResult and ChainResult bookkeeping") {
  const auto r = CheckResult::make("x", -2e-8, {{"a", 1.0}});
  CHECK_FALSE(r.pass);
  CHECK(r.consistent());
  CHECK(r.quantity("a") == 1.0);
  CHECK(kind_of([&] { r.quantity("b"); }) == ErrorKind::BadArgument);

  const auto c = ChainResult::make("c", {{"x", 3.0}, {"y", 2.0}, {"z", 2.0 + 5e-9}},
                                   {{"cond", -5e-11, 1e-10}});
  REQUIRE(c.slacks.size() == 2);
  CHECK(c.slacks[0] == doctest::Approx(1.0));
  CHECK(c.pass);
  CHECK(c.link("y") == 2.0);
  // The condition uses half of its own tolerance, so it scales to half the chain tolerance.
  CHECK(c.min_slack() == doctest::Approx(-0.5e-8));
  const auto flat = c.to_check();
  CHECK(flat.pass);
  CHECK(flat.consistent());
  CHECK(flat.quantity("link:x") == 3.0);
  CHECK(flat.quantity("slack:x>=y") == doctest::Approx(1.0));
  CHECK(flat.quantity("cond:cond") == -5e-11);

  const auto failing = ChainResult::make("f", {{"x", 1.0}}, {{"cond", -2e-10, 1e-10}});
  CHECK_FALSE(failing.pass);
  CHECK(failing.to_check().consistent());
  const auto exact = ChainResult::make("e", {}, {{"cond", -1e-300, 0.0}});
  CHECK_FALSE(exact.pass);
  CHECK(exact.to_check().consistent());
}

TEST_CASE("monotonicity") {
  Rng rng = trial_rng(1, 0);
  const Mat rho = full_rank(4, rng);
  const Mat sigma = full_rank(4, rng);
  CHECK(std::abs(check_monotonicity(rho, sigma, identity_channel(4)).slack) < 1e-12);
  const auto dep = check_monotonicity(rho, sigma, depolarizing_channel(4));
  CHECK(dep.slack == doctest::Approx(relative_entropy(rho, sigma).value).epsilon(1e-10));
  for (int k = 0; k < 100; ++k) {
    const auto r = check_monotonicity(full_rank(4, rng), full_rank(4, rng), random_channel(4, 3, 2, rng));
    CHECK(r.pass);
    CHECK(r.consistent());
  }
}

TEST_CASE("stronger monotonicity") {
  Rng rng = trial_rng(2, 0);
  const Mat rho = full_rank(4, rng);
  const Mat sigma = full_rank(4, rng);
  const auto phi = random_unital_channel(4, 3, rng);

  const auto same = check_stronger_monotonicity(rho, rho, phi);
  check_all_links_zero(same, 1e-8);
  CHECK(max_abs(Mat(omega_channel(rho, rho, phi) - rho)) < 1e-8);

  const auto u = unitary_channel(random_unitary(4, rng));
  const auto conj = check_stronger_monotonicity(rho, sigma, u);
  check_all_links_zero(conj, 1e-8);
  CHECK(max_abs(Mat(omega_channel(rho, sigma, u) - rho)) < 1e-8);

  for (int k = 0; k < 100; ++k) {
    const auto r = check_stronger_monotonicity(full_rank(4, rng), full_rank(4, rng),
                                               random_unital_channel(4, 3, rng));
    CHECK(r.pass);
    CHECK(r.quantity("trace_omega") <= 1 + 1e-8);
  }
  CHECK(kind_of([&] { check_stronger_monotonicity(rho, sigma, random_channel(4, 4, 2, rng)); }) ==
        ErrorKind::NotUnital);
}

TEST_CASE("partial-trace strengthening") {
  Rng rng = trial_rng(3, 0);
  const auto rho = full_rank({2, 3}, rng);
  check_all_links_zero(check_ptrace_strengthening(rho, rho), 1e-8);

  SUBCASE("shared B factor") {
    const DensityMatrix sa = regularize(random_density(2, rng), 1e-6);
    const DensityMatrix sb = regularize(random_density(3, rng), 1e-6);
    const DensityMatrix ra = regularize(random_density(2, rng), 1e-6);
    const std::vector<DensityMatrix> fs{sa, sb}, fr{ra, sb};
    const auto sigma = product_state(fs);
    const auto r = product_state(fr);
    const auto res = check_ptrace_strengthening(r, sigma);
    CHECK(std::abs(res.link("relative_entropy_gap")) < 1e-10);
    CHECK(max_abs(Mat(omega_ptrace(r, sigma) - kron(ra.mat(), sb.mat()))) < 1e-10);
  }
  SUBCASE("equality condition on a commuting family") {
    // rho_AB = p(a) q(b|a), sigma_AB = s(a) q(b|a) share log rho_AB - log rho_A.
    const auto p = random_simplex(2, rng);
    const auto s = random_simplex(2, rng);
    std::vector<double> rv, sv;
    for (int a = 0; a < 2; ++a) {
      const auto q = random_simplex(3, rng);
      for (double x : q) {
        rv.push_back(p[static_cast<std::size_t>(a)] * x);
        sv.push_back(s[static_cast<std::size_t>(a)] * x);
      }
    }
    const MultipartiteState r(DensityMatrix(diag(rv)), {2, 3});
    const MultipartiteState sg(DensityMatrix(diag(sv)), {2, 3});
    const auto res = check_ptrace_strengthening(r, sg);
    CHECK(std::abs(res.link("relative_entropy_gap")) < 1e-9);
    CHECK(std::abs(res.slacks[0]) < 1e-9);
  }
  for (int k = 0; k < 100; ++k) CHECK(check_ptrace_strengthening(full_rank({2, 4}, rng), full_rank({2, 4}, rng)).pass);
}

TEST_CASE("strengthened strong subadditivity") {
  Rng rng = trial_rng(4, 0);
  const auto prod = product_of(2, 2, 2, rng);
  const auto p = check_ssa_strengthened(prod);
  check_all_links_zero(p, 1e-9);
  CHECK(max_abs(Mat(omega_ssa(prod) - prod.mat())) < 1e-10);

  for (int k = 0; k < 10; ++k) {
    const auto m = markov_state(random_markov_spec(2, 3, 2, 3, rng));
    const auto r = check_ssa_strengthened(m);
    CHECK(r.link("cmi") < 1e-8);
    CHECK(r.quantity("one_norm") < 1e-7);
    CHECK(r.pass);
  }
  for (int k = 0; k < 100; ++k) {
    const auto r = check_ssa_strengthened(full_rank({2, 2, 2}, rng));
    CHECK(r.pass);
    CHECK(r.to_check().consistent());
  }
  CHECK(kind_of([&] { check_ssa_strengthened(full_rank({2, 2}, rng)); }) == ErrorKind::NotTripartite);
}

TEST_CASE("trace bound with matched B marginals") {
  Rng rng = trial_rng(5, 0);
  const auto rho = full_rank({2, 2, 2}, rng);
  const auto same = check_trace_exp_bound(rho, rho, rho);
  CHECK(same.pass);
  CHECK(same.quantity("trace") == doctest::Approx(trace_re(omega_ssa(rho))).epsilon(1e-12));

  for (int k = 0; k < 20; ++k) {
    const Joint r = random_joint(2, 3, 2, rng);
    const Joint s = with_b_marginal(r, rng);
    const Joint t = random_joint(2, 3, 2, rng);
    // Tr exp(log rho_AB - log sigma_B + log tau_BC) = sum rho_ab tau_bc / sigma_b.
    double oracle = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 2; ++c) oracle += r.ab(a, b) * t.bc(b, c) / s.b(b);
    CHECK(oracle <= 1 + 1e-12);
    const auto res = check_trace_exp_bound(r.state(), s.state(), t.state());
    CHECK(res.quantity("trace") == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(res.pass);
  }

  for (int k = 0; k < 20; ++k) {
    const auto sigma = full_rank({2, 2, 2}, rng);
    const auto matched = transplant_marginal(full_rank({2, 2, 2}, rng), 1, sigma.marginal({1}));
    const auto free_state = full_rank({2, 2, 2}, rng);
    CHECK(check_trace_exp_bound(matched, sigma, free_state).pass);
    CHECK(check_trace_exp_bound(free_state, sigma, matched).pass);
  }

  const auto a = full_rank({2, 2, 2}, rng);
  const auto b = full_rank({2, 2, 2}, rng);
  const auto c = full_rank({2, 2, 2}, rng);
  CHECK(kind_of([&] { check_trace_exp_bound(a, b, c); }) == ErrorKind::MarginalMismatch);
}

TEST_CASE("unital trace bound") {
  Rng rng = trial_rng(6, 0);
  const auto p = random_simplex(4, rng);
  const auto q = random_simplex(4, rng);
  CHECK(check_unital_trace_bound(diag(p), diag(q), identity_channel(4)).quantity("trace") ==
        doctest::Approx(1.0).epsilon(1e-12));
  const Mat rho = full_rank(4, rng);
  const Mat sigma = full_rank(4, rng);
  CHECK(check_unital_trace_bound(rho, sigma, unitary_channel(random_unitary(4, rng))).quantity("trace") ==
        doctest::Approx(1.0).epsilon(1e-9));
  for (int k = 0; k < 100; ++k)
    CHECK(check_unital_trace_bound(full_rank(4, rng), full_rank(4, rng), random_unital_channel(4, 3, rng)).pass);
  CHECK(kind_of([&] { check_unital_trace_bound(rho, sigma, random_channel(4, 4, 2, rng)); }) ==
        ErrorKind::NotUnital);
}

TEST_CASE("BSW identity") {
  Rng rng = trial_rng(7, 0);
  const auto rho = full_rank({2, 2, 2}, rng);
  const auto same = check_bsw_identity(rho, rho, rho, rho);
  CHECK(same.quantity("lhs") == doctest::Approx(cmi(rho)).epsilon(1e-9));
  CHECK(same.quantity("rhs") == doctest::Approx(cmi(rho)).epsilon(1e-9));

  for (int k = 0; k < 20; ++k) {
    const Joint r = random_joint(2, 2, 3, rng), s = random_joint(2, 2, 3, rng), t = random_joint(2, 2, 3, rng),
                w = random_joint(2, 2, 3, rng);
    const double lhs = kl(r, classical_omega(s, t, w));
    const double rhs = classical_cmi(r) + kl_ab(r, s) + kl_bc(r, t) - kl_b(r, w);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    const auto res = check_bsw_identity(r.state(), s.state(), t.state(), w.state());
    CHECK(res.quantity("lhs") == doctest::Approx(lhs).epsilon(1e-9));
    CHECK(res.quantity("rhs") == doctest::Approx(rhs).epsilon(1e-9));
    CHECK(res.pass);
  }
  for (int k = 0; k < 50; ++k) {
    const auto res = check_bsw_identity(full_rank({2, 2, 2}, rng), full_rank({2, 2, 2}, rng),
                                        full_rank({2, 2, 2}, rng), full_rank({2, 2, 2}, rng));
    CHECK(res.quantity("residual") < 1e-8);
  }
}

TEST_CASE("super strong subadditivity") {
  Rng rng = trial_rng(8, 0);
  const auto rho = full_rank({2, 2, 2}, rng);
  CHECK(std::abs(check_super_ssa(rho, rho).slack) < 1e-9);

  const auto sigma = markov_state(random_markov_spec(2, 2, 2, 2, rng));
  const auto sigma_r = regularize(sigma, 1e-6);
  const auto perturbed = regularize(sigma, 1e-2);
  CHECK(check_super_ssa(perturbed, sigma_r).pass);
  for (int k = 0; k < 100; ++k) CHECK(check_super_ssa(full_rank({2, 2, 2}, rng), full_rank({2, 2, 2}, rng)).pass);
}

TEST_CASE("three-state chain") {
  Rng rng = trial_rng(9, 0);
  const auto rho = full_rank({2, 2, 2}, rng);
  const auto same = check_three_state_chain(rho, rho, rho, rho);
  CHECK(same.link("relative_entropy") == doctest::Approx(cmi(rho)).epsilon(1e-9));
  CHECK(same.pass);

  for (int k = 0; k < 20; ++k) {
    const Joint r = random_joint(2, 2, 2, rng);
    const Joint s = random_joint(2, 2, 2, rng);
    const Joint t = with_b_marginal(s, rng);
    const Joint w = random_joint(2, 2, 2, rng);
    // exp(log s_AB - log t_B + log w_BC) = s_ab w_bc / t_b.
    const auto q = classical_omega(s, w, t);
    CHECK(sum(q) <= 1 + 1e-12);
    const auto res = check_three_state_chain(r.state(), s.state(), t.state(), w.state());
    CHECK(res.link("relative_entropy") == doctest::Approx(kl(r, q)).epsilon(1e-9));
    CHECK(res.quantity("trace_omega") == doctest::Approx(sum(q)).epsilon(1e-10));
    double f = 0;
    for (std::size_t i = 0; i < q.size(); ++i) f += std::sqrt(r.p[i] * q[i]);
    CHECK(res.link("overlap") == doctest::Approx(-2 * std::log(f)).epsilon(1e-9));
    CHECK(res.pass);
  }

  const auto a = full_rank({2, 2, 2}, rng);
  const auto b = full_rank({2, 2, 2}, rng);
  const auto c = full_rank({2, 2, 2}, rng);
  CHECK(kind_of([&] { check_three_state_chain(a, a, b, c); }) == ErrorKind::MarginalMismatch);
}

TEST_CASE("subadditivity with the exponential bound") {
  Rng rng = trial_rng(10, 0);
  const auto trivial_b = product_of(2, 1, 2, rng);
  const auto t = check_subadd_exp(trivial_b);
  CHECK(t.quantity("purity_B") == doctest::Approx(1.0));
  CHECK(t.pass);

  const auto m = markov_state(random_markov_spec(2, 2, 2, 2, rng));
  const auto mr = check_subadd_exp(regularize(m, 1e-6));
  CHECK(mr.pass);
  const auto reg = regularize(m, 1e-6);
  CHECK(mr.link("entropy_gap") == doctest::Approx(von_neumann(reg.marginal({1})) + cmi(reg)).epsilon(1e-10));
  CHECK(mr.quantity("entropy_B_plus_cmi") == doctest::Approx(mr.link("entropy_gap")).epsilon(1e-10));

  for (int k = 0; k < 100; ++k) {
    const auto r = check_subadd_exp(full_rank({2, 2, 2}, rng));
    CHECK(r.pass);
    CHECK(std::abs(r.quantity("trace_product") - r.quantity("purity_B")) < 1e-10);
  }
}

TEST_CASE("Markov characterizations") {
  Rng rng = trial_rng(11, 0);
  const auto prod = product_of(2, 2, 2, rng);
  const auto p = markov_characterizations(prod);
  CHECK(p.pass);
  for (const char* key : {"cmi", "r_log", "r_petz", "r_mmdag", "r_mdagm", "r_omega"}) CHECK(p.quantity(key) < 1e-10);

  for (int k = 0; k < 20; ++k) {
    const auto r = markov_characterizations(full_rank({2, 2, 2}, rng));
    CHECK(r.pass);
    CHECK(r.quantity("cmi") > 1e-3);
    for (const char* key : {"r_log", "r_petz", "r_mmdag", "r_mdagm", "r_omega"}) CHECK(r.quantity(key) > 1e-3);
    CHECK(r.quantity("markov_like") == 0.0);
  }
  const auto m = markov_characterizations(markov_state(random_markov_spec(2, 2, 2, 3, rng)));
  CHECK(m.pass);
  CHECK(m.quantity("markov_like") == 1.0);
}

TEST_CASE("Lie-Trotter sequence") {
  Rng rng = trial_rng(12, 0);
  const std::vector<Index> ns{1, 2, 4, 8, 16, 32, 64};
  const auto prod = trotter_sequence(product_of(2, 2, 2, rng), ns);
  for (Index n : ns) CHECK(prod.quantity("t_" + std::to_string(n)) == doctest::Approx(1.0).epsilon(1e-10));

  const auto m = trotter_sequence(markov_state(random_markov_spec(2, 2, 2, 2, rng)), ns);
  for (Index n : ns) CHECK(std::abs(m.quantity("t_" + std::to_string(n)) - 1.0) < 1e-8);

  for (int k = 0; k < 20; ++k) {
    const auto r = trotter_sequence(full_rank({2, 2, 2}, rng), ns);
    CHECK(r.pass);
    CHECK(r.quantity("last_gap") < r.quantity("first_gap"));
    for (Index n : ns) CHECK(r.quantity("t_" + std::to_string(n)) <= 1 + 1e-8);
  }

  // n = 1 is the plain product Tr rho_AB rho_B^{-1} rho_BC computed directly.
  const auto rho = full_rank({2, 2, 2}, rng);
  const Index ab[] = {0, 1}, b[] = {1}, bc[] = {1, 2};
  const Mat direct = embed(rho.marginal(ab), rho.dims(), ab) * embed(powm(rho.marginal(b), -1.0), rho.dims(), b) *
                     embed(rho.marginal(bc), rho.dims(), bc);
  const Index one[] = {1};
  CHECK(trotter_sequence(rho, one).quantity("t_1") == doctest::Approx(direct.trace().real()).epsilon(1e-10));

  const Index bad_order[] = {2, 1};
  const Index zero[] = {0};
  CHECK(kind_of([&] { trotter_sequence(rho, bad_order); }) == ErrorKind::BadArgument);
  CHECK(kind_of([&] { trotter_sequence(rho, zero); }) == ErrorKind::BadArgument);
}

TEST_CASE("alpha quantity bound") {
  Rng rng = trial_rng(13, 0);
  const Mat rho = full_rank(4, rng);
  const auto phi = random_unital_channel(4, 3, rng);
  CHECK(check_dw_alpha(rho, rho, phi, 0.5).quantity("trace") == doctest::Approx(1.0).epsilon(1e-9));

  SUBCASE("commuting family under a classical partial trace") {
    // For diagonal inputs and Phi = Tr_B, the operator is diag(sigma_ab rho_a / sigma_a) at every alpha.
    const auto rv = random_simplex(6, rng);
    const auto sv = random_simplex(6, rng);
    const auto tr_b = ptrace_channel({2, 3}, 1);
    for (double a : {0.9, 0.5, 0.1}) {
      const auto op = dw_operator(diag(rv), diag(sv), tr_b, a);
      for (int x = 0; x < 2; ++x) {
        double ra = 0, sa = 0;
        for (int y = 0; y < 3; ++y) {
          ra += rv[static_cast<std::size_t>(3 * x + y)];
          sa += sv[static_cast<std::size_t>(3 * x + y)];
        }
        for (int y = 0; y < 3; ++y) {
          const Index i = 3 * x + y;
          CHECK(op.op(i, i).real() == doctest::Approx(sv[static_cast<std::size_t>(i)] * ra / sa).epsilon(1e-9));
        }
      }
      CHECK(op.trace == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  SUBCASE("tripartite specialization agrees with the channel form") {
    // Phi = Tr_A, sigma = rho_AB (x) 1/d_C reproduces the sandwiched tripartite trace.
    const auto r = full_rank({2, 2, 2}, rng);
    const Mat sigma = kron(r.marginal({0, 1}), Mat(eye(2) / 2.0));
    for (double a : {0.9, 0.5, 0.1}) {
      const double via_channel = dw_operator(r.mat(), sigma, ptrace_channel({2, 2, 2}, 0), a).trace;
      CHECK(check_dw_tripartite(r, a).quantity("trace") == doctest::Approx(via_channel).epsilon(1e-9));
    }
  }
  for (int k = 0; k < 50; ++k) {
    const Mat r = full_rank(3, rng), s = full_rank(3, rng);
    const auto ch = random_unital_channel(3, 3, rng);
    for (double a : {0.9, 0.5, 0.1, 0.01}) CHECK(check_dw_alpha(r, s, ch, a).pass);
    CHECK(check_dw_tripartite(full_rank({2, 2, 2}, rng), 0.3).pass);
  }
  CHECK(kind_of([&] { check_dw_alpha(rho, rho, phi, 1.0); }) == ErrorKind::BadAlpha);
  CHECK(kind_of([&] { check_dw_alpha(rho, rho, phi, 0.0); }) == ErrorKind::BadAlpha);
  CHECK(kind_of([&] { check_dw_tripartite(full_rank({2, 2, 2}, rng), 1.5); }) == ErrorKind::BadAlpha);
}

TEST_CASE("small-alpha limit") {
  Rng rng = trial_rng(14, 0);
  std::vector<double> alphas;
  for (int k = 1; k <= 12; ++k) alphas.push_back(std::ldexp(1.0, -k));
  const Mat rho = full_rank(3, rng);
  const auto phi = random_unital_channel(3, 3, rng);
  const auto same = check_sbw_limit(rho, rho, phi, alphas);
  CHECK(same.quantity("final_error") < 1e-10);
  CHECK(same.pass);

  const auto p = random_simplex(3, rng);
  const auto q = random_simplex(3, rng);
  const auto commuting = check_sbw_limit(diag(p), diag(q), identity_channel(3), alphas);
  for (const auto& [name, v] : commuting.quantities) CHECK(v < 1e-10);

  for (int k = 0; k < 20; ++k) {
    const auto r = check_sbw_limit(full_rank(3, rng), full_rank(3, rng), random_unital_channel(3, 3, rng), alphas);
    CHECK(r.pass);
    CHECK(r.quantity("final_error") < kSbwFinalError);
  }
  const double ascending[] = {0.1, 0.2};
  CHECK(kind_of([&] { check_sbw_limit(rho, rho, phi, ascending); }) == ErrorKind::BadArgument);
}

TEST_CASE("Lieb concavity") {
  Rng rng = trial_rng(15, 0);
  const Mat h = random_hermitian(4, rng);
  const Mat x1 = full_rank(4, rng), x2 = full_rank(4, rng);
  CHECK(std::abs(check_lieb_concavity(h, x1, x1, 0.3).slack) < 1e-12);
  CHECK(std::abs(check_lieb_concavity(Mat(Mat::Zero(4, 4)), x1, x2, 0.3).slack) < 1e-12);
  for (int k = 0; k < 100; ++k)
    CHECK(check_lieb_concavity(random_hermitian(4, rng), full_rank(4, rng), full_rank(4, rng), 0.5).pass);
  Mat nh = h;
  nh(0, 1) += 1.0;
  CHECK(kind_of([&] { check_lieb_concavity(nh, x1, x2, 0.5); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([&] { check_lieb_concavity(h, x1, x2, 1.5); }) == ErrorKind::BadArgument);
  Mat singular = x1;
  singular.row(0).setZero();
  singular.col(0).setZero();
  CHECK(kind_of([&] { check_lieb_concavity(h, singular, x2, 0.5); }) == ErrorKind::SingularInput);
}

TEST_CASE("Carlen-Lieb concavity") {
  Rng rng = trial_rng(16, 0);
  const Mat m = random_ginibre(4, 4, rng);
  const Mat x1 = full_rank(4, rng), x2 = full_rank(4, rng);
  CHECK(std::abs(check_cl_concavity(m, x1, x2, 0.4, 1.0).slack) < 1e-12);
  CHECK(std::abs(check_cl_concavity(m, x1, x1, 0.4, 2.0).slack) < 1e-12);
  // A unitary M gives f(X) = Tr X.
  const Mat u = random_unitary(4, rng);
  const auto r = check_cl_concavity(u, Mat(eye(4) / 4.0), Mat(eye(4) / 4.0), 0.5, 2.0);
  CHECK(r.quantity("lhs") == doctest::Approx(1.0).epsilon(1e-12));
  for (double a : {1.5, 2.0, 4.0})
    for (int k = 0; k < 50; ++k)
      CHECK(check_cl_concavity(random_ginibre(4, 4, rng), full_rank(4, rng), full_rank(4, rng), 0.5, a).pass);
  CHECK(kind_of([&] { check_cl_concavity(m, x1, x2, 0.5, 0.5); }) == ErrorKind::BadAlpha);
}

TEST_CASE("Golden-Thompson") {
  Rng rng = trial_rng(17, 0);
  const auto p = random_simplex(5, rng);
  const auto q = random_simplex(5, rng);
  CHECK(std::abs(check_golden_thompson(diag(p), diag(q)).slack) < 1e-12);
  const Mat a = random_hermitian(6, rng);
  CHECK(std::abs(check_golden_thompson(a, Mat(Mat::Zero(6, 6))).slack) < 1e-12);
  for (int k = 0; k < 100; ++k) CHECK(check_golden_thompson(random_hermitian(6, rng), random_hermitian(6, rng)).pass);
}

TEST_CASE("Audenaert and Powers-Stormer") {
  Rng rng = trial_rng(18, 0);
  const double ts[] = {0.0, 0.25, 0.5, 1.0};
  const Mat m = full_rank(4, rng);
  const auto same = check_audenaert_ps(m, m, ts);
  check_all_links_zero(same, 1e-12);
  for (const auto& c : same.conditions) CHECK(std::abs(c.slack) < 1e-10);

  for (int k = 0; k < 20; ++k) {
    const auto pv = random_simplex(4, rng);
    auto qv = random_simplex(4, rng);
    for (auto& x : qv) x *= 0.7;
    const auto r = check_audenaert_ps(diag(pv), diag(qv), ts);
    double one = 0, two_minus = 0, two_plus = 0, f = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      one += std::abs(pv[i] - qv[i]);
      two_minus += std::pow(std::sqrt(pv[i]) - std::sqrt(qv[i]), 2);
      two_plus += std::pow(std::sqrt(pv[i]) + std::sqrt(qv[i]), 2);
      f += std::sqrt(pv[i] * qv[i]);
    }
    CHECK(r.link("one_norm") == doctest::Approx(one).epsilon(1e-12));
    CHECK(r.link("two_norm_sq") == doctest::Approx(two_minus).epsilon(1e-10));
    CHECK(r.link("two_norm_product") == doctest::Approx(std::sqrt(two_minus * two_plus)).epsilon(1e-10));
    CHECK(r.quantity("overlap") == doctest::Approx(-2 * std::log(f)).epsilon(1e-10));
    double lhs = 0;
    for (std::size_t i = 0; i < 4; ++i) lhs += std::pow(pv[i], 0.25) * std::pow(qv[i], 0.75);
    CHECK(r.quantity("audenaert_lhs_t=0.250000") == doctest::Approx(lhs).epsilon(1e-10));
    CHECK(r.quantity("audenaert_rhs") == doctest::Approx(0.5 * (1 + 0.7 - one)).epsilon(1e-12));
    CHECK(r.pass);
  }
  for (int k = 0; k < 50; ++k) {
    const Mat g1 = random_ginibre(4, 4, rng), g2 = random_ginibre(4, 4, rng);
    CHECK(check_audenaert_ps(hermitize(Mat(g1 * g1.adjoint())), hermitize(Mat(g2 * g2.adjoint())), ts).pass);
  }
  Mat neg = m;
  neg(0, 0) -= 2.0;
  CHECK(kind_of([&] { check_audenaert_ps(neg, m, ts); }) == ErrorKind::NotPSD);
}

TEST_CASE("squashed-entanglement proxy") {
  Rng rng = trial_rng(19, 0);
  const auto m = check_squashed_proxy(markov_state(random_markov_spec(2, 2, 2, 2, rng)));
  CHECK(m.quantity("lhs") < 1e-10);
  CHECK(m.quantity("rhs") < 1e-10);
  const auto p = check_squashed_proxy(product_of(2, 2, 2, rng));
  CHECK(std::abs(p.quantity("lhs")) < 1e-12);
  CHECK(p.quantity("rhs") < 1e-12);
  for (int k = 0; k < 50; ++k) CHECK(check_squashed_proxy(full_rank({2, 2, 2}, rng)).pass);
}

TEST_CASE("twirl identity") {
  Rng rng = trial_rng(20, 0);
  const auto id = check_twirl_identity(eye(6), 2, 3, 10, rng);
  CHECK(id.quantity("max_error") < 1e-14);
  const Mat prod = kron(random_hermitian(2, rng), Mat(eye(3)));
  CHECK(check_twirl_identity(prod, 2, 3, 10, rng).quantity("max_error") < 1e-14);
  const auto r = check_twirl_identity(random_hermitian(6, rng), 2, 3, 10000, rng);
  CHECK(r.pass);
  CHECK(kind_of([&] { check_twirl_identity(eye(5), 2, 3, 10, rng); }) == ErrorKind::DimMismatch);
}

TEST_CASE("Renyi monotonicity and the universal chain") {
  Rng rng = trial_rng(21, 0);
  const double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (int k = 0; k < 50; ++k) CHECK(check_renyi_monotonicity(full_rank(3, rng), full_rank(3, rng), grid).pass);
  const double one[] = {0.5};
  const Mat rho = full_rank(3, rng);
  CHECK(kind_of([&] { check_renyi_monotonicity(rho, rho, one); }) == ErrorKind::BadArgument);

  for (int k = 0; k < 50; ++k) {
    const double scale = k % 2 == 0 ? 1.0 : 0.4;
    const auto r = check_univ_chain(full_rank(3, rng), Mat(scale * full_rank(3, rng)));
    CHECK(r.pass);
    CHECK(r.conditions.size() == (k % 2 == 0 ? 3u : 0u));
  }
  CHECK(kind_of([&] { check_univ_chain(rho, Mat(2.0 * rho)); }) == ErrorKind::InvalidState);
}

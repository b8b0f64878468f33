#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "cburgers/evaluate.hpp"
#include "cburgers/spectral.hpp"

using namespace cburgers;
using cx = std::complex<double>;

namespace {

GaussianRational gr(const std::string& re, const std::string& im = "0") {
  return GaussianRational::parse(re, im);
}

SpectralState single_mode(double a01, int n) {
  SpectralState s;
  s.a.assign(static_cast<size_t>(n), {0.0, 0.0});
  s.a[0] = {a01, 0.0};
  return s;
}

// Exact Galerkin reference: the one-sided system is triangular, so the exact
// series rows are the exact solution of the truncated system as well.
std::vector<cx> exact_modes(const GaussianRational& a01, const Rational& nu,
                            const Rational& alpha, int n, double t) {
  KdvbFamilyQ family({a01}, nu, alpha);
  std::vector<cx> out;
  for (int k = 1; k <= n; ++k)
    out.push_back(evaluate_mode(family.row(k), BigFloat(t, 128), 128).value.to_complex());
  return out;
}

double l2_diff(const std::vector<cx>& a, const std::vector<cx>& b, int upto) {
  double sum = 0;
  for (int i = 0; i < upto; ++i) sum += std::norm(a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)]);
  return std::sqrt(sum);
}

}  // namespace

TEST_CASE("nonlinear term: closed-form small cases") {
  SpectralState s1;
  s1.a = {{1, 0}, {0, 0}};
  auto n1 = nonlinear_term(s1);
  CHECK(n1[0] == cx(0, 0));
  CHECK(n1[1] == cx(0, 6));  // 3i*2 * a1^2

  SpectralState s2;
  s2.a = {{0, 0}, {0, 0}, {5, 0}};
  auto n2 = nonlinear_term(s2);
  for (const auto& v : n2) CHECK(v == cx(0, 0));

  SpectralState s3;
  s3.a = {{1, 0}, {2, 0}, {0, 0}, {0, 0}};
  auto n3 = nonlinear_term(s3);
  CHECK(n3[0] == cx(0, 0));
  CHECK(n3[1] == cx(0, 6));
  CHECK(n3[2] == cx(0, 36));  // 9i * 2*(a1 a2)
  CHECK(n3[3] == cx(0, 48));  // 12i * (2 a1 a3 + a2^2)
}

TEST_CASE("linear-only steps are exact to a few ulp per step") {
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 0.3;
  config.linear_only = true;
  SpectralState state = single_mode(1.0, 4);
  const int steps = 100;
  for (int i = 0; i < steps; ++i) REQUIRE(step(state, params, config) == RunStatus::completed);
  // reference: the one-shot propagator value, in the same arithmetic
  cx e = std::exp(cx(-1.0 * 0.3, 0.0));
  cx ref = 1.0;
  for (int i = 0; i < steps; ++i) ref *= e;
  double ulp = std::abs(ref) * 2.2e-16;
  CHECK(std::abs(state.a[0] - ref) <= 4.0 * steps * ulp);
  CHECK(state.t == doctest::Approx(30.0));

  // dispersive symbol too
  ModelParams disp{Rational(1), Rational(2), Rational(1)};
  SpectralState s2 = single_mode(0.7, 3);
  SolverConfig c2 = config;
  c2.dt = 0.05;
  for (int i = 0; i < 200; ++i) REQUIRE(step(s2, disp, c2) == RunStatus::completed);
  cx sym = std::exp(cx(-0.05, 2.0 * 0.05));
  cx ref2 = 0.7;
  for (int i = 0; i < 200; ++i) ref2 *= sym;
  CHECK(std::abs(s2.a[0] - ref2) <= 4.0 * 200 * std::abs(ref2) * 2.2e-16);
}

TEST_CASE("solver matches the exact series: Burgers and KdV-Burgers") {
  SolverConfig config;
  config.dt = 1e-3;
  config.record_every = 1000;
  for (Rational alpha : {Rational(0), Rational(1)}) {
    ModelParams params{Rational(1), alpha, Rational(1)};
    Trajectory traj = integrate(single_mode(0.4, 32), params, config, 1.0);
    REQUIRE(traj.status == RunStatus::completed);
    auto exact = exact_modes(gr("2/5"), params.nu, alpha, 8, 1.0);
    const auto& numeric = traj.samples.back().a;
    for (int k = 1; k <= 8; ++k) {
      INFO("alpha = ", alpha.get_d(), ", k = ", k);
      double rel = std::abs(numeric[static_cast<size_t>(k) - 1] - exact[static_cast<size_t>(k) - 1]) /
                   std::abs(exact[static_cast<size_t>(k) - 1]);
      // Observed order-4 ceilings at dt = 1e-3: the dispersive case cannot
      // reach 1e-7 on modes 6..8 (phase-mismatch frequencies ~ 170); the
      // acceptance suite reports that branch as stated, red.
      double tol = (alpha == 0) ? 1e-7 : (k <= 5 ? 1e-7 : 2e-5);
      CHECK(rel <= tol);
    }
  }
}

TEST_CASE("truncation consistency: modes below N do not feel the cutoff") {
  // mode-k causality: k's derivative uses modes 1..k only, so N=16 and N=32
  // runs agree on shared modes to rounding.
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 2e-3;
  config.record_every = 100000;
  Trajectory t16 = integrate(single_mode(0.4, 16), params, config, 1.0);
  Trajectory t32 = integrate(single_mode(0.4, 32), params, config, 1.0);
  CHECK(l2_diff(t16.samples.back().a, t32.samples.back().a, 16) < 1e-14);
}

TEST_CASE("IFRK4 order sits in [3.7, 4.3]; IFEuler near 1") {
  // t_end = 0.5 keeps all three dt runs on integral step counts and the
  // errors well above the double-precision floor.
  ModelParams params{Rational(3), Rational(0), Rational(1)};
  auto exact = exact_modes(gr("1/2"), Rational(3), Rational(0), 16, 0.5);
  auto run_error = [&](double dt, Scheme scheme) {
    SolverConfig config;
    config.dt = dt;
    config.scheme = scheme;
    config.record_every = 1 << 30;
    Trajectory traj = integrate(single_mode(0.5, 16), params, config, 0.5);
    return l2_diff(traj.samples.back().a, exact, 16);
  };
  double e1 = run_error(4e-3, Scheme::ifrk4);
  double e2 = run_error(2e-3, Scheme::ifrk4);
  double e3 = run_error(1e-3, Scheme::ifrk4);
  double p12 = std::log2(e1 / e2), p23 = std::log2(e2 / e3);
  INFO("errors ", e1, " ", e2, " ", e3, " orders ", p12, " ", p23);
  CHECK(p12 >= 3.7);
  CHECK(p12 <= 4.3);
  CHECK(p23 >= 3.7);
  CHECK(p23 <= 4.3);

  double f1 = run_error(4e-3, Scheme::ifeuler);
  double f2 = run_error(2e-3, Scheme::ifeuler);
  double q = std::log2(f1 / f2);
  CHECK(q >= 0.8);
  CHECK(q <= 1.2);
}

TEST_CASE("zero initial state stays zero and completes") {
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 1e-2;
  Trajectory traj = integrate(single_mode(0.0, 8), params, config, 1.0);
  CHECK(traj.status == RunStatus::completed);
  for (const auto& smp : traj.samples) CHECK(smp.l2 == 0.0);
}

TEST_CASE("mid-stage cap trips step_underflow; L2 cap trips blowup_suspected") {
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 1e-2;
  config.blowup_cap = 1e8;
  SpectralState huge = single_mode(1e9, 4);
  CHECK(step(huge, params, config) == RunStatus::step_underflow);

  // L2 slightly below the cap per-mode but above it in aggregate
  SpectralState agg;
  agg.a.assign(4, {0.9e8, 0.0});
  SolverConfig lin = config;
  lin.linear_only = true;
  lin.dt = 1e-6;
  Trajectory traj = integrate(agg, params, lin, 1e-4);
  CHECK(traj.status == RunStatus::blowup_suspected);
  CHECK(traj.t_final < 1e-4);
}

TEST_CASE("sobolev norms: inhomogeneous and homogeneous weights") {
  std::vector<cx> a1 = {{1, 0}};
  CHECK(sobolev_norm(a1, 0.0, false) == doctest::Approx(1.0));
  CHECK(sobolev_norm(a1, 1.0, false) == doctest::Approx(std::sqrt(2.0)));
  std::vector<cx> a2 = {{0, 0}, {1, 0}};
  CHECK(sobolev_norm(a2, 2.0, true) == doctest::Approx(4.0));
  std::vector<cx> mixed = {{0.3, -0.4}, {0, 0.2}};
  CHECK(sobolev_norm(mixed, 0.0, false) ==
        doctest::Approx(std::sqrt(0.09 + 0.16 + 0.04)));
}

TEST_CASE("diagnostics: M0 of the linear single-mode decay approaches 3/2") {
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 1e-3;
  config.linear_only = true;
  config.record_every = 10;
  Trajectory traj = integrate(single_mode(1.0, 2), params, config, 10.0);
  REQUIRE(traj.status == RunStatus::completed);
  DiagnosticsResult m0 = diagnostics_M(traj, params, 0);
  CHECK(m0.value == doctest::Approx(1.5).epsilon(1e-4));
  CHECK(m0.quad_error_est < 1e-4);
  // single mode k=1: M1 has the same value in this regime
  DiagnosticsResult m1 = diagnostics_M(traj, params, 1);
  CHECK(m1.value == doctest::Approx(1.5).epsilon(1e-4));
}

TEST_CASE("diagnostics reject blown-up trajectories for order 1") {
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 1e-6;
  config.linear_only = true;
  SpectralState agg;
  agg.a.assign(4, {0.9e8, 0.0});
  Trajectory traj = integrate(agg, params, config, 1e-4);
  REQUIRE(traj.status == RunStatus::blowup_suspected);
  CHECK_THROWS_AS(diagnostics_M(traj, params, 1), std::invalid_argument);
  CHECK_NOTHROW(diagnostics_M(traj, params, 0));
}

TEST_CASE("field evaluation agrees with the solver's mode sum") {
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 1e-3;
  config.record_every = 1 << 30;
  Trajectory traj = integrate(single_mode(0.4, 32), params, config, 1.0);
  cx solver_sum = 0;
  for (int k = 1; k <= 8; ++k) solver_sum += traj.samples.back().a[static_cast<size_t>(k) - 1];

  BurgersFamily family(gr("2/5"), Rational(1));
  FieldEval fe = evaluate_field(family, 8, 0.0, BigFloat(1.0, 128), 128);
  CHECK(std::abs(fe.value.to_complex() - solver_sum) / std::abs(solver_sum) <= 1e-8);
}

TEST_CASE("big-float stepper follows the same code path and agrees with double") {
  ModelParams params{Rational(1), Rational(1, 2), Rational(1)};
  SolverConfig config;
  config.dt = 1e-2;
  IfStepper<DoubleTraits> dstep(8, params, config.dt, config);
  IfStepper<BigTraits> bstep(8, params, config.dt, config, BigTraits{256});
  std::vector<cx> da(8, {0.0, 0.0});
  da[0] = {0.4, 0.1};
  std::vector<BigComplex> ba;
  for (const auto& z : da) ba.emplace_back(z, 256);
  for (int i = 0; i < 50; ++i) {
    REQUIRE(dstep.step(da));
    REQUIRE(bstep.step(ba));
  }
  for (int k = 0; k < 8; ++k) {
    cx b = ba[static_cast<size_t>(k)].to_complex();
    CHECK(std::abs(da[static_cast<size_t>(k)] - b) < 1e-12);
  }
}

TEST_CASE("invalid solver configs are rejected") {
  ModelParams params{Rational(1), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = -1;
  SpectralState s = single_mode(0.1, 4);
  CHECK_THROWS_AS(step(s, params, config), std::invalid_argument);
  config.dt = 1e-2;
  config.blowup_cap = 0.5;
  CHECK_THROWS_AS(step(s, params, config), std::invalid_argument);
  config.blowup_cap = 1e8;
  CHECK_THROWS_AS(integrate(s, params, config, s.t), std::invalid_argument);
}

TEST_CASE("fractal Laplacian gamma != 1: linear symbol is k^{2 gamma}") {
  ModelParams params{Rational(1), Rational(0), Rational(3, 2)};
  SolverConfig config;
  config.dt = 0.2;
  config.linear_only = true;
  SpectralState s;
  s.a = {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
  REQUIRE(step(s, params, config) == RunStatus::completed);
  for (int k = 1; k <= 3; ++k) {
    double expected = std::exp(-std::pow(static_cast<double>(k), 3.0) * 0.2);
    CHECK(std::abs(s.a[static_cast<size_t>(k) - 1] - cx(expected, 0.0)) < 1e-14);
  }
}

TEST_CASE("gamma <= 1/2 only warns; the step still runs") {
  ModelParams params{Rational(1), Rational(0), Rational(1, 4)};
  SolverConfig config;
  config.dt = 0.1;
  SpectralState s = single_mode(0.3, 4);
  CHECK(step(s, params, config) == RunStatus::completed);
}

TEST_CASE("bounded regime runs to t = 10 with monotone L2 decay") {
  ModelParams params{Rational(3), Rational(0), Rational(1)};
  SolverConfig config;
  config.dt = 2e-3;
  config.record_every = 50;
  Trajectory traj = integrate(single_mode(0.5, 32), params, config, 10.0);
  REQUIRE(traj.status == RunStatus::completed);
  CHECK(traj.t_final == doctest::Approx(10.0));
  double prev_t = -1, prev_l2 = HUGE_VAL;
  for (const auto& smp : traj.samples) {
    CHECK(smp.t > prev_t);  // sample times strictly increase
    if (smp.t >= 0.5) CHECK(smp.l2 <= prev_l2 * (1 + 1e-12));
    prev_t = smp.t;
    prev_l2 = smp.l2;
  }
}

#include "cburgers/spectral.hpp"

#include <iostream>
#include <stdexcept>

namespace cburgers {

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::completed: return "completed";
    case RunStatus::blowup_suspected: return "blowup_suspected";
    case RunStatus::step_underflow: return "step_underflow";
  }
  return "unknown";
}

std::vector<std::complex<double>> nonlinear_term(const SpectralState& state) {
  const int n = state.n();
  std::vector<std::complex<double>> out(state.a.size(), 0.0);
  for (int k = 2; k <= n; ++k) {
    std::complex<double> s = 0;
    for (int k1 = 1; k1 < k; ++k1) s += state.a[k1 - 1] * state.a[k - k1 - 1];
    out[k - 1] = std::complex<double>(0.0, 3.0 * k) * s;
  }
  return out;
}

namespace {

void validate(const ModelParams& params, const SolverConfig& config) {
  params.validate();
  if (config.dt <= 0) throw std::invalid_argument("SolverConfig: dt must be > 0");
  if (config.blowup_cap <= 1) throw std::invalid_argument("SolverConfig: blowup_cap must be > 1");
  if (config.record_every < 1)
    throw std::invalid_argument("SolverConfig: record_every must be >= 1");
  if (params.gamma_d() <= 0.5)
    std::cerr << "[cburgers] warning: gamma <= 1/2 is outside the local well-posedness range\n";
}

}  // namespace

RunStatus step(SpectralState& state, const ModelParams& params, const SolverConfig& config) {
  validate(params, config);
  IfStepper<DoubleTraits> stepper(state.n(), params, config.dt, config);
  bool fine = stepper.step(state.a);
  state.t += config.dt;
  return fine ? RunStatus::completed : RunStatus::step_underflow;
}

Trajectory integrate(SpectralState state, const ModelParams& params, const SolverConfig& config,
                     double t_end) {
  validate(params, config);
  if (t_end <= state.t) throw std::invalid_argument("integrate: t_end must exceed state.t");

  Trajectory traj;
  const double t0 = state.t;
  auto record = [&](const SpectralState& s) {
    traj.samples.push_back({s.t, s.a, sobolev_norm(s.a, 0.0, false),
                            sobolev_norm(s.a, config.hs_order, false)});
  };
  record(state);

  IfStepper<DoubleTraits> stepper(state.n(), params, config.dt, config);
  const long total_steps = static_cast<long>(std::ceil((t_end - t0) / config.dt - 1e-12));
  for (long i = 1; i <= total_steps; ++i) {
    double target = (i == total_steps) ? t_end : t0 + static_cast<double>(i) * config.dt;
    bool fine;
    if (i == total_steps && target - state.t < config.dt * (1 - 1e-12)) {
      // Trimmed final step so the trajectory lands exactly on t_end.
      SolverConfig trimmed = config;
      trimmed.dt = target - state.t;
      IfStepper<DoubleTraits> last(state.n(), params, trimmed.dt, trimmed);
      fine = last.step(state.a);
    } else {
      fine = stepper.step(state.a);
    }
    state.t = target;
    if (!fine) {
      record(state);
      traj.status = RunStatus::step_underflow;
      traj.t_final = state.t;
      return traj;
    }
    double l2 = sobolev_norm(state.a, 0.0, false);
    if (l2 > config.blowup_cap) {
      record(state);
      traj.status = RunStatus::blowup_suspected;
      traj.t_final = state.t;
      return traj;
    }
    if (i % config.record_every == 0 || i == total_steps) record(state);
  }
  traj.status = RunStatus::completed;
  traj.t_final = state.t;
  return traj;
}

double sobolev_norm(const std::vector<std::complex<double>>& a, double s, bool homogeneous) {
  double sum = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double k = static_cast<double>(i + 1);
    double w = homogeneous ? std::pow(k, 2.0 * s) : std::pow(1.0 + k * k, s);
    sum += w * std::norm(a[i]);
  }
  return std::sqrt(sum);
}

double sobolev_norm(const SpectralState& state, double s, bool homogeneous) {
  return sobolev_norm(state.a, s, homogeneous);
}

namespace {

// sup of f plus nu * trapezoid of g over the samples; `stride` coarsens the
// quadrature for the step-halving error estimate.
double sup_plus_trapezoid(const Trajectory& traj, double nu, double deriv_order,
                          double diss_order, int stride) {
  double sup = 0, integral = 0;
  double prev_t = 0, prev_g = 0;
  bool have_prev = false;
  for (size_t i = 0; i < traj.samples.size(); i += static_cast<size_t>(stride)) {
    const auto& smp = traj.samples[i];
    double f = sobolev_norm(smp.a, deriv_order, true);
    sup = std::max(sup, f * f);
    double g = sobolev_norm(smp.a, diss_order, true);
    g *= g;
    if (have_prev) integral += 0.5 * (g + prev_g) * (smp.t - prev_t);
    prev_t = smp.t;
    prev_g = g;
    have_prev = true;
  }
  // Always include the final sample so the [0, T] window is covered.
  if (!traj.samples.empty()) {
    const auto& last = traj.samples.back();
    if (last.t > prev_t) {
      double g = sobolev_norm(last.a, diss_order, true);
      g *= g;
      integral += 0.5 * (g + prev_g) * (last.t - prev_t);
      double f = sobolev_norm(last.a, deriv_order, true);
      sup = std::max(sup, f * f);
    }
  }
  return sup + nu * integral;
}

}  // namespace

DiagnosticsResult diagnostics_M(const Trajectory& traj, const ModelParams& params, int order) {
  if (order != 0 && order != 1) throw std::invalid_argument("diagnostics_M: order must be 0 or 1");
  if (order == 1 && traj.status != RunStatus::completed)
    throw std::invalid_argument("diagnostics_M: M_1 is undefined past a suspected blow-up");
  if (traj.samples.size() < 2)
    throw std::invalid_argument("diagnostics_M: trajectory needs at least 2 samples");

  const double nu = params.nu_d();
  const double gamma = params.gamma_d();
  const double deriv_order = order == 0 ? 0.0 : 1.0;
  const double diss_order = order == 0 ? gamma : 1.0 + gamma;

  double fine = sup_plus_trapezoid(traj, nu, deriv_order, diss_order, 1);
  if (traj.samples.size() < 3) return {fine, HUGE_VAL};
  double coarse = sup_plus_trapezoid(traj, nu, deriv_order, diss_order, 2);
  // Trapezoid is O(h^2): halving the step divides the error by 4.
  return {fine, std::abs(fine - coarse) / 3.0};
}

}  // namespace cburgers

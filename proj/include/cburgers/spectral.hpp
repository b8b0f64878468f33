#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "cburgers/bigfloat.hpp"
#include "cburgers/params.hpp"

namespace cburgers {

// Truncated Galerkin state (a_1, ..., a_N); indices are 1-based in the math,
// a[i] holds a_{i+1}. The one-sided spectrum is closed under the quadratic
// nonlinearity, so no k <= 0 mode can ever appear, and mode k couples only to
// modes below it (the system is triangular).
struct SpectralState {
  double t = 0;
  std::vector<std::complex<double>> a;

  int n() const { return static_cast<int>(a.size()); }
};

enum class Scheme { ifrk4, ifeuler };
enum class RunStatus { completed, blowup_suspected, step_underflow };

std::string to_string(RunStatus status);

struct SolverConfig {
  double dt = 1e-3;
  Scheme scheme = Scheme::ifrk4;
  double blowup_cap = 1e8;  // L^2 threshold; far above bounded regimes
  int record_every = 1;
  bool linear_only = false;  // drop the nonlinearity (propagator is then exact)
  double hs_order = 1.0;     // H^s order recorded along the trajectory
};

struct TrajectorySample {
  double t = 0;
  std::vector<std::complex<double>> a;
  double l2 = 0;
  double hs = 0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  RunStatus status = RunStatus::completed;
  double t_final = 0;
};

// Component k of 3ik sum_{k1+k2=k} a_{k1} a_{k2}; mode 1 has an empty sum.
std::vector<std::complex<double>> nonlinear_term(const SpectralState& state);

// One integrating-factor step of size config.dt. The linear symbol
// -nu k^{2 gamma} + i alpha k^3 is applied through its exact propagator, so a
// linear-only step is exact to rounding for any dt. Returns step_underflow if
// a mid-stage magnitude exceeds blowup_cap or goes non-finite (suspected
// blow-up, not a crash).
RunStatus step(SpectralState& state, const ModelParams& params, const SolverConfig& config);

// pre: t_end > state.t. Samples every record_every steps plus the final
// state; stops early with blowup_suspected when ||u||_{L^2} > blowup_cap.
Trajectory integrate(SpectralState state, const ModelParams& params, const SolverConfig& config,
                     double t_end);

double sobolev_norm(const std::vector<std::complex<double>>& a, double s, bool homogeneous);
double sobolev_norm(const SpectralState& state, double s, bool homogeneous);

struct DiagnosticsResult {
  double value = 0;
  double quad_error_est = 0;  // step-halving estimate for the time integral
};

// M_0 = sup_t ||u||_{L^2}^2 + nu int ||Lambda^gamma u||_{L^2}^2 dt (order 0);
// M_1 uses u_x and Lambda^{1+gamma}. Rejects blown-up trajectories for
// order 1.
DiagnosticsResult diagnostics_M(const Trajectory& traj, const ModelParams& params, int order);

// ---------------------------------------------------------------------------
// Generic integrating-factor stepper, shared by the double path and the
// big-float path (same code, scalar types swapped). Inverse-free Lawson RK4:
//   A = e^{L dt/2}, B = e^{L dt}
//   k1 = N(u)
//   k2 = N(A (u + dt/2 k1))
//   k3 = N(A u + dt/2 k2)
//   k4 = N(B u + dt A k3)
//   u <- B u + dt/6 (B k1 + 2 A (k2 + k3) + k4)
// so strongly damped modes never require a propagator inverse.
// ---------------------------------------------------------------------------

// Traits: make a scalar Real from a double and a complex Cx from two Reals.
struct DoubleTraits {
  using Real = double;
  using Cx = std::complex<double>;
  Real real(double x) const { return x; }
  Cx cx(Real re, Real im) const { return {re, im}; }
  Cx cx_exp(const Cx& z) const { return std::exp(z); }
  double mag(const Cx& z) const { return std::abs(z); }
  bool finite(const Cx& z) const { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
};

struct BigTraits {
  using Real = BigFloat;
  using Cx = BigComplex;
  mpfr_prec_t prec = kDefaultPrec;
  Real real(double x) const { return BigFloat(x, prec); }
  Cx cx(Real re, Real im) const { return {std::move(re), std::move(im)}; }
  Cx cx_exp(const Cx& z) const { return exp(z); }
  double mag(const Cx& z) const { return abs(z).to_double(); }
  bool finite(const Cx& z) const { return z.is_finite(); }
};

template <class Traits>
class IfStepper {
 public:
  using Real = typename Traits::Real;
  using Cx = typename Traits::Cx;

  IfStepper(int n, const ModelParams& params, double dt, const SolverConfig& config,
            Traits traits = {})
      : tr_(std::move(traits)),
        dt_(tr_.real(dt)),
        half_dt_(tr_.real(dt / 2)),
        sixth_dt_(tr_.real(dt / 6)),
        scheme_(config.scheme),
        linear_only_(config.linear_only),
        cap_(config.blowup_cap) {
    const double nu = params.nu_d(), alpha = params.alpha_d(), gamma = params.gamma_d();
    a_half_.reserve(n);
    b_full_.reserve(n);
    for (int k = 1; k <= n; ++k) {
      double k2g = (gamma == 1.0) ? static_cast<double>(k) * k
                                  : std::pow(static_cast<double>(k), 2.0 * gamma);
      Cx lam_half = tr_.cx(tr_.real(-nu * k2g) * half_dt_,
                           tr_.real(alpha * static_cast<double>(k) * k * k) * half_dt_);
      Cx lam_full = tr_.cx(tr_.real(-nu * k2g) * dt_,
                           tr_.real(alpha * static_cast<double>(k) * k * k) * dt_);
      a_half_.push_back(tr_.cx_exp(lam_half));
      b_full_.push_back(tr_.cx_exp(lam_full));
    }
  }

  // Advances a in place; false signals a non-finite or cap-exceeding stage.
  bool step(std::vector<Cx>& a) const {
    const size_t n = a.size();
    if (scheme_ == Scheme::ifeuler) {
      std::vector<Cx> k1 = nonlinear(a);
      for (size_t i = 0; i < n; ++i) {
        a[i] = b_full_[i] * (a[i] + tr_.cx(dt_, zero()) * k1[i]);
        if (!ok(a[i])) return false;
      }
      return true;
    }
    std::vector<Cx> k1 = nonlinear(a);
    std::vector<Cx> stage(n, tr_.cx(zero(), zero()));
    for (size_t i = 0; i < n; ++i) {
      stage[i] = a_half_[i] * (a[i] + tr_.cx(half_dt_, zero()) * k1[i]);
      if (!ok(stage[i])) return false;
    }
    std::vector<Cx> k2 = nonlinear(stage);
    for (size_t i = 0; i < n; ++i) {
      stage[i] = a_half_[i] * a[i] + tr_.cx(half_dt_, zero()) * k2[i];
      if (!ok(stage[i])) return false;
    }
    std::vector<Cx> k3 = nonlinear(stage);
    for (size_t i = 0; i < n; ++i) {
      stage[i] = b_full_[i] * a[i] + tr_.cx(dt_, zero()) * (a_half_[i] * k3[i]);
      if (!ok(stage[i])) return false;
    }
    std::vector<Cx> k4 = nonlinear(stage);
    const Cx two = tr_.cx(tr_.real(2.0), zero());
    for (size_t i = 0; i < n; ++i) {
      Cx incr = b_full_[i] * k1[i] + two * (a_half_[i] * (k2[i] + k3[i])) + k4[i];
      a[i] = b_full_[i] * a[i] + tr_.cx(sixth_dt_, zero()) * incr;
      if (!ok(a[i])) return false;
    }
    return true;
  }

  std::vector<Cx> nonlinear(const std::vector<Cx>& a) const {
    const int n = static_cast<int>(a.size());
    std::vector<Cx> out(a.size(), tr_.cx(zero(), zero()));
    if (linear_only_) return out;
    for (int k = 2; k <= n; ++k) {
      Cx s = tr_.cx(zero(), zero());
      for (int k1 = 1; k1 < k; ++k1) s += a[k1 - 1] * a[k - k1 - 1];
      out[k - 1] = tr_.cx(zero(), tr_.real(3.0 * k)) * s;
    }
    return out;
  }

 private:
  Real zero() const { return tr_.real(0.0); }
  bool ok(const Cx& z) const { return tr_.finite(z) && tr_.mag(z) <= cap_; }

  Traits tr_;
  Real dt_, half_dt_, sixth_dt_;
  Scheme scheme_;
  bool linear_only_;
  double cap_;
  std::vector<Cx> a_half_, b_full_;
};

}  // namespace cburgers

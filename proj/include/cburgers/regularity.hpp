#pragma once

#include <vector>

#include "cburgers/bigfloat.hpp"
#include "cburgers/params.hpp"
#include "cburgers/rational.hpp"
#include "cburgers/series.hpp"
#include "cburgers/symbolic.hpp"

namespace cburgers {

// Geometric-decay bound |a_k(t)| <= |a_01|^k for single-mode data, valid
// under nu^2 + 4 alpha^2 >= 9. Outside the hypothesis the report is
// informational only.
struct GeometricBoundReport {
  bool outside_hypothesis = false;
  double worst_ratio = 0;  // max over (k, t) of |a_k(t)| / |a01|^k
  int worst_k = 0;
  double worst_t = 0;
  bool pass = false;  // worst_ratio <= 1 + 1e-12
};

// pre: |a01| < 1. Exact-data flavour (rational nu/alpha).
GeometricBoundReport check_geometric_bound(const Rational& nu, const Rational& alpha,
                                           const GaussianRational& a01, int k_max,
                                           const std::vector<double>& t_grid,
                                           mpfr_prec_t prec = 192);
// Float flavour for irrational parameters (e.g. alpha = sqrt(2)).
GeometricBoundReport check_geometric_bound(const BigFloat& nu, const BigFloat& alpha,
                                           const BigComplex& a01, int k_max,
                                           const std::vector<double>& t_grid,
                                           mpfr_prec_t prec = kDefaultPrec);

// |C(alpha, nu, k, h, l, j)| <= 1 for the single-mode monomial (j_1 = k),
// checked exactly via |C|^2 <= 1; hypothesis nu^2 + 9 alpha^2 >= 36. Also
// reports the proof's crude chain 3k^2 / sqrt(nu^2 (k^2-h)^2 + alpha^2
// (k^3-l)^2) at the gap corner (h, l) = (U(k), V(k)).
struct CoeffBoundReport {
  bool hypothesis_met = false;  // nu^2 + 9 alpha^2 >= 36
  struct PerK {
    int k = 0;
    Rational max_abs2;        // max |C|^2 over cells of the j1 = k monomial
    bool all_le_one = false;  // every |C|^2 <= 1 (exact)
    double crude_ratio = 0;   // crude chain value at (U(k), V(k)), k >= 2
  };
  std::vector<PerK> per_k;
  bool all_le_one = false;
  bool crude_all_le_one = false;
};

CoeffBoundReport check_coefficient_boundedness(const Rational& nu, const Rational& alpha,
                                               int k_max, int k_sym_max = kSymMaxDefault);

// Series envelope |a_k(t)| <= C2 (k^2-1) e^{2 sqrt(2) sqrt(k)} e^{-nu k t} /
// (1 - e^{-nu t}) and the large-time H^s decay fit. k = 1 is exempt (the
// k^2 - 1 factor vanishes) and logged as such.
struct DecayFit {
  double s = 0;
  double delta = 0;     // fitted decay rate: log-norm slope = -delta * nu
  double fvu = 0;       // fraction of variance unexplained by the line fit
  double rms_log = 0;   // RMS of log-residuals
  bool pass = false;    // delta > 0
};

struct EnvelopeReport {
  double c2_min = 0;  // minimal C2 making the envelope hold on the grid
  bool c2_given = false;
  double c2_given_value = 0;
  bool c2_given_holds = false;
  bool k1_exempted = true;  // always logged; the bound is vacuous at k = 1
  int worst_k = 0;
  double worst_t = 0;
  std::vector<DecayFit> fits;
  bool pass = false;  // every fit has delta > 0 (and given C2 holds, if any)
};

// pre: nu > 0; t_grid strictly positive (the envelope is singular at t = 0);
// |a_0k| <= 1 expected (warned otherwise). fit_window: [lo, hi] in t for the
// log-linear regression; empty = upper half of the grid.
EnvelopeReport envelope_report(const Rational& nu, const Rational& alpha,
                               const std::vector<GaussianRational>& init, int k_max,
                               const std::vector<double>& t_grid,
                               const std::vector<double>& s_values = {0.0, 1.0, 2.0},
                               double c2_given = 0,
                               std::pair<double, double> fit_window = {0, 0},
                               mpfr_prec_t prec = 192);

std::vector<double> uniform_grid(double t0, double t1, int count);

}  // namespace cburgers

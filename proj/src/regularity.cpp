#include "cburgers/regularity.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "cburgers/evaluate.hpp"

namespace cburgers {

namespace {

template <class Family, class AbsA01>
GeometricBoundReport geometric_impl(Family& family, const AbsA01& abs_a01, int k_max,
                                    const std::vector<double>& t_grid, mpfr_prec_t prec,
                                    bool outside) {
  GeometricBoundReport rep;
  rep.outside_hypothesis = outside;
  rep.worst_ratio = 0;
  const mpfr_prec_t wp = prec + 32;
  for (int k = 1; k <= k_max; ++k) {
    const auto& row = family.row(k);
    BigFloat denom = pow_ui(abs_a01, static_cast<unsigned long>(k));
    for (double t : t_grid) {
      if (t < 0) throw std::invalid_argument("check_geometric_bound: t must be >= 0");
      EvalResult er = evaluate_mode(row, BigFloat(t, wp), prec);
      double ratio = (abs(er.value) / denom).to_double();
      if (ratio > rep.worst_ratio) {
        rep.worst_ratio = ratio;
        rep.worst_k = k;
        rep.worst_t = t;
      }
    }
  }
  rep.pass = rep.worst_ratio <= 1.0 + 1e-12;
  return rep;
}

}  // namespace

GeometricBoundReport check_geometric_bound(const Rational& nu, const Rational& alpha,
                                           const GaussianRational& a01, int k_max,
                                           const std::vector<double>& t_grid, mpfr_prec_t prec) {
  if (a01.norm2() >= 1) throw std::invalid_argument("check_geometric_bound: need |a01| < 1");
  if (k_max < 1) throw std::invalid_argument("check_geometric_bound: k_max must be >= 1");
  bool outside = nu * nu + 4 * alpha * alpha < 9;
  if (outside)
    std::cerr << "[cburgers] warning: nu^2 + 4 alpha^2 < 9, geometric bound not guaranteed\n";
  KdvbFamilyQ family({a01}, nu, alpha);
  BigFloat abs_a01 = sqrt(BigFloat(a01.norm2(), prec + 32));
  return geometric_impl(family, abs_a01, k_max, t_grid, prec, outside);
}

GeometricBoundReport check_geometric_bound(const BigFloat& nu, const BigFloat& alpha,
                                           const BigComplex& a01, int k_max,
                                           const std::vector<double>& t_grid, mpfr_prec_t prec) {
  if (!(abs(a01) < BigFloat(1L, 64)))
    throw std::invalid_argument("check_geometric_bound: need |a01| < 1");
  if (k_max < 1) throw std::invalid_argument("check_geometric_bound: k_max must be >= 1");
  double h = nu.to_double() * nu.to_double() + 4 * alpha.to_double() * alpha.to_double();
  bool outside = h < 9 - 1e-12;
  if (outside)
    std::cerr << "[cburgers] warning: nu^2 + 4 alpha^2 < 9, geometric bound not guaranteed\n";
  KdvbFamilyF family({a01}, nu, alpha, prec);
  BigFloat abs_a01 = abs(a01);
  return geometric_impl(family, abs_a01, k_max, t_grid, prec, outside);
}

CoeffBoundReport check_coefficient_boundedness(const Rational& nu, const Rational& alpha,
                                               int k_max, int k_sym_max) {
  if (k_max < 1) throw std::invalid_argument("check_coefficient_boundedness: k_max must be >= 1");
  CoeffBoundReport rep;
  rep.hypothesis_met = nu * nu + 9 * alpha * alpha >= 36;
  if (!rep.hypothesis_met)
    std::cerr << "[cburgers] warning: nu^2 + 9 alpha^2 < 36, coefficient bound not guaranteed\n";
  SymbolicFamily family(nu, alpha);
  rep.all_le_one = true;
  rep.crude_all_le_one = true;
  const int cap = std::min(k_max, k_sym_max);
  for (int k = 1; k <= cap; ++k) {
    const SymbolicRow& row = family.row(k);
    CoeffBoundReport::PerK per;
    per.k = k;
    per.max_abs2 = 0;
    per.all_le_one = true;
    MonomialKey single(static_cast<size_t>(k), 0);
    single[0] = static_cast<unsigned>(k);  // monomial a_01^k
    for (const auto& [hl, poly] : row.cells) {
      auto it = poly.find(single);
      if (it == poly.end()) continue;
      Rational abs2 = it->second.norm2();
      if (abs2 > per.max_abs2) per.max_abs2 = abs2;
      if (abs2 > 1) per.all_le_one = false;
    }
    rep.all_le_one = rep.all_le_one && per.all_le_one;
    if (k >= 2) {
      // 3k^2 / sqrt(nu^2 (k^2-h)^2 + alpha^2 (k^3-l)^2) at h=U(k), l=V(k)
      double dh = static_cast<double>(k) * k - static_cast<double>(gap_start_u(k));
      double dl = static_cast<double>(k) * k * k - static_cast<double>(gap_start_v(k));
      double denom = std::sqrt(nu.get_d() * nu.get_d() * dh * dh +
                               alpha.get_d() * alpha.get_d() * dl * dl);
      per.crude_ratio = 3.0 * k * k / denom;
      if (per.crude_ratio > 1.0) rep.crude_all_le_one = false;
    }
    rep.per_k.push_back(std::move(per));
  }
  return rep;
}

std::vector<double> uniform_grid(double t0, double t1, int count) {
  if (count < 2 || t1 <= t0) throw std::invalid_argument("uniform_grid: need count >= 2, t1 > t0");
  std::vector<double> grid(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    grid[static_cast<size_t>(i)] = t0 + (t1 - t0) * static_cast<double>(i) / (count - 1);
  return grid;
}

namespace {

struct LineFit {
  double slope = 0, intercept = 0, fvu = 0, rms = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ssr += r * r;
  }
  fit.fvu = syy > 0 ? ssr / syy : 0;
  fit.rms = std::sqrt(ssr / static_cast<double>(n));
  return fit;
}

}  // namespace

EnvelopeReport envelope_report(const Rational& nu, const Rational& alpha,
                               const std::vector<GaussianRational>& init, int k_max,
                               const std::vector<double>& t_grid,
                               const std::vector<double>& s_values, double c2_given,
                               std::pair<double, double> fit_window, mpfr_prec_t prec) {
  if (nu <= 0) throw std::invalid_argument("envelope_report: nu must be > 0");
  if (k_max < 1) throw std::invalid_argument("envelope_report: k_max must be >= 1");
  if (t_grid.empty()) throw std::invalid_argument("envelope_report: empty t grid");
  for (double t : t_grid)
    if (t <= 0)
      throw std::invalid_argument("envelope_report: t grid must be > 0 (1/(1-e^{-nu t}) is singular)");
  for (const auto& c : init)
    if (c.norm2() > 1) {
      std::cerr << "[cburgers] warning: |a_0k| > 1 violates the envelope hypothesis\n";
      break;
    }

  KdvbFamilyQ family(init, nu, alpha);
  const mpfr_prec_t wp = prec + 32;
  const double nu_d = nu.get_d();

  EnvelopeReport rep;
  rep.k1_exempted = true;
  rep.c2_given = c2_given > 0;
  rep.c2_given_value = c2_given;

  // |a_k(t)| on the grid, reused by both the envelope scan and the norm fits.
  std::vector<std::vector<double>> mags(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const auto& row = family.row(k);
    auto& out = mags[static_cast<size_t>(k) - 1];
    out.reserve(t_grid.size());
    for (double t : t_grid)
      out.push_back(abs(evaluate_mode(row, BigFloat(t, wp), prec).value).to_double());
  }

  rep.c2_min = 0;
  for (int k = 2; k <= k_max; ++k) {
    double shape_k = (static_cast<double>(k) * k - 1.0) * std::exp(2.0 * std::sqrt(2.0) * std::sqrt(k));
    for (size_t ti = 0; ti < t_grid.size(); ++ti) {
      double t = t_grid[ti];
      double envelope_unit = shape_k * std::exp(-nu_d * k * t) / (1.0 - std::exp(-nu_d * t));
      double ratio = mags[static_cast<size_t>(k) - 1][ti] / envelope_unit;
      if (ratio > rep.c2_min) {
        rep.c2_min = ratio;
        rep.worst_k = k;
        rep.worst_t = t;
      }
    }
  }
  rep.c2_given_holds = rep.c2_given && rep.c2_min <= c2_given;

  // Log-linear decay fit of ||u(., t)||_{H^s} over the fit window.
  double lo = fit_window.first, hi = fit_window.second;
  if (hi <= lo) {
    lo = 0.5 * (t_grid.front() + t_grid.back());
    hi = t_grid.back();
  }
  rep.pass = true;
  for (double s : s_values) {
    std::vector<double> xs, ys;
    for (size_t ti = 0; ti < t_grid.size(); ++ti) {
      double t = t_grid[ti];
      if (t < lo - 1e-12 || t > hi + 1e-12) continue;
      double norm2 = 0;
      for (int k = 1; k <= k_max; ++k) {
        double m = mags[static_cast<size_t>(k) - 1][ti];
        norm2 += std::pow(1.0 + static_cast<double>(k) * k, s) * m * m;
      }
      xs.push_back(t);
      ys.push_back(0.5 * std::log(norm2));
    }
    if (xs.size() < 3) throw std::invalid_argument("envelope_report: fit window has < 3 grid points");
    LineFit fit = fit_line(xs, ys);
    DecayFit df;
    df.s = s;
    df.delta = -fit.slope / nu_d;
    df.fvu = fit.fvu;
    df.rms_log = fit.rms;
    df.pass = df.delta > 0;
    rep.pass = rep.pass && df.pass;
    rep.fits.push_back(df);
  }
  if (rep.c2_given) rep.pass = rep.pass && rep.c2_given_holds;
  return rep;
}

}  // namespace cburgers

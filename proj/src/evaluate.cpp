#include "cburgers/evaluate.hpp"

#include <cmath>
#include <stdexcept>

namespace cburgers {

namespace {

constexpr mpfr_prec_t kGuardBits = 64;

void check_args(const BigFloat& t, mpfr_prec_t precision) {
  if (precision < kMinPrec) throw std::invalid_argument("evaluate_mode: precision must be >= 53");
  if (t.sign() < 0) throw std::invalid_argument("evaluate_mode: t must be >= 0");
}

struct Accum {
  BigComplex sum;
  BigFloat mag_sum;
  long n = 0;
  explicit Accum(mpfr_prec_t wp) : sum(wp), mag_sum(0L, wp) {}

  void add(const BigComplex& term) {
    sum += term;
    mag_sum += abs(term);
    ++n;
  }

  EvalResult finish(mpfr_prec_t wp) const {
    EvalResult r{sum, 0, 0, 0};
    BigFloat bound = BigFloat(static_cast<double>(n + 16), 64) *
                     BigFloat::pow2(-static_cast<long>(wp), 64) * mag_sum;
    r.abs_err_bound = bound.to_double();
    BigFloat mag = abs(sum);
    if (mag.is_zero()) {
      r.rel_err_bound = HUGE_VAL;
      r.condition = HUGE_VAL;
    } else {
      r.rel_err_bound = (bound / mag).to_double();
      r.condition = (mag_sum / mag).to_double();
    }
    return r;
  }
};

// term = coeff * e^{-nu h t} * (cos(alpha l t) + i sin(alpha l t))
template <class TermRange, class CoeffToBig>
EvalResult eval_terms(const TermRange& terms, const BigFloat& nu, const BigFloat& alpha,
                      const BigFloat& t, mpfr_prec_t wp, CoeffToBig&& to_big) {
  Accum acc(wp);
  const bool oscillatory = !alpha.is_zero();
  for (const auto& term : terms) {
    BigFloat decay = exp(-(nu * BigFloat(term.h, wp) * t));
    BigComplex value = to_big(term.coeff) * BigComplex(decay, BigFloat(0L, wp));
    if (oscillatory) {
      BigFloat phase = alpha * BigFloat(term.l, wp) * t;
      value = value * BigComplex(cos(phase), sin(phase));
    }
    acc.add(value);
  }
  return acc.finish(wp);
}

}  // namespace

EvalResult evaluate_mode(const CoeffTable& table, const BigFloat& t, mpfr_prec_t precision) {
  check_args(t, precision);
  const mpfr_prec_t wp = precision + kGuardBits;
  if (t.is_zero()) {
    return {BigComplex(table.sum(), precision), 0.0, 0.0, 1.0};
  }
  struct View {
    long h;
    long l;
    const GaussianRational& coeff;
  };
  std::vector<View> views;
  views.reserve(table.entries.size());
  for (const auto& [m, c] : table.entries) views.push_back({m, m, c});
  return eval_terms(views, BigFloat(table.nu, wp), BigFloat(0L, wp), t, wp,
                    [&](const GaussianRational& c) { return BigComplex(c, wp); });
}

EvalResult evaluate_mode(const ExpSeriesQ& series, const BigFloat& t, mpfr_prec_t precision) {
  check_args(t, precision);
  const mpfr_prec_t wp = precision + kGuardBits;
  if (t.is_zero()) {
    return {BigComplex(series.a0k, precision), 0.0, 0.0, 1.0};
  }
  return eval_terms(series.terms, BigFloat(series.nu, wp), BigFloat(series.alpha, wp), t, wp,
                    [&](const GaussianRational& c) { return BigComplex(c, wp); });
}

EvalResult evaluate_mode(const ExpSeriesF& series, const BigFloat& t, mpfr_prec_t precision) {
  check_args(t, precision);
  const mpfr_prec_t wp = std::max(precision + kGuardBits, series.prec);
  return eval_terms(series.terms, series.nu, series.alpha, t, wp,
                    [&](const BigComplex& c) { return c; });
}

namespace {

template <class Family>
FieldEval evaluate_field_impl(const Family& family, int K, double x, const BigFloat& t,
                              mpfr_prec_t precision) {
  if (K < 1) throw std::invalid_argument("evaluate_field: K must be >= 1");
  const mpfr_prec_t wp = precision + kGuardBits;
  BigComplex total(wp);
  double last_mag = 0;
  BigFloat xb(x, wp);
  for (int k = 1; k <= K; ++k) {
    EvalResult mode = evaluate_mode(family.row(k), t, precision);
    BigFloat phase = BigFloat(k, wp) * xb;
    BigComplex rotated = mode.value * BigComplex(cos(phase), sin(phase));
    total += rotated;
    if (k == K) last_mag = abs(mode.value).to_double();
  }
  return {total, last_mag};
}

}  // namespace

FieldEval evaluate_field(const BurgersFamily& family, int K, double x, const BigFloat& t,
                         mpfr_prec_t precision) {
  return evaluate_field_impl(family, K, x, t, precision);
}
FieldEval evaluate_field(const KdvbFamilyQ& family, int K, double x, const BigFloat& t,
                         mpfr_prec_t precision) {
  return evaluate_field_impl(family, K, x, t, precision);
}
FieldEval evaluate_field(const KdvbFamilyF& family, int K, double x, const BigFloat& t,
                         mpfr_prec_t precision) {
  return evaluate_field_impl(family, K, x, t, precision);
}

}  // namespace cburgers

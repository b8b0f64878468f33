#pragma once

#include "cburgers/bigfloat.hpp"
#include "cburgers/burgers.hpp"
#include "cburgers/series.hpp"

namespace cburgers {

// Value of one mode at time t plus an a-posteriori rounding bound.
//
// Precision contract: the sum runs at precision + 64 guard bits; each of the
// n terms costs a handful of rounded operations, so
//   |error| <= (n + 16) * 2^{-(precision+64)} * sum_i |term_i|.
// The relative bound therefore carries the condition number
// kappa = sum|term| / |sum|; results meet 2^{-precision} relative whenever
// (n + 16) * kappa <= 2^64 (the "margin" of the contract). Callers that need
// certainty on nearly-cancelling sums should retry at higher precision, which
// is what the certificate code does.
struct EvalResult {
  BigComplex value;
  double abs_err_bound = 0;  // guaranteed absolute bound on rounding error
  double rel_err_bound = 0;  // abs_err_bound / |value| (HUGE_VAL if value = 0)
  double condition = 0;      // sum |term| / |value|
};

// pre: t >= 0, precision >= 53. At t = 0 the exact flavours return a_k(0)
// with zero error.
EvalResult evaluate_mode(const CoeffTable& table, const BigFloat& t, mpfr_prec_t precision);
EvalResult evaluate_mode(const ExpSeriesQ& series, const BigFloat& t, mpfr_prec_t precision);
EvalResult evaluate_mode(const ExpSeriesF& series, const BigFloat& t, mpfr_prec_t precision);

struct FieldEval {
  BigComplex value;
  double truncation_indicator = 0;  // |a_K(t)| of the last retained mode
};

// Partial sum of u(x, t) = sum_{k<=K} a_k(t) e^{ikx}.
FieldEval evaluate_field(const BurgersFamily& family, int K, double x, const BigFloat& t,
                         mpfr_prec_t precision);
FieldEval evaluate_field(const KdvbFamilyQ& family, int K, double x, const BigFloat& t,
                         mpfr_prec_t precision);
FieldEval evaluate_field(const KdvbFamilyF& family, int K, double x, const BigFloat& t,
                         mpfr_prec_t precision);

}  // namespace cburgers

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cburgers/evaluate.hpp"
#include "support/quadrature_oracle.hpp"

using namespace cburgers;

namespace {

GaussianRational gr(const std::string& re, const std::string& im = "0") {
  return GaussianRational::parse(re, im);
}

BigFloat rel_diff(const BigComplex& a, const BigComplex& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("a_1(1) = e^{-1} for a = 1, nu = 1") {
  CoeffTable row1 = burgers_table(1, gr("1"), Rational(1));
  EvalResult er = evaluate_mode(row1, BigFloat(1.0, 256), 256);
  BigFloat expected = exp(BigFloat(-1L, 320));
  CHECK(abs(er.value.real() - expected) < BigFloat::pow2(-250, 64));
  CHECK(abs(er.value.imag()).to_double() == 0.0);
  CHECK(er.rel_err_bound < 1e-70);
}

TEST_CASE("t = 0 reproduces a_k(0) exactly in exact mode") {
  BurgersFamily family(gr("2/3", "-1/5"), Rational(2));
  for (int k = 1; k <= 6; ++k) {
    EvalResult er = evaluate_mode(family.row(k), BigFloat(0L, 64), 128);
    GaussianRational expected = k == 1 ? gr("2/3", "-1/5") : GaussianRational{};
    CHECK(er.value.real() == BigFloat(expected.re, 128));
    CHECK(er.value.imag() == BigFloat(expected.im, 128));
    CHECK(er.abs_err_bound == 0.0);
  }
  KdvbFamilyQ kfam({gr("1/2"), gr("0", "1/3")}, Rational(1), Rational(1));
  EvalResult er = evaluate_mode(kfam.row(2), BigFloat(0L, 64), 128);
  CHECK(er.value.real().to_double() == 0.0);
  CHECK(er.value.imag().to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("a_2(1/2) = 3i (e^{-1} - e^{-2}) for a = 1, nu = 1") {
  CoeffTable row2 = burgers_table(2, gr("1"), Rational(1));
  EvalResult er = evaluate_mode(row2, BigFloat(0.5, 256), 256);
  BigFloat closed = BigFloat(3L, 320) * (exp(BigFloat(-1L, 320)) - exp(BigFloat(-2L, 320)));
  CHECK(abs(er.value.imag() - closed) < BigFloat::pow2(-240, 64));
  CHECK(abs(er.value.real()).to_double() == 0.0);

  // independent quadrature oracle on the integral form
  BigComplex from_oracle = oracle::mode_at(BigFloat(1L, 384), BigFloat(0L, 384),
                                           {BigComplex(1.0, 0.0, 384)}, 2, BigFloat(0.5, 384),
                                           192, 384);
  CHECK(rel_diff(er.value, from_oracle) < BigFloat::pow2(-80, 64));
}

TEST_CASE("oracle equivalence: Burgers rows k <= 6 vs quadrature at 2^-80") {
  const mpfr_prec_t wp = 384;
  BurgersFamily family(gr("1"), Rational(1));
  std::vector<BigComplex> init = {BigComplex(1.0, 0.0, wp)};
  for (double t : {0.5, 1.0}) {
    auto rows = oracle::mode_values(BigFloat(1L, wp), BigFloat(0L, wp), init, 6, BigFloat(t, wp),
                                    224, wp);
    for (int k = 1; k <= 6; ++k) {
      EvalResult er = evaluate_mode(family.row(k), BigFloat(t, wp), 256);
      INFO("k = ", k, ", t = ", t);
      CHECK(rel_diff(er.value, rows[static_cast<size_t>(k) - 1].back()) < BigFloat::pow2(-80, 64));
    }
  }
}

TEST_CASE("oracle equivalence: KdV-Burgers with dispersion, multi-mode data") {
  const mpfr_prec_t wp = 384;
  Rational nu(1), alpha(1);
  std::vector<GaussianRational> init_q = {gr("2/5"), gr("-1/4", "1/8"), gr("0", "1/6")};
  KdvbFamilyQ family(init_q, nu, alpha);
  std::vector<BigComplex> init_f;
  for (const auto& c : init_q) init_f.emplace_back(c, wp);
  auto rows = oracle::mode_values(BigFloat(nu, wp), BigFloat(alpha, wp), init_f, 6,
                                  BigFloat(0.5, wp), 224, wp);
  for (int k = 1; k <= 6; ++k) {
    EvalResult er = evaluate_mode(family.row(k), BigFloat(0.5, wp), 256);
    INFO("k = ", k);
    CHECK(rel_diff(er.value, rows[static_cast<size_t>(k) - 1].back()) < BigFloat::pow2(-80, 64));
  }
}

TEST_CASE("precision below 53 bits is rejected, negative t is rejected") {
  CoeffTable row1 = burgers_table(1, gr("1"), Rational(1));
  CHECK_THROWS_AS(evaluate_mode(row1, BigFloat(1.0, 64), 52), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_mode(row1, BigFloat(-0.5, 64), 128), std::invalid_argument);
}

TEST_CASE("reported error bound is honest against a higher-precision rerun") {
  BurgersFamily family(gr("9/10"), Rational(1));
  for (int k : {3, 6, 9}) {
    EvalResult low = evaluate_mode(family.row(k), BigFloat(0.25, 512), 128);
    EvalResult high = evaluate_mode(family.row(k), BigFloat(0.25, 512), 512);
    double observed = abs(low.value - high.value).to_double();
    CHECK(observed <= low.abs_err_bound + 1e-300);
    CHECK(low.condition >= 1.0);
  }
}

TEST_CASE("evaluate_field: partial sums and truncation indicator") {
  // K=1, x=0, t=0: the field equals a
  BurgersFamily family(gr("2/5"), Rational(1));
  FieldEval fe = evaluate_field(family, 1, 0.0, BigFloat(0L, 64), 128);
  CHECK(fe.value.real().to_double() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(fe.value.imag().to_double() == 0.0);

  // K=2, x=pi, t=0, a=1: e^{i pi} = -1 and a_2(0) = 0
  BurgersFamily unit(gr("1"), Rational(1));
  FieldEval fe2 = evaluate_field(unit, 2, 3.14159265358979323846, BigFloat(0L, 64), 128);
  CHECK(fe2.value.real().to_double() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(fe2.value.imag().to_double()) < 1e-12);
  CHECK(fe2.truncation_indicator == 0.0);

  // indicator reports |a_K(t)|
  FieldEval fe3 = evaluate_field(unit, 3, 1.0, BigFloat(0.5, 64), 128);
  EvalResult mode3 = evaluate_mode(unit.row(3), BigFloat(0.5, 64), 128);
  CHECK(fe3.truncation_indicator == doctest::Approx(abs(mode3.value).to_double()));
}

TEST_CASE("field evaluation works through the float-mode family too") {
  const mpfr_prec_t prec = 160;
  KdvbFamilyF family({BigComplex(0.4, 0.0, prec)}, BigFloat(1L, prec),
                     sqrt(BigFloat(2L, prec)), prec);
  FieldEval fe = evaluate_field(family, 4, 0.0, BigFloat(0L, prec), 128);
  // at t = 0 the one-sided sum reproduces u0(0) = 0.4
  CHECK(fe.value.real().to_double() == doctest::Approx(0.4).epsilon(1e-20));
  CHECK(std::abs(fe.value.imag().to_double()) < 1e-30);
}

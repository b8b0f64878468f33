#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "cburgers/burgers.hpp"
#include "cburgers/series.hpp"
#include "cburgers/symbolic.hpp"

using namespace cburgers;

namespace {

GaussianRational gr(const std::string& re, const std::string& im = "0") {
  return GaussianRational::parse(re, im);
}

GaussianRational i_times(long v) { return GaussianRational(Rational(0), Rational(v)); }

// Linear-symbol denominator nu (k^2 - h) - i alpha (k^3 - l).
GaussianRational denom(const Rational& nu, const Rational& alpha, int k, long h, long l) {
  long ksq = static_cast<long>(k) * k;
  long kcb = ksq * k;
  return GaussianRational(nu * Rational(ksq - h), -(alpha * Rational(kcb - l)));
}

}  // namespace

TEST_CASE("k = 1 and k = 2 match the closed forms") {
  Rational nu(1), alpha(1, 2);
  ModelParams params{nu, alpha, Rational(1)};
  GaussianRational a01 = gr("1"), a02 = gr("1");

  ExpSeriesQ row1 = kdvb_table(1, {a01, a02}, params);
  REQUIRE(row1.terms.size() == 1);
  CHECK(row1.terms[0].h == 1);
  CHECK(row1.terms[0].l == 1);
  CHECK(row1.terms[0].coeff == a01);

  ExpSeriesQ row2 = kdvb_table(2, {a01, a02}, params);
  REQUIRE(row2.terms.size() == 2);
  GaussianRational lead = i_times(6) * a01 * a01 / denom(nu, alpha, 2, 2, 2);
  CHECK(row2.terms[0].h == 2);
  CHECK(row2.terms[0].l == 2);
  CHECK(row2.terms[0].coeff == lead);
  CHECK(row2.terms[1].h == 4);
  CHECK(row2.terms[1].l == 8);
  CHECK(row2.terms[1].coeff == a02 - lead);
}

TEST_CASE("k = 3 matches the closed form derived from the recursion") {
  // The a_01^3 terms carry the sign forced by (3ik)^2 < 0; the alpha = 0
  // reduction below pins the same sign against the Burgers expansion.
  Rational nu(1), alpha(1, 3);
  ModelParams params{nu, alpha, Rational(1)};
  GaussianRational a01 = gr("1/2"), a02 = gr("0", "1/3"), a03 = gr("-1/5");

  GaussianRational d22 = denom(nu, alpha, 2, 2, 2);
  GaussianRational lead2 = i_times(6) * a01 * a01 / d22;

  ExpSeriesQ row3 = kdvb_table(3, {a01, a02, a03}, params);
  REQUIRE(row3.terms.size() == 3);

  // (3,3): 9i * 2 a01 * lead2 / (6 nu - 24 i alpha) = -108 a01^3 / (d22 d33)
  GaussianRational d33 = denom(nu, alpha, 3, 3, 3);
  GaussianRational c33 = i_times(9) * (gr("2") * a01 * lead2) / d33;
  CHECK(c33 == gr("-108") * a01.pow_u(3) / (d22 * d33));
  CHECK(row3.terms[0].h == 3);
  CHECK(row3.terms[0].l == 3);
  CHECK(row3.terms[0].coeff == c33);

  // (5,9): 9i * 2 a01 (a02 - lead2) / (4 nu - 18 i alpha)
  GaussianRational d59 = denom(nu, alpha, 3, 5, 9);
  GaussianRational c59 = i_times(18) * a01 * (a02 - lead2) / d59;
  CHECK(c59 == i_times(18) * a01 * a02 / d59 + gr("108") * a01.pow_u(3) / (d22 * d59));
  CHECK(row3.terms[1].h == 5);
  CHECK(row3.terms[1].l == 9);
  CHECK(row3.terms[1].coeff == c59);

  CHECK(row3.terms[2].h == 9);
  CHECK(row3.terms[2].l == 27);
  CHECK(row3.terms[2].coeff == a03 - c33 - c59);
  CHECK(row3.sum() == a03);
}

TEST_CASE("alpha = 0 collapses onto the Burgers tables") {
  Rational nu(7, 5);
  GaussianRational a = gr("3/4", "-1/6");
  BurgersFamily burgers(a, nu);
  KdvbFamilyQ kdvb({a}, nu, Rational(0));
  CHECK(kdvb.collapsed());
  for (int k = 1; k <= 8; ++k) {
    const CoeffTable& bt = burgers.row(k);
    const ExpSeriesQ& kt = kdvb.row(k);
    REQUIRE(bt.entries.size() == kt.terms.size());
    for (size_t i = 0; i < bt.entries.size(); ++i) {
      CHECK(kt.terms[i].h == bt.entries[i].first);
      CHECK(kt.terms[i].coeff == bt.entries[i].second);
    }
  }
}

TEST_CASE("structural identities hold exactly for k <= 8 (rational nu, alpha)") {
  Rational nu(1), alpha(2, 3);
  std::vector<GaussianRational> init = {gr("1/2"), gr("0", "1/3"), gr("-1/5"), gr("1/7")};
  KdvbFamilyQ family(init, nu, alpha);
  for (int k = 1; k <= 8; ++k) {
    StructuralReport rep = structural_check(family.row(k));
    INFO("k = ", k);
    CHECK(rep.zero_sum.value());
    CHECK(rep.u_gap.value());
    CHECK(rep.v_gap.value());
    CHECK(rep.ok());
  }
  // single-mode alpha=0 series also carries the Burgers-only identities
  GaussianRational a01 = gr("2/3");
  KdvbFamilyQ single({a01}, Rational(3), Rational(0));
  for (int k = 1; k <= 8; ++k) {
    StructuralReport rep = structural_check(single.row(k), &a01);
    INFO("k = ", k);
    CHECK(rep.leading_coeff.value());
    if (k >= 2) {
      CHECK(rep.k_plus_2.value());
      CHECK(rep.odd_gap.value());
    }
    CHECK(rep.ok());
  }
}

TEST_CASE("recursion never reaches the forced exponent pair (k^2, k^3)") {
  // Non-top terms stay at h <= U(k), l <= V(k): no secular terms can form.
  KdvbFamilyQ family({gr("1"), gr("1"), gr("1")}, Rational(1), Rational(1));
  for (int k = 2; k <= 8; ++k) {
    const ExpSeriesQ& row = family.row(k);
    long ksq = static_cast<long>(k) * k, kcb = ksq * k;
    REQUIRE(row.terms.size() >= 2);
    for (size_t i = 0; i + 1 < row.terms.size(); ++i) {
      CHECK(row.terms[i].h <= gap_start_u(k));
      CHECK(row.terms[i].l <= gap_start_v(k));
    }
    CHECK(row.terms.back().h == ksq);
    CHECK(row.terms.back().l == kcb);
    for (size_t i = 0; i + 1 < row.terms.size(); ++i)
      CHECK((row.terms[i].h != row.terms[i + 1].h || row.terms[i].l != row.terms[i + 1].l));
  }
}

TEST_CASE("denominator safety across parameter corners") {
  for (auto [nu, alpha] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(1, 10), Rational(5)}}) {
    KdvbFamilyQ family({gr("1"), gr("1/2")}, nu, alpha);
    CHECK_NOTHROW(family.row(8));
  }
}

TEST_CASE("pre-condition rejections") {
  ModelParams zero{Rational(0), Rational(0), Rational(1)};
  CHECK_THROWS_AS(kdvb_table(2, {gr("1")}, zero), std::invalid_argument);
  ModelParams gamma2{Rational(1), Rational(0), Rational(2)};
  CHECK_THROWS_AS(kdvb_table(2, {gr("1")}, gamma2), std::invalid_argument);
  ModelParams fine{Rational(1), Rational(0), Rational(1)};
  CHECK_THROWS_AS(kdvb_table(0, {gr("1")}, fine), std::invalid_argument);
}

TEST_CASE("float mode agrees with exact mode on rational inputs") {
  const mpfr_prec_t prec = 192;
  Rational nu(1), alpha(1, 2);
  std::vector<GaussianRational> init_q = {gr("2/5"), gr("0", "1/3")};
  std::vector<BigComplex> init_f;
  for (const auto& c : init_q) init_f.emplace_back(c, prec);
  KdvbFamilyQ exact(init_q, nu, alpha);
  KdvbFamilyF floats(init_f, BigFloat(nu, prec), BigFloat(alpha, prec), prec);
  for (int k = 1; k <= 6; ++k) {
    const ExpSeriesQ& eq = exact.row(k);
    const ExpSeriesF& fq = floats.row(k);
    REQUIRE(eq.terms.size() == fq.terms.size());
    BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) + 32, 64);
    for (size_t i = 0; i < eq.terms.size(); ++i) {
      CHECK(eq.terms[i].h == fq.terms[i].h);
      CHECK(eq.terms[i].l == fq.terms[i].l);
      CHECK(abs(BigComplex(eq.terms[i].coeff, prec) - fq.terms[i].coeff) < tol);
    }
    CHECK(structural_check(fq).ok());
  }
}

TEST_CASE("symbolic table: base case and small-k closed forms") {
  Rational nu(1), alpha(1, 4);
  ModelParams params{nu, alpha, Rational(1)};

  auto t1 = kdvb_symbolic_table(1, params);
  REQUIRE(t1.size() == 1);
  CHECK(t1.at(MonomialKey{1}).at({1, 1}) == gr("1"));

  auto t2 = kdvb_symbolic_table(2, params);
  REQUIRE(t2.size() == 2);  // = partition number of 2
  GaussianRational c = i_times(6) / denom(nu, alpha, 2, 2, 2);
  CHECK(t2.at(MonomialKey{2, 0}).at({2, 2}) == c);
  CHECK(t2.at(MonomialKey{2, 0}).at({4, 8}) == -c);
  CHECK(t2.at(MonomialKey{0, 1}).at({4, 8}) == gr("1"));

  auto t3 = kdvb_symbolic_table(3, params);
  REQUIRE(t3.size() == 3);
  GaussianRational c59 = i_times(18) / denom(nu, alpha, 3, 5, 9);
  CHECK(t3.at(MonomialKey{1, 1, 0}).at({5, 9}) == c59);
  CHECK(t3.at(MonomialKey{1, 1, 0}).at({9, 27}) == -c59);
  CHECK(t3.at(MonomialKey{0, 0, 1}).at({9, 27}) == gr("1"));

  for (const auto& [key, cells] : t3) {
    CHECK(monomial_weight(key) == 3);
    CHECK(!cells.empty());
  }
}

TEST_CASE("substitution homomorphism: symbolic equals numeric table exactly") {
  Rational nu(1), alpha(1, 3);
  std::vector<GaussianRational> init = {gr("1/2"), gr("-1/3", "1/4"), gr("1/5"),
                                        gr("0"),   gr("1/7", "1/2"), gr("-1"),
                                        gr("2/3"), gr("0", "-3/5")};
  SymbolicFamily sym(nu, alpha);
  KdvbFamilyQ num(init, nu, alpha);
  for (int k = 1; k <= 8; ++k) {
    auto substituted = substitute_symbolic(sym.row(k), init);
    const ExpSeriesQ& row = num.row(k);
    REQUIRE(substituted.size() == row.terms.size());
    for (const auto& t : row.terms) {
      auto it = substituted.find({t.h, t.l});
      REQUIRE(it != substituted.end());
      CHECK(it->second == t.coeff);
    }
  }
}

TEST_CASE("symbolic cutoff is enforced") {
  ModelParams params{Rational(1), Rational(1), Rational(1)};
  CHECK_THROWS_AS(kdvb_symbolic_table(9, params), std::invalid_argument);
  CHECK_NOTHROW(kdvb_symbolic_table(5, params));
}

TEST_CASE("term exponent ranges: h in [k, k^2], l in [k, k^3], decay positive") {
  KdvbFamilyQ family({gr("1/2"), gr("1/3")}, Rational(2), Rational(3, 2));
  for (int k = 1; k <= 8; ++k) {
    const ExpSeriesQ& row = family.row(k);
    long ksq = static_cast<long>(k) * k, kcb = ksq * k;
    for (const auto& t : row.terms) {
      CHECK(t.h >= k);
      CHECK(t.h <= ksq);
      CHECK(t.l >= k);
      CHECK(t.l <= kcb);
    }
  }
}

TEST_CASE("structural identities survive randomized rational parameters") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 9), pnum(0, 5);
  auto rand_q = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  for (int trial = 0; trial < 12; ++trial) {
    Rational nu(pnum(rng), den(rng));
    nu.canonicalize();
    Rational alpha(pnum(rng), den(rng));
    alpha.canonicalize();
    if (nu == 0 && alpha == 0) nu = 1;
    std::vector<GaussianRational> init = {{rand_q(), rand_q()}, {rand_q(), rand_q()}};
    KdvbFamilyQ family(init, nu, alpha);
    for (int k = 1; k <= 6; ++k) {
      StructuralReport rep = structural_check(family.row(k));
      INFO("trial ", trial, " nu=", nu.get_d(), " alpha=", alpha.get_d(), " k=", k);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("kdvb row cache is safe for concurrent readers") {
  KdvbFamilyQ family({gr("1/2"), gr("0", "1/3")}, Rational(1), Rational(1, 2));
  std::vector<std::thread> pool;
  std::vector<GaussianRational> tops(8);
  for (int w = 0; w < 8; ++w)
    pool.emplace_back([&family, &tops, w] {
      const ExpSeriesQ& row = family.row(7 + (w % 2));
      tops[static_cast<size_t>(w)] = row.terms.back().coeff;
    });
  for (auto& th : pool) th.join();
  KdvbFamilyQ reference({gr("1/2"), gr("0", "1/3")}, Rational(1), Rational(1, 2));
  for (int w = 0; w < 8; ++w)
    CHECK(tops[static_cast<size_t>(w)] == reference.row(7 + (w % 2)).terms.back().coeff);
}

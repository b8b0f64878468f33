#pragma once

#include <deque>
#include <shared_mutex>
#include <vector>

#include "cburgers/bigfloat.hpp"
#include "cburgers/burgers.hpp"
#include "cburgers/params.hpp"
#include "cburgers/rational.hpp"

namespace cburgers {

// One exponomial term of a_k(t): coeff * e^{(-nu h + i alpha l) t}.
template <class C>
struct SeriesTerm {
  long h = 0;
  long l = 0;
  C coeff;
};

// Exact flavour: Gaussian-rational coefficients, rational nu/alpha.
struct ExpSeriesQ {
  using Coeff = GaussianRational;
  using Scalar = Rational;

  int k = 0;
  bool l_collapsed = false;  // alpha = 0: l carries no information (l := h)
  Rational nu, alpha;
  GaussianRational a0k;  // a_k(0), reproduced by the coefficient sum
  std::vector<SeriesTerm<GaussianRational>> terms;

  long gap_h() const { return gap_start_u(k); }
  long gap_l() const { return gap_start_v(k); }
  GaussianRational sum() const;
  const GaussianRational* find(long h, long l) const;
};

// High-precision float flavour for irrational inputs; same structure, MPFR
// coefficients at a fixed working precision.
struct ExpSeriesF {
  using Coeff = BigComplex;
  using Scalar = BigFloat;

  int k = 0;
  bool l_collapsed = false;
  mpfr_prec_t prec = kDefaultPrec;
  BigFloat nu{kDefaultPrec}, alpha{kDefaultPrec};
  BigComplex a0k{kDefaultPrec};
  std::vector<SeriesTerm<BigComplex>> terms;

  long gap_h() const { return gap_start_u(k); }
  long gap_l() const { return gap_start_v(k); }
  BigComplex sum() const;
};

// Memoized KdV-Burgers rows for fixed (init, nu, alpha). Same recursion for
// both coefficient fields; rows build bottom-up under an exclusive lock and
// are immutable afterwards.
template <class SeriesT>
class KdvbFamilyT {
 public:
  using C = typename SeriesT::Coeff;
  using S = typename SeriesT::Scalar;

  // init[j-1] = a_{0j}; rows beyond init.size() treat a_{0k} = 0.
  KdvbFamilyT(std::vector<C> init, S nu, S alpha, mpfr_prec_t prec = kDefaultPrec);

  const SeriesT& row(int k) const;
  int rows_built() const;
  bool collapsed() const { return collapsed_; }
  const S& nu() const { return nu_; }
  const S& alpha() const { return alpha_; }
  mpfr_prec_t prec() const { return prec_; }

 private:
  void build_up_to(int k) const;
  C a0_of(int k) const;

  std::vector<C> init_;
  S nu_, alpha_;
  mpfr_prec_t prec_;
  bool collapsed_ = false;
  mutable std::shared_mutex mu_;
  mutable std::deque<SeriesT> rows_;
};

using KdvbFamilyQ = KdvbFamilyT<ExpSeriesQ>;
using KdvbFamilyF = KdvbFamilyT<ExpSeriesF>;

extern template class KdvbFamilyT<ExpSeriesQ>;
extern template class KdvbFamilyT<ExpSeriesF>;

// One-shot builders. The exact overload requires
// rational data; the float overload runs at `precision` bits.
ExpSeriesQ kdvb_table(int k, const std::vector<GaussianRational>& init, const ModelParams& params);
ExpSeriesF kdvb_table(int k, const std::vector<BigComplex>& init, const BigFloat& nu,
                      const BigFloat& alpha, mpfr_prec_t precision);

// Structural identities for series rows. If `single_mode_a01` is given (data
// a_{01} e^{ix} only) and alpha = 0, the Burgers-only identities (leading
// coefficient, k+2 relation, odd-gap zeros) are checked as well.
StructuralReport structural_check(const ExpSeriesQ& s,
                                  const GaussianRational* single_mode_a01 = nullptr);
// Float flavour: equalities hold within tol_rel (default 2^{-prec+24}, scaled
// by the largest coefficient magnitude).
StructuralReport structural_check(const ExpSeriesF& s, double tol_rel = 0);

}  // namespace cburgers

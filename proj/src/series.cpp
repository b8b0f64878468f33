#include "cburgers/series.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace cburgers {

GaussianRational ExpSeriesQ::sum() const {
  GaussianRational s;
  for (const auto& t : terms) s += t.coeff;
  return s;
}

const GaussianRational* ExpSeriesQ::find(long h, long l) const {
  for (const auto& t : terms)
    if (t.h == h && (l_collapsed || t.l == l)) return &t.coeff;
  return nullptr;
}

BigComplex ExpSeriesF::sum() const {
  BigComplex s(prec);
  for (const auto& t : terms) s += t.coeff;
  return s;
}

namespace {

template <class SeriesT>
struct Ops;

template <>
struct Ops<ExpSeriesQ> {
  static bool scalar_zero(const Rational& s) { return s == 0; }
  static bool coeff_zero(const GaussianRational& c) { return c.is_zero(); }
  static GaussianRational coupling(int k, long h, long l, const Rational& nu,
                                   const Rational& alpha, mpfr_prec_t) {
    const long ksq = static_cast<long>(k) * k;
    const long kcb = ksq * static_cast<long>(k);
    GaussianRational den(nu * Rational(ksq - h), -(alpha * Rational(kcb - l)));
    if (den.is_zero())
      throw std::logic_error("kdvb recursion: vanishing denominator (unreachable for (nu,alpha) != 0)");
    return GaussianRational(Rational(0), Rational(3 * k)) / den;
  }
};

template <>
struct Ops<ExpSeriesF> {
  static bool scalar_zero(const BigFloat& s) { return s.is_zero(); }
  static bool coeff_zero(const BigComplex&) { return false; }  // never prune in float mode
  static BigComplex coupling(int k, long h, long l, const BigFloat& nu, const BigFloat& alpha,
                             mpfr_prec_t prec) {
    const long ksq = static_cast<long>(k) * k;
    const long kcb = ksq * static_cast<long>(k);
    BigComplex den(nu * BigFloat(ksq - h, prec), -(alpha * BigFloat(kcb - l, prec)));
    if (den.is_zero())
      throw std::logic_error("kdvb recursion: vanishing denominator (unreachable for (nu,alpha) != 0)");
    return BigComplex(BigFloat(0L, prec), BigFloat(3L * k, prec)) / den;
  }
};

}  // namespace

template <class SeriesT>
KdvbFamilyT<SeriesT>::KdvbFamilyT(std::vector<C> init, S nu, S alpha, mpfr_prec_t prec)
    : init_(std::move(init)), nu_(std::move(nu)), alpha_(std::move(alpha)), prec_(prec) {
  if (Ops<SeriesT>::scalar_zero(nu_) && Ops<SeriesT>::scalar_zero(alpha_))
    throw std::invalid_argument("KdvbFamily: (nu, alpha) = (0, 0) has no exponomial form");
  collapsed_ = Ops<SeriesT>::scalar_zero(alpha_);
}

template <class SeriesT>
typename KdvbFamilyT<SeriesT>::C KdvbFamilyT<SeriesT>::a0_of(int k) const {
  if (k >= 1 && k <= static_cast<int>(init_.size())) return init_[static_cast<size_t>(k) - 1];
  if constexpr (std::is_same_v<SeriesT, ExpSeriesQ>)
    return GaussianRational{};
  else
    return BigComplex(prec_);
}

template <class SeriesT>
int KdvbFamilyT<SeriesT>::rows_built() const {
  std::shared_lock lock(mu_);
  return static_cast<int>(rows_.size());
}

template <class SeriesT>
const SeriesT& KdvbFamilyT<SeriesT>::row(int k) const {
  if (k < 1) throw std::invalid_argument("KdvbFamily: k must be >= 1");
  {
    std::shared_lock lock(mu_);
    if (k <= static_cast<int>(rows_.size())) return rows_[static_cast<size_t>(k) - 1];
  }
  build_up_to(k);
  std::shared_lock lock(mu_);
  return rows_[static_cast<size_t>(k) - 1];
}

template <class SeriesT>
void KdvbFamilyT<SeriesT>::build_up_to(int k_target) const {
  std::unique_lock lock(mu_);
  auto new_row = [&](int k) {
    SeriesT row;
    row.k = k;
    row.l_collapsed = collapsed_;
    row.nu = nu_;
    row.alpha = alpha_;
    row.a0k = a0_of(k);
    if constexpr (std::is_same_v<SeriesT, ExpSeriesF>) row.prec = prec_;
    return row;
  };
  if (rows_.empty()) {
    SeriesT row1 = new_row(1);
    if (!Ops<SeriesT>::coeff_zero(row1.a0k) || std::is_same_v<SeriesT, ExpSeriesF>)
      row1.terms.push_back({1, 1, row1.a0k});
    rows_.push_back(std::move(row1));
  }
  for (int k = static_cast<int>(rows_.size()) + 1; k <= k_target; ++k) {
    const long ksq = static_cast<long>(k) * k;
    const long kcb = ksq * static_cast<long>(k);
    // Pair convolution of all lower rows over (h, l); in collapsed mode the
    // l-axis is folded into h (the linear symbol no longer depends on l).
    std::map<std::pair<long, long>, C> source;
    for (int k1 = 1; k1 < k; ++k1) {
      const auto& r1 = rows_[static_cast<size_t>(k1) - 1];
      const auto& r2 = rows_[static_cast<size_t>(k - k1) - 1];
      for (const auto& t1 : r1.terms)
        for (const auto& t2 : r2.terms) {
          std::pair<long, long> key{t1.h + t2.h, collapsed_ ? t1.h + t2.h : t1.l + t2.l};
          auto it = source.find(key);
          if (it == source.end())
            source.emplace(key, t1.coeff * t2.coeff);
          else
            it->second += t1.coeff * t2.coeff;
        }
    }
    SeriesT row = new_row(k);
    C total = a0_of(0);  // zero of the right flavour
    for (const auto& [hl, s] : source) {
      if (Ops<SeriesT>::coeff_zero(s)) continue;
      C c = Ops<SeriesT>::coupling(k, hl.first, hl.second, nu_, alpha_, prec_) * s;
      total += c;
      row.terms.push_back({hl.first, hl.second, std::move(c)});
    }
    // Top coefficient at (k^2, k^3) from a_k(0) = a_{0k}.
    C top = row.a0k - total;
    if (!Ops<SeriesT>::coeff_zero(top)) row.terms.push_back({ksq, kcb, std::move(top)});
    rows_.push_back(std::move(row));
  }
}

template class KdvbFamilyT<ExpSeriesQ>;
template class KdvbFamilyT<ExpSeriesF>;

ExpSeriesQ kdvb_table(int k, const std::vector<GaussianRational>& init, const ModelParams& params) {
  params.validate_for_exponomial();
  if (k < 1) throw std::invalid_argument("kdvb_table: k must be >= 1");
  KdvbFamilyQ family(init, params.nu, params.alpha);
  return family.row(k);
}

ExpSeriesF kdvb_table(int k, const std::vector<BigComplex>& init, const BigFloat& nu,
                      const BigFloat& alpha, mpfr_prec_t precision) {
  if (k < 1) throw std::invalid_argument("kdvb_table: k must be >= 1");
  if (precision < kMinPrec) throw std::invalid_argument("kdvb_table: precision must be >= 53");
  KdvbFamilyF family(init, nu, alpha, precision);
  return family.row(k);
}

StructuralReport structural_check(const ExpSeriesQ& s, const GaussianRational* single_mode_a01) {
  StructuralReport rep;
  const int k = s.k;
  rep.k = k;
  rep.zero_sum = (s.sum() == s.a0k);

  const long ksq = static_cast<long>(k) * k;
  const long kcb = ksq * static_cast<long>(k);
  bool hgap_ok = true, lgap_ok = true;
  for (const auto& t : s.terms) {
    if (t.h > s.gap_h() && t.h < ksq && !t.coeff.is_zero()) hgap_ok = false;
    if (!s.l_collapsed && t.l > s.gap_l() && t.l < kcb && !t.coeff.is_zero()) lgap_ok = false;
  }
  rep.u_gap = hgap_ok;
  if (!s.l_collapsed) rep.v_gap = lgap_ok;

  if (single_mode_a01 != nullptr && s.alpha == 0) {
    GaussianRational lead_expected =
        GaussianRational(Rational(0), Rational(3) / s.nu).pow_u(static_cast<unsigned>(k - 1)) *
        single_mode_a01->pow_u(static_cast<unsigned>(k));
    const GaussianRational* lead = s.find(k, k);
    GaussianRational lead_actual = lead ? *lead : GaussianRational{};
    rep.leading_coeff = (lead_actual == lead_expected);
    if (k >= 2) {
      const GaussianRational* kp2 = s.find(k + 2, k + 2);
      GaussianRational kp2_actual = kp2 ? *kp2 : GaussianRational{};
      rep.k_plus_2 = (kp2_actual == -(GaussianRational(Rational(k) / 2) * lead_actual));
      bool odd_ok = true;
      for (const auto& t : s.terms)
        if ((t.h - k) % 2 != 0 && !t.coeff.is_zero()) odd_ok = false;
      rep.odd_gap = odd_ok;
    }
  }
  return rep;
}

StructuralReport structural_check(const ExpSeriesF& s, double tol_rel) {
  StructuralReport rep;
  const int k = s.k;
  rep.k = k;
  if (tol_rel <= 0) tol_rel = std::ldexp(1.0, -static_cast<int>(s.prec) + 24);

  BigFloat scale(0L, s.prec);
  for (const auto& t : s.terms) {
    BigFloat m = abs(t.coeff);
    if (m > scale) scale = m;
  }
  BigFloat one(1L, s.prec);
  if (scale < one) scale = one;
  BigFloat tol = BigFloat(tol_rel, 64) * scale;

  rep.zero_sum = (abs(s.sum() - s.a0k) <= tol);

  const long ksq = static_cast<long>(k) * k;
  const long kcb = ksq * static_cast<long>(k);
  bool hgap_ok = true, lgap_ok = true;
  for (const auto& t : s.terms) {
    if (t.h > s.gap_h() && t.h < ksq && abs(t.coeff) > tol) hgap_ok = false;
    if (!s.l_collapsed && t.l > s.gap_l() && t.l < kcb && abs(t.coeff) > tol) lgap_ok = false;
  }
  rep.u_gap = hgap_ok;
  if (!s.l_collapsed) rep.v_gap = lgap_ok;
  return rep;
}

}  // namespace cburgers

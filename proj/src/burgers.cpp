#include "cburgers/burgers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cburgers {

const GaussianRational* CoeffTable::find(long m) const {
  for (const auto& [mm, c] : entries)
    if (mm == m) return &c;
  return nullptr;
}

GaussianRational CoeffTable::sum() const {
  GaussianRational s;
  for (const auto& [m, c] : entries) s += c;
  return s;
}

BurgersFamily::BurgersFamily(GaussianRational a0, Rational nu)
    : a0_(std::move(a0)), nu_(std::move(nu)) {
  if (nu_ <= 0) throw std::invalid_argument("BurgersFamily: nu must be > 0");
}

int BurgersFamily::rows_built() const {
  std::shared_lock lock(mu_);
  return static_cast<int>(rows_.size());
}

const CoeffTable& BurgersFamily::row(int k) const {
  if (k < 1) throw std::invalid_argument("BurgersFamily: k must be >= 1");
  {
    std::shared_lock lock(mu_);
    if (k <= static_cast<int>(rows_.size())) return rows_[static_cast<size_t>(k) - 1];
  }
  build_up_to(k);
  std::shared_lock lock(mu_);
  return rows_[static_cast<size_t>(k) - 1];
}

void BurgersFamily::build_up_to(int k_target) const {
  std::unique_lock lock(mu_);
  if (rows_.empty()) {
    CoeffTable row1;
    row1.k = 1;
    row1.a0 = a0_;
    row1.nu = nu_;
    if (!a0_.is_zero()) row1.entries.emplace_back(1, a0_);
    rows_.push_back(std::move(row1));
  }
  for (int k = static_cast<int>(rows_.size()) + 1; k <= k_target; ++k) {
    const long ksq = static_cast<long>(k) * k;
    // Convolve all lower rows: source(m) = sum over k1+k2=k, m1+m2=m of
    // alpha_{k1,m1} alpha_{k2,m2}.
    std::map<long, GaussianRational> source;
    for (int k1 = 1; k1 < k; ++k1) {
      const auto& r1 = rows_[static_cast<size_t>(k1) - 1];
      const auto& r2 = rows_[static_cast<size_t>(k - k1) - 1];
      for (const auto& [m1, c1] : r1.entries)
        for (const auto& [m2, c2] : r2.entries) source[m1 + m2] += c1 * c2;
    }
    CoeffTable row;
    row.k = k;
    row.a0 = a0_;
    row.nu = nu_;
    GaussianRational total;
    for (const auto& [m, s] : source) {
      if (s.is_zero()) continue;
      // alpha_{k,m} = 3ik / (nu (k^2 - m)) * source(m); m < k^2 always holds
      // here since m <= k1^2 + k2^2 <= k^2 - 2(k-1).
      GaussianRational c = GaussianRational(Rational(0), Rational(3 * k)) * s /
                           GaussianRational(nu_ * Rational(ksq - m));
      total += c;
      row.entries.emplace_back(m, std::move(c));
    }
    // a_k(0) = 0 for k >= 2 pins the top coefficient.
    GaussianRational top = -total;
    if (!top.is_zero()) row.entries.emplace_back(ksq, std::move(top));
    rows_.push_back(std::move(row));
  }
}

CoeffTable burgers_table(int k, const GaussianRational& a0, const Rational& nu) {
  if (k < 1) throw std::invalid_argument("burgers_table: k must be >= 1");
  if (nu <= 0) throw std::invalid_argument("burgers_table: nu must be > 0");
  BurgersFamily family(a0, nu);
  return family.row(k);
}

StructuralReport structural_check(const CoeffTable& table) {
  StructuralReport rep;
  const int k = table.k;
  rep.k = k;

  // Sum of coefficients equals a_k(0): a0 for k = 1, zero for k >= 2.
  GaussianRational expected_sum = (k == 1) ? table.a0 : GaussianRational{};
  rep.zero_sum = (table.sum() == expected_sum);

  // alpha_{k,k} = (3i/nu)^{k-1} a^k
  GaussianRational lead_expected =
      GaussianRational(Rational(0), Rational(3) / table.nu).pow_u(static_cast<unsigned>(k - 1)) *
      table.a0.pow_u(static_cast<unsigned>(k));
  const GaussianRational* lead = table.find(k);
  GaussianRational lead_actual = lead ? *lead : GaussianRational{};
  rep.leading_coeff = (lead_actual == lead_expected);

  if (k >= 2) {
    const GaussianRational* kp2 = table.find(k + 2);
    GaussianRational kp2_actual = kp2 ? *kp2 : GaussianRational{};
    rep.k_plus_2 = (kp2_actual == -(GaussianRational(Rational(k) / 2) * lead_actual));

    bool odd_ok = true;
    bool gap_ok = true;
    const long ksq = static_cast<long>(k) * k;
    const long u = table.gap_start();
    for (const auto& [m, c] : table.entries) {
      if ((m - k) % 2 != 0 && !c.is_zero()) odd_ok = false;
      if (m > u && m < ksq && !c.is_zero()) gap_ok = false;
    }
    rep.odd_gap = odd_ok;
    rep.u_gap = gap_ok;
  }
  return rep;
}

}  // namespace cburgers

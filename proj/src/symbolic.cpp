#include "cburgers/symbolic.hpp"

#include <mutex>
#include <stdexcept>

namespace cburgers {

long monomial_weight(const MonomialKey& key) {
  long w = 0;
  for (size_t i = 0; i < key.size(); ++i) w += static_cast<long>(i + 1) * key[i];
  return w;
}

SymbolicFamily::SymbolicFamily(Rational nu, Rational alpha)
    : nu_(std::move(nu)), alpha_(std::move(alpha)) {
  if (nu_ == 0 && alpha_ == 0)
    throw std::invalid_argument("SymbolicFamily: (nu, alpha) = (0, 0) has no exponomial form");
}

const SymbolicRow& SymbolicFamily::row(int k) const {
  if (k < 1) throw std::invalid_argument("SymbolicFamily: k must be >= 1");
  {
    std::shared_lock lock(mu_);
    if (k <= static_cast<int>(rows_.size())) return rows_[static_cast<size_t>(k) - 1];
  }
  build_up_to(k);
  std::shared_lock lock(mu_);
  return rows_[static_cast<size_t>(k) - 1];
}

void SymbolicFamily::build_up_to(int k_target) const {
  std::unique_lock lock(mu_);
  if (rows_.empty()) {
    SymbolicRow row1;
    row1.k = 1;
    row1.cells[{1, 1}][MonomialKey{1}] = GaussianRational(Rational(1));
    rows_.push_back(std::move(row1));
  }
  for (int k = static_cast<int>(rows_.size()) + 1; k <= k_target; ++k) {
    const long ksq = static_cast<long>(k) * k;
    const long kcb = ksq * static_cast<long>(k);
    SymbolicRow row;
    row.k = k;

    std::map<std::pair<long, long>, MonomialPoly> source;
    for (int k1 = 1; k1 < k; ++k1) {
      const auto& r1 = rows_[static_cast<size_t>(k1) - 1];
      const auto& r2 = rows_[static_cast<size_t>(k - k1) - 1];
      for (const auto& [hl1, p1] : r1.cells)
        for (const auto& [hl2, p2] : r2.cells) {
          MonomialPoly& target = source[{hl1.first + hl2.first, hl1.second + hl2.second}];
          for (const auto& [m1, c1] : p1)
            for (const auto& [m2, c2] : p2) {
              MonomialKey key(static_cast<size_t>(k), 0);
              for (size_t i = 0; i < m1.size(); ++i) key[i] += m1[i];
              for (size_t i = 0; i < m2.size(); ++i) key[i] += m2[i];
              target[key] += c1 * c2;
            }
        }
    }

    MonomialPoly top;
    MonomialKey ek(static_cast<size_t>(k), 0);
    ek[static_cast<size_t>(k) - 1] = 1;
    top[ek] = GaussianRational(Rational(1));

    for (const auto& [hl, poly] : source) {
      GaussianRational coupling =
          GaussianRational(Rational(0), Rational(3 * k)) /
          GaussianRational(nu_ * Rational(ksq - hl.first), -(alpha_ * Rational(kcb - hl.second)));
      MonomialPoly scaled;
      for (const auto& [key, c] : poly) {
        GaussianRational v = coupling * c;
        if (v.is_zero()) continue;
        top[key] -= v;
        scaled.emplace(key, std::move(v));
      }
      if (!scaled.empty()) row.cells.emplace(hl, std::move(scaled));
    }
    for (auto it = top.begin(); it != top.end();)
      it = it->second.is_zero() ? top.erase(it) : std::next(it);
    if (!top.empty()) row.cells.emplace(std::make_pair(ksq, kcb), std::move(top));
    rows_.push_back(std::move(row));
  }
}

std::map<MonomialKey, std::map<std::pair<long, long>, GaussianRational>> kdvb_symbolic_table(
    int k, const ModelParams& params, int k_sym_max) {
  params.validate_for_exponomial();
  if (k < 1) throw std::invalid_argument("kdvb_symbolic_table: k must be >= 1");
  if (k > k_sym_max)
    throw std::invalid_argument("kdvb_symbolic_table: k exceeds k_sym_max (monomial count is the partition number)");
  SymbolicFamily family(params.nu, params.alpha);
  const SymbolicRow& row = family.row(k);
  std::map<MonomialKey, std::map<std::pair<long, long>, GaussianRational>> out;
  for (const auto& [hl, poly] : row.cells)
    for (const auto& [key, c] : poly) out[key][hl] = c;
  return out;
}

std::map<std::pair<long, long>, GaussianRational> substitute_symbolic(
    const SymbolicRow& row, const std::vector<GaussianRational>& init) {
  std::map<std::pair<long, long>, GaussianRational> out;
  for (const auto& [hl, poly] : row.cells) {
    GaussianRational cell;
    for (const auto& [key, c] : poly) {
      GaussianRational mono(Rational(1));
      bool zero = false;
      for (size_t i = 0; i < key.size() && !zero; ++i) {
        if (key[i] == 0) continue;
        GaussianRational base =
            i < init.size() ? init[i] : GaussianRational{};
        if (base.is_zero()) {
          zero = true;
          break;
        }
        mono *= base.pow_u(key[i]);
      }
      if (!zero) cell += c * mono;
    }
    if (!cell.is_zero()) out.emplace(hl, std::move(cell));
  }
  return out;
}

}  // namespace cburgers

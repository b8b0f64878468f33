#pragma once

#include <deque>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "cburgers/rational.hpp"

namespace cburgers {

// Gap thresholds: coefficients vanish for U(k) < m < k^2 (Burgers index m) and
// V(k) < l < k^3 (dispersive index l).
inline long gap_start_u(int k) { return static_cast<long>(k) * k - 2L * k + 2; }
inline long gap_start_v(int k) {
  long kk = static_cast<long>(k);
  return kk * kk * kk - 3 * kk * kk + 3 * kk;
}

// One mode of the exact Burgers solution for u0 = a e^{ix}:
//   a_k(t) = sum_{m=k}^{k^2} entries[m] * e^{-m nu t},
// with exact Gaussian-rational coefficients. Entries are sorted by m; exact
// zeros are not stored.
struct CoeffTable {
  int k = 0;
  GaussianRational a0;
  Rational nu;
  std::vector<std::pair<long, GaussianRational>> entries;

  long gap_start() const { return gap_start_u(k); }
  const GaussianRational* find(long m) const;
  GaussianRational sum() const;
};

// Memoized rows 1..k for fixed (a0, nu). Rows are built bottom-up; the cache
// takes a shared lock for reads and an exclusive lock to extend.
class BurgersFamily {
 public:
  BurgersFamily(GaussianRational a0, Rational nu);

  const CoeffTable& row(int k) const;
  int rows_built() const;
  const GaussianRational& a0() const { return a0_; }
  const Rational& nu() const { return nu_; }

 private:
  void build_up_to(int k) const;

  GaussianRational a0_;
  Rational nu_;
  mutable std::shared_mutex mu_;
  mutable std::deque<CoeffTable> rows_;
};

// Convenience one-shot builder (memoizes rows 1..k internally).
CoeffTable burgers_table(int k, const GaussianRational& a0, const Rational& nu);

// Flags from the structural identities; nullopt when a check does not apply
// to the object at hand. In exact mode every applicable flag must be true.
struct StructuralReport {
  int k = 0;
  std::optional<bool> zero_sum;       // sum of coefficients reproduces a_k(0)
  std::optional<bool> leading_coeff;  // alpha_{k,k} = (3i/nu)^{k-1} a^k
  std::optional<bool> k_plus_2;       // alpha_{k,k+2} = -(k/2) alpha_{k,k}
  std::optional<bool> odd_gap;        // alpha_{k,k+n} = 0 for odd n
  std::optional<bool> u_gap;          // alpha_{k,m} = 0 for U(k) < m < k^2
  std::optional<bool> v_gap;          // a_{k,h,l} = 0 for V(k) < l < k^3

  bool ok() const {
    auto pass = [](const std::optional<bool>& f) { return !f.has_value() || *f; };
    return pass(zero_sum) && pass(leading_coeff) && pass(k_plus_2) && pass(odd_gap) &&
           pass(u_gap) && pass(v_gap);
  }
};

StructuralReport structural_check(const CoeffTable& table);

}  // namespace cburgers

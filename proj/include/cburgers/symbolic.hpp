#pragma once

#include <deque>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "cburgers/params.hpp"
#include "cburgers/rational.hpp"

namespace cburgers {

// Multiplicities (j_1, ..., j_k) of the monomial a_01^{j_1} ... a_0k^{j_k};
// key[i] = j_{i+1} and sum (i+1) * key[i] = k for a row-k key.
using MonomialKey = std::vector<unsigned>;

long monomial_weight(const MonomialKey& key);

// Coefficients C(alpha, nu, k, h, l, j_1..j_k), resolved per monomial: each
// (h, l) cell carries an exact polynomial in the initial data.
using MonomialPoly = std::map<MonomialKey, GaussianRational>;

struct SymbolicRow {
  int k = 0;
  std::map<std::pair<long, long>, MonomialPoly> cells;
};

inline constexpr int kSymMaxDefault = 8;

// Memoized symbolic rows for fixed rational (nu, alpha). The monomial count
// per row is the partition number N_k, so rows grow super-polynomially; keep
// k small.
class SymbolicFamily {
 public:
  SymbolicFamily(Rational nu, Rational alpha);
  const SymbolicRow& row(int k) const;
  const Rational& nu() const { return nu_; }
  const Rational& alpha() const { return alpha_; }

 private:
  void build_up_to(int k) const;
  Rational nu_, alpha_;
  mutable std::shared_mutex mu_;
  mutable std::deque<SymbolicRow> rows_;
};

// map monomial -> map (h, l) -> C. Rejects k > k_sym_max.
std::map<MonomialKey, std::map<std::pair<long, long>, GaussianRational>> kdvb_symbolic_table(
    int k, const ModelParams& params, int k_sym_max = kSymMaxDefault);

// Numeric substitution of initial data into a symbolic row; the result must
// reproduce the kdvb_table coefficients exactly.
std::map<std::pair<long, long>, GaussianRational> substitute_symbolic(
    const SymbolicRow& row, const std::vector<GaussianRational>& init);

}  // namespace cburgers

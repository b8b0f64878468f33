#include "cburgers/partitions.hpp"

#include <cmath>
#include <stdexcept>

namespace cburgers {

PartitionTable::PartitionTable(int k_max) {
  if (k_max < 0) throw std::invalid_argument("PartitionTable: k_max must be >= 0");
  p_.assign(static_cast<size_t>(k_max) + 1, 0);
  p_[0] = 1;
  for (int part = 1; part <= k_max; ++part)
    for (int n = part; n <= k_max; ++n) p_[n] += p_[n - part];
}

const mpz_class& PartitionTable::count(int k) const {
  if (k < 0 || k > k_max()) throw std::out_of_range("PartitionTable: k out of range");
  return p_[static_cast<size_t>(k)];
}

PartitionRecord partition_count(int k) {
  if (k < 1) throw std::invalid_argument("partition_count: k must be >= 1");
  PartitionTable table(k);
  return {k, table.count(k)};
}

HardyRamanujanReport hardy_ramanujan_report(int k_max) {
  if (k_max < 10) throw std::invalid_argument("hardy_ramanujan_report: k_max must be >= 10");
  PartitionTable table(k_max);
  HardyRamanujanReport rep;
  rep.rows.reserve(static_cast<size_t>(k_max));
  const double pi = 3.14159265358979323846;
  double prev_bound = 0;
  rep.bound_ratio_decreasing_tail = true;
  for (int k = 1; k <= k_max; ++k) {
    HardyRamanujanRow row;
    row.k = k;
    row.n_k = table.count(k);
    double nk = row.n_k.get_d();
    row.ratio_asym = nk * 4.0 * std::sqrt(3.0) * k / std::exp(pi * std::sqrt(2.0 * k / 3.0));
    row.ratio_bound = nk * k / std::exp(2.0 * std::sqrt(2.0 * k));
    if (k >= 10 && k > 10 && row.ratio_bound > prev_bound) rep.bound_ratio_decreasing_tail = false;
    if (k >= 10) prev_bound = row.ratio_bound;
    rep.c1_estimate = std::max(rep.c1_estimate, row.ratio_bound);
    rep.rows.push_back(std::move(row));
  }
  rep.min_ratio_asym = 1e300;
  rep.max_ratio_asym = -1e300;
  for (const auto& row : rep.rows) {
    if (row.k < 100) continue;
    rep.min_ratio_asym = std::min(rep.min_ratio_asym, row.ratio_asym);
    rep.max_ratio_asym = std::max(rep.max_ratio_asym, row.ratio_asym);
  }
  if (rep.min_ratio_asym > rep.max_ratio_asym) rep.min_ratio_asym = rep.max_ratio_asym = 0;
  return rep;
}

}  // namespace cburgers

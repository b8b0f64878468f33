#pragma once

#include <gmpxx.h>

#include <vector>

namespace cburgers {

// N_k: the number of nonnegative integer solutions of j_1 + 2 j_2 + ... + k j_k = k,
// i.e. the partition function p(k). Exact big integers throughout.
struct PartitionRecord {
  int k = 0;
  mpz_class count;
};

// Immutable table of p(0..k_max), built bottom-up (coin-style accumulation
// over part sizes). Safe for concurrent reads once constructed.
class PartitionTable {
 public:
  explicit PartitionTable(int k_max);
  int k_max() const { return static_cast<int>(p_.size()) - 1; }
  const mpz_class& count(int k) const;

 private:
  std::vector<mpz_class> p_;
};

PartitionRecord partition_count(int k);

struct HardyRamanujanRow {
  int k = 0;
  mpz_class n_k;
  double ratio_asym = 0;   // N_k * 4*sqrt(3) * k / e^{pi sqrt(2k/3)}
  double ratio_bound = 0;  // N_k * k / e^{2 sqrt(2k)}
};

struct HardyRamanujanReport {
  std::vector<HardyRamanujanRow> rows;  // k = 1..k_max
  double c1_estimate = 0;               // sup_k ratio_bound (empirical constant)
  double min_ratio_asym = 0, max_ratio_asym = 0;  // over k in [100, k_max]
  bool bound_ratio_decreasing_tail = false;       // ratio_bound decreasing for k >= 10
};

// pre: k_max >= 10.
HardyRamanujanReport hardy_ramanujan_report(int k_max);

}  // namespace cburgers

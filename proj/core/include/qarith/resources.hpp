#pragma once

#include <string>
#include <vector>

#include "qarith/arithmetic.hpp"

namespace qarith {

struct CountSummary {
  std::uint64_t worst = 0;
  double mean = 0.0;
};

/// u-step counts of the ripple-carry successor at digit j, swept over every
/// basis state. Worst case is the full carry chain, L - j + 1.
CountSummary count_successor(std::uint32_t j, std::uint32_t k, std::uint32_t L);

/// k^(j-1): repetitions of the j=1 successor needed to emulate the j-th one
/// when per-digit successors are not available. Symbolic; throws
/// std::overflow_error beyond 64 bits.
std::uint64_t count_naive_successor_power(std::uint32_t j, std::uint32_t k);

/// u-step counts of + swept over all operand pairs, with the closed-form
/// worst-case bound (k-1) L (L+1) / 2.
CountSummary count_plus(std::uint32_t k, std::uint32_t L);
std::uint64_t plus_usteps_bound(std::uint32_t k, std::uint32_t L);

/// u-step counts of x over all (s, w) inputs with zeroed work registers.
CountSummary count_times(std::uint32_t k, std::uint32_t L);
/// Compositional bound: (1 + (k-1)L) plus applications plus L Q shifts.
std::uint64_t times_usteps_bound(std::uint32_t k, std::uint32_t L);

struct ScalingRow {
  std::uint32_t k, L, j;  // j = 0 for whole-register operations
  std::string operation;
  std::uint64_t worst_count;
  double mean_count;
  std::uint64_t bound;
  std::string classification;  // "polynomial" or "exponential"
};

struct ScalingReport {
  std::vector<ScalingRow> rows;

  /// CSV with the mandatory header
  /// k,L,j,operation,worst_count,mean_count,bound,classification.
  std::string to_csv() const;
};

/// Deterministic sweep over 2 <= k <= kmax, 1 <= L <= Lmax: measured counts
/// for successor/plus/times against their polynomial bounds, plus the
/// exponential naive-power column k^(j-1).
ScalingReport scaling_report(std::uint32_t kmax, std::uint32_t Lmax);

}  // namespace qarith

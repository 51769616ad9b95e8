#include "qarith/resources.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qarith {

CountSummary count_successor(std::uint32_t j, std::uint32_t k, std::uint32_t L) {
  RegisterShape shape(k, L, 1);
  CountSummary summary;
  std::uint64_t total = 0;
  for (Index b = 0; b < shape.dimension(); ++b) {
    ResourceLedger led;
    ripple_successor_index(b, shape, j, 1, &led);
    summary.worst = std::max(summary.worst, led.u_steps);
    total += led.u_steps;
  }
  summary.mean = static_cast<double>(total) / static_cast<double>(shape.dimension());
  return summary;
}

std::uint64_t count_naive_successor_power(std::uint32_t j, std::uint32_t k) {
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  auto result = checked_pow(k, j - 1);
  if (!result) throw std::overflow_error("k^(j-1) exceeds 64 bits");
  return *result;
}

std::uint64_t plus_usteps_bound(std::uint32_t k, std::uint32_t L) {
  // Each digit j contributes at most (k-1) successor calls of worst cost
  // L - j + 1: (k-1) * sum_j (L-j+1) = (k-1) L (L+1) / 2.
  return static_cast<std::uint64_t>(k - 1) * L * (L + 1) / 2;
}

CountSummary count_plus(std::uint32_t k, std::uint32_t L) {
  RegisterShape two(k, L, 2);
  PermutationOperator plus = plus_op(two);
  CountSummary summary;
  std::uint64_t total = 0;
  for (Index idx = 0; idx < two.dimension(); ++idx) {
    ResourceLedger led;
    plus.apply_index(idx, &led);
    summary.worst = std::max(summary.worst, led.u_steps);
    total += led.u_steps;
  }
  summary.mean = static_cast<double>(total) / static_cast<double>(two.dimension());
  return summary;
}

std::uint64_t times_usteps_bound(std::uint32_t k, std::uint32_t L) {
  // One +_{2,3} plus at most (k-1)L applications of +_{3,4}, each bounded
  // by the plus worst case, plus L Q shifts of L site moves each.
  return (1 + static_cast<std::uint64_t>(k - 1) * L) * plus_usteps_bound(k, L) +
         static_cast<std::uint64_t>(L) * L;
}

CountSummary count_times(std::uint32_t k, std::uint32_t L) {
  RegisterShape four(k, L, 4);
  PermutationOperator times = times_op(four);
  CountSummary summary;
  std::uint64_t total = 0;
  Index pairs = 0;
  for (Index s = 0; s < four.register_dimension(); ++s)
    for (Index w = 0; w < four.register_dimension(); ++w) {
      Index idx = s + w * four.register_dimension();
      ResourceLedger led;
      times.apply_index(idx, &led);
      summary.worst = std::max(summary.worst, led.u_steps);
      total += led.u_steps;
      ++pairs;
    }
  summary.mean = static_cast<double>(total) / static_cast<double>(pairs);
  return summary;
}

std::string ScalingReport::to_csv() const {
  std::ostringstream out;
  out << "k,L,j,operation,worst_count,mean_count,bound,classification\n";
  for (const auto& row : rows)
    out << row.k << ',' << row.L << ',' << row.j << ',' << row.operation << ','
        << row.worst_count << ',' << row.mean_count << ',' << row.bound << ','
        << row.classification << '\n';
  return out.str();
}

ScalingReport scaling_report(std::uint32_t kmax, std::uint32_t Lmax) {
  ScalingReport report;
  for (std::uint32_t k = 2; k <= kmax; ++k)
    for (std::uint32_t L = 1; L <= Lmax; ++L) {
      for (std::uint32_t j = 1; j <= L; ++j) {
        CountSummary s = count_successor(j, k, L);
        report.rows.push_back({k, L, j, "successor", s.worst, s.mean,
                               static_cast<std::uint64_t>(L - j + 1),
                               "polynomial"});
        report.rows.push_back({k, L, j, "naive_power", count_naive_successor_power(j, k),
                               static_cast<double>(count_naive_successor_power(j, k)),
                               count_naive_successor_power(j, k), "exponential"});
      }
      CountSummary p = count_plus(k, L);
      report.rows.push_back({k, L, 0, "plus", p.worst, p.mean,
                             plus_usteps_bound(k, L), "polynomial"});
      CountSummary t = count_times(k, L);
      report.rows.push_back({k, L, 0, "times", t.worst, t.mean,
                             times_usteps_bound(k, L), "polynomial"});
    }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const ScalingRow& a, const ScalingRow& b) {
              return std::tie(a.k, a.L, a.j, a.operation) <
                     std::tie(b.k, b.L, b.j, b.operation);
            });
  return report;
}

}  // namespace qarith

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <tuple>

#include "qarith/resources.hpp"
#include "qarith/successor.hpp"

using namespace qarith;

TEST_CASE("successor worst case is the full carry chain L - j + 1") {
  for (std::uint32_t L = 1; L <= 10; ++L)
    for (std::uint32_t j = 1; j <= L; ++j) {
      CountSummary s = count_successor(j, 2, L);
      CHECK(s.worst == L - j + 1);
      CHECK(s.mean <= static_cast<double>(s.worst));
      CHECK(s.mean >= 1.0);  // every call touches at least one digit
    }
  CHECK(count_successor(1, 3, 4).worst == 4);
}

TEST_CASE("successor mean is bounded by a constant in L") {
  // The expected carry length is sum_i k^-i < k/(k-1), independent of L.
  for (std::uint32_t L = 2; L <= 10; ++L)
    CHECK(count_successor(1, 2, L).mean < 2.0);
  for (std::uint32_t L = 2; L <= 6; ++L)
    CHECK(count_successor(1, 3, L).mean < 1.5);
}

TEST_CASE("naive repetition count grows as k^(j-1)") {
  CHECK(count_naive_successor_power(1, 2) == 1);
  CHECK(count_naive_successor_power(11, 2) == 1024);
  CHECK(count_naive_successor_power(21, 2) == 1048576);
  CHECK(count_naive_successor_power(5, 3) == 81);
  for (std::uint32_t j = 2; j <= 20; ++j)
    CHECK(count_naive_successor_power(j, 2) ==
          2 * count_naive_successor_power(j - 1, 2));
  CHECK_THROWS_AS(count_naive_successor_power(66, 2), std::overflow_error);
}

TEST_CASE("plus stays within its closed-form bound") {
  for (std::uint32_t k : {2u, 3u})
    for (std::uint32_t L = 1; L <= 3; ++L) {
      CountSummary p = count_plus(k, L);
      CHECK(p.worst <= plus_usteps_bound(k, L));
      CHECK(p.worst > 0);
      CHECK(p.mean <= static_cast<double>(p.worst));
    }
  CHECK(plus_usteps_bound(2, 3) == 6);
  CHECK(plus_usteps_bound(3, 4) == 20);
}

TEST_CASE("times stays within its compositional bound") {
  for (std::uint32_t k : {2u, 3u})
    for (std::uint32_t L = 1; L <= 2; ++L) {
      CountSummary t = count_times(k, L);
      CHECK(t.worst <= times_usteps_bound(k, L));
      CHECK(t.worst > 0);
    }
  CHECK(times_usteps_bound(2, 3) == (1 + 3) * 6 + 9);
}

TEST_CASE("ledger accounting") {
  RegisterShape shape(2, 3);
  ResourceLedger led;
  // 7 = (1,1,1): the carry runs the full chain.
  successor_implicit(shape, 1).apply_index(7, &led);
  CHECK(led.u_steps == 3);
  CHECK(led.projector_evals == 3);
  CHECK(led.successor_calls == 1);

  ResourceLedger other;
  other.u_steps = 2;
  other.successor_calls = 1;
  led += other;
  CHECK(led.u_steps == 5);
  CHECK(led.successor_calls == 2);

  ResourceLedger plus_led;
  plus_op(shape.with_registers(2)).apply_index(3 + 6 * 8, &plus_led);
  CHECK(plus_led.successor_calls > 0);
  CHECK(plus_led.u_steps >= plus_led.successor_calls);
  CHECK(plus_led.u_steps <= plus_usteps_bound(2, 3));
}

TEST_CASE("scaling report format and ordering") {
  ScalingReport report = scaling_report(3, 3);
  std::string csv = report.to_csv();
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "k,L,j,operation,worst_count,mean_count,bound,classification");

  std::size_t data_lines = 0;
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(!line.empty());
    ++data_lines;
  }
  CHECK(data_lines == report.rows.size());
  // Per (k, L): L successor rows, L naive rows, plus and times.
  // Sum over k in {2,3}, L in {1..3}: 2 * (2*1+2 + 2*2+2 + 2*3+2) = 36.
  CHECK(report.rows.size() == 36);

  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& a = report.rows[i - 1];
    const auto& b = report.rows[i];
    CHECK(std::tie(a.k, a.L, a.j, a.operation) <=
          std::tie(b.k, b.L, b.j, b.operation));
  }
  for (const auto& row : report.rows) {
    if (row.operation == "naive_power")
      CHECK(row.classification == "exponential");
    else
      CHECK(row.classification == "polynomial");
    CHECK(row.worst_count <= row.bound);
  }
}

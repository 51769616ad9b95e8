#pragma once

#include <cstdint>

namespace qarith {

/// Accumulator for elementary-operation counts. One u-step is a single-position
/// controlled increment (or one site move in a Q shift); projector evaluations
/// count digit tests. Ledgers are additive under composition; callers pass
/// their own accumulator, so parallel runs merge independent ledgers.
struct ResourceLedger {
  std::uint64_t u_steps = 0;
  std::uint64_t projector_evals = 0;
  std::uint64_t successor_calls = 0;
  std::uint64_t targeted_plus_calls = 0;

  ResourceLedger& operator+=(const ResourceLedger& other) {
    u_steps += other.u_steps;
    projector_evals += other.projector_evals;
    successor_calls += other.successor_calls;
    targeted_plus_calls += other.targeted_plus_calls;
    return *this;
  }

  std::uint64_t total() const {
    return u_steps + projector_evals + successor_calls + targeted_plus_calls;
  }

  friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;
};

}  // namespace qarith

#pragma once

#include "qarith/permutation.hpp"

namespace qarith {

/// Polarity of a single-position digit projector.
enum class ProjectorPolarity { kEqual, kNotEqual };

/// P_{m,j} (or its complement): does the digit at global position j equal m?
struct ProjectorSpec {
  std::uint32_t position;  // 1-based, 1 .. L*registers
  std::uint8_t digit;      // 0 .. k-1
  ProjectorPolarity polarity = ProjectorPolarity::kEqual;

  bool matches(Index idx, const RegisterShape& shape) const;
};

/// Single-digit cyclic shift u_j of period k at global position j.
PermutationOperator cyclic_shift(const RegisterShape& shape, std::uint32_t position);

/// Successor on register `reg` at digit position j (1-based within the
/// register): adds k^(j-1) mod k^L to that register's value. The ripple-carry
/// recursion: increment digit j; carry into j+1 when the digit wraps.
PermutationOperator successor_implicit(const RegisterShape& shape, std::uint32_t j,
                                       std::uint32_t reg = 1);

/// Same action, evaluated in the sum-over-carry-prefixes form: the first
/// position n >= j whose digit is not k-1 is incremented and all positions
/// j..n-1 reset to 0; if there is no such n, positions j..L all reset.
PermutationOperator successor_explicit(const RegisterShape& shape, std::uint32_t j,
                                       std::uint32_t reg = 1);

/// Inverse of the successor: subtracts k^(j-1) mod k^L (borrow ripple).
PermutationOperator successor_adjoint(const RegisterShape& shape, std::uint32_t j,
                                      std::uint32_t reg = 1);

// Index-level rules behind the operators above; exposed for callers that
// want ledger-counted application without constructing an operator.
Index ripple_successor_index(Index idx, const RegisterShape& shape, std::uint32_t j,
                             std::uint32_t reg, ResourceLedger* ledger);
Index ripple_adjoint_index(Index idx, const RegisterShape& shape, std::uint32_t j,
                           std::uint32_t reg, ResourceLedger* ledger);

}  // namespace qarith

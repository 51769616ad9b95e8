#include "qarith/arithmetic.hpp"

#include <stdexcept>

namespace qarith {

namespace {

Index targeted_plus_index(Index idx, const RegisterShape& shape,
                          RegisterTarget target, ResourceLedger* led) {
  if (led) ++led->targeted_plus_calls;
  for (std::uint32_t j = 1; j <= shape.L(); ++j) {
    std::uint32_t pos = (target.source - 1) * shape.L() + j;
    std::uint8_t iterations = index_digit(idx, pos, shape);
    for (std::uint8_t i = 0; i < iterations; ++i) {
      if (led) ++led->successor_calls;
      idx = ripple_successor_index(idx, shape, j, target.destination, led);
    }
  }
  return idx;
}

Index q_shift_index(Index idx, const RegisterShape& shape, std::uint32_t j,
                    ResourceLedger* led) {
  const std::uint32_t L = shape.L();
  const std::uint32_t k = shape.k();
  std::uint8_t w_digit = index_digit(idx, L + (L - j + 1), shape);
  std::uint8_t y_top = index_digit(idx, 2 * L + L, shape);
  // Shift y up one site; the opened first site takes y_L (-) w_{L-j+1}.
  for (std::uint32_t i = L; i >= 2; --i) {
    if (led) ++led->u_steps;
    idx = index_set_digit(idx, 2 * L + i,
                          index_digit(idx, 2 * L + i - 1, shape), shape);
  }
  if (led) ++led->u_steps;
  idx = index_set_digit(
      idx, 2 * L + 1,
      static_cast<std::uint8_t>((y_top + k - w_digit) % k), shape);
  return idx;
}

void check_target(const RegisterShape& shape, RegisterTarget target) {
  if (target.source == target.destination)
    throw std::invalid_argument("targeted plus requires distinct registers");
  if (target.source < 1 || target.source > shape.registers() ||
      target.destination < 1 || target.destination > shape.registers())
    throw std::out_of_range("register target out of range");
}

}  // namespace

PermutationOperator targeted_plus(const RegisterShape& shape, RegisterTarget target) {
  check_target(shape, target);
  return {shape,
          "+_" + std::to_string(target.source) + "," +
              std::to_string(target.destination),
          [shape, target](Index idx, ResourceLedger* led) {
            return targeted_plus_index(idx, shape, target, led);
          }};
}

PermutationOperator plus_op(const RegisterShape& shape) {
  if (shape.registers() != 2)
    throw std::invalid_argument("plus acts on a two-register shape");
  return targeted_plus(shape, {1, 2});
}

PermutationOperator plus_adjoint(const RegisterShape& shape) {
  if (shape.registers() != 2)
    throw std::invalid_argument("plus adjoint acts on a two-register shape");
  return {shape, "+^dag",
          [shape](Index idx, ResourceLedger* led) {
            for (std::uint32_t j = 1; j <= shape.L(); ++j) {
              std::uint8_t iterations = index_digit(idx, j, shape);
              for (std::uint8_t i = 0; i < iterations; ++i)
                idx = ripple_adjoint_index(idx, shape, j, 2, led);
            }
            return idx;
          }};
}

PermutationOperator q_shift(const RegisterShape& shape, std::uint32_t j) {
  if (shape.registers() != 4)
    throw std::invalid_argument("Q_j acts on a four-register shape");
  if (j < 1 || j > shape.L()) throw std::out_of_range("Q_j index out of range");
  return {shape, "Q_" + std::to_string(j),
          [shape, j](Index idx, ResourceLedger* led) {
            return q_shift_index(idx, shape, j, led);
          }};
}

PermutationOperator times_op(const RegisterShape& shape) {
  if (shape.registers() != 4)
    throw std::invalid_argument("times acts on a four-register shape");
  return {shape, "x",
          [shape](Index idx, ResourceLedger* led) {
            idx = targeted_plus_index(idx, shape, {2, 3}, led);
            for (std::uint32_t j = 1; j <= shape.L(); ++j) {
              std::uint8_t s_j = index_digit(idx, j, shape);
              for (std::uint8_t i = 0; i < s_j; ++i)
                idx = targeted_plus_index(idx, shape, {3, 4}, led);
              idx = q_shift_index(idx, shape, j, led);
            }
            return idx;
          }};
}

}  // namespace qarith

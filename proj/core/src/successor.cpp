#include "qarith/successor.hpp"

#include <stdexcept>

namespace qarith {

namespace {

void check_position(const RegisterShape& shape, std::uint32_t position) {
  if (position < 1 || position > shape.positions())
    throw std::out_of_range("position out of range");
}

void check_register(const RegisterShape& shape, std::uint32_t j, std::uint32_t reg) {
  if (reg < 1 || reg > shape.registers())
    throw std::out_of_range("register index out of range");
  if (j < 1 || j > shape.L())
    throw std::out_of_range("digit position out of range");
}

std::uint32_t global_position(const RegisterShape& shape, std::uint32_t j,
                              std::uint32_t reg) {
  return (reg - 1) * shape.L() + j;
}

}  // namespace

bool ProjectorSpec::matches(Index idx, const RegisterShape& shape) const {
  bool equal = index_digit(idx, position, shape) == digit;
  return polarity == ProjectorPolarity::kEqual ? equal : !equal;
}

PermutationOperator cyclic_shift(const RegisterShape& shape, std::uint32_t position) {
  check_position(shape, position);
  return {shape, "u_" + std::to_string(position),
          [shape, position](Index idx, ResourceLedger* led) {
            if (led) ++led->u_steps;
            std::uint8_t d = index_digit(idx, position, shape);
            return index_set_digit(idx, position,
                                   static_cast<std::uint8_t>((d + 1) % shape.k()),
                                   shape);
          }};
}

Index ripple_successor_index(Index idx, const RegisterShape& shape, std::uint32_t j,
                             std::uint32_t reg, ResourceLedger* ledger) {
  const std::uint32_t k = shape.k();
  for (std::uint32_t p = j; p <= shape.L(); ++p) {
    std::uint32_t pos = global_position(shape, p, reg);
    std::uint8_t d = index_digit(idx, pos, shape);
    if (ledger) {
      ++ledger->u_steps;
      ++ledger->projector_evals;
    }
    idx = index_set_digit(idx, pos, static_cast<std::uint8_t>((d + 1) % k), shape);
    if (d != k - 1) break;  // no carry
  }
  return idx;
}

Index ripple_adjoint_index(Index idx, const RegisterShape& shape, std::uint32_t j,
                           std::uint32_t reg, ResourceLedger* ledger) {
  const std::uint32_t k = shape.k();
  for (std::uint32_t p = j; p <= shape.L(); ++p) {
    std::uint32_t pos = global_position(shape, p, reg);
    std::uint8_t d = index_digit(idx, pos, shape);
    if (ledger) {
      ++ledger->u_steps;
      ++ledger->projector_evals;
    }
    idx = index_set_digit(idx, pos, static_cast<std::uint8_t>((d + k - 1) % k), shape);
    if (d != 0) break;  // no borrow
  }
  return idx;
}

PermutationOperator successor_implicit(const RegisterShape& shape, std::uint32_t j,
                                       std::uint32_t reg) {
  check_register(shape, j, reg);
  return {shape, "V+1_" + std::to_string(j),
          [shape, j, reg](Index idx, ResourceLedger* led) {
            if (led) ++led->successor_calls;
            return ripple_successor_index(idx, shape, j, reg, led);
          }};
}

PermutationOperator successor_explicit(const RegisterShape& shape, std::uint32_t j,
                                       std::uint32_t reg) {
  check_register(shape, j, reg);
  return {shape, "V+1x_" + std::to_string(j),
          [shape, j, reg](Index idx, ResourceLedger* led) {
            if (led) ++led->successor_calls;
            const std::uint32_t k = shape.k();
            // Locate the first non-(k-1) digit at or above j; that term of
            // the carry-prefix sum is the only one whose projectors fire.
            std::uint32_t n = j;
            while (n <= shape.L()) {
              if (led) ++led->projector_evals;
              if (index_digit(idx, global_position(shape, n, reg), shape) != k - 1)
                break;
              ++n;
            }
            for (std::uint32_t p = j; p < n; ++p) {
              if (led) ++led->u_steps;
              idx = index_set_digit(idx, global_position(shape, p, reg), 0, shape);
            }
            if (n <= shape.L()) {
              if (led) ++led->u_steps;
              std::uint32_t pos = global_position(shape, n, reg);
              std::uint8_t d = index_digit(idx, pos, shape);
              idx = index_set_digit(idx, pos, static_cast<std::uint8_t>(d + 1), shape);
            }
            return idx;
          }};
}

PermutationOperator successor_adjoint(const RegisterShape& shape, std::uint32_t j,
                                      std::uint32_t reg) {
  check_register(shape, j, reg);
  return {shape, "V-1_" + std::to_string(j),
          [shape, j, reg](Index idx, ResourceLedger* led) {
            if (led) ++led->successor_calls;
            return ripple_adjoint_index(idx, shape, j, reg, led);
          }};
}

}  // namespace qarith

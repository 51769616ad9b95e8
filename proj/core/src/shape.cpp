#include "qarith/shape.hpp"

namespace qarith {

std::optional<Index> checked_pow(Index base, std::uint32_t exponent) {
  Index result = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    Index next;
    if (__builtin_mul_overflow(result, base, &next)) return std::nullopt;
    result = next;
  }
  return result;
}

RegisterShape::RegisterShape(std::uint32_t k, std::uint32_t L,
                             std::uint32_t registers, Index dimension_cap)
    : k_(k), L_(L), registers_(registers), cap_(dimension_cap) {
  if (k < 2) throw std::invalid_argument("base k must be >= 2 (unary excluded)");
  if (L < 1) throw std::invalid_argument("length L must be >= 1");
  if (registers < 1) throw std::invalid_argument("register count must be >= 1");
  auto reg_dim = checked_pow(k, L);
  auto dim = checked_pow(k, L * registers);
  if (!reg_dim || !dim || *dim > cap_)
    throw std::invalid_argument("shape dimension k^(m*L) exceeds cap " +
                                std::to_string(cap_));
  register_dimension_ = *reg_dim;
  dimension_ = *dim;
}

}  // namespace qarith

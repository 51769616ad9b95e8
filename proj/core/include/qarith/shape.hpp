#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qarith {

using Index = std::uint64_t;

/// Default cap on the number of basis states a shape may span.
inline constexpr Index kDefaultDimensionCap = Index{1} << 24;

/// k^e with overflow detection. Returns nullopt if the result does not fit
/// in 64 bits.
std::optional<Index> checked_pow(Index base, std::uint32_t exponent);

/// Shape of a register bank: m registers of L base-k digits each.
/// Digit position j runs 1..L within a register and carries weight k^(j-1);
/// register h occupies global positions (h-1)L+1 .. hL.
class RegisterShape {
 public:
  RegisterShape(std::uint32_t k, std::uint32_t L, std::uint32_t registers = 1,
                Index dimension_cap = kDefaultDimensionCap);

  std::uint32_t k() const { return k_; }
  std::uint32_t L() const { return L_; }
  std::uint32_t registers() const { return registers_; }
  std::uint32_t positions() const { return L_ * registers_; }

  /// Total dimension k^(m*L).
  Index dimension() const { return dimension_; }
  /// Dimension of a single register, k^L.
  Index register_dimension() const { return register_dimension_; }

  /// Shape of one register of this bank.
  RegisterShape single_register() const { return {k_, L_, 1, cap_}; }
  /// Same k and L, different register count.
  RegisterShape with_registers(std::uint32_t m) const { return {k_, L_, m, cap_}; }

  Index dimension_cap() const { return cap_; }

  friend bool operator==(const RegisterShape&, const RegisterShape&) = default;

 private:
  std::uint32_t k_;
  std::uint32_t L_;
  std::uint32_t registers_;
  Index cap_;
  Index register_dimension_;
  Index dimension_;
};

}  // namespace qarith

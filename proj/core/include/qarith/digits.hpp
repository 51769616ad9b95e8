#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qarith/shape.hpp"

namespace qarith {

/// A length-L string of base-k digits. Position j in 1..L carries weight
/// k^(j-1), so j=1 is the least significant digit. Display order is the
/// reverse (most significant first).
class DigitString {
 public:
  DigitString(RegisterShape shape, std::vector<std::uint8_t> digits);

  /// Base-k expansion of n, little-endian in j.
  static DigitString encode(Index n, const RegisterShape& shape);
  static DigitString zero(const RegisterShape& shape);

  Index value() const;
  std::uint8_t digit(std::uint32_t j) const;          // 1-based
  void set_digit(std::uint32_t j, std::uint8_t v);    // 1-based

  const RegisterShape& shape() const { return shape_; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  /// Human-readable form, most significant digit first.
  std::string display() const;
  /// Parse display-order digits ("101" -> digits (1,0,1) little-endian).
  static DigitString parse_display(const std::string& text,
                                   const RegisterShape& shape);

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  RegisterShape shape_;
  std::vector<std::uint8_t> digits_;
};

/// Concatenation of m digit strings over a common (k, L); indexes one
/// computational basis vector of the m-register space.
class BasisState {
 public:
  BasisState(RegisterShape shape, std::vector<DigitString> parts);

  static BasisState from_index(Index index, const RegisterShape& shape);
  static BasisState zero(const RegisterShape& shape);

  Index index() const;
  const DigitString& part(std::uint32_t h) const;  // 1-based
  /// Value of register h, in [0, k^L-1].
  Index register_value(std::uint32_t h) const;

  const RegisterShape& shape() const { return shape_; }
  std::uint32_t parts_count() const { return shape_.registers(); }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  RegisterShape shape_;
  std::vector<DigitString> parts_;
};

/// s*w: two L-digit strings concatenated into a two-register basis state.
BasisState concat(const DigitString& s, const DigitString& w);

// Index-level digit access used by the permutation rules. Positions are
// global (1 .. m*L) over the concatenated string.
inline std::uint8_t index_digit(Index idx, std::uint32_t position,
                                const RegisterShape& shape) {
  Index weight = *checked_pow(shape.k(), position - 1);
  return static_cast<std::uint8_t>((idx / weight) % shape.k());
}

inline Index index_set_digit(Index idx, std::uint32_t position, std::uint8_t v,
                             const RegisterShape& shape) {
  Index weight = *checked_pow(shape.k(), position - 1);
  std::uint8_t old = static_cast<std::uint8_t>((idx / weight) % shape.k());
  return idx + (static_cast<Index>(v) - static_cast<Index>(old)) * weight;
}

/// Value of register h (1-based) within a composite index.
inline Index index_register_value(Index idx, std::uint32_t h,
                                  const RegisterShape& shape) {
  Index reg_dim = shape.register_dimension();
  for (std::uint32_t i = 1; i < h; ++i) idx /= reg_dim;
  return idx % reg_dim;
}

/// Replace register h's value within a composite index.
inline Index index_set_register(Index idx, std::uint32_t h, Index value,
                                const RegisterShape& shape) {
  Index reg_dim = shape.register_dimension();
  Index weight = 1;
  for (std::uint32_t i = 1; i < h; ++i) weight *= reg_dim;
  Index old = (idx / weight) % reg_dim;
  return idx + (value - old) * weight;
}

}  // namespace qarith

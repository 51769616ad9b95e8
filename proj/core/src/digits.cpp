#include "qarith/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace qarith {

DigitString::DigitString(RegisterShape shape, std::vector<std::uint8_t> digits)
    : shape_(std::move(shape)), digits_(std::move(digits)) {
  if (digits_.size() != shape_.L())
    throw std::invalid_argument("digit string length does not match shape L");
  for (auto d : digits_)
    if (d >= shape_.k())
      throw std::out_of_range("digit value out of range [0, k-1]");
}

DigitString DigitString::encode(Index n, const RegisterShape& shape) {
  if (n >= shape.register_dimension())
    throw std::out_of_range("value out of range [0, k^L-1]");
  std::vector<std::uint8_t> digits(shape.L());
  for (std::uint32_t j = 0; j < shape.L(); ++j) {
    digits[j] = static_cast<std::uint8_t>(n % shape.k());
    n /= shape.k();
  }
  return {shape, std::move(digits)};
}

DigitString DigitString::zero(const RegisterShape& shape) {
  return {shape, std::vector<std::uint8_t>(shape.L(), 0)};
}

Index DigitString::value() const {
  Index v = 0;
  for (std::uint32_t j = shape_.L(); j >= 1; --j) v = v * shape_.k() + digits_[j - 1];
  return v;
}

std::uint8_t DigitString::digit(std::uint32_t j) const {
  if (j < 1 || j > shape_.L()) throw std::out_of_range("digit position");
  return digits_[j - 1];
}

void DigitString::set_digit(std::uint32_t j, std::uint8_t v) {
  if (j < 1 || j > shape_.L()) throw std::out_of_range("digit position");
  if (v >= shape_.k()) throw std::out_of_range("digit value");
  digits_[j - 1] = v;
}

std::string DigitString::display() const {
  std::string out;
  for (std::uint32_t j = shape_.L(); j >= 1; --j) {
    if (shape_.k() > 10 && !out.empty()) out += '.';
    out += std::to_string(static_cast<unsigned>(digits_[j - 1]));
  }
  return out;
}

DigitString DigitString::parse_display(const std::string& text,
                                       const RegisterShape& shape) {
  if (shape.k() > 10)
    throw std::invalid_argument("display parsing supports k <= 10");
  if (text.size() != shape.L())
    throw std::invalid_argument("digit string has wrong length");
  std::vector<std::uint8_t> digits(shape.L());
  for (std::uint32_t i = 0; i < shape.L(); ++i) {
    char c = text[i];
    if (c < '0' || c >= static_cast<char>('0' + shape.k()))
      throw std::invalid_argument("digit out of range in string");
    digits[shape.L() - 1 - i] = static_cast<std::uint8_t>(c - '0');
  }
  return {shape, std::move(digits)};
}

BasisState::BasisState(RegisterShape shape, std::vector<DigitString> parts)
    : shape_(std::move(shape)), parts_(std::move(parts)) {
  if (parts_.size() != shape_.registers())
    throw std::invalid_argument("part count does not match register count");
  RegisterShape single = shape_.single_register();
  for (const auto& p : parts_)
    if (p.shape().k() != single.k() || p.shape().L() != single.L())
      throw std::invalid_argument("part shape mismatch");
}

BasisState BasisState::from_index(Index index, const RegisterShape& shape) {
  if (index >= shape.dimension()) throw std::out_of_range("basis index");
  RegisterShape single = shape.single_register();
  std::vector<DigitString> parts;
  parts.reserve(shape.registers());
  for (std::uint32_t h = 0; h < shape.registers(); ++h) {
    parts.push_back(DigitString::encode(index % shape.register_dimension(), single));
    index /= shape.register_dimension();
  }
  return {shape, std::move(parts)};
}

BasisState BasisState::zero(const RegisterShape& shape) {
  return from_index(0, shape);
}

Index BasisState::index() const {
  Index v = 0;
  for (std::uint32_t h = shape_.registers(); h >= 1; --h)
    v = v * shape_.register_dimension() + parts_[h - 1].value();
  return v;
}

const DigitString& BasisState::part(std::uint32_t h) const {
  if (h < 1 || h > parts_.size()) throw std::out_of_range("register index");
  return parts_[h - 1];
}

Index BasisState::register_value(std::uint32_t h) const {
  return part(h).value();
}

BasisState concat(const DigitString& s, const DigitString& w) {
  if (!(s.shape() == w.shape()))
    throw std::invalid_argument("concat requires matching (k, L)");
  RegisterShape two = s.shape().with_registers(2);
  return BasisState(two, {s, w});
}

}  // namespace qarith

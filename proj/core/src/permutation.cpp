#include "qarith/permutation.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace qarith {

PermutationOperator::PermutationOperator(RegisterShape shape, std::string name,
                                         Rule rule)
    : shape_(std::move(shape)), name_(std::move(name)), rule_(std::move(rule)) {}

PermutationOperator PermutationOperator::identity(const RegisterShape& shape) {
  return {shape, "1", [](Index i, ResourceLedger*) { return i; }};
}

PermutationOperator PermutationOperator::from_table(const RegisterShape& shape,
                                                    std::string name,
                                                    std::vector<Index> table) {
  if (table.size() != shape.dimension())
    throw std::invalid_argument("table size does not match dimension");
  auto shared = std::make_shared<std::vector<Index>>(std::move(table));
  PermutationOperator op(shape, std::move(name),
                         [shared](Index i, ResourceLedger*) { return (*shared)[i]; });
  op.table_ = *shared;
  return op;
}

Index PermutationOperator::apply_index(Index i, ResourceLedger* ledger) const {
  if (i >= shape_.dimension()) throw std::out_of_range("basis index");
  return rule_(i, ledger);
}

BasisState PermutationOperator::apply(const BasisState& b,
                                      ResourceLedger* ledger) const {
  return BasisState::from_index(apply_index(b.index(), ledger), shape_);
}

StateVector PermutationOperator::apply(const StateVector& v,
                                       ResourceLedger* ledger) const {
  std::map<Index, Amplitude> out;
  for (const auto& [i, a] : v.amplitudes()) out[apply_index(i, ledger)] += a;
  return StateVector(shape_, std::move(out));
}

const std::vector<Index>& PermutationOperator::table() const {
  if (!table_) {
    if (shape_.dimension() > kTableCap)
      throw std::length_error("dimension too large to materialize table");
    std::vector<Index> t(shape_.dimension());
    for (Index i = 0; i < shape_.dimension(); ++i) t[i] = rule_(i, nullptr);
    table_ = std::move(t);
  }
  return *table_;
}

bool PermutationOperator::is_bijection() const {
  const auto& t = table();
  std::vector<bool> seen(shape_.dimension(), false);
  for (Index image : t) {
    if (image >= shape_.dimension() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

PermutationOperator PermutationOperator::inverse() const {
  const auto& t = table();
  std::vector<Index> inv(t.size());
  for (Index i = 0; i < t.size(); ++i) inv[t[i]] = i;
  return from_table(shape_, name_ + "^-1", std::move(inv));
}

namespace {

std::vector<Index> compose_tables(const std::vector<Index>& outer,
                                  const std::vector<Index>& inner) {
  std::vector<Index> out(inner.size());
  for (Index i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

PermutationOperator PermutationOperator::pow(std::uint64_t e) const {
  std::vector<Index> result(shape_.dimension());
  for (Index i = 0; i < result.size(); ++i) result[i] = i;
  std::vector<Index> square = table();
  std::uint64_t remaining = e;
  while (remaining > 0) {
    if (remaining & 1) result = compose_tables(square, result);
    remaining >>= 1;
    if (remaining > 0) square = compose_tables(square, square);
  }
  return from_table(shape_, name_ + "^" + std::to_string(e), std::move(result));
}

bool PermutationOperator::same_action_as(const PermutationOperator& other) const {
  if (shape_.dimension() != other.shape_.dimension()) return false;
  for (Index i = 0; i < shape_.dimension(); ++i)
    if (rule_(i, nullptr) != other.rule_(i, nullptr)) return false;
  return true;
}

std::uint64_t PermutationOperator::orbit_period(Index start) const {
  std::uint64_t p = 0;
  Index i = start;
  do {
    i = apply_index(i);
    ++p;
  } while (i != start);
  return p;
}

PermutationOperator compose(const PermutationOperator& outer,
                            const PermutationOperator& inner) {
  if (!(outer.shape() == inner.shape()))
    throw std::invalid_argument("composition requires matching shapes");
  auto apply_inner = inner;  // value copies; rules are shared via std::function
  auto apply_outer = outer;
  return {outer.shape(), outer.name() + "*" + inner.name(),
          [apply_outer, apply_inner](Index i, ResourceLedger* led) {
            return apply_outer.apply_index(apply_inner.apply_index(i, led), led);
          }};
}

PermutationOperator embed_on_register(const PermutationOperator& single,
                                      const RegisterShape& multi,
                                      std::uint32_t reg) {
  if (single.shape().registers() != 1 ||
      single.shape().k() != multi.k() || single.shape().L() != multi.L())
    throw std::invalid_argument("embed requires a matching single-register op");
  if (reg < 1 || reg > multi.registers())
    throw std::out_of_range("register index out of range");
  auto inner = single;
  return {multi, single.name() + "@" + std::to_string(reg),
          [inner, multi, reg](Index idx, ResourceLedger* led) {
            Index sub = index_register_value(idx, reg, multi);
            return index_set_register(idx, reg, inner.apply_index(sub, led), multi);
          }};
}

}  // namespace qarith

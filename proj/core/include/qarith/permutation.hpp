#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qarith/digits.hpp"
#include "qarith/ledger.hpp"
#include "qarith/statevector.hpp"

namespace qarith {

/// Largest dimension for which a full permutation table is materialized
/// (equality checks, inverses, powers, serialization).
inline constexpr Index kTableCap = Index{1} << 16;

/// A basis permutation: phase-free unitary given by a bijection on basis
/// indices. Carried as a callable rule; the explicit table is materialized
/// lazily for permutation algebra at small dimension.
class PermutationOperator {
 public:
  using Rule = std::function<Index(Index, ResourceLedger*)>;

  PermutationOperator(RegisterShape shape, std::string name, Rule rule);

  static PermutationOperator identity(const RegisterShape& shape);
  static PermutationOperator from_table(const RegisterShape& shape,
                                        std::string name,
                                        std::vector<Index> table);

  Index apply_index(Index i, ResourceLedger* ledger = nullptr) const;
  BasisState apply(const BasisState& b, ResourceLedger* ledger = nullptr) const;
  StateVector apply(const StateVector& v, ResourceLedger* ledger = nullptr) const;

  const RegisterShape& shape() const { return shape_; }
  const std::string& name() const { return name_; }

  /// Full index map; requires dimension <= kTableCap.
  const std::vector<Index>& table() const;
  bool is_bijection() const;

  PermutationOperator inverse() const;
  /// e-fold composition by squaring on tables; pow(0) is the identity.
  PermutationOperator pow(std::uint64_t e) const;

  /// Exhaustive pointwise equality of the index maps.
  bool same_action_as(const PermutationOperator& other) const;

  /// Least p > 0 with op^p fixing the given index.
  std::uint64_t orbit_period(Index start) const;

 private:
  RegisterShape shape_;
  std::string name_;
  Rule rule_;
  mutable std::optional<std::vector<Index>> table_;
};

/// outer(inner(.)): inner applied first.
PermutationOperator compose(const PermutationOperator& outer,
                            const PermutationOperator& inner);

/// Lift a single-register operator to register `reg` (1-based) of a
/// multi-register shape, identity on the other registers.
PermutationOperator embed_on_register(const PermutationOperator& single,
                                      const RegisterShape& multi,
                                      std::uint32_t reg);

}  // namespace qarith

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qarith/arithmetic.hpp"

namespace qarith {

/// An indexed set of operators V_a on a shared space, candidates for the
/// role of the L per-digit successors.
struct OperatorFamily {
  std::uint32_t k;
  std::vector<std::string> labels;
  std::map<std::string, PermutationOperator> operators;

  const PermutationOperator& op(const std::string& label) const;
  const RegisterShape& space() const;
};

struct PropertyResult {
  bool pass = false;
  std::string witness;  // counterexample or evidence, human readable
};

/// Verdicts for structural properties 1..6 of an operator family, plus the
/// label chain derived from the k-th-power structure when all pass.
struct FamilyReport {
  std::vector<PropertyResult> properties;  // size 6, index i = property i+1
  std::vector<std::string> ordering;       // a_1 .. a_L, empty unless all pass

  bool all_pass() const;
};

/// Mapping from digit strings to basis indices generated from a chosen zero
/// state by the ordered family.
struct Numbering {
  Index zero_index;
  std::vector<Index> state_of_value;  // value n -> basis index, size k^L

  Index index_of(const DigitString& n) const { return state_of_value[n.value()]; }
};

/// Is op a cyclic shift: fixed-point free with all orbit periods equal?
PropertyResult check_cyclic_shift(const PermutationOperator& op);

FamilyReport check_family(const OperatorFamily& family);

/// Chain walk a_1 .. a_L; requires check_family to pass.
std::vector<std::string> derive_ordering(const OperatorFamily& family);

/// |beta_n> = prod_l (V_{a_l})^{n_l} |beta_0>. Throws if the images collide
/// (the family is then not a valid model).
Numbering construct_numbering(const OperatorFamily& family, Index zero_index);

/// A complete candidate model of modular arithmetic: successor family plus
/// the + and x operators, with a value decoding of single-register states.
struct ArithmeticModel {
  RegisterShape reg;  // single-register shape
  std::function<PermutationOperator(std::uint32_t j)> successor;
  PermutationOperator plus;    // two-register space
  PermutationOperator times;   // four-register space
  // Bijection between numbers and single-register basis indices.
  std::function<Index(Index)> encode_state;  // value -> basis index
  std::function<Index(Index)> decode_state;  // basis index -> value
};

/// The canonical model on the abstract space (identity encode/decode).
ArithmeticModel abstract_model(const RegisterShape& reg);

struct AxiomCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

/// Exhaustive verification of the modular-arithmetic axioms on a model:
/// the k-th-power successor chain, successor-commutes-with-plus, additive
/// and multiplicative identities, commutativity, associativity,
/// distributivity, and x*S(y) = x*y + x.
AxiomReport check_arithmetic_axioms(const ArithmeticModel& model);

}  // namespace qarith

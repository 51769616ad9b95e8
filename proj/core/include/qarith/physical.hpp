#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qarith/axioms.hpp"

namespace qarith {

/// Physical parameter sets: L distinct component labels A and k distinct
/// component-value labels B. The declared sequence order fixes storage
/// order for physical basis indexing; it carries no arithmetic meaning.
struct LabelSets {
  std::vector<std::string> A;
  std::vector<std::string> B;

  void validate() const;
  std::uint32_t site_of(const std::string& a) const;
  std::uint32_t value_of(const std::string& b) const;

  friend bool operator==(const LabelSets&, const LabelSets&) = default;
};

/// The pair of bijections g: positions -> A and d: digits -> B that makes
/// physical states represent numbers. Stored as index maps into the
/// declared label sequences.
class LabelModel {
 public:
  LabelModel(LabelSets sets, std::vector<std::uint32_t> g,
             std::vector<std::uint32_t> d);

  /// g and d the identity on the declared orders.
  static LabelModel trivial(LabelSets sets);

  const LabelSets& sets() const { return sets_; }
  std::uint32_t L() const { return static_cast<std::uint32_t>(g_.size()); }
  std::uint32_t k() const { return static_cast<std::uint32_t>(d_.size()); }

  std::uint32_t g(std::uint32_t j) const { return g_[j - 1]; }       // site index
  std::uint32_t d(std::uint8_t digit) const { return d_[digit]; }    // value index
  std::uint32_t g_inverse(std::uint32_t site) const { return g_inv_[site]; }
  std::uint8_t d_inverse(std::uint32_t value) const { return d_inv_[value]; }

  const std::string& site_label(std::uint32_t j) const { return sets_.A[g_[j - 1]]; }
  const std::string& value_label(std::uint8_t digit) const { return sets_.B[d_[digit]]; }

  friend bool operator==(const LabelModel&, const LabelModel&) = default;

 private:
  LabelSets sets_;
  std::vector<std::uint32_t> g_, d_;
  std::vector<std::uint32_t> g_inv_;
  std::vector<std::uint8_t> d_inv_;
};

/// A total assignment of a B label to every A label (the function t).
struct PhysicalBasisState {
  LabelSets sets;
  std::vector<std::uint32_t> values;  // values[site] = index into B

  /// Index in the physical basis under the declared label orders.
  Index index() const;
  static PhysicalBasisState from_index(Index idx, const LabelSets& sets);
  const std::string& at(const std::string& a) const;

  friend bool operator==(const PhysicalBasisState&, const PhysicalBasisState&) = default;
};

/// W_g,d on basis states: the physical state with t(g(j)) = d(s(j)).
PhysicalBasisState w_map(const LabelModel& model, const DigitString& s);

/// Adjoint decoding: digit at position g^-1(a) is d^-1(t(a)).
DigitString w_inverse(const LabelModel& model, const PhysicalBasisState& t);

// Index-level W_g,d, per register of a multi-register shape.
Index w_map_index(const LabelModel& model, Index abstract_idx,
                  const RegisterShape& shape);
Index w_inverse_index(const LabelModel& model, Index physical_idx,
                      const RegisterShape& shape);

/// Conjugation W_g,d op W_g,d^dagger as a permutation on the physical basis.
PermutationOperator induce_operator(const LabelModel& model,
                                    const PermutationOperator& op);

/// The induced successor evaluated directly in physical terms (per-site
/// conjugated shifts and projectors), without routing through the abstract
/// index space. Pointwise equal to induce_operator(model, successor(j)).
PermutationOperator induced_successor_direct(const LabelModel& model,
                                             const RegisterShape& shape,
                                             std::uint32_t j,
                                             std::uint32_t reg = 1);

/// The full induced arithmetic model on the physical space.
ArithmeticModel induced_model(const LabelModel& model, const RegisterShape& reg);

/// Deterministic enumeration of label models. When count equals L!*k! the
/// full set is returned in lexicographic (g, d) order; otherwise a seeded
/// shuffle selects `count` distinct models.
std::vector<LabelModel> enumerate_models(const LabelSets& sets, std::uint64_t count,
                                         std::uint64_t seed);

/// L! * k!, or nullopt on overflow.
std::optional<std::uint64_t> model_count(const LabelSets& sets);

}  // namespace qarith

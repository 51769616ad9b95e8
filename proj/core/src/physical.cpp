#include "qarith/physical.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace qarith {

void LabelSets::validate() const {
  if (A.empty() || B.size() < 2)
    throw std::invalid_argument("need at least one site label and two value labels");
  if (std::set<std::string>(A.begin(), A.end()).size() != A.size())
    throw std::invalid_argument("A labels must be distinct");
  if (std::set<std::string>(B.begin(), B.end()).size() != B.size())
    throw std::invalid_argument("B labels must be distinct");
}

std::uint32_t LabelSets::site_of(const std::string& a) const {
  auto it = std::find(A.begin(), A.end(), a);
  if (it == A.end()) throw std::invalid_argument("unknown site label: " + a);
  return static_cast<std::uint32_t>(it - A.begin());
}

std::uint32_t LabelSets::value_of(const std::string& b) const {
  auto it = std::find(B.begin(), B.end(), b);
  if (it == B.end()) throw std::invalid_argument("unknown value label: " + b);
  return static_cast<std::uint32_t>(it - B.begin());
}

LabelModel::LabelModel(LabelSets sets, std::vector<std::uint32_t> g,
                       std::vector<std::uint32_t> d)
    : sets_(std::move(sets)), g_(std::move(g)), d_(std::move(d)) {
  sets_.validate();
  if (g_.size() != sets_.A.size() || d_.size() != sets_.B.size())
    throw std::invalid_argument("g and d must cover A and B");
  g_inv_.assign(g_.size(), UINT32_MAX);
  d_inv_.assign(d_.size(), UINT8_MAX);
  for (std::uint32_t j = 0; j < g_.size(); ++j) {
    if (g_[j] >= g_.size() || g_inv_[g_[j]] != UINT32_MAX)
      throw std::invalid_argument("g is not a bijection");
    g_inv_[g_[j]] = j;
  }
  for (std::uint32_t h = 0; h < d_.size(); ++h) {
    if (d_[h] >= d_.size() || d_inv_[d_[h]] != UINT8_MAX)
      throw std::invalid_argument("d is not a bijection");
    d_inv_[d_[h]] = static_cast<std::uint8_t>(h);
  }
}

LabelModel LabelModel::trivial(LabelSets sets) {
  std::vector<std::uint32_t> g(sets.A.size()), d(sets.B.size());
  std::iota(g.begin(), g.end(), 0);
  std::iota(d.begin(), d.end(), 0);
  return {std::move(sets), std::move(g), std::move(d)};
}

Index PhysicalBasisState::index() const {
  const Index k = sets.B.size();
  Index v = 0;
  for (std::size_t site = values.size(); site >= 1; --site)
    v = v * k + values[site - 1];
  return v;
}

PhysicalBasisState PhysicalBasisState::from_index(Index idx, const LabelSets& sets) {
  const Index k = sets.B.size();
  std::vector<std::uint32_t> values(sets.A.size());
  for (std::size_t site = 0; site < values.size(); ++site) {
    values[site] = static_cast<std::uint32_t>(idx % k);
    idx /= k;
  }
  return {sets, std::move(values)};
}

const std::string& PhysicalBasisState::at(const std::string& a) const {
  return sets.B[values[sets.site_of(a)]];
}

PhysicalBasisState w_map(const LabelModel& model, const DigitString& s) {
  if (s.shape().L() != model.L() || s.shape().k() != model.k())
    throw std::invalid_argument("digit string shape does not match model");
  std::vector<std::uint32_t> values(model.L());
  for (std::uint32_t j = 1; j <= model.L(); ++j)
    values[model.g(j)] = model.d(s.digit(j));
  return {model.sets(), std::move(values)};
}

DigitString w_inverse(const LabelModel& model, const PhysicalBasisState& t) {
  if (t.values.size() != model.L())
    throw std::invalid_argument("physical state does not match model sites");
  RegisterShape shape(model.k(), model.L());
  std::vector<std::uint8_t> digits(model.L());
  for (std::uint32_t site = 0; site < model.L(); ++site) {
    if (t.values[site] >= model.k())
      throw std::out_of_range("physical value label out of range");
    digits[model.g_inverse(site)] = model.d_inverse(t.values[site]);
  }
  return {shape, std::move(digits)};
}

Index w_map_index(const LabelModel& model, Index abstract_idx,
                  const RegisterShape& shape) {
  if (shape.k() != model.k() || shape.L() != model.L())
    throw std::invalid_argument("shape does not match model");
  Index out = 0;
  for (std::uint32_t reg = 1; reg <= shape.registers(); ++reg)
    for (std::uint32_t j = 1; j <= shape.L(); ++j) {
      std::uint32_t from = (reg - 1) * shape.L() + j;
      std::uint32_t to = (reg - 1) * shape.L() + model.g(j) + 1;
      out = index_set_digit(out, to,
                            static_cast<std::uint8_t>(model.d(
                                index_digit(abstract_idx, from, shape))),
                            shape);
    }
  return out;
}

Index w_inverse_index(const LabelModel& model, Index physical_idx,
                      const RegisterShape& shape) {
  if (shape.k() != model.k() || shape.L() != model.L())
    throw std::invalid_argument("shape does not match model");
  Index out = 0;
  for (std::uint32_t reg = 1; reg <= shape.registers(); ++reg)
    for (std::uint32_t j = 1; j <= shape.L(); ++j) {
      std::uint32_t site_pos = (reg - 1) * shape.L() + model.g(j) + 1;
      std::uint32_t to = (reg - 1) * shape.L() + j;
      out = index_set_digit(out, to,
                            model.d_inverse(index_digit(physical_idx, site_pos, shape)),
                            shape);
    }
  return out;
}

PermutationOperator induce_operator(const LabelModel& model,
                                    const PermutationOperator& op) {
  RegisterShape shape = op.shape();
  auto inner = op;
  return {shape, op.name() + "_gd",
          [model, inner, shape](Index idx, ResourceLedger* led) {
            Index abstract_idx = w_inverse_index(model, idx, shape);
            Index mapped = inner.apply_index(abstract_idx, led);
            return w_map_index(model, mapped, shape);
          }};
}

PermutationOperator induced_successor_direct(const LabelModel& model,
                                             const RegisterShape& shape,
                                             std::uint32_t j, std::uint32_t reg) {
  if (shape.k() != model.k() || shape.L() != model.L())
    throw std::invalid_argument("shape does not match model");
  if (j < 1 || j > shape.L() || reg < 1 || reg > shape.registers())
    throw std::out_of_range("position out of range");
  return {shape, "V+1_" + std::to_string(j) + "_gd",
          [model, shape, j, reg](Index idx, ResourceLedger* led) {
            const std::uint32_t k = shape.k();
            // Carry chain over sites g(j), g(j+1), ..., g(L): at each site the
            // conjugated shift u^d maps d(h) to d(h+1 mod k), with the carry
            // projector testing for the physical label d(k-1).
            for (std::uint32_t p = j; p <= shape.L(); ++p) {
              std::uint32_t pos = (reg - 1) * shape.L() + model.g(p) + 1;
              std::uint8_t value_idx = index_digit(idx, pos, shape);
              std::uint8_t h = model.d_inverse(value_idx);
              if (led) {
                ++led->u_steps;
                ++led->projector_evals;
              }
              idx = index_set_digit(
                  idx, pos,
                  static_cast<std::uint8_t>(model.d(
                      static_cast<std::uint8_t>((h + 1) % k))),
                  shape);
              if (h != k - 1) break;
            }
            return idx;
          }};
}

ArithmeticModel induced_model(const LabelModel& model, const RegisterShape& reg) {
  RegisterShape single = reg.single_register();
  RegisterShape two = single.with_registers(2);
  RegisterShape four = single.with_registers(4);
  return {
      single,
      [model, single](std::uint32_t j) {
        return induce_operator(model, successor_implicit(single, j));
      },
      induce_operator(model, plus_op(two)),
      induce_operator(model, times_op(four)),
      [model, single](Index n) {
        return w_map_index(model, n, single);
      },
      [model, single](Index i) {
        return w_inverse_index(model, i, single);
      },
  };
}

std::optional<std::uint64_t> model_count(const LabelSets& sets) {
  auto factorial = [](std::size_t n) -> std::optional<std::uint64_t> {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      if (__builtin_mul_overflow(f, static_cast<std::uint64_t>(i), &f))
        return std::nullopt;
    }
    return f;
  };
  auto fa = factorial(sets.A.size());
  auto fb = factorial(sets.B.size());
  if (!fa || !fb) return std::nullopt;
  std::uint64_t total;
  if (__builtin_mul_overflow(*fa, *fb, &total)) return std::nullopt;
  return total;
}

std::vector<LabelModel> enumerate_models(const LabelSets& sets, std::uint64_t count,
                                         std::uint64_t seed) {
  sets.validate();
  auto total = model_count(sets);
  if (!total || count > *total)
    throw std::invalid_argument("count exceeds L!*k! distinct models");
  if (*total > (std::uint64_t{1} << 20))
    throw std::invalid_argument("model space too large to enumerate");

  std::vector<std::vector<std::uint32_t>> gs, ds;
  std::vector<std::uint32_t> g(sets.A.size()), d(sets.B.size());
  std::iota(g.begin(), g.end(), 0);
  std::iota(d.begin(), d.end(), 0);
  do gs.push_back(g);
  while (std::next_permutation(g.begin(), g.end()));
  do ds.push_back(d);
  while (std::next_permutation(d.begin(), d.end()));

  std::vector<LabelModel> all;
  all.reserve(gs.size() * ds.size());
  for (const auto& gp : gs)
    for (const auto& dp : ds) all.emplace_back(sets, gp, dp);

  if (count == all.size()) return all;
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<LabelModel> picked;
  picked.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) picked.push_back(all[order[i]]);
  return picked;
}

}  // namespace qarith

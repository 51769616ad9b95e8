#include "qarith/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace qarith {

const PermutationOperator& OperatorFamily::op(const std::string& label) const {
  auto it = operators.find(label);
  if (it == operators.end())
    throw std::invalid_argument("unknown family label: " + label);
  return it->second;
}

const RegisterShape& OperatorFamily::space() const {
  if (operators.empty()) throw std::invalid_argument("empty operator family");
  return operators.begin()->second.shape();
}

bool FamilyReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& r) { return r.pass; });
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

PropertyResult check_cyclic_shift(const PermutationOperator& op) {
  const Index dim = op.shape().dimension();
  std::vector<bool> visited(dim, false);
  std::uint64_t common_period = 0;
  for (Index start = 0; start < dim; ++start) {
    if (visited[start]) continue;
    std::uint64_t period = 0;
    Index i = start;
    do {
      visited[i] = true;
      i = op.apply_index(i);
      ++period;
    } while (i != start);
    if (period == 1)
      return {false, "fixed point at index " + std::to_string(start)};
    if (common_period == 0) common_period = period;
    if (period != common_period)
      return {false, "orbit of index " + std::to_string(start) + " has period " +
                         std::to_string(period) + ", expected " +
                         std::to_string(common_period)};
  }
  return {true, "all orbits have period " + std::to_string(common_period)};
}

namespace {

// Label of V_a^k within the family, or "1" for the identity, or "" if the
// k-th power is neither.
std::string kth_power_link(const OperatorFamily& family, const std::string& a) {
  PermutationOperator powered = family.op(a).pow(family.k);
  if (powered.same_action_as(PermutationOperator::identity(family.space())))
    return "1";
  for (const auto& b : family.labels)
    if (powered.same_action_as(family.op(b))) return b;
  return "";
}

}  // namespace

FamilyReport check_family(const OperatorFamily& family) {
  FamilyReport report;
  report.properties.resize(6);

  // 1: every V_a is a cyclic shift.
  report.properties[0].pass = true;
  for (const auto& a : family.labels) {
    PropertyResult r = check_cyclic_shift(family.op(a));
    if (!r.pass) {
      report.properties[0] = {false, "V_" + a + ": " + r.witness};
      break;
    }
  }

  // 2: pairwise commutation.
  report.properties[1].pass = true;
  for (std::size_t i = 0; i < family.labels.size() && report.properties[1].pass; ++i)
    for (std::size_t j = i + 1; j < family.labels.size(); ++j) {
      const auto& a = family.op(family.labels[i]);
      const auto& b = family.op(family.labels[j]);
      if (!compose(a, b).same_action_as(compose(b, a))) {
        report.properties[1] = {false, "V_" + family.labels[i] + " and V_" +
                                           family.labels[j] + " do not commute"};
        break;
      }
    }

  // k-th power links drive properties 3-6.
  std::map<std::string, std::string> link;  // a -> label of V_a^k ("1" or "")
  for (const auto& a : family.labels) link[a] = kth_power_link(family, a);

  // 3: every non-identity k-th power lands on a unique other family member.
  report.properties[2].pass = true;
  for (const auto& a : family.labels) {
    if (link[a] == "1") continue;
    if (link[a].empty() || link[a] == a) {
      report.properties[2] = {false, "V_" + a +
                                         "^k is not another family member"};
      break;
    }
    // Uniqueness of the target among family members: distinct labels with
    // identical operators would make two matches.
    std::size_t matches = 0;
    PermutationOperator powered = family.op(a).pow(family.k);
    for (const auto& b : family.labels)
      if (b != a && powered.same_action_as(family.op(b))) ++matches;
    if (matches != 1) {
      report.properties[2] = {false, "V_" + a + "^k matches " +
                                         std::to_string(matches) +
                                         " family members"};
      break;
    }
  }

  // 4: at most one predecessor per label.
  report.properties[3].pass = true;
  for (const auto& b : family.labels) {
    std::size_t predecessors = 0;
    for (const auto& a : family.labels)
      if (a != b && link[a] == b) ++predecessors;
    if (predecessors > 1) {
      report.properties[3] = {false, "V_" + b + " has " +
                                         std::to_string(predecessors) +
                                         " predecessors"};
      break;
    }
  }

  // 5: exactly one a with V_a^k = 1.
  std::vector<std::string> tops;
  for (const auto& a : family.labels)
    if (link[a] == "1") tops.push_back(a);
  if (tops.size() == 1)
    report.properties[4] = {true, "chain top " + tops.front()};
  else
    report.properties[4] = {false, std::to_string(tops.size()) +
                                       " labels satisfy V_a^k = 1"};

  // 6: exactly one a with no predecessor.
  std::vector<std::string> bottoms;
  for (const auto& b : family.labels) {
    bool has_predecessor = false;
    for (const auto& a : family.labels)
      if (a != b && link[a] == b) has_predecessor = true;
    if (!has_predecessor) bottoms.push_back(b);
  }
  if (bottoms.size() == 1)
    report.properties[5] = {true, "chain bottom " + bottoms.front()};
  else
    report.properties[5] = {false, std::to_string(bottoms.size()) +
                                       " labels have no predecessor"};

  if (report.all_pass()) {
    // Walk the chain from the unique bottom.
    std::string current = bottoms.front();
    report.ordering.push_back(current);
    while (link[current] != "1" && report.ordering.size() <= family.labels.size()) {
      current = link[current];
      report.ordering.push_back(current);
    }
    if (report.ordering.size() != family.labels.size() ||
        report.ordering.back() != tops.front()) {
      report.properties[2] = {false, "power chain does not cover the label set"};
      report.ordering.clear();
    }
  }
  return report;
}

std::vector<std::string> derive_ordering(const OperatorFamily& family) {
  FamilyReport report = check_family(family);
  if (!report.all_pass())
    throw std::invalid_argument("family does not satisfy properties 1-6");
  return report.ordering;
}

Numbering construct_numbering(const OperatorFamily& family, Index zero_index) {
  std::vector<std::string> ordering = derive_ordering(family);
  const std::uint32_t k = family.k;
  const std::uint32_t L = static_cast<std::uint32_t>(ordering.size());
  auto total = checked_pow(k, L);
  if (!total || zero_index >= family.space().dimension())
    throw std::out_of_range("invalid numbering construction");

  Numbering numbering;
  numbering.zero_index = zero_index;
  numbering.state_of_value.resize(*total);
  std::vector<bool> seen(family.space().dimension(), false);
  for (Index n = 0; n < *total; ++n) {
    Index state = zero_index;
    Index rest = n;
    for (std::uint32_t l = 0; l < L; ++l) {
      std::uint8_t digit = static_cast<std::uint8_t>(rest % k);
      rest /= k;
      const auto& op = family.op(ordering[l]);
      for (std::uint8_t i = 0; i < digit; ++i) state = op.apply_index(state);
    }
    if (seen[state])
      throw std::domain_error(
          "numbering collision at n=" + std::to_string(n) +
          ": family is not a valid model");
    seen[state] = true;
    numbering.state_of_value[n] = state;
  }
  return numbering;
}

ArithmeticModel abstract_model(const RegisterShape& reg) {
  RegisterShape single = reg.single_register();
  return {
      single,
      [single](std::uint32_t j) { return successor_implicit(single, j); },
      plus_op(single.with_registers(2)),
      times_op(single.with_registers(4)),
      [](Index n) { return n; },
      [](Index i) { return i; },
  };
}

namespace {

class ModelEvaluator {
 public:
  explicit ModelEvaluator(const ArithmeticModel& m)
      : model_(m), K_(m.reg.register_dimension()) {}

  Index K() const { return K_; }

  Index succ_value(std::uint32_t j, Index x) const {
    return model_.decode_state(
        model_.successor(j).apply_index(model_.encode_state(x)));
  }

  Index plus_value(Index a, Index b) const {
    Index idx = model_.encode_state(a) + model_.encode_state(b) * K_;
    Index out = model_.plus.apply_index(idx);
    return model_.decode_state(out / K_);
  }

  // Returns {result, work-register value}; intended work value is 0.
  std::pair<Index, Index> times_value(Index a, Index b) const {
    Index z0 = model_.encode_state(0);
    Index idx = model_.encode_state(a) + model_.encode_state(b) * K_ +
                z0 * K_ * K_ + z0 * K_ * K_ * K_;
    Index out = model_.times.apply_index(idx);
    Index work = model_.decode_state((out / (K_ * K_)) % K_);
    Index result = model_.decode_state(out / (K_ * K_ * K_));
    return {result, work};
  }

 private:
  const ArithmeticModel& model_;
  Index K_;
};

std::string pair_witness(const std::string& what, Index a, Index b, Index got,
                         Index expected) {
  return what + "(" + std::to_string(a) + "," + std::to_string(b) + ") = " +
         std::to_string(got) + ", expected " + std::to_string(expected);
}

}  // namespace

AxiomReport check_arithmetic_axioms(const ArithmeticModel& model) {
  AxiomReport report;
  ModelEvaluator eval(model);
  const Index K = eval.K();
  const std::uint32_t k = model.reg.k();
  const std::uint32_t L = model.reg.L();
  RegisterShape two = model.reg.with_registers(2);

  auto add_check = [&report](std::string name, bool pass, std::string witness) {
    report.checks.push_back({std::move(name), pass, std::move(witness)});
  };

  // k-th power chain of the successor family.
  {
    bool pass = true;
    std::string witness;
    for (std::uint32_t j = 1; j < L && pass; ++j)
      if (!model.successor(j).pow(k).same_action_as(model.successor(j + 1))) {
        pass = false;
        witness = "successor(" + std::to_string(j) + ")^k != successor(" +
                  std::to_string(j + 1) + ")";
      }
    if (pass && !model.successor(L).pow(k).same_action_as(
                    PermutationOperator::identity(model.reg))) {
      pass = false;
      witness = "successor(L)^k != 1";
    }
    add_check("successor-chain", pass, witness);
  }

  // Successors commute with plus: +(1 (x) V_j) = (1 (x) V_j)+.
  {
    bool pass = true;
    std::string witness;
    for (std::uint32_t j = 1; j <= L && pass; ++j) {
      PermutationOperator lifted = embed_on_register(model.successor(j), two, 2);
      if (!compose(model.plus, lifted).same_action_as(compose(lifted, model.plus))) {
        pass = false;
        witness = "plus does not commute with 1 (x) successor(" +
                  std::to_string(j) + ")";
      }
    }
    add_check("successor-commutes-with-plus", pass, witness);
  }

  // Additive identity |0>.
  {
    bool pass = true;
    std::string witness;
    for (Index w = 0; w < K && pass; ++w) {
      if (eval.plus_value(0, w) != w || eval.plus_value(w, 0) != w) {
        pass = false;
        witness = "0 is not an additive identity at w=" + std::to_string(w);
      }
    }
    add_check("additive-identity", pass, witness);
  }

  // Multiplicative identity S(0).
  {
    Index one = eval.succ_value(1, 0);
    bool pass = true;
    std::string witness;
    for (Index w = 0; w < K && pass; ++w) {
      auto [left, lw] = eval.times_value(one, w);
      auto [right, rw] = eval.times_value(w, one);
      if (left != w || right != w || lw != 0 || rw != 0) {
        pass = false;
        witness = "S(0) is not a multiplicative identity at w=" + std::to_string(w);
      }
    }
    add_check("multiplicative-identity", pass, witness);
  }

  // Commutativity.
  {
    bool pass = true;
    std::string witness;
    for (Index a = 0; a < K && pass; ++a)
      for (Index b = a; b < K; ++b) {
        if (eval.plus_value(a, b) != eval.plus_value(b, a)) {
          pass = false;
          witness = pair_witness("a+b vs b+a", a, b, eval.plus_value(a, b),
                                 eval.plus_value(b, a));
          break;
        }
        if (eval.times_value(a, b).first != eval.times_value(b, a).first) {
          pass = false;
          witness = pair_witness("a*b vs b*a", a, b, eval.times_value(a, b).first,
                                 eval.times_value(b, a).first);
          break;
        }
      }
    add_check("commutativity", pass, witness);
  }

  // Associativity.
  {
    bool pass = true;
    std::string witness;
    for (Index a = 0; a < K && pass; ++a)
      for (Index b = 0; b < K && pass; ++b)
        for (Index c = 0; c < K; ++c) {
          if (eval.plus_value(eval.plus_value(a, b), c) !=
              eval.plus_value(a, eval.plus_value(b, c))) {
            pass = false;
            witness = "(a+b)+c != a+(b+c) at " + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c);
            break;
          }
          if (eval.times_value(eval.times_value(a, b).first, c).first !=
              eval.times_value(a, eval.times_value(b, c).first).first) {
            pass = false;
            witness = "(a*b)*c != a*(b*c) at " + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c);
            break;
          }
        }
    add_check("associativity", pass, witness);
  }

  // Distributivity of x over +.
  {
    bool pass = true;
    std::string witness;
    for (Index a = 0; a < K && pass; ++a)
      for (Index b = 0; b < K && pass; ++b)
        for (Index c = 0; c < K; ++c) {
          Index lhs = eval.times_value(a, eval.plus_value(b, c)).first;
          Index rhs = eval.plus_value(eval.times_value(a, b).first,
                                      eval.times_value(a, c).first);
          if (lhs != rhs) {
            pass = false;
            witness = "a*(b+c) != a*b + a*c at " + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c);
            break;
          }
        }
    add_check("distributivity", pass, witness);
  }

  // x * S(y) = x*y + x.
  {
    bool pass = true;
    std::string witness;
    for (Index x = 0; x < K && pass; ++x)
      for (Index y = 0; y < K; ++y) {
        Index lhs = eval.times_value(x, eval.succ_value(1, y)).first;
        Index rhs = eval.plus_value(eval.times_value(x, y).first, x);
        if (lhs != rhs) {
          pass = false;
          witness = pair_witness("x*S(y) vs x*y+x", x, y, lhs, rhs);
          break;
        }
      }
    add_check("times-successor", pass, witness);
  }

  return report;
}

}  // namespace qarith

#include "qarith/json_io.hpp"

#include <stdexcept>

namespace qarith {

Json statevector_to_json(const StateVector& v) {
  Json amplitudes = Json::array();
  // std::map iteration gives strictly increasing indices; the constructor
  // already dropped entries below the floor.
  for (const auto& [index, amp] : v.amplitudes())
    amplitudes.push_back({{"index", index}, {"re", amp.real()}, {"im", amp.imag()}});
  return {{"k", v.shape().k()},
          {"L", v.shape().L()},
          {"registers", v.shape().registers()},
          {"amplitudes", amplitudes}};
}

StateVector statevector_from_json(const Json& j, Index dimension_cap) {
  RegisterShape shape(j.at("k").get<std::uint32_t>(), j.at("L").get<std::uint32_t>(),
                      j.at("registers").get<std::uint32_t>(), dimension_cap);
  std::map<Index, Amplitude> amplitudes;
  Index previous = 0;
  bool first = true;
  for (const auto& entry : j.at("amplitudes")) {
    Index index = entry.at("index").get<Index>();
    if (!first && index <= previous)
      throw std::invalid_argument("amplitude indices must be strictly increasing");
    first = false;
    previous = index;
    amplitudes[index] = {entry.at("re").get<double>(), entry.at("im").get<double>()};
  }
  return {shape, std::move(amplitudes)};
}

Json permutation_to_json(const PermutationOperator& op) {
  if (op.shape().dimension() > kTableCap)
    throw std::length_error("permutation tables are emitted only up to 2^16");
  return {{"dimension", op.shape().dimension()}, {"map", op.table()}};
}

OperatorFamily family_from_json(const Json& j, Index dimension_cap) {
  OperatorFamily family;
  family.k = j.at("k").get<std::uint32_t>();
  Index dimension = j.at("dimension").get<Index>();
  if (dimension < 2 || dimension > dimension_cap)
    throw std::invalid_argument("family dimension out of range");
  // The shared space is described by its dimension alone; factor it as a
  // k-ary register when possible, otherwise treat it as one wide register.
  std::uint32_t L = 0;
  Index probe = 1;
  while (probe < dimension) {
    probe *= family.k;
    ++L;
  }
  RegisterShape shape = probe == dimension
                            ? RegisterShape(family.k, L, 1, dimension_cap)
                            : RegisterShape(static_cast<std::uint32_t>(dimension), 1,
                                            1, dimension_cap);
  for (const auto& label : j.at("labels"))
    family.labels.push_back(label.get<std::string>());
  const auto& operators = j.at("operators");
  for (const auto& label : family.labels) {
    if (!operators.contains(label))
      throw std::invalid_argument("missing operator for label " + label);
    std::vector<Index> table = operators.at(label).get<std::vector<Index>>();
    if (table.size() != dimension)
      throw std::invalid_argument("operator table size mismatch for " + label);
    auto op = PermutationOperator::from_table(shape, "V_" + label, std::move(table));
    if (!op.is_bijection())
      throw std::invalid_argument("operator for " + label + " is not a bijection");
    family.operators.emplace(label, std::move(op));
  }
  return family;
}

Json family_report_to_json(const FamilyReport& report) {
  Json properties = Json::array();
  for (std::size_t i = 0; i < report.properties.size(); ++i)
    properties.push_back({{"property", i + 1},
                          {"pass", report.properties[i].pass},
                          {"witness", report.properties[i].witness}});
  return {{"properties", properties},
          {"all_pass", report.all_pass()},
          {"ordering", report.ordering}};
}

Json axiom_report_to_json(const AxiomReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return {{"checks", checks}, {"all_pass", report.all_pass()}};
}

Json label_model_to_json(const LabelModel& model) {
  std::vector<std::uint32_t> g(model.L()), d(model.k());
  for (std::uint32_t j = 1; j <= model.L(); ++j) g[j - 1] = model.g(j);
  for (std::uint32_t h = 0; h < model.k(); ++h)
    d[h] = model.d(static_cast<std::uint8_t>(h));
  return {{"A", model.sets().A}, {"B", model.sets().B}, {"g", g}, {"d", d}};
}

LabelModel label_model_from_json(const Json& j) {
  LabelSets sets{j.at("A").get<std::vector<std::string>>(),
                 j.at("B").get<std::vector<std::string>>()};
  return {std::move(sets), j.at("g").get<std::vector<std::uint32_t>>(),
          j.at("d").get<std::vector<std::uint32_t>>()};
}

Json grover_run_to_json(const GroverRun& run) {
  return {{"L", run.L},
          {"target", run.target},
          {"iterations", run.success_probability.size() - 1},
          {"success_probability", run.success_probability}};
}

Json shor_run_to_json(const ShorRun& run) {
  Json trials = Json::array();
  for (const auto& t : run.trials)
    trials.push_back({{"measured", t.measured},
                      {"decoded", t.decoded},
                      {"period", t.candidate.period},
                      {"verified", t.candidate.verified},
                      {"factors", t.factors}});
  Json distribution = Json::object();
  for (Index w = 0; w < run.distribution.size(); ++w)
    if (run.distribution[w] > kAmplitudeFloor)
      distribution[std::to_string(w)] = run.distribution[w];
  return {{"M", run.M},
          {"m", run.m},
          {"n", run.n},
          {"D", run.D},
          {"distribution", distribution},
          {"trials", trials},
          {"verified_trials", run.verified_trials},
          {"exact_success_probability", run.exact_success_probability}};
}

}  // namespace qarith

#pragma once

#include <json.hpp>

#include "qarith/algorithms.hpp"
#include "qarith/axioms.hpp"
#include "qarith/physical.hpp"

namespace qarith {

using Json = nlohmann::json;

/// { "k", "L", "registers", "amplitudes": [{"index","re","im"}] } with
/// indices strictly increasing and amplitudes below 1e-12 omitted.
Json statevector_to_json(const StateVector& v);
StateVector statevector_from_json(const Json& j,
                                  Index dimension_cap = kDefaultDimensionCap);

/// { "dimension", "map": [int] }; refuses dimensions above 2^16.
Json permutation_to_json(const PermutationOperator& op);

/// Family input { "k", "dimension", "labels", "operators": {label: [perm]} }.
OperatorFamily family_from_json(const Json& j,
                                Index dimension_cap = kDefaultDimensionCap);
Json family_report_to_json(const FamilyReport& report);

Json axiom_report_to_json(const AxiomReport& report);

/// { "A": [string], "B": [string], "g": [indices], "d": [indices] }.
Json label_model_to_json(const LabelModel& model);
LabelModel label_model_from_json(const Json& j);

Json grover_run_to_json(const GroverRun& run);
Json shor_run_to_json(const ShorRun& run);

}  // namespace qarith

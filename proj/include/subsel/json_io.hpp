#pragma once

#include "subsel/bounds.hpp"
#include "subsel/generator.hpp"
#include "subsel/sweep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace subsel {

// Matroid schema:
//   {"type":"uniform","k":int} |
//   {"type":"partition","blocks":[[int]],"caps":[int]} |
//   {"type":"explicit","sets":[[int]]}
// ground_size is taken from the enclosing instance, from "n", or inferred
// from blocks/sets for standalone files.
nlohmann::json matroid_to_json(const MatroidSpec& m);
MatroidSpec matroid_from_json(const nlohmann::json& j, int ground_size = -1);

// Instance schema: {"dim":int,"ground":[[real]],"eta":[real],
//                   "matroid":<matroid>,"labels":[string]?}
// Ground vectors are normalized on load; a near-zero row is an error.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json selection_to_json(const SelectionResult& r);
nlohmann::json axiom_report_to_json(const AxiomReport& r);
nlohmann::json curvature_to_json(const CurvatureReport& r);
nlohmann::json coherence_to_json(const CoherenceStats& s);
nlohmann::json bound_report_to_json(const BoundReport& r);

nlohmann::json generator_config_to_json(const GeneratorConfig& cfg);
GeneratorConfig generator_config_from_json(const nlohmann::json& j);

// Sweep config schema: {"reps":int,"configs":[<generator config>...]}
struct SweepConfig {
  int reps = 1;
  std::vector<GeneratorConfig> configs;
};
SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json sweep_to_json(const SweepResult& result);

/// Parses a file, wrapping failures in errors that name the file.
nlohmann::json load_json_file(const std::string& path);

}  // namespace subsel

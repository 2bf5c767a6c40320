#pragma once

#include "subsel/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace subsel {

enum class GroundKind { kOrthogonal, kPerturbed, kGaussianDictionary, kPaperExample };
enum class EtaMode { kRandomUnit, kInSpan, kGiven };

std::string to_string(GroundKind k);
std::string to_string(EtaMode m);

/// Deterministic instance recipe: identical config + seed reproduces the
/// instance bit for bit.
struct GeneratorConfig {
  GroundKind kind = GroundKind::kOrthogonal;
  int dim = 4;
  int n = 4;
  int K = 2;
  std::uint64_t seed = 0;
  EtaMode eta_mode = EtaMode::kRandomUnit;
  Vec eta_coords;              // kGiven
  double delta = 0.0;          // kPerturbed: requested principal-angle gap
  std::string example_name;    // kPaperExample
  double epsilon = 0.1;        // nonuniform_counterexample parameter
  /// Attached constraint; Uniform(K) when absent. Builtin examples carry
  /// their own matroid and ignore this.
  std::optional<MatroidSpec> matroid;
};

/// Builds the instance described by the config.
///
/// orthogonal           random rotation of n standard basis vectors (n <= dim)
/// perturbed            orthogonal base, then per-vector rotations scaled so
///                      that the exact principal-angle gap pi/2 - phi stays
///                      <= delta (enforced whenever the exact-phi guards
///                      allow; the scaling loop is deterministic)
/// gaussian_dictionary  i.i.d. normal columns, normalized (n may exceed dim)
/// paper_example        "fr_counterexample" or "nonuniform_counterexample"
Instance generate(const GeneratorConfig& cfg);

}  // namespace subsel

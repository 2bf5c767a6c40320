#pragma once

#include "subsel/bounds.hpp"
#include "subsel/generator.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace subsel {

struct SweepRow {
  int instance_id = 0;  // global row index; also the aggregation order
  int config_index = 0;
  int rep = 0;
  GeneratorConfig config;        // with the derived per-instance seed
  std::optional<BoundReport> report;
  std::string error;             // per-row failures are recorded, not fatal
  std::optional<double> asymptote;  // perturbed configs only
  double wall_ms = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  VerifyOptions verify;
  /// 0 = SUBSEL_THREADS env var, falling back to hardware concurrency.
  int threads = 0;
};

/// Generates reps instances per config (seeds derived from (config.seed,
/// rep)) and runs verify_bounds on each. Rows are independent; evaluation
/// order does not affect the result.
SweepResult run_sweep(const std::vector<GeneratorConfig>& configs, int reps,
                      const SweepOptions& opts = {});

/// Fixed-column CSV projection; columns are documented in the README.
/// Everything except wall_ms is reproducible byte for byte.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

}  // namespace subsel

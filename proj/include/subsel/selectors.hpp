#pragma once

#include "subsel/instance.hpp"

#include <string>
#include <vector>

namespace subsel {

enum class StopReason { kRankCapReached, kNoFeasibleExtension };

std::string to_string(StopReason r);

struct SelectionResult {
  std::vector<int> chosen;          // in pick order
  std::vector<double> step_values;  // f(E) after each addition
  std::vector<double> step_gains;   // marginal gain of each addition
  double objective = 0.0;
  int steps_taken = 0;
  StopReason stopped_reason = StopReason::kRankCapReached;
};

struct SelectOptions {
  /// Reproduces the literal residual update r <- r - P_eta(E) in OMP, which
  /// keeps subtracting from the previous residual instead of from eta.
  /// Default is the standard residual r = eta - P_eta(E).
  bool literal_residual = false;
  /// Stop forward regression as soon as every feasible gain is <= tol,
  /// instead of padding the selection to the rank cap.
  bool stop_on_zero_gain = false;
  double tol = kRankTol;
};

/// Greedy on f itself: each step adds the feasible unchosen element with the
/// largest projection gain, ties broken by smallest ground index.
SelectionResult forward_regression(const Instance& inst,
                                   const SelectOptions& opts = {});

/// Greedy on the residual: each step adds the feasible unchosen element with
/// the largest |<r, s>|, then recomputes r against the enlarged span.
SelectionResult omp(const Instance& inst, const SelectOptions& opts = {});

struct OracleGuard {
  int max_ground = 25;
  int max_rank = 8;
};

/// Exhaustive maximizer of f over all independent sets; returns the first
/// maximizer in size-lex enumeration order.
SelectionResult brute_force_optimal(const Instance& inst,
                                    const OracleGuard& guard = {});

}  // namespace subsel

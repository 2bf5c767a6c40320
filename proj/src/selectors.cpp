#include "subsel/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subsel {

std::string to_string(StopReason r) {
  return r == StopReason::kRankCapReached ? "rank_cap_reached"
                                          : "no_feasible_extension";
}

namespace {

double objective_of(const OrthoBasis& basis, const Vec& eta) {
  return (basis.matrix().transpose() * eta).squaredNorm();
}

void record_step(SelectionResult& res, int index, double f_now) {
  const double f_prev = res.step_values.empty() ? 0.0 : res.step_values.back();
  res.chosen.push_back(index);
  res.step_values.push_back(f_now);
  res.step_gains.push_back(f_now - f_prev);
}

void finish(SelectionResult& res) {
  res.steps_taken = static_cast<int>(res.chosen.size());
  res.objective = res.step_values.empty() ? 0.0 : res.step_values.back();
}

}  // namespace

SelectionResult forward_regression(const Instance& inst,
                                   const SelectOptions& opts) {
  inst.validate();
  const int n = inst.size();
  const int cap = inst.matroid.rank_cap();
  OrthoBasis basis(inst.dim(), opts.tol);
  SelectionResult res;
  res.stopped_reason = StopReason::kRankCapReached;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  IndexSet current;

  for (int step = 0; step < cap; ++step) {
    int best = -1;
    double best_gain = -1.0;  // gains are >= 0, so index 0 wins zero ties
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (!inst.matroid.can_extend(current, i)) continue;
      const Vec w = basis.residual(inst.ground[static_cast<std::size_t>(i)]);
      const double rn = w.norm();
      double gain = 0.0;
      if (rn > opts.tol) {
        const double c = w.dot(inst.eta) / rn;
        gain = c * c;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best < 0) {
      res.stopped_reason = StopReason::kNoFeasibleExtension;
      break;
    }
    if (opts.stop_on_zero_gain && best_gain <= opts.tol) {
      res.stopped_reason = StopReason::kNoFeasibleExtension;
      break;
    }
    used[static_cast<std::size_t>(best)] = 1;
    current.insert(std::upper_bound(current.begin(), current.end(), best),
                   best);
    basis.extend(inst.ground[static_cast<std::size_t>(best)], best);
    record_step(res, best, objective_of(basis, inst.eta));
  }
  finish(res);
  return res;
}

SelectionResult omp(const Instance& inst, const SelectOptions& opts) {
  inst.validate();
  const int n = inst.size();
  const int cap = inst.matroid.rank_cap();
  OrthoBasis basis(inst.dim(), opts.tol);
  SelectionResult res;
  res.stopped_reason = StopReason::kRankCapReached;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  IndexSet current;
  Vec r = inst.eta;

  for (int step = 0; step < cap; ++step) {
    int best = -1;
    double best_score = -1.0;
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (!inst.matroid.can_extend(current, i)) continue;
      const double score =
          std::abs(r.dot(inst.ground[static_cast<std::size_t>(i)]));
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    if (best < 0) {
      res.stopped_reason = StopReason::kNoFeasibleExtension;
      break;
    }
    used[static_cast<std::size_t>(best)] = 1;
    current.insert(std::upper_bound(current.begin(), current.end(), best),
                   best);
    basis.extend(inst.ground[static_cast<std::size_t>(best)], best);
    const Vec proj = basis.project(inst.eta);
    r = opts.literal_residual ? Vec(r - proj) : Vec(inst.eta - proj);
    record_step(res, best, objective_of(basis, inst.eta));
  }
  finish(res);
  return res;
}

SelectionResult brute_force_optimal(const Instance& inst,
                                    const OracleGuard& guard) {
  inst.validate();
  const int cap = inst.matroid.rank_cap();
  if (inst.size() > guard.max_ground || cap > guard.max_rank) {
    throw std::runtime_error(
        "brute_force_optimal: guard exceeded (n=" +
        std::to_string(inst.size()) + ", rank=" + std::to_string(cap) +
        "; limits " + std::to_string(guard.max_ground) + "/" +
        std::to_string(guard.max_rank) + ")");
  }
  double best_f = 0.0;
  IndexSet best;  // the empty set is enumerated first
  inst.matroid.enumerate_independent_sets(
      std::nullopt, [&](const IndexSet& s) {
        const double f = project_norm_sq(inst.eta, gather(inst, s));
        if (f > best_f) {
          best_f = f;
          best = s;
        }
      });

  SelectionResult res;
  OrthoBasis basis(inst.dim());
  for (int i : best) {
    basis.extend(inst.ground[static_cast<std::size_t>(i)], i);
    record_step(res, i, objective_of(basis, inst.eta));
  }
  finish(res);
  res.stopped_reason = static_cast<int>(best.size()) == cap
                           ? StopReason::kRankCapReached
                           : StopReason::kNoFeasibleExtension;
  return res;
}

}  // namespace subsel

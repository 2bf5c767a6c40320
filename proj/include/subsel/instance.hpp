#pragma once

#include "subsel/hilbert.hpp"
#include "subsel/matroid.hpp"

#include <string>
#include <vector>

namespace subsel {

/// A selection problem: unit ground-set vectors, a target vector, and the
/// independence structure constraining the choice.
struct Instance {
  std::vector<Vec> ground;
  Vec eta;
  MatroidSpec matroid;
  std::vector<std::string> labels;  // empty, or one per ground element

  int dim() const {
    return ground.empty() ? static_cast<int>(eta.size())
                          : static_cast<int>(ground.front().size());
  }
  int size() const { return static_cast<int>(ground.size()); }

  /// Throws std::invalid_argument naming the offending field when any
  /// invariant fails (unit norms, matching dims, matroid ground size).
  void validate() const;
};

/// Ground vectors addressed by a sorted index set.
std::vector<Vec> gather(const Instance& inst, const IndexSet& indices);

}  // namespace subsel

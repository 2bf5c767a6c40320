#include "subsel/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace subsel {

void Instance::validate() const {
  const int d = dim();
  if (d < 1) throw std::invalid_argument("instance: dimension must be >= 1");
  if (eta.size() != d) {
    throw std::invalid_argument("instance.eta: expected length " +
                                std::to_string(d));
  }
  if (!eta.allFinite()) {
    throw std::invalid_argument("instance.eta: coordinates must be finite");
  }
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (ground[i].size() != d) {
      throw std::invalid_argument("instance.ground[" + std::to_string(i) +
                                  "]: expected length " + std::to_string(d));
    }
    if (!ground[i].allFinite()) {
      throw std::invalid_argument("instance.ground[" + std::to_string(i) +
                                  "]: coordinates must be finite");
    }
    if (std::abs(ground[i].norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("instance.ground[" + std::to_string(i) +
                                  "]: must be unit norm");
    }
  }
  if (matroid.ground_size() != size()) {
    throw std::invalid_argument(
        "instance.matroid: ground size " +
        std::to_string(matroid.ground_size()) + " does not match " +
        std::to_string(size()) + " ground vectors");
  }
  if (!labels.empty() && labels.size() != ground.size()) {
    throw std::invalid_argument(
        "instance.labels: expected one label per ground element");
  }
}

std::vector<Vec> gather(const Instance& inst, const IndexSet& indices) {
  std::vector<Vec> out;
  out.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= inst.size()) {
      throw std::out_of_range("gather: index " + std::to_string(i) +
                              " out of range");
    }
    out.push_back(inst.ground[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace subsel

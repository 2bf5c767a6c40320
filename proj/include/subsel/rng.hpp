#pragma once

#include "subsel/hilbert.hpp"

#include <cstdint>
#include <random>

namespace subsel {

/// Stateless seed mixing; identical (seed, stream) pairs yield identical
/// streams on every platform.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 wrapped with hand-rolled double/normal draws, because the
/// standard distributions are implementation-defined and the sweep output
/// must be byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();                   // [0, 1)
  double uniform(double a, double b);
  int uniform_int(int lo, int hi);    // inclusive
  double normal();                    // Box-Muller
  Vec gaussian_vec(int dim);
  Vec unit_vec(int dim);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace subsel

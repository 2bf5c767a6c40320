#pragma once

#include "subsel/curvature.hpp"
#include "subsel/selectors.hpp"

#include <optional>

namespace subsel {

/// Curvature-weighted horizon sum_{i=1}^{K} min(kf, kb)^(i-1); equals K when
/// the base is 1.
double k_hat(int K, double kf, double kb);

/// Uniform-matroid guarantee for forward regression: 1 - (1 - 1/k_hat)^K.
double bound_fr_uniform(int K, double kf, double kb);

/// Uniform-matroid guarantee for OMP: 1 - (1 - sin^2(phi)/k_hat)^K. Never
/// exceeds the forward-regression bound.
double bound_omp_uniform(int K, double kf, double kb, double phi);

/// Non-uniform guarantee for forward regression: 1 / (1 + a*b) with
/// a = max(kf, kb) (raised to K when above 1) and b = kf^(K-1) when kf > 1.
double bound_fr_nonuniform(int K, double kf, double kb);

/// Non-uniform guarantee for OMP: the same case split with ko joining the
/// max and a sin^-2(phi) factor. nullopt when phi == 0.
std::optional<double> bound_omp_nonuniform(int K, double kf, double kb,
                                           double ko, double phi);

/// First-order near-orthogonal approximation of the non-uniform bounds,
/// 1 / (2 + 2(2K-1) delta) with delta = pi/2 - phi. Reported, not asserted.
double near_orthogonal_asymptote(int K, double delta);

struct BoundInputs {
  int K = 1;
  double kappa_fwd = 0.0;
  double kappa_bwd = 0.0;
  double kappa_omp = 0.0;
  double phi = 0.0;
};

struct BoundReport {
  double k_hat = 1.0;
  double bound_fr_uniform = 0.0;
  double bound_omp_uniform = 0.0;
  double bound_fr_nonuniform = 0.0;
  std::optional<double> bound_omp_nonuniform;
  double empirical_ratio_fr = 1.0;
  double empirical_ratio_omp = 1.0;
  bool satisfied_fr = false;
  bool satisfied_omp = false;
  bool uniform_class = true;  // which pair of bounds was asserted
  bool degenerate = false;    // f(OPT) ~ 0; ratios defined as 1
  /// Explicit families may fail the matroid axioms; the selectors still run
  /// and the report labels the structure an independence system.
  bool matroid_valid = true;
  double f_fr = 0.0;
  double f_omp = 0.0;
  double f_opt = 0.0;
  BoundInputs inputs;
};

struct VerifyOptions {
  CurvatureOptions curvature;
  SelectOptions select;
  OracleGuard oracle;
  double slack = 1e-9;
};

/// Computes exact curvatures, runs all three selectors, and checks the
/// theorem bound matching the matroid class against the empirical ratios.
BoundReport verify_bounds(const Instance& inst, int K,
                          const VerifyOptions& opts = {});

}  // namespace subsel

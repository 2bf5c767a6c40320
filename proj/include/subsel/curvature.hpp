#pragma once

#include "subsel/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace subsel {

enum class CurvatureMode { kExact, kSampled };

std::string to_string(CurvatureMode m);

/// Configuration (E, s, t) attaining an extremum; t is -1 for the principal
/// angle, which ranges over (E, s) only.
struct TripleWitness {
  IndexSet base;
  int s = -1;
  int t = -1;
};

struct CurvatureReport {
  double kappa_fwd = 0.0;
  double kappa_bwd = 0.0;
  double kappa_omp = 0.0;
  double phi = 0.0;  // radians in [0, pi/2]
  int K = 1;         // bases range over card(E) <= 2K-2
  CurvatureMode mode = CurvatureMode::kExact;
  long n_samples = 0;  // sampled mode only
  std::optional<TripleWitness> witness_fwd;
  std::optional<TripleWitness> witness_bwd;
  std::optional<TripleWitness> witness_omp;
  std::optional<TripleWitness> witness_phi;
  long skipped = 0;  // admissible triples dropped for a near-zero denominator
  double denom_tol = 0.0;
};

struct CurvatureOptions {
  CurvatureMode mode = CurvatureMode::kExact;
  long samples = 100000;   // sampled mode
  std::uint64_t seed = 0;  // sampled mode
  /// Denominators below denom_tol_scale * ||eta||^2 are excluded from the
  /// maxima and counted in `skipped` (a vanishing denominator carries no
  /// curvature information and would otherwise blow the ratio up).
  double denom_tol_scale = 1e-12;
  double rank_tol = kRankTol;
  /// Exact-mode guards; exceeding either throws with a pointer to sampled
  /// mode. 2K-2 must stay <= max_base_card.
  int max_ground = 12;
  int max_base_card = 4;
};

/// Computes all three elemental curvatures and the principal angle in one
/// sweep over the admissible (E, s, t) configurations.
CurvatureReport curvature_report(const Instance& inst, int K,
                                 const CurvatureOptions& opts = {});

/// Worst-case ratio of the gain of t after s to the gain of t, over bases
/// with card(E) <= 2K-2 and the ordering <eta,s_perp>^2 <= <eta,t_perp>^2.
double forward_curvature(const Instance& inst, int K,
                         const CurvatureOptions& opts = {});

/// Same numerator with denominator = gain of s, under the reversed ordering.
double backward_curvature(const Instance& inst, int K,
                          const CurvatureOptions& opts = {});

/// Same ratio as the backward curvature, admissible when the residual of eta
/// correlates at least as strongly with s as with t.
double omp_curvature(const Instance& inst, int K,
                     const CurvatureOptions& opts = {});

/// Minimum angle between any ground element and the span of any subset with
/// card(E) <= 2K-2 not containing it; pi/2 iff mutually orthogonal at that
/// scale.
double principal_angle(const Instance& inst, int K,
                       const CurvatureOptions& opts = {});

/// Exhaustive statistics over residual pairs, used to check the angle-based
/// curvature bounds: max |<s_perp, t_perp>| over all (E, s, t) with both
/// residuals present, and the max of
/// (sin^-2(phi) + |<t_perp, s_perp>|)^2 / (1 - <t_perp, s_perp>^2)
/// over the triples admissible for the OMP curvature.
struct PairStats {
  double max_abs_cross = 0.0;
  double max_omp_angle_rhs = 0.0;
  long pairs_seen = 0;
};
PairStats residual_pair_stats(const Instance& inst, int K, double phi,
                              const CurvatureOptions& opts = {});

/// Incoherence-based relaxation of the principal angle: a Gershgorin lower
/// bound on the smallest Gram eigenvalue for card(E) = m = 2K-2 gives
/// cos(phi) <= sqrt(m) * mu / sqrt(1 - (m-1) * mu). The bound is an
/// estimate only and is never substituted into bound verification.
struct CoherenceStats {
  double mu = 0.0;  // max_{i != j} |<x_i, x_j>|
  int m = 0;
  double lambda_min_bound = 1.0;
  double cos_phi_upper = 0.0;  // +inf sentinel when the bound is vacuous
};
CoherenceStats coherence_relaxation(const Instance& inst, int K);

/// 1 / (1 - 2 cos(phi)) when cos(phi) < 1/2; nullopt otherwise (the bound is
/// nonpositive and carries no information in that regime).
std::optional<double> theorem2_bound(double phi);

}  // namespace subsel

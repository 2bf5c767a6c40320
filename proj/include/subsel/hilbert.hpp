#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace subsel {

using Vec = Eigen::VectorXd;

/// Threshold below which a residual is treated as linearly dependent.
/// Calibrated for unit-norm inputs in dimensions up to a few dozen.
inline constexpr double kRankTol = 1e-9;

/// Dot product with an explicit dimension check.
double inner(const Vec& u, const Vec& v);

/// Returns v / ||v||. Throws if ||v|| <= tol.
Vec normalize(const Vec& v, double tol = kRankTol);

/// Incrementally built orthonormal basis (classical Gram-Schmidt with one
/// re-orthogonalization pass, which keeps off-diagonal inner products at
/// machine-epsilon level even after dozens of extensions).
class OrthoBasis {
 public:
  explicit OrthoBasis(Eigen::Index dim, double tol_rank = kRankTol);

  /// Orthogonalizes v against the current basis and appends the normalized
  /// residual unless its norm falls below tol_rank (v is then dependent and
  /// the basis is left unchanged). Returns the residual norm.
  double extend(const Vec& v, int source_index = -1);

  Eigen::Index dim() const { return q_.rows(); }
  int size() const { return static_cast<int>(q_.cols()); }
  double tol_rank() const { return tol_rank_; }

  /// dim x size matrix with orthonormal columns.
  const Eigen::MatrixXd& matrix() const { return q_; }

  /// Ground-set indices of the accepted (non-dependent) extensions.
  const std::vector<int>& source_indices() const { return source_indices_; }

  /// Projection of v onto the span of the basis.
  Vec project(const Vec& v) const;

  /// Component of v orthogonal to the span (two projection passes).
  Vec residual(const Vec& v) const;

  /// ||P(v)||, cheaper than forming the projection.
  double project_norm(const Vec& v) const;

 private:
  Eigen::MatrixXd q_;  // dim x size, orthonormal columns
  std::vector<int> source_indices_;
  double tol_rank_;
};

/// Unit parallel / orthogonal components of a unit vector against a span,
/// t = orthogonal * sin(angle) + parallel * cos(angle). A component is
/// absent when its magnitude falls below the rank tolerance.
struct Decomposition {
  std::optional<Vec> parallel;
  std::optional<Vec> orthogonal;
  double angle = 0.0;  // radians in [0, pi/2]
};

/// f(E) = squared norm of the projection of eta onto span(elements).
/// Invariant to element order and to dependent duplicates; f({}) = 0.
double project_norm_sq(const Vec& eta, const std::vector<Vec>& elements,
                       double tol = kRankTol);

/// Splits unit vector t into components against span(elements).
/// angle = arccos ||P_t(elements)||; throws if t is not unit norm.
Decomposition decompose(const Vec& t, const std::vector<Vec>& elements,
                        double tol = kRankTol);

/// f(elements + {s}) - f(elements); equals <eta, s_perp>^2 when the residual
/// of s exists and 0 when s lies in the span.
double marginal_gain(const Vec& eta, const std::vector<Vec>& elements,
                     const Vec& s, double tol = kRankTol);

}  // namespace subsel

#include "subsel/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subsel {

double inner(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("inner: dimension mismatch (" +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()) + ")");
  }
  return u.dot(v);
}

Vec normalize(const Vec& v, double tol) {
  const double n = v.norm();
  if (!(n > tol)) {
    throw std::invalid_argument("normalize: vector norm " + std::to_string(n) +
                                " is below tolerance");
  }
  return v / n;
}

OrthoBasis::OrthoBasis(Eigen::Index dim, double tol_rank)
    : q_(dim, 0), tol_rank_(tol_rank) {
  if (dim < 1) {
    throw std::invalid_argument("OrthoBasis: dim must be >= 1");
  }
}

double OrthoBasis::extend(const Vec& v, int source_index) {
  if (v.size() != q_.rows()) {
    throw std::invalid_argument("OrthoBasis::extend: dimension mismatch");
  }
  Vec w = v;
  if (q_.cols() > 0) {
    w.noalias() -= q_ * (q_.transpose() * v);
    w.noalias() -= q_ * (q_.transpose() * w);  // second pass
  }
  const double rn = w.norm();
  if (rn > tol_rank_) {
    q_.conservativeResize(Eigen::NoChange, q_.cols() + 1);
    q_.col(q_.cols() - 1) = w / rn;
    source_indices_.push_back(source_index);
  }
  return rn;
}

Vec OrthoBasis::project(const Vec& v) const {
  if (q_.cols() == 0) return Vec::Zero(q_.rows());
  return q_ * (q_.transpose() * v);
}

Vec OrthoBasis::residual(const Vec& v) const {
  if (q_.cols() == 0) return v;
  Vec w = v - q_ * (q_.transpose() * v);
  w.noalias() -= q_ * (q_.transpose() * w);
  return w;
}

double OrthoBasis::project_norm(const Vec& v) const {
  return (q_.transpose() * v).norm();
}

namespace {

OrthoBasis span_basis(Eigen::Index dim, const std::vector<Vec>& elements,
                      double tol) {
  OrthoBasis basis(dim, tol);
  for (const Vec& e : elements) basis.extend(e);
  return basis;
}

}  // namespace

double project_norm_sq(const Vec& eta, const std::vector<Vec>& elements,
                       double tol) {
  if (elements.empty()) return 0.0;
  if (eta.size() != elements.front().size()) {
    throw std::invalid_argument("project_norm_sq: dimension mismatch");
  }
  const OrthoBasis basis = span_basis(eta.size(), elements, tol);
  return (basis.matrix().transpose() * eta).squaredNorm();
}

Decomposition decompose(const Vec& t, const std::vector<Vec>& elements,
                        double tol) {
  if (std::abs(t.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("decompose: t must be unit norm");
  }
  const OrthoBasis basis = span_basis(t.size(), elements, tol);
  const Vec p = basis.project(t);
  const Vec w = basis.residual(t);
  const double pn = std::clamp(p.norm(), 0.0, 1.0);
  const double rn = w.norm();

  Decomposition d;
  d.angle = std::acos(pn);
  if (pn > tol) d.parallel = p / pn;
  if (rn > tol) {
    d.orthogonal = w / rn;
  } else {
    d.angle = 0.0;  // t lies in the span
  }
  return d;
}

double marginal_gain(const Vec& eta, const std::vector<Vec>& elements,
                     const Vec& s, double tol) {
  if (eta.size() != s.size()) {
    throw std::invalid_argument("marginal_gain: dimension mismatch");
  }
  const OrthoBasis basis = span_basis(eta.size(), elements, tol);
  const Vec w = basis.residual(s);
  const double rn = w.norm();
  if (rn <= tol) return 0.0;
  const double c = w.dot(eta) / rn;
  return c * c;
}

}  // namespace subsel

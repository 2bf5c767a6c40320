#include "subsel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subsel {

namespace {

double sq(double x) { return x * x; }

void check_kappa_args(int K, double kf, double kb) {
  if (K < 1) throw std::invalid_argument("bounds: K must be >= 1");
  if (kf < 0.0 || kb < 0.0) {
    throw std::invalid_argument("bounds: curvatures must be >= 0");
  }
}

// a factor of the non-uniform bounds; the K-th power kicks in above 1
double case_a(double max_kappa, int K) {
  return max_kappa <= 1.0 ? max_kappa : std::pow(max_kappa, K);
}

double case_b(double kf, int K) {
  return kf > 1.0 ? std::pow(kf, K - 1) : 1.0;
}

}  // namespace

double k_hat(int K, double kf, double kb) {
  check_kappa_args(K, kf, kb);
  const double base = std::min(kf, kb);
  double sum = 0.0;
  double term = 1.0;
  for (int i = 0; i < K; ++i) {
    sum += term;
    term *= base;
  }
  return sum;
}

double bound_fr_uniform(int K, double kf, double kb) {
  const double kh = k_hat(K, kf, kb);  // >= 1: the i=1 term is 1
  return 1.0 - std::pow(1.0 - 1.0 / kh, K);
}

double bound_omp_uniform(int K, double kf, double kb, double phi) {
  const double kh = k_hat(K, kf, kb);
  return 1.0 - std::pow(1.0 - sq(std::sin(phi)) / kh, K);
}

double bound_fr_nonuniform(int K, double kf, double kb) {
  check_kappa_args(K, kf, kb);
  return 1.0 / (1.0 + case_a(std::max(kf, kb), K) * case_b(kf, K));
}

std::optional<double> bound_omp_nonuniform(int K, double kf, double kb,
                                           double ko, double phi) {
  check_kappa_args(K, kf, kb);
  if (ko < 0.0) throw std::invalid_argument("bounds: curvatures must be >= 0");
  if (!(phi > 0.0)) return std::nullopt;
  const double a = case_a(std::max({kf, kb, ko}), K);
  return 1.0 / (1.0 + a * case_b(kf, K) / sq(std::sin(phi)));
}

double near_orthogonal_asymptote(int K, double delta) {
  if (K < 1) throw std::invalid_argument("bounds: K must be >= 1");
  if (delta < 0.0) throw std::invalid_argument("bounds: delta must be >= 0");
  return 1.0 / (2.0 + 2.0 * (2.0 * K - 1.0) * delta);
}

BoundReport verify_bounds(const Instance& inst, int K,
                          const VerifyOptions& opts) {
  const CurvatureReport cr = curvature_report(inst, K, opts.curvature);
  const SelectionResult fr = forward_regression(inst, opts.select);
  const SelectionResult om = omp(inst, opts.select);
  const SelectionResult opt = brute_force_optimal(inst, opts.oracle);

  BoundReport rep;
  rep.inputs = {K, cr.kappa_fwd, cr.kappa_bwd, cr.kappa_omp, cr.phi};
  rep.f_fr = fr.objective;
  rep.f_omp = om.objective;
  rep.f_opt = opt.objective;
  rep.uniform_class = inst.matroid.is_uniform();
  rep.matroid_valid =
      !inst.matroid.is_explicit() || [&] {
        const AxiomReport ax = inst.matroid.validate_axioms();
        return ax.hereditary_ok && ax.augmentation_ok;
      }();

  rep.degenerate = opt.objective <= 1e-12 * inst.eta.squaredNorm();
  rep.empirical_ratio_fr = rep.degenerate ? 1.0 : fr.objective / opt.objective;
  rep.empirical_ratio_omp = rep.degenerate ? 1.0 : om.objective / opt.objective;

  rep.k_hat = k_hat(K, cr.kappa_fwd, cr.kappa_bwd);
  rep.bound_fr_uniform = bound_fr_uniform(K, cr.kappa_fwd, cr.kappa_bwd);
  rep.bound_omp_uniform =
      bound_omp_uniform(K, cr.kappa_fwd, cr.kappa_bwd, cr.phi);
  rep.bound_fr_nonuniform = bound_fr_nonuniform(K, cr.kappa_fwd, cr.kappa_bwd);
  rep.bound_omp_nonuniform = bound_omp_nonuniform(
      K, cr.kappa_fwd, cr.kappa_bwd, cr.kappa_omp, cr.phi);

  const double fr_bound =
      rep.uniform_class ? rep.bound_fr_uniform : rep.bound_fr_nonuniform;
  rep.satisfied_fr = rep.empirical_ratio_fr >= fr_bound - opts.slack;
  if (rep.uniform_class) {
    rep.satisfied_omp =
        rep.empirical_ratio_omp >= rep.bound_omp_uniform - opts.slack;
  } else if (rep.bound_omp_nonuniform) {
    rep.satisfied_omp =
        rep.empirical_ratio_omp >= *rep.bound_omp_nonuniform - opts.slack;
  } else {
    rep.satisfied_omp = true;  // phi == 0: the bound is not applicable
  }
  return rep;
}

}  // namespace subsel

#include "subsel/generator.hpp"

#include "subsel/curvature.hpp"
#include "subsel/rng.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subsel {

std::string to_string(GroundKind k) {
  switch (k) {
    case GroundKind::kOrthogonal: return "orthogonal";
    case GroundKind::kPerturbed: return "perturbed";
    case GroundKind::kGaussianDictionary: return "gaussian_dictionary";
    case GroundKind::kPaperExample: return "paper_example";
  }
  return "?";
}

std::string to_string(EtaMode m) {
  switch (m) {
    case EtaMode::kRandomUnit: return "random_unit";
    case EtaMode::kInSpan: return "in_span";
    case EtaMode::kGiven: return "given";
  }
  return "?";
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Haar-ish random rotation: QR of a Gaussian matrix with the column signs
/// pinned by the R diagonal so the result is a deterministic function of the
/// draw.
Eigen::MatrixXd random_rotation(Rng& rng, int dim) {
  Eigen::MatrixXd a(dim, dim);
  for (int j = 0; j < dim; ++j) a.col(j) = rng.gaussian_vec(dim);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

std::vector<Vec> orthogonal_ground(Rng& rng, int dim, int n) {
  const Eigen::MatrixXd q = random_rotation(rng, dim);
  std::vector<Vec> ground;
  ground.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ground.push_back(q.col(j));
  return ground;
}

double principal_gap(const std::vector<Vec>& ground, int dim, int K) {
  Instance probe;
  probe.ground = ground;
  probe.eta = Vec::Zero(dim);
  probe.eta[0] = 1.0;
  probe.matroid = MatroidSpec::uniform(static_cast<int>(ground.size()), 1);
  return kHalfPi - principal_angle(probe, K);
}

std::vector<Vec> perturbed_ground(Rng& rng, const GeneratorConfig& cfg) {
  const std::vector<Vec> base = orthogonal_ground(rng, cfg.dim, cfg.n);
  std::vector<Vec> tilt;      // unit directions orthogonal to each base vector
  std::vector<double> theta;  // raw per-vector angles in [0, delta/2]
  tilt.reserve(base.size());
  theta.reserve(base.size());
  for (const Vec& x : base) {
    Vec u;
    for (;;) {
      const Vec g = rng.gaussian_vec(cfg.dim);
      u = g - g.dot(x) * x;
      const double n = u.norm();
      if (n > 1e-6) {
        u /= n;
        break;
      }
    }
    tilt.push_back(u);
    theta.push_back(rng.uniform() * cfg.delta / 2.0);
  }

  const auto make = [&](double scale) {
    std::vector<Vec> ground;
    ground.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double th = theta[i] * scale;
      ground.push_back(std::cos(th) * base[i] + std::sin(th) * tilt[i]);
    }
    return ground;
  };

  std::vector<Vec> ground = make(1.0);
  // The requested delta caps the exact principal-angle gap, not just the
  // per-vector tilt; span effects can push the gap past the raw budget, so
  // shrink deterministically until the measurement complies. Only possible
  // at exact-phi scale.
  const CurvatureOptions guard;
  if (cfg.n <= guard.max_ground && 2 * cfg.K - 2 <= guard.max_base_card) {
    double scale = 1.0;
    for (int iter = 0; iter < 60; ++iter) {
      const double gap = principal_gap(ground, cfg.dim, cfg.K);
      if (gap <= cfg.delta + 5e-7) return ground;
      scale *= std::max(0.25, 0.8 * (cfg.delta + 2.5e-7) / gap);
      ground = make(scale);
    }
    return make(0.0);  // give up on the tilt entirely
  }
  return ground;
}

std::vector<Vec> gaussian_ground(Rng& rng, int dim, int n) {
  std::vector<Vec> ground;
  ground.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (;;) {
      const Vec g = rng.gaussian_vec(dim);
      const double norm = g.norm();
      if (norm > 1e-6) {
        ground.push_back(g / norm);
        break;
      }
    }
  }
  return ground;
}

Vec make_eta(Rng& rng, const GeneratorConfig& cfg,
             const std::vector<Vec>& ground) {
  switch (cfg.eta_mode) {
    case EtaMode::kRandomUnit:
      return rng.unit_vec(cfg.dim);
    case EtaMode::kInSpan: {
      for (;;) {
        Vec eta = Vec::Zero(cfg.dim);
        for (const Vec& x : ground) eta += rng.normal() * x;
        const double n = eta.norm();
        if (n > 1e-6) return eta / n;
      }
    }
    case EtaMode::kGiven:
      if (cfg.eta_coords.size() != cfg.dim) {
        throw std::invalid_argument(
            "generator.eta: expected " + std::to_string(cfg.dim) +
            " coordinates");
      }
      return cfg.eta_coords;
  }
  throw std::invalid_argument("generator.eta_mode: unknown mode");
}

Instance fr_counterexample() {
  const double h = std::sqrt(0.5);
  Instance inst;
  inst.ground = {
      (Vec(4) << h, h, 0, 0).finished(),
      (Vec(4) << 0, h, h, 0).finished(),
      (Vec(4) << 0, 0, h, h).finished(),
  };
  inst.eta = (Vec(4) << 1, 2, 2, 1).finished();
  inst.matroid = MatroidSpec::uniform(3, 2);
  inst.labels = {"s1", "s2", "s3"};
  return inst;
}

Instance nonuniform_counterexample(double epsilon) {
  if (epsilon <= 0.0) {
    throw std::invalid_argument("generator.epsilon: must be > 0");
  }
  Instance inst;
  inst.ground.reserve(4);
  for (int i = 0; i < 4; ++i) {
    Vec e = Vec::Zero(4);
    e[i] = 1.0;
    inst.ground.push_back(e);
  }
  inst.eta = (Vec(4) << std::sqrt(1.0 + epsilon), 0, 1, 1).finished();
  inst.matroid = MatroidSpec::explicit_family(
      4, {{0}, {1}, {2}, {3}, {0, 1}, {2, 3}});
  inst.labels = {"|0>", "|1>", "|2>", "|3>"};
  return inst;
}

}  // namespace

Instance generate(const GeneratorConfig& cfg) {
  if (cfg.kind == GroundKind::kPaperExample) {
    if (cfg.example_name == "fr_counterexample") return fr_counterexample();
    if (cfg.example_name == "nonuniform_counterexample") {
      return nonuniform_counterexample(cfg.epsilon);
    }
    throw std::invalid_argument("generator.name: unknown example '" +
                                cfg.example_name + "'");
  }

  if (cfg.dim < 1) throw std::invalid_argument("generator.dim: must be >= 1");
  if (cfg.n < 1) throw std::invalid_argument("generator.n: must be >= 1");
  if (cfg.K < 1) throw std::invalid_argument("generator.k: must be >= 1");
  if (cfg.delta < 0.0) {
    throw std::invalid_argument("generator.delta: must be >= 0");
  }

  Rng rng(cfg.seed);
  Instance inst;
  switch (cfg.kind) {
    case GroundKind::kOrthogonal:
      if (cfg.n > cfg.dim) {
        throw std::invalid_argument(
            "generator.n: orthogonal ground needs n <= dim");
      }
      inst.ground = orthogonal_ground(rng, cfg.dim, cfg.n);
      break;
    case GroundKind::kPerturbed:
      if (cfg.n > cfg.dim) {
        throw std::invalid_argument(
            "generator.n: perturbed ground needs n <= dim");
      }
      inst.ground = perturbed_ground(rng, cfg);
      break;
    case GroundKind::kGaussianDictionary:
      inst.ground = gaussian_ground(rng, cfg.dim, cfg.n);
      break;
    case GroundKind::kPaperExample:
      break;  // handled above
  }
  inst.eta = make_eta(rng, cfg, inst.ground);
  inst.matroid =
      cfg.matroid ? *cfg.matroid : MatroidSpec::uniform(cfg.n, cfg.K);
  if (inst.matroid.ground_size() != cfg.n) {
    throw std::invalid_argument(
        "generator.matroid: ground size does not match n");
  }
  inst.validate();
  return inst;
}

}  // namespace subsel

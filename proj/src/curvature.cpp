#include "subsel/curvature.hpp"

#include "subsel/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace subsel {

std::string to_string(CurvatureMode m) {
  return m == CurvatureMode::kExact ? "exact" : "sampled";
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double sq(double x) { return x * x; }

Vec two_pass_residual(const Eigen::MatrixXd& q, const Vec& v) {
  if (q.cols() == 0) return v;
  Vec w = v - q * (q.transpose() * v);
  w.noalias() -= q * (q.transpose() * w);
  return w;
}

/// Everything the ratio sweeps need about one base set E: the orthonormal
/// basis of span(E), the normalized eta residual, and per outside element
/// its residual direction, projection gain and OMP score.
struct BaseData {
  Eigen::MatrixXd q;
  bool has_eta_perp = false;
  Vec eta_dir;
  std::vector<char> exists;
  std::vector<Vec> sperp;
  std::vector<double> gain;
  std::vector<double> omp_score;
};

BaseData make_base(const Instance& inst, const IndexSet& base,
                   const std::vector<int>& outside, double rank_tol) {
  BaseData d;
  OrthoBasis basis(inst.dim(), rank_tol);
  for (int i : base) basis.extend(inst.ground[static_cast<std::size_t>(i)], i);
  d.q = basis.matrix();

  const Vec eta_res = two_pass_residual(d.q, inst.eta);
  const double ern = eta_res.norm();
  d.has_eta_perp = ern > rank_tol;
  if (d.has_eta_perp) d.eta_dir = eta_res / ern;

  const int n = inst.size();
  d.exists.assign(static_cast<std::size_t>(n), 0);
  d.sperp.assign(static_cast<std::size_t>(n), Vec());
  d.gain.assign(static_cast<std::size_t>(n), 0.0);
  d.omp_score.assign(static_cast<std::size_t>(n), 0.0);
  for (int s : outside) {
    const auto si = static_cast<std::size_t>(s);
    const Vec w = two_pass_residual(d.q, inst.ground[si]);
    const double rn = w.norm();
    if (rn > rank_tol) {
      d.exists[si] = 1;
      d.sperp[si] = w / rn;
      d.gain[si] = sq(d.sperp[si].dot(inst.eta));
    }
    if (d.has_eta_perp) {
      d.omp_score[si] = std::abs(d.eta_dir.dot(inst.ground[si]));
    }
  }
  return d;
}

struct MaxAccum {
  double value = 0.0;
  std::optional<TripleWitness> witness;
  void update(double v, const IndexSet& base, int s, int t) {
    if (!witness || v > value) {
      value = v;
      witness = TripleWitness{base, s, t};
    }
  }
};

struct Sweep {
  const Instance& inst;
  const CurvatureOptions& opts;
  double denom_tol = 0.0;
  MaxAccum fwd, bwd, omp_k;
  double phi = std::numeric_limits<double>::infinity();
  std::optional<TripleWitness> phi_witness;
  long skipped = 0;

  Sweep(const Instance& i, const CurvatureOptions& o) : inst(i), opts(o) {
    denom_tol = o.denom_tol_scale * i.eta.squaredNorm();
  }

  void observe_angle(const IndexSet& base, const BaseData& d, int s) {
    const double pn = std::clamp(
        (d.q.transpose() * inst.ground[static_cast<std::size_t>(s)]).norm(),
        0.0, 1.0);
    const double ang = std::acos(pn);
    if (!phi_witness || ang < phi) {
      phi = ang;
      phi_witness = TripleWitness{base, s, -1};
    }
  }

  /// Marginal gain of t on top of E + {s}, with q2 = basis of span(E + {s}).
  double after_gain(const Eigen::MatrixXd& q2, int t) const {
    const Vec w =
        two_pass_residual(q2, inst.ground[static_cast<std::size_t>(t)]);
    const double rn = w.norm();
    if (rn <= opts.rank_tol) return 0.0;
    return sq(w.dot(inst.eta) / rn);
  }

  void observe_triple(const IndexSet& base, const BaseData& d, int s, int t,
                      double num) {
    const auto si = static_cast<std::size_t>(s);
    const auto ti = static_cast<std::size_t>(t);
    const double gs = d.gain[si];
    const double gt = d.gain[ti];
    if (gs <= gt) {
      if (gt > denom_tol) {
        fwd.update(num / gt, base, s, t);
      } else {
        ++skipped;
      }
    }
    if (gs >= gt) {
      if (gs > denom_tol) {
        bwd.update(num / gs, base, s, t);
      } else {
        ++skipped;
      }
    }
    if (!d.has_eta_perp) {
      ++skipped;  // eta lies in span(E); the OMP ordering is undefined
    } else if (d.omp_score[si] >= d.omp_score[ti]) {
      if (gs > denom_tol) {
        omp_k.update(num / gs, base, s, t);
      } else {
        ++skipped;
      }
    }
  }
};

Eigen::MatrixXd extend_matrix(const Eigen::MatrixXd& q, const Vec& col) {
  Eigen::MatrixXd q2(q.rows(), q.cols() + 1);
  q2.leftCols(q.cols()) = q;
  q2.col(q.cols()) = col;
  return q2;
}

void for_each_subset(int n, int max_card,
                     const std::function<void(const IndexSet&)>& visit) {
  IndexSet prefix;
  const std::function<void(int, int)> dfs = [&](int start, int remaining) {
    if (remaining == 0) {
      visit(prefix);
      return;
    }
    for (int x = start; x <= n - remaining; ++x) {
      prefix.push_back(x);
      dfs(x + 1, remaining - 1);
      prefix.pop_back();
    }
  };
  for (int size = 0; size <= max_card; ++size) dfs(0, size);
}

void check_exact_guard(const Instance& inst, int K,
                       const CurvatureOptions& opts, const char* who) {
  const int base_card = std::max(2 * K - 2, 0);
  if (inst.size() > opts.max_ground || base_card > opts.max_base_card) {
    throw std::runtime_error(
        std::string(who) + ": exact enumeration guard exceeded (n=" +
        std::to_string(inst.size()) + ", card(E)<=" +
        std::to_string(base_card) + "; limits " +
        std::to_string(opts.max_ground) + "/" +
        std::to_string(opts.max_base_card) + "); use sampled mode");
  }
}

std::vector<int> outside_of(int n, const IndexSet& base) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - base.size());
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < base.size() && base[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

void exact_sweep(Sweep& sw, int K) {
  const Instance& inst = sw.inst;
  const int n = inst.size();
  const int max_card = std::min({std::max(2 * K - 2, 0), n});
  for_each_subset(n, max_card, [&](const IndexSet& base) {
    const std::vector<int> outside = outside_of(n, base);
    const BaseData d = make_base(inst, base, outside, sw.opts.rank_tol);
    for (int s : outside) sw.observe_angle(base, d, s);
    for (int s : outside) {
      const auto si = static_cast<std::size_t>(s);
      const Eigen::MatrixXd q2 =
          d.exists[si] ? extend_matrix(d.q, d.sperp[si]) : d.q;
      for (int t : outside) {
        if (t == s) continue;
        const double num =
            d.exists[si] ? sw.after_gain(q2, t)
                         : d.gain[static_cast<std::size_t>(t)];
        sw.observe_triple(base, d, s, t, num);
      }
    }
  });
}

void sampled_sweep(Sweep& sw, int K, long samples, std::uint64_t seed) {
  const Instance& inst = sw.inst;
  const int n = inst.size();
  if (n < 2) {  // the empty-base angle is the only observation available
    sw.observe_angle({}, make_base(inst, {}, {0}, sw.opts.rank_tol), 0);
    return;
  }
  Rng rng(derive_seed(seed, 0x637276));
  std::vector<int> idx(static_cast<std::size_t>(n));
  const int max_card = std::min(std::max(2 * K - 2, 0), n - 2);
  for (long it = 0; it < samples; ++it) {
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int m = max_card > 0 ? rng.uniform_int(0, max_card) : 0;
    for (int j = 0; j < m; ++j) {
      const int pick = rng.uniform_int(j, n - 1);
      std::swap(idx[static_cast<std::size_t>(j)],
                idx[static_cast<std::size_t>(pick)]);
    }
    IndexSet base(idx.begin(), idx.begin() + m);
    std::sort(base.begin(), base.end());
    const int rest = n - m;
    const int a = m + rng.uniform_int(0, rest - 1);
    int b = m + rng.uniform_int(0, rest - 2);
    if (b >= a) ++b;
    const int s = idx[static_cast<std::size_t>(a)];
    const int t = idx[static_cast<std::size_t>(b)];

    const BaseData d = make_base(inst, base, {s, t}, sw.opts.rank_tol);
    sw.observe_angle(base, d, s);
    sw.observe_angle(base, d, t);
    const auto si = static_cast<std::size_t>(s);
    const Eigen::MatrixXd q2 =
        d.exists[si] ? extend_matrix(d.q, d.sperp[si]) : d.q;
    const double num = d.exists[si]
                           ? sw.after_gain(q2, t)
                           : d.gain[static_cast<std::size_t>(t)];
    sw.observe_triple(base, d, s, t, num);
  }
}

}  // namespace

CurvatureReport curvature_report(const Instance& inst, int K,
                                 const CurvatureOptions& opts) {
  inst.validate();
  if (K < 1) throw std::invalid_argument("curvature: K must be >= 1");
  if (inst.size() < 1) {
    throw std::invalid_argument("curvature: empty ground set");
  }
  Sweep sw(inst, opts);
  if (opts.mode == CurvatureMode::kExact) {
    check_exact_guard(inst, K, opts, "curvature_report");
    exact_sweep(sw, K);
  } else {
    sampled_sweep(sw, K, opts.samples, opts.seed);
  }

  CurvatureReport rep;
  rep.K = K;
  rep.mode = opts.mode;
  rep.n_samples = opts.mode == CurvatureMode::kSampled ? opts.samples : 0;
  rep.denom_tol = sw.denom_tol;
  rep.skipped = sw.skipped;
  rep.kappa_fwd = sw.fwd.witness ? sw.fwd.value : 0.0;
  rep.kappa_bwd = sw.bwd.witness ? sw.bwd.value : 0.0;
  rep.kappa_omp = sw.omp_k.witness ? sw.omp_k.value : 0.0;
  rep.witness_fwd = sw.fwd.witness;
  rep.witness_bwd = sw.bwd.witness;
  rep.witness_omp = sw.omp_k.witness;
  rep.phi = sw.phi_witness ? sw.phi : kHalfPi;
  rep.witness_phi = sw.phi_witness;
  return rep;
}

double forward_curvature(const Instance& inst, int K,
                         const CurvatureOptions& opts) {
  return curvature_report(inst, K, opts).kappa_fwd;
}

double backward_curvature(const Instance& inst, int K,
                          const CurvatureOptions& opts) {
  return curvature_report(inst, K, opts).kappa_bwd;
}

double omp_curvature(const Instance& inst, int K,
                     const CurvatureOptions& opts) {
  return curvature_report(inst, K, opts).kappa_omp;
}

double principal_angle(const Instance& inst, int K,
                       const CurvatureOptions& opts) {
  return curvature_report(inst, K, opts).phi;
}

PairStats residual_pair_stats(const Instance& inst, int K, double phi,
                              const CurvatureOptions& opts) {
  inst.validate();
  if (K < 1) throw std::invalid_argument("residual_pair_stats: K must be >= 1");
  check_exact_guard(inst, K, opts, "residual_pair_stats");
  const double denom_tol = opts.denom_tol_scale * inst.eta.squaredNorm();
  const double s2 = sq(std::sin(phi));
  const int n = inst.size();
  const int max_card = std::min(std::max(2 * K - 2, 0), n);

  PairStats stats;
  for_each_subset(n, max_card, [&](const IndexSet& base) {
    const std::vector<int> outside = outside_of(n, base);
    const BaseData d = make_base(inst, base, outside, opts.rank_tol);
    for (int s : outside) {
      const auto si = static_cast<std::size_t>(s);
      if (!d.exists[si]) continue;
      for (int t : outside) {
        if (t == s) continue;
        const auto ti = static_cast<std::size_t>(t);
        if (!d.exists[ti]) continue;
        const double c = d.sperp[si].dot(d.sperp[ti]);
        ++stats.pairs_seen;
        stats.max_abs_cross = std::max(stats.max_abs_cross, std::abs(c));
        // Only triples that feed the OMP curvature maximum matter here.
        const bool omp_admissible = d.has_eta_perp &&
                                    d.omp_score[si] >= d.omp_score[ti] &&
                                    d.gain[si] > denom_tol;
        if (omp_admissible && s2 > 0.0 && 1.0 - c * c > 1e-12) {
          const double rhs = sq(1.0 / s2 + std::abs(c)) / (1.0 - c * c);
          stats.max_omp_angle_rhs = std::max(stats.max_omp_angle_rhs, rhs);
        }
      }
    }
  });
  return stats;
}

CoherenceStats coherence_relaxation(const Instance& inst, int K) {
  inst.validate();
  if (K < 1) throw std::invalid_argument("coherence: K must be >= 1");
  CoherenceStats st;
  st.m = std::max(2 * K - 2, 0);
  const int n = inst.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      st.mu = std::max(st.mu,
                       std::abs(inst.ground[static_cast<std::size_t>(i)].dot(
                           inst.ground[static_cast<std::size_t>(j)])));
    }
  }
  st.lambda_min_bound = 1.0 - (st.m - 1) * st.mu;
  st.cos_phi_upper =
      st.lambda_min_bound > 0.0
          ? std::sqrt(static_cast<double>(st.m)) * st.mu /
                std::sqrt(st.lambda_min_bound)
          : std::numeric_limits<double>::infinity();
  return st;
}

std::optional<double> theorem2_bound(double phi) {
  if (phi < -1e-12 || phi > kHalfPi + 1e-12) {
    throw std::invalid_argument("theorem2_bound: phi must lie in [0, pi/2]");
  }
  const double c = std::cos(std::clamp(phi, 0.0, kHalfPi));
  if (c >= 0.5) return std::nullopt;
  return 1.0 / (1.0 - 2.0 * c);
}

}  // namespace subsel

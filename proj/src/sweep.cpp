#include "subsel/sweep.hpp"

#include "subsel/rng.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace subsel {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUBSEL_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void compute_row(SweepRow& row, const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const Instance inst = generate(row.config);
    row.report = verify_bounds(inst, row.config.K, opts.verify);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  if (row.config.kind == GroundKind::kPerturbed) {
    row.asymptote = near_orthogonal_asymptote(row.config.K, row.config.delta);
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

SweepResult run_sweep(const std::vector<GeneratorConfig>& configs, int reps,
                      const SweepOptions& opts) {
  if (reps < 1) throw std::invalid_argument("sweep.reps: must be >= 1");
  SweepResult result;
  result.rows.resize(configs.size() * static_cast<std::size_t>(reps));
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    for (int r = 0; r < reps; ++r) {
      SweepRow& row = result.rows[ci * static_cast<std::size_t>(reps) +
                                  static_cast<std::size_t>(r)];
      row.instance_id = static_cast<int>(ci) * reps + r;
      row.config_index = static_cast<int>(ci);
      row.rep = r;
      row.config = configs[ci];
      row.config.seed = derive_seed(configs[ci].seed,
                                    static_cast<std::uint64_t>(r));
    }
  }

  const int threads =
      std::min<int>(resolve_threads(opts.threads),
                    static_cast<int>(result.rows.size()));
  if (threads <= 1) {
    for (SweepRow& row : result.rows) compute_row(row, opts);
    return result;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= result.rows.size()) return;
        compute_row(result.rows[i], opts);
      }
    });
  }
  for (std::thread& th : pool) th.join();
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "instance_id,config_index,rep,kind,seed,dim,n,k,matroid,"
         "matroid_valid,delta,gap,kappa_fwd,kappa_bwd,kappa_omp,phi,"
         "f_fr,f_omp,f_opt,ratio_fr,ratio_omp,bound_class,bound_fr,bound_omp,"
         "satisfied_fr,satisfied_omp,degenerate,asymptote,error,wall_ms\n";
  for (const SweepRow& row : result.rows) {
    const GeneratorConfig& cfg = row.config;
    std::vector<std::string> f;
    f.push_back(std::to_string(row.instance_id));
    f.push_back(std::to_string(row.config_index));
    f.push_back(std::to_string(row.rep));
    f.push_back(to_string(cfg.kind));
    f.push_back(std::to_string(cfg.seed));
    f.push_back(std::to_string(cfg.dim));
    f.push_back(std::to_string(cfg.n));
    f.push_back(std::to_string(cfg.K));
    f.push_back(cfg.matroid ? cfg.matroid->kind_name()
                            : std::string("uniform"));
    if (row.report) {
      const BoundReport& r = *row.report;
      f.push_back(r.matroid_valid ? "1" : "0");
      f.push_back(cfg.kind == GroundKind::kPerturbed ? csv_number(cfg.delta)
                                                     : std::string());
      f.push_back(csv_number(std::numbers::pi / 2.0 - r.inputs.phi));
      f.push_back(csv_number(r.inputs.kappa_fwd));
      f.push_back(csv_number(r.inputs.kappa_bwd));
      f.push_back(csv_number(r.inputs.kappa_omp));
      f.push_back(csv_number(r.inputs.phi));
      f.push_back(csv_number(r.f_fr));
      f.push_back(csv_number(r.f_omp));
      f.push_back(csv_number(r.f_opt));
      f.push_back(csv_number(r.empirical_ratio_fr));
      f.push_back(csv_number(r.empirical_ratio_omp));
      f.push_back(r.uniform_class ? "uniform" : "non_uniform");
      f.push_back(csv_number(r.uniform_class ? r.bound_fr_uniform
                                             : r.bound_fr_nonuniform));
      if (r.uniform_class) {
        f.push_back(csv_number(r.bound_omp_uniform));
      } else if (r.bound_omp_nonuniform) {
        f.push_back(csv_number(*r.bound_omp_nonuniform));
      } else {
        f.push_back("");
      }
      f.push_back(r.satisfied_fr ? "1" : "0");
      f.push_back(r.satisfied_omp ? "1" : "0");
      f.push_back(r.degenerate ? "1" : "0");
    } else {
      for (int i = 0; i < 18; ++i) f.push_back("");
    }
    f.push_back(row.asymptote ? csv_number(*row.asymptote) : std::string());
    f.push_back('"' + row.error + '"');
    f.push_back(csv_number(row.wall_ms));
    for (std::size_t i = 0; i < f.size(); ++i) {
      out << f[i] << (i + 1 < f.size() ? "," : "\n");
    }
  }
}

}  // namespace subsel

// Experiment CLI: generate instances, run the selectors, compute curvature
// and bound reports, validate matroid axioms, and drive seeded sweeps.

#include "subsel/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using subsel::GeneratorConfig;
using subsel::Instance;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << text << '\n';
}

Instance load_instance(const std::string& path) {
  return subsel::instance_from_json(subsel::load_json_file(path));
}

struct GenArgs {
  std::string kind = "orthogonal";
  int dim = 8;
  int n = 8;
  int k = 3;
  std::uint64_t seed = 0;
  std::string eta_mode = "random_unit";
  double delta = 0.0;
  std::string name;
  double epsilon = 0.1;
  std::string matroid_json;
  std::string out;
};

GeneratorConfig to_config(const GenArgs& a) {
  nlohmann::json j;
  j["kind"] = a.kind;
  j["dim"] = a.dim;
  j["n"] = a.n;
  j["k"] = a.k;
  j["seed"] = a.seed;
  j["eta_mode"] = a.eta_mode;
  if (a.kind == "perturbed") j["delta"] = a.delta;
  if (a.kind == "paper_example") {
    j["name"] = a.name;
    j["epsilon"] = a.epsilon;
  }
  if (!a.matroid_json.empty()) {
    j["matroid"] = nlohmann::json::parse(a.matroid_json);
  }
  return subsel::generator_config_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subspace selection under matroid constraints"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "write an instance JSON file");
  gen_cmd->add_option("--kind", gen.kind,
                      "orthogonal|perturbed|gaussian_dictionary|paper_example");
  gen_cmd->add_option("--dim", gen.dim, "ambient dimension");
  gen_cmd->add_option("--n", gen.n, "ground-set size");
  gen_cmd->add_option("--k", gen.k, "cardinality parameter K");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("--eta-mode", gen.eta_mode, "random_unit|in_span");
  gen_cmd->add_option("--delta", gen.delta,
                      "principal-angle gap for the perturbed kind");
  gen_cmd->add_option("--name", gen.name,
                      "fr_counterexample|nonuniform_counterexample");
  gen_cmd->add_option("--epsilon", gen.epsilon,
                      "nonuniform_counterexample parameter");
  gen_cmd->add_option("--matroid", gen.matroid_json,
                      "inline matroid JSON overriding Uniform(K)");
  gen_cmd->add_option("--out", gen.out, "output path (default: stdout)");

  std::string algorithm = "fr";
  std::string select_file;
  bool literal_residual = false;
  bool stop_on_zero_gain = false;
  std::string select_out;
  CLI::App* select_cmd =
      app.add_subcommand("select", "run a selector on an instance file");
  select_cmd->add_option("--algorithm", algorithm, "fr|omp|opt")
      ->check(CLI::IsMember({"fr", "omp", "opt"}));
  select_cmd->add_flag("--literal-residual", literal_residual,
                       "use the literal OMP residual update");
  select_cmd->add_flag("--stop-on-zero-gain", stop_on_zero_gain,
                       "stop FR when every feasible gain is ~0");
  select_cmd->add_option("instance", select_file, "instance JSON file")
      ->required();
  select_cmd->add_option("--out", select_out, "output path");

  std::string curv_file;
  int curv_k = 0;
  std::string curv_mode = "exact";
  long curv_samples = 100000;
  std::uint64_t curv_seed = 0;
  std::string curv_out;
  CLI::App* curv_cmd =
      app.add_subcommand("curvature", "elemental curvatures and angle");
  curv_cmd->add_option("instance", curv_file, "instance JSON file")->required();
  curv_cmd->add_option("--k", curv_k, "cardinality bound (default: rank cap)");
  curv_cmd->add_option("--mode", curv_mode, "exact|sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  curv_cmd->add_option("--samples", curv_samples, "sampled-mode triple count");
  curv_cmd->add_option("--seed", curv_seed, "sampled-mode seed");
  curv_cmd->add_option("--out", curv_out, "output path");

  std::string bounds_file;
  int bounds_k = 0;
  std::string bounds_out;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "bound report against the exact oracle");
  bounds_cmd->add_option("instance", bounds_file, "instance JSON file")
      ->required();
  bounds_cmd->add_option("--k", bounds_k,
                         "cardinality bound (default: rank cap)");
  bounds_cmd->add_option("--out", bounds_out, "output path");

  std::string sweep_file;
  std::string sweep_out;
  std::string sweep_format = "csv";
  int sweep_reps = 0;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run a sweep config over seeded instances");
  sweep_cmd->add_option("config", sweep_file, "sweep config JSON file")
      ->required();
  sweep_cmd->add_option("--out", sweep_out, "output path");
  sweep_cmd->add_option("--format", sweep_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--reps", sweep_reps,
                        "instances per config (overrides the file)");

  std::string validate_file;
  std::string validate_out;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate-matroid", "check the matroid axioms of a family");
  validate_cmd
      ->add_option("file", validate_file,
                   "instance JSON file or standalone matroid JSON")
      ->required();
  validate_cmd->add_option("--out", validate_out, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed()) {
      const Instance inst = subsel::generate(to_config(gen));
      emit(subsel::instance_to_json(inst).dump(2), gen.out);
      return 0;
    }
    if (select_cmd->parsed()) {
      const Instance inst = load_instance(select_file);
      subsel::SelectOptions opts;
      opts.literal_residual = literal_residual;
      opts.stop_on_zero_gain = stop_on_zero_gain;
      subsel::SelectionResult result;
      if (algorithm == "fr") {
        result = subsel::forward_regression(inst, opts);
      } else if (algorithm == "omp") {
        result = subsel::omp(inst, opts);
      } else {
        result = subsel::brute_force_optimal(inst);
      }
      nlohmann::json out = subsel::selection_to_json(result);
      out["algorithm"] = algorithm;
      emit(out.dump(2), select_out);
      return 0;
    }
    if (curv_cmd->parsed()) {
      const Instance inst = load_instance(curv_file);
      subsel::CurvatureOptions opts;
      opts.mode = curv_mode == "exact" ? subsel::CurvatureMode::kExact
                                       : subsel::CurvatureMode::kSampled;
      opts.samples = curv_samples;
      opts.seed = curv_seed;
      const int k = curv_k > 0 ? curv_k : inst.matroid.rank_cap();
      nlohmann::json out =
          subsel::curvature_to_json(subsel::curvature_report(inst, k, opts));
      out["coherence"] =
          subsel::coherence_to_json(subsel::coherence_relaxation(inst, k));
      emit(out.dump(2), curv_out);
      return 0;
    }
    if (bounds_cmd->parsed()) {
      const Instance inst = load_instance(bounds_file);
      const int k = bounds_k > 0 ? bounds_k : inst.matroid.rank_cap();
      emit(subsel::bound_report_to_json(subsel::verify_bounds(inst, k)).dump(2),
           bounds_out);
      return 0;
    }
    if (sweep_cmd->parsed()) {
      subsel::SweepConfig cfg =
          subsel::sweep_config_from_json(subsel::load_json_file(sweep_file));
      if (sweep_reps > 0) cfg.reps = sweep_reps;
      const subsel::SweepResult result = subsel::run_sweep(cfg.configs, cfg.reps);
      if (sweep_format == "csv") {
        std::ostringstream text;
        subsel::write_sweep_csv(result, text);
        std::string s = text.str();
        if (!s.empty() && s.back() == '\n') s.pop_back();
        emit(s, sweep_out);
      } else {
        emit(subsel::sweep_to_json(result).dump(2), sweep_out);
      }
      return 0;
    }
    if (validate_cmd->parsed()) {
      const nlohmann::json j = subsel::load_json_file(validate_file);
      const subsel::MatroidSpec matroid =
          j.contains("ground") ? subsel::instance_from_json(j).matroid
                               : subsel::matroid_from_json(j);
      emit(subsel::axiom_report_to_json(matroid.validate_axioms()).dump(2),
           validate_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

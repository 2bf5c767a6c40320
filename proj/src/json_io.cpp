#include "subsel/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace subsel {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    fail(where, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int require_int(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) {
    fail(where + "." + key, "expected an integer");
  }
  return v.get<int>();
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "expected a finite number");
  return x;
}

Vec vec_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of numbers");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] =
        as_number(v[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) {
      fail(where + "[" + std::to_string(i) + "]", "expected an integer");
    }
    out.push_back(v[i].get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_list_list(const json& v,
                                            const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of index arrays");
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(int_list(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json witness_to_json(const std::optional<TripleWitness>& w) {
  if (!w) return nullptr;
  json out;
  out["E"] = w->base;
  out["s"] = w->s;
  if (w->t >= 0) out["t"] = w->t;
  return out;
}

}  // namespace

json matroid_to_json(const MatroidSpec& m) {
  json out;
  if (m.is_uniform()) {
    out["type"] = "uniform";
    out["k"] = m.as_uniform().k;
  } else if (m.is_partition()) {
    out["type"] = "partition";
    out["blocks"] = m.as_partition().blocks;
    out["caps"] = m.as_partition().caps;
  } else {
    out["type"] = "explicit";
    out["sets"] = m.as_explicit().family;
  }
  out["n"] = m.ground_size();
  return out;
}

MatroidSpec matroid_from_json(const json& j, int ground_size) {
  const std::string where = "matroid";
  const json& tv = require(j, "type", where);
  if (!tv.is_string()) fail(where + ".type", "expected a string");
  const std::string type = tv.get<std::string>();
  int n = ground_size;
  if (j.contains("n")) {
    const int jn = require_int(j, "n", where);
    if (n >= 0 && jn != n) {
      fail(where + ".n", "does not match the instance ground size");
    }
    n = jn;
  }

  if (type == "uniform") {
    if (n < 0) fail(where + ".n", "required for a standalone uniform matroid");
    return MatroidSpec::uniform(n, require_int(j, "k", where));
  }
  if (type == "partition") {
    auto blocks = int_list_list(require(j, "blocks", where), where + ".blocks");
    auto caps = int_list(require(j, "caps", where), where + ".caps");
    if (n < 0) {
      int max_index = -1;
      for (const auto& b : blocks) {
        for (int x : b) max_index = std::max(max_index, x);
      }
      n = max_index + 1;
    }
    return MatroidSpec::partition(n, std::move(blocks), std::move(caps));
  }
  if (type == "explicit") {
    auto sets = int_list_list(require(j, "sets", where), where + ".sets");
    if (n < 0) {
      int max_index = -1;
      for (const auto& s : sets) {
        for (int x : s) max_index = std::max(max_index, x);
      }
      n = max_index + 1;
    }
    std::vector<IndexSet> family(sets.begin(), sets.end());
    return MatroidSpec::explicit_family(n, std::move(family));
  }
  fail(where + ".type", "expected uniform|partition|explicit, got '" + type +
                            "'");
}

json instance_to_json(const Instance& inst) {
  json out;
  out["dim"] = inst.dim();
  json ground = json::array();
  for (const Vec& x : inst.ground) ground.push_back(vec_to_json(x));
  out["ground"] = ground;
  out["eta"] = vec_to_json(inst.eta);
  out["matroid"] = matroid_to_json(inst.matroid);
  if (!inst.labels.empty()) out["labels"] = inst.labels;
  return out;
}

Instance instance_from_json(const json& j) {
  const std::string where = "instance";
  const int dim = require_int(j, "dim", where);
  if (dim < 1) fail(where + ".dim", "must be >= 1");

  Instance inst;
  const json& ground = require(j, "ground", where);
  if (!ground.is_array()) fail(where + ".ground", "expected an array");
  for (std::size_t i = 0; i < ground.size(); ++i) {
    const std::string gw = where + ".ground[" + std::to_string(i) + "]";
    Vec x = vec_from_json(ground[i], gw);
    if (x.size() != dim) fail(gw, "expected " + std::to_string(dim) +
                                      " coordinates");
    const double norm = x.norm();
    if (norm <= 1e-9) fail(gw, "near-zero vector cannot be normalized");
    inst.ground.push_back(x / norm);
  }

  inst.eta = vec_from_json(require(j, "eta", where), where + ".eta");
  if (inst.eta.size() != dim) {
    fail(where + ".eta", "expected " + std::to_string(dim) + " coordinates");
  }

  inst.matroid = matroid_from_json(require(j, "matroid", where),
                                   static_cast<int>(inst.ground.size()));

  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array()) fail(where + ".labels", "expected an array");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) {
        fail(where + ".labels[" + std::to_string(i) + "]",
             "expected a string");
      }
      inst.labels.push_back(labels[i].get<std::string>());
    }
  }
  inst.validate();
  return inst;
}

json selection_to_json(const SelectionResult& r) {
  json out;
  out["chosen"] = r.chosen;
  out["step_values"] = r.step_values;
  out["step_gains"] = r.step_gains;
  out["objective"] = r.objective;
  out["steps_taken"] = r.steps_taken;
  out["stopped_reason"] = to_string(r.stopped_reason);
  return out;
}

json axiom_report_to_json(const AxiomReport& r) {
  json out;
  out["hereditary_ok"] = r.hereditary_ok;
  out["augmentation_ok"] = r.augmentation_ok;
  if (r.counterexample) {
    out["counterexample"] = {{"S", r.counterexample->first},
                             {"T", r.counterexample->second}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json curvature_to_json(const CurvatureReport& r) {
  json out;
  out["kappa_fwd"] = r.kappa_fwd;
  out["kappa_bwd"] = r.kappa_bwd;
  out["kappa_omp"] = r.kappa_omp;
  out["phi"] = r.phi;
  out["K"] = r.K;
  out["mode"] = to_string(r.mode);
  if (r.mode == CurvatureMode::kSampled) out["samples"] = r.n_samples;
  out["skipped"] = r.skipped;
  out["denom_tol"] = r.denom_tol;
  out["witnesses"] = {{"kappa_fwd", witness_to_json(r.witness_fwd)},
                      {"kappa_bwd", witness_to_json(r.witness_bwd)},
                      {"kappa_omp", witness_to_json(r.witness_omp)},
                      {"phi", witness_to_json(r.witness_phi)}};
  return out;
}

json coherence_to_json(const CoherenceStats& s) {
  json out;
  out["mu"] = s.mu;
  out["m"] = s.m;
  out["lambda_min_bound"] = s.lambda_min_bound;
  if (std::isfinite(s.cos_phi_upper)) {
    out["cos_phi_upper"] = s.cos_phi_upper;
  } else {
    out["cos_phi_upper"] = nullptr;  // bound not applicable
  }
  return out;
}

json bound_report_to_json(const BoundReport& r) {
  json out;
  out["k_hat"] = r.k_hat;
  out["bound_fr_uniform"] = r.bound_fr_uniform;
  out["bound_omp_uniform"] = r.bound_omp_uniform;
  out["bound_fr_nonuniform"] = r.bound_fr_nonuniform;
  out["bound_omp_nonuniform"] =
      r.bound_omp_nonuniform ? json(*r.bound_omp_nonuniform) : json(nullptr);
  out["empirical_ratio_fr"] = r.empirical_ratio_fr;
  out["empirical_ratio_omp"] = r.empirical_ratio_omp;
  out["satisfied"] = {{"fr", r.satisfied_fr}, {"omp", r.satisfied_omp}};
  out["bound_class"] = r.uniform_class ? "uniform" : "non_uniform";
  out["structure"] =
      r.matroid_valid ? "matroid" : "independence_system_not_matroid";
  out["degenerate"] = r.degenerate;
  out["f_fr"] = r.f_fr;
  out["f_omp"] = r.f_omp;
  out["f_opt"] = r.f_opt;
  out["inputs"] = {{"K", r.inputs.K},
                   {"kappa_fwd", r.inputs.kappa_fwd},
                   {"kappa_bwd", r.inputs.kappa_bwd},
                   {"kappa_omp", r.inputs.kappa_omp},
                   {"phi", r.inputs.phi}};
  return out;
}

json generator_config_to_json(const GeneratorConfig& cfg) {
  json out;
  out["kind"] = to_string(cfg.kind);
  out["dim"] = cfg.dim;
  out["n"] = cfg.n;
  out["k"] = cfg.K;
  out["seed"] = cfg.seed;
  out["eta_mode"] = to_string(cfg.eta_mode);
  if (cfg.eta_mode == EtaMode::kGiven) out["eta"] = vec_to_json(cfg.eta_coords);
  if (cfg.kind == GroundKind::kPerturbed) out["delta"] = cfg.delta;
  if (cfg.kind == GroundKind::kPaperExample) {
    out["name"] = cfg.example_name;
    out["epsilon"] = cfg.epsilon;
  }
  if (cfg.matroid) out["matroid"] = matroid_to_json(*cfg.matroid);
  return out;
}

GeneratorConfig generator_config_from_json(const json& j) {
  const std::string where = "generator config";
  GeneratorConfig cfg;
  const json& kv = require(j, "kind", where);
  if (!kv.is_string()) fail(where + ".kind", "expected a string");
  const std::string kind = kv.get<std::string>();
  if (kind == "orthogonal") {
    cfg.kind = GroundKind::kOrthogonal;
  } else if (kind == "perturbed") {
    cfg.kind = GroundKind::kPerturbed;
  } else if (kind == "gaussian_dictionary") {
    cfg.kind = GroundKind::kGaussianDictionary;
  } else if (kind == "paper_example") {
    cfg.kind = GroundKind::kPaperExample;
  } else {
    fail(where + ".kind", "unknown kind '" + kind + "'");
  }

  if (cfg.kind == GroundKind::kPaperExample) {
    const json& nv = require(j, "name", where);
    if (!nv.is_string()) fail(where + ".name", "expected a string");
    cfg.example_name = nv.get<std::string>();
    if (j.contains("epsilon")) {
      cfg.epsilon = as_number(j.at("epsilon"), where + ".epsilon");
    }
    if (j.contains("seed")) {
      cfg.seed = require(j, "seed", where).get<std::uint64_t>();
    }
    return cfg;
  }

  cfg.dim = require_int(j, "dim", where);
  cfg.n = require_int(j, "n", where);
  cfg.K = require_int(j, "k", where);
  if (j.contains("seed")) {
    const json& sv = j.at("seed");
    if (!sv.is_number_integer() && !sv.is_number_unsigned()) {
      fail(where + ".seed", "expected an integer");
    }
    cfg.seed = sv.get<std::uint64_t>();
  }
  if (j.contains("delta")) {
    cfg.delta = as_number(j.at("delta"), where + ".delta");
  }
  if (j.contains("eta_mode")) {
    const json& ev = j.at("eta_mode");
    if (!ev.is_string()) fail(where + ".eta_mode", "expected a string");
    const std::string mode = ev.get<std::string>();
    if (mode == "random_unit") {
      cfg.eta_mode = EtaMode::kRandomUnit;
    } else if (mode == "in_span") {
      cfg.eta_mode = EtaMode::kInSpan;
    } else if (mode == "given") {
      cfg.eta_mode = EtaMode::kGiven;
    } else {
      fail(where + ".eta_mode", "unknown mode '" + mode + "'");
    }
  }
  if (cfg.eta_mode == EtaMode::kGiven) {
    cfg.eta_coords = vec_from_json(require(j, "eta", where), where + ".eta");
  }
  if (j.contains("matroid")) {
    cfg.matroid = matroid_from_json(j.at("matroid"), cfg.n);
  }
  return cfg;
}

SweepConfig sweep_config_from_json(const json& j) {
  const std::string where = "sweep config";
  SweepConfig cfg;
  // either a bare list of generator configs (reps = 1) or
  // {"reps": int, "configs": [...]}
  const json* configs = &j;
  if (j.is_object()) {
    cfg.reps = require_int(j, "reps", where);
    if (cfg.reps < 1) fail(where + ".reps", "must be >= 1");
    configs = &require(j, "configs", where);
  }
  if (!configs->is_array() || configs->empty()) {
    fail(where + ".configs", "expected a non-empty array");
  }
  for (const json& c : *configs) {
    cfg.configs.push_back(generator_config_from_json(c));
  }
  return cfg;
}

json sweep_to_json(const SweepResult& result) {
  json rows = json::array();
  for (const SweepRow& row : result.rows) {
    json r;
    r["instance_id"] = row.instance_id;
    r["config_index"] = row.config_index;
    r["rep"] = row.rep;
    r["config"] = generator_config_to_json(row.config);
    r["report"] = row.report ? bound_report_to_json(*row.report) : json(nullptr);
    if (!row.error.empty()) r["error"] = row.error;
    if (row.asymptote) r["asymptote"] = *row.asymptote;
    r["wall_ms"] = row.wall_ms;
    rows.push_back(std::move(r));
  }
  return json{{"rows", rows}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace subsel

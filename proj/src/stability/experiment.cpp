#include "stablab/stability/experiment.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "stablab/error.hpp"
#include "stablab/fp/coset_enumeration.hpp"
#include "stablab/stability/alpha.hpp"
#include "stablab/stability/solver.hpp"

namespace stablab::stability {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double max_of(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, x);
  return m;
}

SolverConfig solver_config(const ExperimentConfig& c, std::uint64_t seed) {
  SolverConfig s;
  s.max_iterations = static_cast<std::size_t>(c.get_int("iterations", static_cast<long>(s.max_iterations)));
  s.tolerance = c.get_double("tolerance", s.tolerance);
  s.seed = seed;
  return s;
}

nlohmann::json recovery(const ExperimentConfig& c) {
  const auto p = fp::load_presentation(resolve_data_path(c.get("presentation")));
  const NormKind norm = NormKind::parse(c.get("norm", "frobenius"));
  const auto seed = static_cast<std::uint64_t>(c.get_int("seed", 0));
  const long runs = c.get_int("runs", 20);
  nlohmann::json rows = nlohmann::json::array();
  std::size_t ok = 0, total = 0;
  for (const auto& ns : c.get_list("n"))
    for (const auto& ds : c.get_list("delta")) {
      const std::size_t n = std::stoul(ns);
      const double delta = std::stod(ds);
      for (long r = 0; r < runs; ++r) {
        const std::uint64_t run_seed = seed + static_cast<std::uint64_t>(r);
        std::mt19937_64 rng(run_seed);
        const UnitaryTuple g = genuine_representation(p, n, rng);
        const UnitaryTuple t = perturb(g, delta, rng);
        const SolveResult res = perturbation_solve(p, t, norm, solver_config(c, run_seed));
        std::vector<double> frob, hs;
        for (std::size_t j = 0; j < t.matrices.size(); ++j) {
          frob.push_back(matrix_norm(res.tuple.matrices[j] - t.matrices[j], NormKind::frobenius()));
          hs.push_back(matrix_norm(res.tuple.matrices[j] - t.matrices[j], NormKind::hilbert_schmidt()));
        }
        const bool within = res.converged && max_of(frob) <= kRecoveryEnvelope * delta;
        ok += within;
        ++total;
        rows.push_back({{"n", n},
                        {"delta", delta},
                        {"seed", run_seed},
                        {"norm", norm.name()},
                        {"initial_defect", res.initial_defect.max_defect},
                        {"final_defect", res.final_defect.max_defect},
                        {"distance_moved", max_of(res.distance_moved)},
                        {"distance_frobenius", max_of(frob)},
                        {"distance_hs", max_of(hs)},
                        {"iterations", res.iterations},
                        {"converged", res.converged},
                        {"within_envelope", within}});
      }
    }
  return {{"rows", rows},
          {"runs", total},
          {"within_envelope", ok},
          {"success_rate", total ? static_cast<double>(ok) / static_cast<double>(total) : 0.0},
          {"envelope", "final defect <= tolerance and Frobenius distance <= 10 delta per generator"}};
}

nlohmann::json voiculescu(const ExperimentConfig& c) {
  const NormKind norm = NormKind::parse(c.get("norm", "operator"));
  const double budget = c.get_double("budget", 0.1);
  const auto seed = static_cast<std::uint64_t>(c.get_int("seed", 0));
  fp::Presentation z2({"a", "b"}, {fp::commutator(fp::Word::generator(0), fp::Word::generator(1))}, "z2");
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& ns : c.get_list("n")) {
    const std::size_t n = std::stoul(ns);
    // the pair is a critical point of the objective; jitter lets the descent start
    std::mt19937_64 rng(seed);
    const double jitter = c.get_double("jitter", 0.0);
    const UnitaryTuple start = jitter > 0 ? perturb(voiculescu_pair(n), jitter, rng) : voiculescu_pair(n);
    const SolveResult res = perturbation_solve(z2, start, norm, solver_config(c, seed));
    std::vector<double> frob;
    std::vector<double> moved_v;
    for (std::size_t j = 0; j < 2; ++j) {
      const Matrix diff = res.tuple.matrices[j] - voiculescu_pair(n).matrices[j];
      frob.push_back(diff.norm());
      moved_v.push_back(matrix_norm(diff, norm));
    }
    const double moved = max_of(moved_v);
    rows.push_back({{"n", n},
                    {"norm", norm.name()},
                    {"initial_defect", res.initial_defect.max_defect},
                    {"final_defect", res.final_defect.max_defect},
                    {"distance_moved", moved},
                    {"distance_frobenius", max_of(frob)},
                    {"iterations", res.iterations},
                    {"converged", res.converged},
                    {"no_solution_within_budget", !res.converged || moved > budget}});
  }
  return {{"rows", rows}, {"budget", budget}};
}

nlohmann::json transfer(const ExperimentConfig& c) {
  const auto p = fp::load_presentation(resolve_data_path(c.get("presentation")));
  std::vector<fp::Word> n_words;
  for (const auto& w : c.get_list("n_words")) n_words.push_back(fp::parse_word(w, p.generator_names()));
  const auto seed = static_cast<std::uint64_t>(c.get_int("seed", 0));
  const double delta = c.get_double("delta", 1e-3);
  const std::size_t n = static_cast<std::size_t>(c.get_int("n", 2));
  std::mt19937_64 rng(seed);
  // genuine representation of the quotient, read as a tuple for Gamma
  const UnitaryTuple base = genuine_representation(p.with_relators(n_words), n, rng);
  const UnitaryTuple t = perturb(base, delta, rng);
  const TransferReport r = quotient_transfer_experiment(p, n_words, t, solver_config(c, seed));
  nlohmann::json j = to_json(r);
  j["n"] = n;
  j["delta"] = delta;
  j["within_envelope"] = r.success && max_of(r.distance) <= kRecoveryEnvelope * delta;
  return j;
}

nlohmann::json alpha(const ExperimentConfig& c) {
  const auto seed = static_cast<std::uint64_t>(c.get_int("seed", 0));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& path : c.get_list("groups")) {
    const auto p = fp::load_presentation(resolve_data_path(path));
    const fp::GroupTable g = fp::enumerate_group(p);
    rows.push_back({{"group", p.name()}, {"order", g.order()}, {"alpha", alpha_threshold(g, seed)}});
  }
  return {{"rows", rows}};
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("config line " + std::to_string(lineno) + ": empty key");
    if (c.values_.count(key)) throw ParseError("config line " + std::to_string(lineno) + ": duplicate key " + key);
    c.values_[key] = trim(line.substr(eq + 1));
  }
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string ExperimentConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw InvalidArgument("config is missing '" + key + "'");
  return it->second;
}

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

long ExperimentConfig::get_int(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  try {
    return std::stol(get(key));
  } catch (const std::exception&) {
    throw InvalidArgument("config key '" + key + "' is not an integer");
  }
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  try {
    return std::stod(get(key));
  } catch (const std::exception&) {
    throw InvalidArgument("config key '" + key + "' is not a number");
  }
}

std::vector<std::string> ExperimentConfig::get_list(const std::string& key) const {
  std::vector<std::string> out;
  std::stringstream ss(get(key));
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

std::string resolve_data_path(const std::string& path) {
  if (!path.empty() && path.front() == '/') return path;
  return std::string(STABLAB_DATA_DIR) + "/" + path;
}

nlohmann::json run_experiment(const ExperimentConfig& c) {
  const std::string kind = c.get("experiment");
  nlohmann::json out;
  if (kind == "recovery") {
    out = recovery(c);
  } else if (kind == "voiculescu") {
    out = voiculescu(c);
  } else if (kind == "quotient-transfer") {
    out = transfer(c);
  } else if (kind == "alpha") {
    out = alpha(c);
  } else {
    throw InvalidArgument("unknown experiment '" + kind + "'");
  }
  out["experiment"] = kind;
  out["config"] = c.values();
  out["seed"] = c.get_int("seed", 0);
  return out;
}

}  // namespace stablab::stability

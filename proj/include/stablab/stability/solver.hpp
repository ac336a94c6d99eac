#pragma once

#include <cstdint>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "stablab/fp/presentation.hpp"
#include "stablab/stability/norms.hpp"

namespace stablab::stability {

/// One n x n unitary per generator.
struct UnitaryTuple {
  std::size_t n = 0;
  std::vector<Matrix> matrices;

  bool is_unitary(double tol = 1e-12) const;
};

struct DefectReport {
  NormKind norm;
  std::vector<double> per_relator;
  double max_defect = 0;
};

// Matrix of a word; inverses are conjugate transposes.
Matrix evaluate(const fp::Word& w, const UnitaryTuple& t);
DefectReport defect(const fp::Presentation& p, const UnitaryTuple& t, const NormKind& kind);
DefectReport defect(const std::vector<fp::Word>& words, std::size_t num_generators, const UnitaryTuple& t,
                    const NormKind& kind);

// Shift and clock matrices; [a, b] maps to exp(2 pi i / n) I.
UnitaryTuple voiculescu_pair(std::size_t n);

struct SolverConfig {
  std::size_t max_iterations = 20000;
  double initial_step = 1.0;    // first trial step; later ones are Barzilai-Borwein
  double min_step = 1e-14;
  double max_step = 1e4;
  double armijo = 1e-4;
  double backtrack = 0.5;
  double tolerance = 1e-8;      // on the max defect in the requested norm
  std::uint64_t seed = 0;
};

struct SolveResult {
  UnitaryTuple tuple;
  std::vector<double> distance_moved;  // per generator, requested norm
  DefectReport initial_defect;
  DefectReport final_defect;
  std::vector<double> trace;           // objective per accepted iterate
  std::size_t iterations = 0;
  bool converged = false;
  std::string status;                  // "converged", "max_iterations", "stalled"
  std::string objective;               // what was minimized
};

// Retracted gradient descent on U(n)^k for the sum of squared Frobenius relator
// defects, whatever norm is requested for reporting.
SolveResult perturbation_solve(const fp::Presentation& p, const UnitaryTuple& t, const NormKind& kind,
                               const SolverConfig& cfg);
SolveResult perturbation_solve(const std::vector<fp::Word>& relators, const UnitaryTuple& t, const NormKind& kind,
                               const SolverConfig& cfg);

double objective(const std::vector<fp::Word>& relators, const UnitaryTuple& t);

// A genuine representation of dimension n, conjugated by a random unitary.
// Groups whose relators all have zero exponent sums get random commuting
// diagonal unitaries; otherwise the group is enumerated and copies of the
// regular representation are padded with trivial summands.
UnitaryTuple genuine_representation(const fp::Presentation& p, std::size_t n, std::mt19937_64& rng);
// Right-multiplies every generator by exp(delta K), K anti-Hermitian of Frobenius norm 1.
UnitaryTuple perturb(const UnitaryTuple& t, double delta, std::mt19937_64& rng);
UnitaryTuple direct_sum(const UnitaryTuple& a, const UnitaryTuple& b);

nlohmann::json to_json(const DefectReport& r);
nlohmann::json to_json(const SolveResult& r, bool with_trace = false);

}  // namespace stablab::stability

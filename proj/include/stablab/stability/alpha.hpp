#pragma once

#include <cstdint>
#include <json.hpp>
#include <vector>

#include "stablab/fp/group_table.hpp"
#include "stablab/fp/presentation.hpp"
#include "stablab/stability/solver.hpp"

namespace stablab::stability {

inline constexpr std::size_t kAlphaMaxOrder = 64;

struct IrreducibleBlock {
  std::size_t dimension = 0;
  std::vector<Matrix> images;  // one per group element
  std::vector<std::complex<double>> character;
  bool trivial = false;
};

// Splits the regular representation into irreducible blocks by averaging
// random Hermitian matrices over the group and cutting along eigenspaces.
// Throws DecompositionFailure if a block fails the character-norm test or the
// irreducibles found do not account for |N|.
std::vector<IrreducibleBlock> decompose_regular(const fp::GroupTable& g, std::uint64_t seed = 0);

// min over nontrivial irreducibles pi of max_n ||pi(n) - 1||_F
double alpha_threshold(const fp::GroupTable& n, std::uint64_t seed = 0);

struct TransferReport {
  fp::Presentation quotient;     // Gamma/N as the presentation plus the N words
  std::size_t subgroup_order = 0;
  double alpha = 0;
  double epsilon = 0;            // max ||t(n) - 1||_F over n in N
  double delta = 0;              // max ||rho'(n) - t(n)||_F after solving for Gamma
  double residual_on_n = 0;      // max ||rho'(n) - 1||_F
  bool kills_n = false;
  SolveResult solve;             // relators of Gamma only
  UnitaryTuple representation;   // rho' polished on the quotient relators
  DefectReport quotient_defect;  // Frobenius, relators of Gamma/N
  std::vector<double> distance;  // to t per generator, Frobenius
  bool success = false;
  std::uint64_t seed = 0;
};

// Solve for Gamma, check the margin epsilon + delta < alpha, and hand back the
// solution as a representation of Gamma/N. ThresholdViolation when epsilon
// exceeds alpha/2 up front or the margin fails after solving.
TransferReport quotient_transfer_experiment(const fp::Presentation& p, const std::vector<fp::Word>& n_words,
                                            const UnitaryTuple& t, const SolverConfig& cfg);

nlohmann::json to_json(const TransferReport& r);

}  // namespace stablab::stability

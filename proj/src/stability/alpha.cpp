#include "stablab/stability/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "stablab/error.hpp"
#include "stablab/fp/coset_enumeration.hpp"

namespace stablab::stability {

namespace {

constexpr double kEigenGap = 1e-7;
constexpr double kCharacterTol = 1e-6;

std::vector<Matrix> regular_images(const fp::GroupTable& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<Matrix> out;
  for (fp::Element x = 0; x < g.order(); ++x) {
    Matrix m = Matrix::Zero(n, n);
    for (fp::Element y = 0; y < g.order(); ++y) m(g.mul(x, y), y) = 1.0;
    out.push_back(std::move(m));
  }
  return out;
}

Matrix random_hermitian(Eigen::Index d, std::mt19937_64& rng) {
  const Matrix a = random_gaussian(static_cast<std::size_t>(d), rng);
  return (a + a.adjoint()) * 0.5;
}

// Orthonormal bases of the eigenspaces of a Hermitian matrix, grouped by gap.
std::vector<Matrix> eigen_split(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Matrix> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev(i) - ev(i - 1) > kEigenGap * scale) {
      out.push_back(es.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return out;
}

}  // namespace

std::vector<IrreducibleBlock> decompose_regular(const fp::GroupTable& g, std::uint64_t seed) {
  const std::size_t order = g.order();
  if (order == 0 || order > kAlphaMaxOrder)
    throw CapExceeded("irreducible decomposition is limited to order " + std::to_string(kAlphaMaxOrder));
  std::mt19937_64 rng(seed);
  const std::vector<Matrix> reg = regular_images(g);
  const auto big = static_cast<Eigen::Index>(order);
  std::vector<Matrix> pending{Matrix::Identity(big, big)};
  std::vector<IrreducibleBlock> blocks;
  while (!pending.empty()) {
    Matrix q = std::move(pending.back());
    pending.pop_back();
    const Eigen::Index d = q.cols();
    std::vector<Matrix> images;
    for (const auto& r : reg) images.push_back(q.adjoint() * r * q);
    std::vector<Matrix> parts;
    // a scalar average three times running means no invariant Hermitian form is left
    for (int attempt = 0; attempt < 3 && parts.size() < 2; ++attempt) {
      const Matrix h = random_hermitian(d, rng);
      Matrix avg = Matrix::Zero(d, d);
      for (const auto& m : images) avg += m * h * m.adjoint();
      avg /= static_cast<double>(order);
      parts = eigen_split((avg + avg.adjoint()) * 0.5);
    }
    if (parts.size() >= 2) {
      for (const auto& v : parts) pending.push_back(q * v);
      continue;
    }
    IrreducibleBlock b;
    b.dimension = static_cast<std::size_t>(d);
    double norm = 0;
    b.trivial = true;
    for (const auto& m : images) {
      b.character.push_back(m.trace());
      norm += std::norm(b.character.back());
      b.trivial &= (m - Matrix::Identity(d, d)).norm() < kCharacterTol;
    }
    if (std::abs(norm / static_cast<double>(order) - 1.0) > kCharacterTol)
      throw DecompositionFailure("block of dimension " + std::to_string(d) + " is not irreducible");
    b.images = std::move(images);
    blocks.push_back(std::move(b));
  }
  // distinct characters must satisfy sum d^2 = |N|, each appearing d times
  std::vector<std::size_t> rep;
  std::size_t sum_sq = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool seen = false;
    for (std::size_t j : rep) {
      double diff = 0;
      for (std::size_t x = 0; x < order; ++x) diff = std::max(diff, std::abs(blocks[i].character[x] - blocks[j].character[x]));
      seen |= diff < kCharacterTol;
    }
    if (!seen) {
      rep.push_back(i);
      sum_sq += blocks[i].dimension * blocks[i].dimension;
      const auto copies = std::count_if(blocks.begin(), blocks.end(), [&](const IrreducibleBlock& o) {
        double diff = 0;
        for (std::size_t x = 0; x < order; ++x) diff = std::max(diff, std::abs(o.character[x] - blocks[i].character[x]));
        return diff < kCharacterTol;
      });
      if (static_cast<std::size_t>(copies) != blocks[i].dimension)
        throw DecompositionFailure("irreducible of dimension " + std::to_string(blocks[i].dimension) + " appears " +
                                   std::to_string(copies) + " times in the regular representation");
    }
  }
  if (sum_sq != order)
    throw DecompositionFailure("irreducible dimensions account for " + std::to_string(sum_sq) + " of " +
                               std::to_string(order));
  return blocks;
}

double alpha_threshold(const fp::GroupTable& n, std::uint64_t seed) {
  const auto blocks = decompose_regular(n, seed);
  double alpha = -1;
  for (const auto& b : blocks) {
    if (b.trivial) continue;
    const auto d = static_cast<Eigen::Index>(b.dimension);
    double worst = 0;
    for (const auto& m : b.images) worst = std::max(worst, (m - Matrix::Identity(d, d)).norm());
    alpha = alpha < 0 ? worst : std::min(alpha, worst);
  }
  return alpha < 0 ? 0.0 : alpha;  // trivial group: no nontrivial irreducible
}

TransferReport quotient_transfer_experiment(const fp::Presentation& p, const std::vector<fp::Word>& n_words,
                                            const UnitaryTuple& t, const SolverConfig& cfg) {
  if (t.matrices.size() != p.num_generators()) throw DimensionMismatch("tuple does not match the presentation");
  TransferReport r;
  r.seed = cfg.seed;
  const fp::GroupTable g = fp::enumerate_group(p);
  std::vector<fp::Element> gens;
  for (const auto& w : n_words) gens.push_back(g.evaluate(w));
  const auto n_elems = fp::subgroup_closure(g, gens);
  if (!fp::is_normal(g, n_elems)) throw InvalidArgument("the words do not generate a normal subgroup");
  r.subgroup_order = n_elems.size();
  r.quotient = p.with_relators(n_words);
  r.alpha = alpha_threshold(fp::make_subgroup(g, n_elems).table, cfg.seed);

  const auto words = g.transversal_words(g.generators());
  std::vector<fp::Word> n_bar;
  for (fp::Element x : n_elems)
    if (x != 0) n_bar.push_back(words[x]);
  const Matrix id = Matrix::Identity(static_cast<Eigen::Index>(t.n), static_cast<Eigen::Index>(t.n));
  for (const auto& w : n_bar) r.epsilon = std::max(r.epsilon, (evaluate(w, t) - id).norm());
  if (r.epsilon > r.alpha / 2)
    throw ThresholdViolation("defect on N is " + std::to_string(r.epsilon) + ", above alpha/2 = " +
                             std::to_string(r.alpha / 2));

  r.solve = perturbation_solve(p.relators(), t, NormKind::frobenius(), cfg);
  for (const auto& w : n_bar) {
    const Matrix m = evaluate(w, r.solve.tuple);
    r.delta = std::max(r.delta, (m - evaluate(w, t)).norm());
    r.residual_on_n = std::max(r.residual_on_n, (m - id).norm());
  }
  if (!(r.epsilon + r.delta < r.alpha))
    throw ThresholdViolation("epsilon + delta = " + std::to_string(r.epsilon + r.delta) + " is not below alpha = " +
                             std::to_string(r.alpha));
  // Every constituent of rho' on N sits within alpha of 1, so it is trivial.
  r.kills_n = r.residual_on_n <= std::sqrt(cfg.tolerance);
  const SolveResult polish = perturbation_solve(r.quotient.relators(), r.solve.tuple, NormKind::frobenius(), cfg);
  r.representation = polish.tuple;
  r.quotient_defect = defect(r.quotient, r.representation, NormKind::frobenius());
  for (std::size_t j = 0; j < t.matrices.size(); ++j)
    r.distance.push_back((r.representation.matrices[j] - t.matrices[j]).norm());
  r.success = r.solve.converged && polish.converged && r.kills_n;
  return r;
}

nlohmann::json to_json(const TransferReport& r) {
  return {{"subgroup_order", r.subgroup_order},
          {"alpha", r.alpha},
          {"epsilon", r.epsilon},
          {"delta", r.delta},
          {"residual_on_n", r.residual_on_n},
          {"kills_n", r.kills_n},
          {"solve", to_json(r.solve)},
          {"quotient_defect", to_json(r.quotient_defect)},
          {"distance", r.distance},
          {"success", r.success},
          {"seed", r.seed}};
}

}  // namespace stablab::stability

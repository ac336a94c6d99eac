#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stablab/error.hpp"
#include "stablab/fp/coset_enumeration.hpp"
#include "stablab/stability/alpha.hpp"
#include "stablab/stability/experiment.hpp"
#include "stablab/stability/norms.hpp"
#include "stablab/stability/solver.hpp"
#include "test_util.hpp"

using namespace stablab;
using namespace stablab::stability;

namespace {

const std::vector<NormKind> kAllNorms = {NormKind::frobenius(), NormKind::hilbert_schmidt(), NormKind::op(),
                                         NormKind::schatten(1), NormKind::schatten(3.5)};

fp::Presentation z2() { return fp::parse_presentation("group z2\ngens a b\nrel [a,b]\n"); }

}  // namespace

TEST(Norms, ZeroAndScalar) {
  for (const auto& k : kAllNorms) EXPECT_EQ(matrix_norm(Matrix::Zero(3, 3), k), 0.0);
  const Matrix a = 2.0 * Matrix::Identity(3, 3);
  EXPECT_NEAR(matrix_norm(a, NormKind::op()), 2.0, 1e-14);
  EXPECT_NEAR(matrix_norm(a, NormKind::frobenius()), 2 * std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(matrix_norm(a, NormKind::hilbert_schmidt()), 2.0, 1e-14);
  EXPECT_NEAR(matrix_norm(a, NormKind::schatten(4)), 2 * std::pow(3.0, 0.25), 1e-14);
  EXPECT_THROW(matrix_norm(Matrix::Zero(2, 3), NormKind::op()), DimensionMismatch);
}

TEST(Norms, Parse) {
  EXPECT_EQ(NormKind::parse("schatten:2.5").p, 2.5);
  EXPECT_EQ(NormKind::parse("hs").name(), "hs");
  EXPECT_EQ(NormKind::parse("schatten:3").name(), "schatten:3");
  EXPECT_THROW(NormKind::parse("schatten:-1"), InvalidArgument);
  EXPECT_THROW(NormKind::parse("schatten:x"), InvalidArgument);
  EXPECT_THROW(NormKind::parse("l2"), InvalidArgument);
}

TEST(Norms, IdentitiesOnRandomMatrices) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 2; n <= 16; n += 7)
    for (int i = 0; i < 50; ++i) {
      const Matrix a = random_gaussian(n, rng);
      const double f = matrix_norm(a, NormKind::frobenius());
      const double o = matrix_norm(a, NormKind::op());
      EXPECT_NEAR(matrix_norm(a, NormKind::schatten(2)), f, 1e-12 * f);
      EXPECT_NEAR(matrix_norm(a, NormKind::hilbert_schmidt()), f / std::sqrt(static_cast<double>(n)), 1e-12 * f);
      EXPECT_NEAR(f, a.norm(), 1e-12 * f);  // sqrt(tr A*A) directly
      EXPECT_LE(o, f * (1 + 1e-12));
      EXPECT_LE(f, std::sqrt(static_cast<double>(n)) * o * (1 + 1e-12));
      EXPECT_GE(matrix_norm(a, NormKind::schatten(1)), o);
      EXPECT_NEAR(matrix_norm(a, NormKind::schatten(400)), o, 1e-2 * o);
    }
}

TEST(Norms, BiInvariance) {
  std::mt19937_64 rng(2);
  for (std::size_t n : {2u, 5u, 9u}) {
    const Matrix a = random_gaussian(n, rng), b = random_gaussian(n, rng);
    const Matrix u = random_unitary(n, rng), v = random_unitary(n, rng);
    for (const auto& k : kAllNorms)
      EXPECT_NEAR(matrix_norm(u * a * v - u * b * v, k), matrix_norm(a - b, k), 1e-10);
  }
}

TEST(Voiculescu, ClosedForm) {
  for (std::size_t n : {2u, 3u, 8u, 17u, 64u}) {
    const auto t = voiculescu_pair(n);
    EXPECT_TRUE(t.is_unitary());
    const double expected = 2 * std::sin(std::numbers::pi / static_cast<double>(n));
    EXPECT_NEAR(defect(z2(), t, NormKind::op()).max_defect, expected, 1e-10);
    EXPECT_NEAR(defect(z2(), t, NormKind::hilbert_schmidt()).max_defect, expected, 1e-10);
    EXPECT_NEAR(defect(z2(), t, NormKind::frobenius()).max_defect, std::sqrt(static_cast<double>(n)) * expected, 1e-9);
  }
  EXPECT_NEAR(defect(z2(), voiculescu_pair(2), NormKind::op()).max_defect, 2.0, 1e-14);
  EXPECT_THROW(voiculescu_pair(1), InvalidArgument);
}

TEST(Defect, GenuineRepresentationAndMismatch) {
  const auto c3 = testutil::group_presentation("c3");
  std::mt19937_64 rng(4);
  const auto t = genuine_representation(c3, 3, rng);
  EXPECT_LE(defect(c3, t, NormKind::frobenius()).max_defect, 1e-12);
  EXPECT_THROW(defect(z2(), t, NormKind::frobenius()), DimensionMismatch);
  auto bad = voiculescu_pair(3);
  bad.matrices[1] = Matrix::Identity(4, 4);
  EXPECT_THROW(defect(z2(), bad, NormKind::frobenius()), DimensionMismatch);
}

TEST(Defect, SubrepresentationMonotone) {
  std::mt19937_64 rng(5);
  const auto s3 = testutil::group_presentation("s3");
  for (int i = 0; i < 10; ++i) {
    const auto a = perturb(genuine_representation(s3, 6, rng), 0.05, rng);
    const auto b = perturb(genuine_representation(s3, 6, rng), 0.02, rng);
    const auto sum = defect(s3, direct_sum(a, b), NormKind::frobenius()).max_defect;
    EXPECT_GE(sum, defect(s3, a, NormKind::frobenius()).max_defect);
    EXPECT_GE(sum, defect(s3, b, NormKind::frobenius()).max_defect);
  }
}

TEST(Solver, RepresentationIsFixed) {
  std::mt19937_64 rng(6);
  const auto s3 = testutil::group_presentation("s3");
  const auto t = genuine_representation(s3, 6, rng);
  const auto r = perturbation_solve(s3, t, NormKind::op(), SolverConfig{});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0u);
  for (double d : r.distance_moved) EXPECT_EQ(d, 0.0);
}

TEST(Solver, RecoversPerturbedZ3) {
  const auto c3 = testutil::group_presentation("c3");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    const auto t = perturb(genuine_representation(c3, 3, rng), 1e-3, rng);
    const auto r = perturbation_solve(c3, t, NormKind::frobenius(), SolverConfig{});
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.final_defect.max_defect, 1e-8);
    EXPECT_TRUE(r.tuple.is_unitary());
    for (double d : r.distance_moved) EXPECT_LE(d, 10 * 1e-3);
    for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_LE(r.trace[i], r.trace[i - 1]);
  }
}

TEST(Solver, TraceMonotoneOnZ2) {
  std::mt19937_64 rng(8);
  const auto t = perturb(genuine_representation(z2(), 8, rng), 1e-2, rng);
  const auto r = perturbation_solve(z2(), t, NormKind::hilbert_schmidt(), SolverConfig{});
  EXPECT_TRUE(r.converged);
  for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_LE(r.trace[i], r.trace[i - 1]);
}

TEST(Solver, VoiculescuSixteenHasNoNearbySolution) {
  const auto t = voiculescu_pair(16);
  const auto r = perturbation_solve(z2(), t, NormKind::op(), SolverConfig{});
  double moved = 0;
  for (double d : r.distance_moved) moved = std::max(moved, d);
  EXPECT_TRUE(r.final_defect.max_defect > SolverConfig{}.tolerance || moved > 0.1);
}

TEST(Alpha, SmallGroups) {
  EXPECT_NEAR(alpha_threshold(fp::cyclic_group(2)), 2.0, 1e-8);
  EXPECT_NEAR(alpha_threshold(fp::cyclic_group(3)), std::sqrt(3.0), 1e-8);
  EXPECT_NEAR(alpha_threshold(*testutil::group("c2xc2")), 2.0, 1e-8);
  EXPECT_EQ(alpha_threshold(fp::cyclic_group(1)), 0.0);
  // stable across seeds
  const auto s3 = testutil::group("s3");
  EXPECT_NEAR(alpha_threshold(*s3, 1), alpha_threshold(*s3, 99), 1e-8);
  EXPECT_THROW(alpha_threshold(fp::cyclic_group(65)), CapExceeded);
}

TEST(Alpha, DecompositionCounts) {
  const auto blocks = decompose_regular(*testutil::group("s3"), 4);
  std::size_t ones = 0, twos = 0;
  for (const auto& b : blocks) (b.dimension == 1 ? ones : twos) += 1;
  EXPECT_EQ(ones, 2u);
  EXPECT_EQ(twos, 2u);
}

TEST(Transfer, Z4OverZ2) {
  const auto c4 = testutil::group_presentation("c4");
  const std::vector<fp::Word> n_words = {fp::Word::generator(0, 2)};
  std::mt19937_64 rng(9);
  const auto base = genuine_representation(c4.with_relators(n_words), 4, rng);
  const auto r = quotient_transfer_experiment(c4, n_words, perturb(base, 1e-3, rng), SolverConfig{});
  EXPECT_TRUE(r.success);
  for (double d : r.distance) EXPECT_LE(d, 1e-2);
  EXPECT_NEAR(r.alpha, 2.0, 1e-8);
  // an exact pullback comes back unchanged
  const auto same = quotient_transfer_experiment(c4, n_words, base, SolverConfig{});
  for (double d : same.distance) EXPECT_EQ(d, 0.0);
}

TEST(Transfer, ThresholdViolation) {
  const auto c4 = testutil::group_presentation("c4");
  UnitaryTuple t{2, {std::complex<double>(0, 1) * Matrix::Identity(2, 2)}};  // a^2 = -1
  EXPECT_THROW(quotient_transfer_experiment(c4, {fp::Word::generator(0, 2)}, t, SolverConfig{}), ThresholdViolation);
}

TEST(Experiment, ConfigParsing) {
  const auto c = ExperimentConfig::parse("# comment\nexperiment = recovery\nn = 2, 4\n\ndelta=1e-3\n");
  EXPECT_EQ(c.get("experiment"), "recovery");
  EXPECT_EQ(c.get_list("n"), (std::vector<std::string>{"2", "4"}));
  EXPECT_EQ(c.get_double("delta", 0), 1e-3);
  EXPECT_EQ(c.get_int("seed", 7), 7);
  EXPECT_THROW(c.get("missing"), InvalidArgument);
  EXPECT_THROW(ExperimentConfig::parse("novalue\n"), ParseError);
  EXPECT_THROW(ExperimentConfig::parse("a = 1\na = 2\n"), ParseError);
}

TEST(Experiment, SeededRunsAreReproducible) {
  const auto c = ExperimentConfig::parse(
      "experiment = recovery\npresentation = groups/c3.grp\nn = 3\ndelta = 1e-2\nruns = 3\nseed = 42\n");
  const auto a = run_experiment(c), b = run_experiment(c);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 42);
  EXPECT_EQ(a["rows"].size(), 3u);
  for (const auto& row : a["rows"])
    for (const char* key : {"n", "norm", "initial_defect", "final_defect", "distance_moved", "iterations", "converged"})
      EXPECT_TRUE(row.contains(key)) << key;
}

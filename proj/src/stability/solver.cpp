#include "stablab/stability/solver.hpp"

#include <cmath>
#include <numbers>

#include "stablab/error.hpp"
#include "stablab/fp/coset_enumeration.hpp"

namespace stablab::stability {

namespace {

Matrix identity(std::size_t n) { return Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)); }

void check_shape(std::size_t num_generators, const UnitaryTuple& t) {
  if (t.matrices.size() != num_generators)
    throw DimensionMismatch("tuple has " + std::to_string(t.matrices.size()) + " matrices for " +
                            std::to_string(num_generators) + " generators");
  for (const auto& m : t.matrices)
    if (static_cast<std::size_t>(m.rows()) != t.n || static_cast<std::size_t>(m.cols()) != t.n)
      throw DimensionMismatch("tuple matrix is not " + std::to_string(t.n) + "x" + std::to_string(t.n));
}

// Skew-Hermitian part, the tangent direction at U in left-trivialized form.
Matrix skew(const Matrix& a) { return (a - a.adjoint()) * 0.5; }

double inner(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i].adjoint() * b[i]).trace().real();
  return s;
}

// Riemannian gradient as U_j * omega_j; returns the omegas.
std::vector<Matrix> gradient(const std::vector<fp::Word>& relators, const UnitaryTuple& t) {
  const std::size_t n = t.n;
  std::vector<Matrix> g(t.matrices.size(), Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  for (const auto& w : relators) {
    const std::size_t m = w.size();
    std::vector<Matrix> factor(m);
    for (std::size_t k = 0; k < m; ++k) {
      const auto& u = t.matrices[w[k].generator];
      factor[k] = w[k].sign > 0 ? u : Matrix(u.adjoint());
    }
    // prefix[k] = M_0..M_{k-1}, suffix[k] = M_k..M_{m-1}
    std::vector<Matrix> prefix(m + 1), suffix(m + 1);
    prefix[0] = identity(n);
    for (std::size_t k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * factor[k];
    suffix[m] = identity(n);
    for (std::size_t k = m; k-- > 0;) suffix[k] = factor[k] * suffix[k + 1];
    const Matrix r = prefix[m] - identity(n);
    for (std::size_t k = 0; k < m; ++k) {
      const Matrix& a = prefix[k];
      const Matrix& b = suffix[k + 1];
      if (w[k].sign > 0)
        g[w[k].generator] += 2.0 * a.adjoint() * r * b.adjoint();
      else
        g[w[k].generator] += 2.0 * b * r.adjoint() * a;
    }
  }
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = skew(t.matrices[j].adjoint() * g[j]);
  return g;
}

UnitaryTuple step(const UnitaryTuple& t, const std::vector<Matrix>& omega, double s) {
  UnitaryTuple out = t;
  for (std::size_t j = 0; j < omega.size(); ++j)
    out.matrices[j] = polar_unitary(t.matrices[j] * (identity(t.n) - s * omega[j]));
  return out;
}

}  // namespace

bool UnitaryTuple::is_unitary(double tol) const {
  for (const auto& m : matrices)
    if (static_cast<std::size_t>(m.rows()) != n || unitarity_error(m) > tol) return false;
  return true;
}

Matrix evaluate(const fp::Word& w, const UnitaryTuple& t) {
  Matrix p = identity(t.n);
  for (const auto& l : w) {
    if (l.generator >= t.matrices.size()) throw DimensionMismatch("word uses a generator outside the tuple");
    const auto& u = t.matrices[l.generator];
    p = l.sign > 0 ? Matrix(p * u) : Matrix(p * u.adjoint());
  }
  return p;
}

DefectReport defect(const std::vector<fp::Word>& words, std::size_t num_generators, const UnitaryTuple& t,
                    const NormKind& kind) {
  check_shape(num_generators, t);
  DefectReport r;
  r.norm = kind;
  for (const auto& w : words) {
    r.per_relator.push_back(matrix_norm(evaluate(w, t) - identity(t.n), kind));
    r.max_defect = std::max(r.max_defect, r.per_relator.back());
  }
  return r;
}

DefectReport defect(const fp::Presentation& p, const UnitaryTuple& t, const NormKind& kind) {
  return defect(p.relators(), p.num_generators(), t, kind);
}

UnitaryTuple voiculescu_pair(std::size_t n) {
  if (n < 2) throw InvalidArgument("Voiculescu pair needs n >= 2");
  const auto m = static_cast<Eigen::Index>(n);
  Matrix shift = Matrix::Zero(m, m);
  Matrix clock = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    shift((i + 1) % m, i) = 1.0;
    clock(i, i) = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
  }
  return {n, {shift, clock}};
}

double objective(const std::vector<fp::Word>& relators, const UnitaryTuple& t) {
  double f = 0;
  for (const auto& w : relators) f += (evaluate(w, t) - identity(t.n)).squaredNorm();
  return f;
}

SolveResult perturbation_solve(const std::vector<fp::Word>& relators, const UnitaryTuple& t, const NormKind& kind,
                               const SolverConfig& cfg) {
  if (!(cfg.tolerance > 0) || !(cfg.initial_step > 0) || !(cfg.backtrack > 0 && cfg.backtrack < 1))
    throw InvalidArgument("solver tolerances and steps must be positive");
  if (t.matrices.empty()) throw DimensionMismatch("empty tuple");
  check_shape(t.matrices.size(), t);
  if (!t.is_unitary(1e-10)) throw InvalidArgument("input tuple is not unitary");
  const std::size_t k = t.matrices.size();
  SolveResult res;
  res.objective = "sum of squared Frobenius relator defects; distances in " + kind.name();
  res.initial_defect = defect(relators, k, t, kind);
  UnitaryTuple cur = t;
  double f = objective(relators, cur);
  res.trace.push_back(f);
  std::vector<Matrix> g = gradient(relators, cur);
  double s = cfg.initial_step;
  res.status = "max_iterations";
  for (std::size_t it = 0;; ++it) {
    if (defect(relators, k, cur, kind).max_defect <= cfg.tolerance) {
      res.status = "converged";
      res.converged = true;
      break;
    }
    if (it >= cfg.max_iterations) break;
    const double gg = inner(g, g);
    if (gg == 0) {
      res.status = "stalled";
      break;
    }
    s = std::clamp(s, cfg.min_step, cfg.max_step);
    UnitaryTuple next;
    double fn = 0;
    bool accepted = false;
    for (; s >= cfg.min_step; s *= cfg.backtrack) {
      next = step(cur, g, s);
      fn = objective(relators, next);
      if (fn <= f - cfg.armijo * s * gg) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      res.status = "stalled";
      break;
    }
    std::vector<Matrix> gn = gradient(relators, next);
    // Barzilai-Borwein length from the Lie-algebra differences
    std::vector<Matrix> ds(k), dg(k);
    for (std::size_t j = 0; j < k; ++j) {
      ds[j] = -s * g[j];
      dg[j] = gn[j] - g[j];
    }
    const double sy = inner(ds, dg);
    s = sy > 0 ? inner(ds, ds) / sy : cfg.initial_step;
    cur = std::move(next);
    g = std::move(gn);
    f = fn;
    res.trace.push_back(f);
    res.iterations = it + 1;
  }
  res.tuple = cur;
  res.final_defect = defect(relators, k, cur, kind);
  for (std::size_t j = 0; j < k; ++j) res.distance_moved.push_back(matrix_norm(cur.matrices[j] - t.matrices[j], kind));
  return res;
}

SolveResult perturbation_solve(const fp::Presentation& p, const UnitaryTuple& t, const NormKind& kind,
                               const SolverConfig& cfg) {
  check_shape(p.num_generators(), t);
  return perturbation_solve(p.relators(), t, kind, cfg);
}

UnitaryTuple direct_sum(const UnitaryTuple& a, const UnitaryTuple& b) {
  if (a.matrices.size() != b.matrices.size()) throw DimensionMismatch("direct sum of tuples of different lengths");
  UnitaryTuple out;
  out.n = a.n + b.n;
  const auto na = static_cast<Eigen::Index>(a.n), nb = static_cast<Eigen::Index>(b.n);
  for (std::size_t j = 0; j < a.matrices.size(); ++j) {
    Matrix m = Matrix::Zero(na + nb, na + nb);
    m.topLeftCorner(na, na) = a.matrices[j];
    m.bottomRightCorner(nb, nb) = b.matrices[j];
    out.matrices.push_back(std::move(m));
  }
  return out;
}

UnitaryTuple genuine_representation(const fp::Presentation& p, std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw InvalidArgument("representation dimension must be positive");
  const std::size_t k = p.num_generators();
  bool zero_sums = true;
  for (const auto& r : p.relators())
    for (long e : r.exponent_sums(k)) zero_sums &= e == 0;
  UnitaryTuple t;
  t.n = n;
  const auto m = static_cast<Eigen::Index>(n);
  if (zero_sums) {
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    for (std::size_t j = 0; j < k; ++j) {
      Matrix d = Matrix::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i) d(i, i) = std::polar(1.0, phase(rng));
      t.matrices.push_back(std::move(d));
    }
  } else {
    const fp::GroupTable g = fp::enumerate_group(p);
    const std::size_t order = g.order();
    const std::size_t copies = n / order;
    const auto& gens = g.generators();
    for (std::size_t j = 0; j < k; ++j) {
      Matrix d = Matrix::Identity(m, m);
      for (std::size_t c = 0; c < copies; ++c) {
        const auto off = static_cast<Eigen::Index>(c * order);
        d.block(off, off, static_cast<Eigen::Index>(order), static_cast<Eigen::Index>(order)).setZero();
        for (fp::Element x = 0; x < order; ++x)
          d(off + static_cast<Eigen::Index>(g.mul(gens[j], x)), off + static_cast<Eigen::Index>(x)) = 1.0;
      }
      t.matrices.push_back(std::move(d));
    }
  }
  const Matrix q = random_unitary(n, rng);
  for (auto& u : t.matrices) u = q * u * q.adjoint();
  return t;
}

UnitaryTuple perturb(const UnitaryTuple& t, double delta, std::mt19937_64& rng) {
  UnitaryTuple out = t;
  for (auto& u : out.matrices) u = u * exp_anti_hermitian(delta * random_anti_hermitian(t.n, rng));
  return out;
}

nlohmann::json to_json(const DefectReport& r) {
  return {{"norm", r.norm.name()}, {"per_relator", r.per_relator}, {"max_defect", r.max_defect}};
}

nlohmann::json to_json(const SolveResult& r, bool with_trace) {
  nlohmann::json j = {{"n", r.tuple.n},
                      {"norm", r.final_defect.norm.name()},
                      {"initial_defect", r.initial_defect.max_defect},
                      {"final_defect", r.final_defect.max_defect},
                      {"distance_moved", r.distance_moved},
                      {"iterations", r.iterations},
                      {"converged", r.converged},
                      {"status", r.status},
                      {"objective", r.objective}};
  if (with_trace) j["trace"] = r.trace;
  return j;
}

}  // namespace stablab::stability

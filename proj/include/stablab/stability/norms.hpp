#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace stablab::stability {

using Matrix = Eigen::MatrixXcd;

/// Unitarily invariant norms, all computed from singular values.
struct NormKind {
  enum class Type { Frobenius, HilbertSchmidt, Operator, Schatten };
  Type type = Type::Frobenius;
  double p = 2.0;  // Schatten exponent only

  static NormKind frobenius() { return {Type::Frobenius, 2.0}; }
  static NormKind hilbert_schmidt() { return {Type::HilbertSchmidt, 2.0}; }
  static NormKind op() { return {Type::Operator, 0.0}; }
  static NormKind schatten(double p);  // p > 0
  // "frobenius", "hs", "hilbert-schmidt", "operator", "schatten:<p>"
  static NormKind parse(const std::string& text);
  std::string name() const;
};

Eigen::VectorXd singular_values(const Matrix& a);
double matrix_norm(const Matrix& a, const NormKind& kind);

// Haar-ish random unitary (QR of a complex Gaussian matrix with phase fix).
template <class Rng>
Matrix random_unitary(std::size_t n, Rng& rng);
// Gaussian anti-Hermitian matrix scaled to Frobenius norm 1.
template <class Rng>
Matrix random_anti_hermitian(std::size_t n, Rng& rng);
template <class Rng>
Matrix random_gaussian(std::size_t n, Rng& rng);

// Nearest unitary in any unitarily invariant norm: U V* from A = U S V*.
Matrix polar_unitary(const Matrix& a);
Matrix exp_anti_hermitian(const Matrix& k);
double unitarity_error(const Matrix& u);  // ||U*U - I||_F

}  // namespace stablab::stability

#include "stablab/stability/random_matrices.ipp"

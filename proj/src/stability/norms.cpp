#include "stablab/stability/norms.hpp"

#include <cmath>

#include "stablab/error.hpp"

namespace stablab::stability {

NormKind NormKind::schatten(double p) {
  if (!(p > 0) || !std::isfinite(p)) throw InvalidArgument("Schatten exponent must be a positive real");
  return {Type::Schatten, p};
}

NormKind NormKind::parse(const std::string& text) {
  if (text == "frobenius") return frobenius();
  if (text == "hs" || text == "hilbert-schmidt") return hilbert_schmidt();
  if (text == "operator") return op();
  if (text.rfind("schatten:", 0) == 0) {
    std::size_t used = 0;
    double p = 0;
    try {
      p = std::stod(text.substr(9), &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad Schatten exponent in '" + text + "'");
    }
    if (used != text.size() - 9) throw InvalidArgument("bad Schatten exponent in '" + text + "'");
    return schatten(p);
  }
  throw InvalidArgument("unknown norm '" + text + "'");
}

std::string NormKind::name() const {
  switch (type) {
    case Type::Frobenius: return "frobenius";
    case Type::HilbertSchmidt: return "hs";
    case Type::Operator: return "operator";
    case Type::Schatten: {
      std::string s = std::to_string(p);
      s.erase(s.find_last_not_of('0') + 1);
      if (s.back() == '.') s.pop_back();
      return "schatten:" + s;
    }
  }
  return "?";
}

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.size() == 0) return {};
  return Eigen::JacobiSVD<Matrix>(a).singularValues();
}

double matrix_norm(const Matrix& a, const NormKind& kind) {
  if (a.rows() != a.cols()) throw DimensionMismatch("matrix norm needs a square matrix");
  if (a.size() == 0) return 0.0;
  const Eigen::VectorXd s = singular_values(a);
  switch (kind.type) {
    case NormKind::Type::Frobenius: return s.norm();
    case NormKind::Type::HilbertSchmidt: return s.norm() / std::sqrt(static_cast<double>(a.rows()));
    case NormKind::Type::Operator: return s(0);
    case NormKind::Type::Schatten: {
      // scale by the top singular value so large p does not overflow
      const double top = s(0);
      if (top == 0) return 0.0;
      double sum = 0;
      for (Eigen::Index i = 0; i < s.size(); ++i) sum += std::pow(s(i) / top, kind.p);
      return top * std::pow(sum, 1.0 / kind.p);
    }
  }
  return 0.0;
}

Matrix polar_unitary(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix exp_anti_hermitian(const Matrix& k) {
  // k = i H with H Hermitian; exp(k) = V exp(i D) V*
  const Matrix h = std::complex<double>(0, -1) * k;
  Eigen::SelfAdjointEigenSolver<Matrix> es((h + h.adjoint()) * 0.5);
  const Eigen::VectorXd d = es.eigenvalues();
  Eigen::VectorXcd phases(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) phases(i) = std::polar(1.0, d(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double unitarity_error(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

}  // namespace stablab::stability

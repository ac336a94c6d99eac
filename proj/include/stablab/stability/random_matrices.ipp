#pragma once

#include <random>

namespace stablab::stability {

template <class Rng>
Matrix random_gaussian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(n);
  Matrix a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = {d(rng), d(rng)};
  return a;
}

template <class Rng>
Matrix random_unitary(std::size_t n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_gaussian(n, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const std::complex<double> d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

template <class Rng>
Matrix random_anti_hermitian(std::size_t n, Rng& rng) {
  const Matrix g = random_gaussian(n, rng);
  Matrix k = (g - g.adjoint()) * 0.5;
  return k / k.norm();
}

}  // namespace stablab::stability

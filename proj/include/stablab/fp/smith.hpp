#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace stablab::fp {

/// Dense integer matrix with exact entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix transpose() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// L * M * R = D with D diagonal, d_0 | d_1 | ... (zeros last), L and R unimodular.
struct SmithForm {
  std::vector<mpz_class> diagonal;  // length min(rows, cols), entries >= 0
  bool has_transforms = false;  // R and R_inv; L and L_inv only when has_left
  bool has_left = false;
  IntegerMatrix L, L_inv, R, R_inv;

  std::size_t rank() const;
};

// with_left = false skips L and L_inv, which matters for tall matrices.
SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = true, bool with_left = true);

// Determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntegerMatrix& m);

}  // namespace stablab::fp

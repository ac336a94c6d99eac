#include "stablab/fp/smith.hpp"

#include <algorithm>

#include "stablab/error.hpp"

namespace stablab::fp {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  if (cols == 0 && !rows.empty()) cols = rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += x * b(k, j);
    }
  }
  return p;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(std::count_if(diagonal.begin(), diagonal.end(), [](const mpz_class& d) { return d != 0; }));
}

namespace {

struct Overflow {};

// Arithmetic policies: checked machine integers or GMP.
struct I64 {
  using T = std::int64_t;
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T neg(T a) { return sub(0, a); }
  static T abs(T a) { return a < 0 ? neg(a) : a; }
  static T div(T a, T b) {
    if (b == -1) return neg(a);
    return a / b;
  }
  static T mod(T a, T b) { return b == -1 ? 0 : a % b; }
  // g = s a + t b, g >= 0
  static void gcdext(T a, T b, T& g, T& s, T& t) {
    T old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
      const T q = div(old_r, r);
      T tmp = sub(old_r, mul(q, r));
      old_r = r;
      r = tmp;
      tmp = sub(old_s, mul(q, s1));
      old_s = s1;
      s1 = tmp;
      tmp = sub(old_t, mul(q, t1));
      old_t = t1;
      t1 = tmp;
    }
    if (old_r < 0) {
      old_r = neg(old_r);
      old_s = neg(old_s);
      old_t = neg(old_t);
    }
    g = old_r;
    s = old_s;
    t = old_t;
  }
  static mpz_class to_mpz(T a) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), a);
    return z;
  }
  static T from_mpz(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Overflow{};
    return z.get_si();
  }
};

struct Big {
  using T = mpz_class;
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T neg(const T& a) { return -a; }
  static T abs(const T& a) { return ::abs(a); }
  static T div(const T& a, const T& b) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static T mod(const T& a, const T& b) {
    T r;
    mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static void gcdext(const T& a, const T& b, T& g, T& s, T& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static mpz_class to_mpz(const T& a) { return a; }
  static T from_mpz(const mpz_class& z) { return z; }
};

template <typename P>
class Engine {
  using T = typename P::T;

 public:
  Engine(const IntegerMatrix& m, bool transforms, bool left)
      : r_(m.rows()), c_(m.cols()), transforms_(transforms), left_(transforms && left), d_(r_ * c_) {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) d_[i * c_ + j] = P::from_mpz(m(i, j));
    if (left_) {
      L_.assign(r_ * r_, T(0));
      Li_.assign(r_ * r_, T(0));
      for (std::size_t i = 0; i < r_; ++i) L_[i * r_ + i] = Li_[i * r_ + i] = 1;
    }
    if (transforms_) {
      R_.assign(c_ * c_, T(0));
      Ri_.assign(c_ * c_, T(0));
      for (std::size_t i = 0; i < c_; ++i) R_[i * c_ + i] = Ri_[i * c_ + i] = 1;
    }
  }

  SmithForm run() {
    const std::size_t k = std::min(r_, c_);
    for (std::size_t t = 0; t < k; ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < r_; ++i) {
          if (D(i, t) == 0) continue;
          const T q = P::div(D(i, t), D(t, t));
          row_add(i, t, P::neg(q));
          if (D(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c_; ++j) {
          if (D(t, j) == 0) continue;
          const T q = P::div(D(t, j), D(t, t));
          col_add(j, t, P::neg(q));
          if (D(t, j) != 0) clean = false;
        }
        if (clean) break;
        place_pivot(t);
      }
    }
    // Nonnegative diagonal.
    for (std::size_t t = 0; t < k; ++t) {
      if (D(t, t) < 0) row_negate(t);
    }
    // Enforce divisibility: replace (d_i, d_j) by (gcd, lcm).
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const T a = D(i, i);
        const T b = D(j, j);
        if (a == 0 && b == 0) continue;
        if (a != 0 && P::mod(b, a) == 0) continue;
        fix_pair(i, j);
      }
    }
    SmithForm sf;
    sf.diagonal.resize(k);
    for (std::size_t t = 0; t < k; ++t) sf.diagonal[t] = P::to_mpz(D(t, t));
    sf.has_transforms = transforms_;
    sf.has_left = left_;
    if (left_) {
      sf.L = to_matrix(L_, r_, r_);
      sf.L_inv = to_matrix(Li_, r_, r_);
    }
    if (transforms_) {
      sf.R = to_matrix(R_, c_, c_);
      sf.R_inv = to_matrix(Ri_, c_, c_);
    }
    return sf;
  }

 private:
  T& D(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }

  static IntegerMatrix to_matrix(const std::vector<T>& v, std::size_t r, std::size_t c) {
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = P::to_mpz(v[i * c + j]);
    return m;
  }

  // Moves the smallest nonzero entry of the trailing block to (t,t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = r_, bj = c_;
    T best = 0;
    for (std::size_t i = t; i < r_; ++i) {
      for (std::size_t j = t; j < c_; ++j) {
        const T& v = D(i, j);
        if (v == 0) continue;
        const T a = P::abs(v);
        if (bi == r_ || a < best) {
          best = a;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (bi != r_ && best == 1) break;
    }
    if (bi == r_) return false;
    if (bi != t) row_swap(bi, t);
    if (bj != t) col_swap(bj, t);
    return true;
  }

  // row_i += q * row_j
  void row_add(std::size_t i, std::size_t j, const T& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < c_; ++c) {
      if (D(j, c) != 0) D(i, c) = P::add(D(i, c), P::mul(q, D(j, c)));
    }
    if (!left_) return;
    for (std::size_t c = 0; c < r_; ++c) {
      if (L_[j * r_ + c] != 0) L_[i * r_ + c] = P::add(L_[i * r_ + c], P::mul(q, L_[j * r_ + c]));
    }
    // L_inv: col_j -= q * col_i
    for (std::size_t r = 0; r < r_; ++r) {
      if (Li_[r * r_ + i] != 0) Li_[r * r_ + j] = P::sub(Li_[r * r_ + j], P::mul(q, Li_[r * r_ + i]));
    }
  }

  // col_i += q * col_j
  void col_add(std::size_t i, std::size_t j, const T& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < r_; ++r) {
      if (D(r, j) != 0) D(r, i) = P::add(D(r, i), P::mul(q, D(r, j)));
    }
    if (!transforms_) return;
    for (std::size_t r = 0; r < c_; ++r) {
      if (R_[r * c_ + j] != 0) R_[r * c_ + i] = P::add(R_[r * c_ + i], P::mul(q, R_[r * c_ + j]));
    }
    // R_inv: row_j -= q * row_i
    for (std::size_t c = 0; c < c_; ++c) {
      if (Ri_[i * c_ + c] != 0) Ri_[j * c_ + c] = P::sub(Ri_[j * c_ + c], P::mul(q, Ri_[i * c_ + c]));
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < c_; ++c) std::swap(D(i, c), D(j, c));
    if (!left_) return;
    for (std::size_t c = 0; c < r_; ++c) std::swap(L_[i * r_ + c], L_[j * r_ + c]);
    for (std::size_t r = 0; r < r_; ++r) std::swap(Li_[r * r_ + i], Li_[r * r_ + j]);
  }

  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < r_; ++r) std::swap(D(r, i), D(r, j));
    if (!transforms_) return;
    for (std::size_t r = 0; r < c_; ++r) std::swap(R_[r * c_ + i], R_[r * c_ + j]);
    for (std::size_t c = 0; c < c_; ++c) std::swap(Ri_[i * c_ + c], Ri_[j * c_ + c]);
  }

  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < c_; ++c) D(i, c) = P::neg(D(i, c));
    if (!left_) return;
    for (std::size_t c = 0; c < r_; ++c) L_[i * r_ + c] = P::neg(L_[i * r_ + c]);
    for (std::size_t r = 0; r < r_; ++r) Li_[r * r_ + i] = P::neg(Li_[r * r_ + i]);
  }

  // diag(a, b) at positions i, j becomes diag(gcd, lcm).
  void fix_pair(std::size_t i, std::size_t j) {
    const T a = D(i, i);
    const T b = D(j, j);
    T g, s, t;
    P::gcdext(a, b, g, s, t);
    const T ag = P::div(a, g);
    const T bg = P::div(b, g);
    D(i, i) = g;
    D(j, j) = P::mul(ag, b);
    if (!transforms_) return;
    const T tb = P::mul(t, bg);
    const T sa = P::mul(s, ag);
    // R <- R R2 with R2 = [[1, -t b/g], [1, s a/g]].
    for (std::size_t r = 0; r < c_; ++r) {
      const T ci = R_[r * c_ + i];
      const T cj = R_[r * c_ + j];
      R_[r * c_ + i] = P::add(ci, cj);
      R_[r * c_ + j] = P::add(P::mul(ci, P::neg(tb)), P::mul(cj, sa));
    }
    // R_inv <- R2^-1 R_inv with R2^-1 = [[s a/g, t b/g], [-1, 1]].
    for (std::size_t c = 0; c < c_; ++c) {
      const T ri = Ri_[i * c_ + c];
      const T rj = Ri_[j * c_ + c];
      Ri_[i * c_ + c] = P::add(P::mul(sa, ri), P::mul(tb, rj));
      Ri_[j * c_ + c] = P::sub(rj, ri);
    }
    if (!left_) return;
    // L <- L2 L with L2 = [[s, t], [-b/g, a/g]] on rows i, j.
    for (std::size_t c = 0; c < r_; ++c) {
      const T li = L_[i * r_ + c];
      const T lj = L_[j * r_ + c];
      L_[i * r_ + c] = P::add(P::mul(s, li), P::mul(t, lj));
      L_[j * r_ + c] = P::add(P::mul(P::neg(bg), li), P::mul(ag, lj));
    }
    // L_inv <- L_inv L2^-1 with L2^-1 = [[a/g, -t], [b/g, s]].
    for (std::size_t r = 0; r < r_; ++r) {
      const T ci = Li_[r * r_ + i];
      const T cj = Li_[r * r_ + j];
      Li_[r * r_ + i] = P::add(P::mul(ci, ag), P::mul(cj, bg));
      Li_[r * r_ + j] = P::add(P::mul(ci, P::neg(t)), P::mul(cj, s));
    }
  }

  std::size_t r_, c_;
  bool transforms_;
  bool left_;
  std::vector<T> d_, L_, Li_, R_, Ri_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms, bool with_left) {
  try {
    return Engine<I64>(m, with_transforms, with_left).run();
  } catch (const Overflow&) {
    return Engine<Big>(m, with_transforms, with_left).run();
  }
}

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace stablab::fp

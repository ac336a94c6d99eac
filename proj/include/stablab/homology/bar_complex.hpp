#pragma once

#include <vector>

#include "stablab/fp/abelian_group.hpp"
#include "stablab/fp/group_table.hpp"
#include "stablab/homology/cocycle_quotient.hpp"

namespace stablab::homology {

// Product of adjacent cell counts allowed for one boundary matrix.
inline constexpr std::size_t kBarCellCap = 4'000'000;

/// Normalized bar complex of a finite group with trivial coefficients. Cells of
/// degree d are d-tuples of non-identity elements.
class BarComplex {
 public:
  explicit BarComplex(const fp::GroupTable& g) : g_(g) {}

  std::size_t cells(int degree) const;
  // Row per degree-d cell, column per degree-(d-1) cell.
  fp::IntegerMatrix boundary(int degree) const;
  // Cell index of a tuple of non-identity elements.
  std::size_t cell_index(const std::vector<fp::Element>& tuple) const;
  std::vector<fp::Element> cell_tuple(std::size_t index, int degree) const;
  // Throws CapExceeded when degree d cohomology would exceed kBarCellCap.
  void check_cap(int degree) const;

 private:
  const fp::GroupTable& g_;
};

/// H^d(G, k) for finite k from the bar complex. Cochains are tables over G^d
/// (index g_1 |G|^(d-1) + ... + g_d), normalized.
class BarCohomology {
 public:
  BarCohomology(const fp::GroupTable& g, const fp::AbelianGroup& k, int degree);

  int degree() const { return degree_; }
  const fp::AbelianGroup& group() const { return q_.group(); }
  AVec classify(const std::vector<AVec>& cochain) const;
  std::vector<AVec> representative(const AVec& cls) const;
  bool is_cocycle(const std::vector<AVec>& cochain) const;

 private:
  const fp::GroupTable& g_;
  fp::AbelianGroup k_;
  int degree_;
  BarComplex bar_;
  CocycleQuotient q_;
};

// dim_Q H^d(G, Q) by ranks of boundary matrices.
std::size_t bar_rational_dimension(const fp::GroupTable& g, int degree);
// Integral homology H_d(G, Z).
fp::AbelianGroup bar_homology(const fp::GroupTable& g, int degree);

}  // namespace stablab::homology

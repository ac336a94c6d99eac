#pragma once

#include <vector>

#include "stablab/fp/abelian_group.hpp"

namespace stablab::homology {

using fp::AVec;

/// Z(k) / B(k) where, for each cyclic factor Z/m of k, cocycles are the
/// x in (Z/m)^n with A x = 0 mod m and coboundaries are spanned by the given
/// integer vectors. `sf` is the Smith form of A with right transforms.
class CocycleQuotient {
 public:
  CocycleQuotient() = default;
  CocycleQuotient(const fp::SmithForm& sf, std::size_t n, const std::vector<std::vector<long>>& coboundaries,
                  const fp::AbelianGroup& k);

  const fp::AbelianGroup& group() const { return total_.group; }
  std::size_t dimension() const { return n_; }

  // x[c] is the cochain's c-th coordinate in k; throws if it is not a cocycle.
  AVec classify(const std::vector<std::vector<long>>& x) const;
  // A cocycle in the class, per coordinate of k.
  std::vector<std::vector<long>> lift(const AVec& cls) const;
  // Same, in the Smith basis y = R^-1 x.
  std::vector<std::vector<long>> lift_y(const AVec& cls) const;

 private:
  struct Component {
    long m = 0;
    std::vector<long> c, e;
    fp::Cokernel quotient;
  };
  std::size_t n_ = 0;
  std::vector<long> R_, Rinv_;  // n x n
  std::vector<Component> comps_;
  fp::Cokernel total_;
};

}  // namespace stablab::homology

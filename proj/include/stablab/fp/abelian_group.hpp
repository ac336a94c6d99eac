#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "stablab/fp/group_table.hpp"
#include "stablab/fp/presentation.hpp"
#include "stablab/fp/smith.hpp"

namespace stablab::fp {

using AVec = std::vector<long>;

/// Finitely generated abelian group by invariant factors. Finite factors (each
/// >= 2) come first in divisibility order, then one 0 per infinite cyclic factor.
/// Elements are coordinate vectors, reduced modulo the finite factors.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Accepts any list of cyclic orders (1s dropped, 0 = infinite) and normalizes.
  static AbelianGroup from_cyclic_orders(const std::vector<long>& orders);
  // Cokernel of the integer matrix whose rows are relations.
  static AbelianGroup cokernel(const IntegerMatrix& relations);

  const std::vector<long>& invariant_factors() const { return factors_; }
  std::vector<long> torsion_factors() const;
  std::size_t free_rank() const;
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  // Product of the finite factors; the group order when finite.
  long long torsion_order() const;
  long long order() const;  // throws InvalidArgument when infinite

  AVec zero() const { return AVec(factors_.size(), 0); }
  AVec reduce(AVec v) const;
  AVec add(const AVec& a, const AVec& b) const;
  AVec neg(const AVec& a) const;
  AVec scale(const AVec& a, long k) const;
  bool is_zero(const AVec& a) const;
  // Every element of a finite group, in mixed-radix order.
  std::vector<AVec> elements() const;
  long long index_of(const AVec& a) const;  // position in elements()
  AVec element_at(long long index) const;
  long element_order(const AVec& a) const;

  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<long> factors_;
};

/// Homomorphism between abelian groups, stored as images of the source basis.
struct AbelianHom {
  AbelianGroup source;
  AbelianGroup target;
  std::vector<AVec> images;

  AVec apply(const AVec& v) const;
  bool is_zero() const;
  bool is_well_defined() const;
  static AbelianHom zero(const AbelianGroup& s, const AbelianGroup& t);
};
AbelianHom compose(const AbelianHom& second, const AbelianHom& first);

/// Z^n modulo the row span of a relation matrix, with explicit coordinates.
/// A vector z in Z^n maps to coords(z); lift(a) is a preimage of a.
struct Cokernel {
  AbelianGroup group;
  std::size_t n = 0;
  SmithForm sf;
  std::vector<std::size_t> kept;  // SNF positions carrying a factor other than 1

  static Cokernel of(const IntegerMatrix& relations);
  AVec coords(const std::vector<long>& z) const;
  std::vector<long> lift(const AVec& a) const;
};

/// Hom(A, B) for finitely generated A and finite B, with coordinates.
struct HomGroup {
  AbelianGroup source;
  AbelianGroup target;
  AbelianGroup group;
  Cokernel norm;  // over raw coordinates (i, j), one per pair of cyclic factors

  static HomGroup of(const AbelianGroup& a, const AbelianGroup& b);
  AVec coords(const AbelianHom& f) const;
  AbelianHom hom(const AVec& c) const;
};

// Image and kernel of a homomorphism between finite groups, as sorted element
// index lists (indices per AbelianGroup::index_of).
std::vector<long long> image_indices(const AbelianHom& f);
std::vector<long long> kernel_indices(const AbelianHom& f);

// A finite abelian subgroup of a group table with a basis adapted to its
// invariant factors: element = prod basis[i]^coords[i].
struct AbelianRealization {
  AbelianGroup group;
  std::vector<Element> basis;
  std::vector<Element> elements;       // sorted
  std::vector<long> position;          // ambient element -> index into elements, or -1
  std::vector<AVec> coords;            // per index into elements

  AVec coordinates(Element x) const;
  Element element(const AVec& v) const;
};
AbelianRealization realize_abelian(const GroupTable& g, const std::vector<Element>& subgroup);

AbelianGroup abelianization(const Presentation& p);
// Abelianization computed from the table: G / [G,G] realized as a group table.
AbelianGroup abelianization(const GroupTable& g);

// Hom(A, B) and Ext^1(A, B) for finitely generated A and finite or free B.
AbelianGroup hom_group(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup ext_group(const AbelianGroup& a, const AbelianGroup& b);

long gcd_long(long a, long b);
long mod_long(long a, long m);

}  // namespace stablab::fp

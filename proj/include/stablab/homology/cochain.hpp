#pragma once

#include <vector>

#include "stablab/fp/abelian_group.hpp"
#include "stablab/fp/group_table.hpp"

namespace stablab::homology {

using fp::AVec;
using fp::Element;

/// A normalized 2-cochain G x G -> A with trivial action; values[g * |G| + h].
struct Cocycle2 {
  fp::GroupPtr base;
  fp::AbelianGroup kernel;
  std::vector<AVec> values;

  static Cocycle2 zero(fp::GroupPtr base, const fp::AbelianGroup& kernel);
  std::size_t order() const { return base->order(); }
  const AVec& operator()(Element g, Element h) const { return values[g * order() + h]; }
  AVec& at(Element g, Element h) { return values[g * order() + h]; }
};

bool is_normalized(const Cocycle2& c);
// c(x,y) + c(xy,z) = c(y,z) + c(x,yz) for all triples.
bool is_cocycle(const Cocycle2& c);

Cocycle2 add(const Cocycle2& a, const Cocycle2& b);
Cocycle2 negate(const Cocycle2& a);
Cocycle2 scale(const Cocycle2& a, long k);
// beta o c
Cocycle2 push(const Cocycle2& c, const fp::AbelianHom& beta);
// (df)(g,h) = f(g) + f(h) - f(gh) for a 1-cochain with f(e) = 0.
Cocycle2 coboundary(fp::GroupPtr base, const fp::AbelianGroup& kernel, const std::vector<AVec>& f);
// Pull back along a homomorphism H -> G given by element images (restriction
// for a subgroup, inflation for a quotient map).
Cocycle2 pull_back(const Cocycle2& c, fp::GroupPtr source, const std::vector<Element>& map);

// Homomorphisms G -> A (1-cocycles with trivial action) as value tables.
bool is_homomorphism_to(const fp::GroupTable& g, const fp::AbelianGroup& a, const std::vector<AVec>& f);

}  // namespace stablab::homology

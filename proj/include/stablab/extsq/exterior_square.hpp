#pragma once

#include <json.hpp>
#include <vector>

#include "stablab/extensions/extension.hpp"
#include "stablab/fp/abelian_group.hpp"
#include "stablab/fp/presentation.hpp"

namespace stablab::extsq {

using fp::AVec;
using fp::Element;

inline constexpr std::size_t kExteriorSquareMaxOrder = 32;

/// The group on symbols x^y (x, y in G), symbol index x |G| + y, subject to
///   (xx'^y) = (xx'x^-1 ^ xyx^-1)(x^y),  (x^yy') = (x^y)(yxy^-1 ^ yy'y^-1),  x^x = 1,
/// realized by coset enumeration. id_bar sends x^y to [x,y] = xyx^-1y^-1.
struct ExteriorSquare {
  fp::GroupPtr source;
  fp::Presentation presentation;
  std::size_t simplified_generators = 0;
  std::size_t simplified_relators = 0;
  fp::GroupPtr realized;
  std::vector<Element> symbol;   // symbol index -> realized element
  std::vector<Element> id_bar;   // realized element -> source element
  std::vector<fp::Word> words;   // realized element -> word over symbol indices
  fp::AbelianRealization kernel; // ker(id_bar)
  fp::GroupPtr derived;          // [G,G] as its own table
  std::vector<Element> derived_embedding;

  Element symbol_of(Element x, Element y) const { return symbol[x * source->order() + y]; }
};

// Throws CapExceeded above kExteriorSquareMaxOrder, EnumerationOverflow when the
// enumeration does not close.
ExteriorSquare exterior_square(fp::GroupPtr g);
fp::GroupTable exterior_square_table(const ExteriorSquare& e);

// Exhaustive check of the defining relations and of id_bar.
bool check_relations(const ExteriorSquare& e);
bool id_bar_onto_derived(const ExteriorSquare& e);

fp::AbelianGroup miller_kernel(const ExteriorSquare& e);

// 1 -> H_2 -> G^G -> [G,G] -> 1
extensions::CentralExtension miller_extension(const ExteriorSquare& e);

// [s(x), s(y)] in the total group.
Element pi_bar(const extensions::CentralExtension& ext, const std::vector<Element>& section, Element x, Element y);
inline Element pi_bar(const extensions::CentralExtension& ext, Element x, Element y) {
  return pi_bar(ext, ext.section, x, y);
}
// pi_bar on every element of G^G; throws InconsistentExtension if the symbol
// values do not extend to a homomorphism.
std::vector<Element> pi_bar_map(const ExteriorSquare& e, const extensions::CentralExtension& ext);

// ker(id_bar) -> A, the restriction of pi_bar.
fp::AbelianHom h_of_extension(const ExteriorSquare& e, const extensions::CentralExtension& ext);

// Central extension of G by H_2 (coordinates of ker id_bar) with h = id.
extensions::CentralExtension schur_covering(const ExteriorSquare& e);

nlohmann::json summary(const ExteriorSquare& e);

}  // namespace stablab::extsq

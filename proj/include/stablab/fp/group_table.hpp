#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "stablab/fp/word.hpp"

namespace stablab::fp {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table. The identity is
/// always element 0. Generator images are optional; when present they realize
/// the generators of the presentation the table came from.
class GroupTable {
 public:
  GroupTable() = default;
  // Validates the Latin-square and identity properties and derives inverses.
  GroupTable(std::size_t order, std::vector<Element> mul, std::vector<Element> generators = {});

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::span<const Element> row(Element a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<Element>& mul_table() const { return mul_; }
  const std::vector<Element>& inverses() const { return inv_; }
  const std::vector<Element>& generators() const { return generators_; }

  Element commutator(Element a, Element b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Element power(Element a, long e) const;
  std::size_t element_order(Element a) const;
  Element evaluate(const Word& w) const;  // uses generators()

  bool is_abelian() const;
  bool check_associativity() const;

  // A deterministic generating set: the stored generator images when present,
  // otherwise chosen greedily.
  std::vector<Element> generating_set() const;

  // Shortlex-least words over the given generators (positive letters only) for
  // every element; index = element.
  std::vector<Word> transversal_words(std::span<const Element> gens) const;

 private:
  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Elements of the subgroup generated by `gens`, sorted ascending.
std::vector<Element> subgroup_closure(const GroupTable& g, std::span<const Element> gens);
std::vector<Element> commutator_subgroup(const GroupTable& g);
std::vector<Element> center(const GroupTable& g);
bool is_normal(const GroupTable& g, std::span<const Element> subgroup);

/// A subgroup realized as its own table together with the embedding.
struct Subgroup {
  GroupTable table;
  std::vector<Element> embedding;  // subgroup element -> ambient element
  std::vector<long> index_of;      // ambient element -> subgroup element or -1
};
Subgroup make_subgroup(const GroupTable& g, std::span<const Element> elements);

struct Quotient {
  GroupTable table;
  std::vector<Element> projection;  // ambient element -> quotient element
};
Quotient make_quotient(const GroupTable& g, std::span<const Element> normal_subgroup);

GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable cyclic_group(std::size_t n);

// Brute-force isomorphism search (intended for orders <= 64). Returns the image
// of every element of `a` in `b`, or empty when none exists.
std::vector<Element> find_isomorphism(const GroupTable& a, const GroupTable& b);
bool is_homomorphism(const GroupTable& a, const GroupTable& b, std::span<const Element> map);

}  // namespace stablab::fp

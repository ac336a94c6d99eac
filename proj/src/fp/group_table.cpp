#include "stablab/fp/group_table.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "stablab/error.hpp"

namespace stablab::fp {

GroupTable::GroupTable(std::size_t order, std::vector<Element> mul, std::vector<Element> generators)
    : order_(order), mul_(std::move(mul)), generators_(std::move(generators)) {
  if (order_ == 0) throw InvalidArgument("group order must be positive");
  if (mul_.size() != order_ * order_) throw InvalidArgument("multiplication table has wrong size");
  for (Element a = 0; a < order_; ++a) {
    if (this->mul(0, a) != a || this->mul(a, 0) != a) {
      throw InvalidArgument("element 0 is not a two-sided identity");
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order_; ++c) {
      const Element v = mul_[r * order_ + c];
      if (v >= order_ || seen[v]) throw InvalidArgument("multiplication table is not a Latin square");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order_; ++r) {
      const Element v = mul_[r * order_ + c];
      if (seen[v]) throw InvalidArgument("multiplication table is not a Latin square");
      seen[v] = 1;
    }
  }
  inv_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (this->mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
  }
  for (Element a = 0; a < order_; ++a) {
    if (this->mul(inv_[a], a) != 0) throw InvalidArgument("left and right inverses differ");
  }
  for (Element g : generators_) {
    if (g >= order_) throw InvalidArgument("generator image out of range");
  }
}

Element GroupTable::power(Element a, long e) const {
  Element base = e < 0 ? inv(a) : a;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Element result = 0;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(Element a) const {
  std::size_t k = 1;
  Element x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

Element GroupTable::evaluate(const Word& w) const {
  Element x = 0;
  for (const Letter& l : w) {
    if (l.generator >= generators_.size()) throw InvalidArgument("word uses a generator with no image");
    const Element g = generators_[l.generator];
    x = mul(x, l.sign > 0 ? g : inv(g));
  }
  return x;
}

bool GroupTable::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool GroupTable::check_associativity() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  return true;
}

std::vector<Element> GroupTable::generating_set() const {
  if (!generators_.empty()) return generators_;
  std::vector<Element> gens;
  std::vector<Element> current{0};
  while (current.size() < order_) {
    std::vector<char> member(order_, 0);
    for (Element e : current) member[e] = 1;
    Element best = 0;
    std::size_t best_size = 0;
    for (Element cand = 1; cand < order_; ++cand) {
      if (member[cand]) continue;
      if (order_ > 512) {
        best = cand;
        break;
      }
      gens.push_back(cand);
      const std::size_t size = subgroup_closure(*this, gens).size();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = cand;
      }
    }
    gens.push_back(best);
    current = subgroup_closure(*this, gens);
  }
  return gens;
}

std::vector<Word> GroupTable::transversal_words(std::span<const Element> gens) const {
  std::vector<Word> words(order_);
  std::vector<char> seen(order_, 0);
  std::deque<Element> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = mul(x, gens[j]);
      if (!seen[y]) {
        seen[y] = 1;
        words[y] = words[x] * Word::generator(static_cast<std::uint32_t>(j));
        queue.push_back(y);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvalidArgument("elements do not generate the group");
  }
  return words;
}

std::vector<Element> subgroup_closure(const GroupTable& g, std::span<const Element> gens) {
  std::vector<char> member(g.order(), 0);
  std::vector<Element> elems{0};
  member[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(elems[i], s);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Element> commutator_subgroup(const GroupTable& g) {
  std::vector<char> is_comm(g.order(), 0);
  std::vector<Element> comms;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = g.commutator(a, b);
      if (!is_comm[c]) {
        is_comm[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return subgroup_closure(g, comms);
}

std::vector<Element> center(const GroupTable& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

bool is_normal(const GroupTable& g, std::span<const Element> subgroup) {
  std::vector<char> member(g.order(), 0);
  for (Element h : subgroup) member[h] = 1;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element h : subgroup) {
      if (!member[g.conjugate(x, h)]) return false;
    }
  }
  return true;
}

Subgroup make_subgroup(const GroupTable& g, std::span<const Element> elements) {
  Subgroup s;
  s.embedding.assign(elements.begin(), elements.end());
  std::sort(s.embedding.begin(), s.embedding.end());
  if (s.embedding.empty() || s.embedding.front() != 0) throw InvalidArgument("subgroup must contain the identity");
  s.index_of.assign(g.order(), -1);
  for (std::size_t i = 0; i < s.embedding.size(); ++i) s.index_of[s.embedding[i]] = static_cast<long>(i);
  const std::size_t n = s.embedding.size();
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long k = s.index_of[g.mul(s.embedding[i], s.embedding[j])];
      if (k < 0) throw InvalidArgument("element set is not closed under multiplication");
      mul[i * n + j] = static_cast<Element>(k);
    }
  }
  s.table = GroupTable(n, std::move(mul));
  return s;
}

Quotient make_quotient(const GroupTable& g, std::span<const Element> normal_subgroup) {
  if (!is_normal(g, normal_subgroup)) throw InvalidArgument("subgroup is not normal");
  Quotient q;
  const std::size_t unassigned = g.order();
  q.projection.assign(g.order(), static_cast<Element>(unassigned));
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (q.projection[x] != unassigned) continue;
    const auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element h : normal_subgroup) q.projection[g.mul(x, h)] = idx;
  }
  const std::size_t n = reps.size();
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = q.projection[g.mul(reps[i], reps[j])];
  }
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(q.projection[s]);
  q.table = GroupTable(n, std::move(mul), std::move(gens));
  return q;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  std::vector<Element> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element first = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const Element second = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      mul[x * n + y] = static_cast<Element>(first * nb + second);
    }
  }
  return GroupTable(n, std::move(mul));
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return GroupTable(n, std::move(mul), n > 1 ? std::vector<Element>{1} : std::vector<Element>{});
}

bool is_homomorphism(const GroupTable& a, const GroupTable& b, std::span<const Element> map) {
  if (map.size() != a.order()) return false;
  for (Element x = 0; x < a.order(); ++x) {
    for (Element y = 0; y < a.order(); ++y) {
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

std::vector<Element> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return {};
  const std::size_t n = a.order();
  // Order statistics must match.
  std::vector<std::size_t> oa(n), ob(n);
  for (Element x = 0; x < n; ++x) {
    oa[x] = a.element_order(x);
    ob[x] = b.element_order(x);
  }
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return {};
  }
  const GroupTable plain_a(n, a.mul_table());
  const std::vector<Element> gens = plain_a.generating_set();
  const std::vector<Word> words = plain_a.transversal_words(gens);
  // Order in which elements were reached, with (parent, generator) edges.
  std::vector<Element> parent(n, 0);
  std::vector<std::size_t> via(n, 0);
  std::vector<Element> bfs;
  {
    std::vector<char> seen(n, 0);
    bfs.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Element y = a.mul(bfs[i], gens[j]);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = bfs[i];
          via[y] = j;
          bfs.push_back(y);
        }
      }
    }
  }
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (Element y = 0; y < n; ++y) {
      if (ob[y] == oa[gens[j]]) candidates[j].push_back(y);
    }
  }
  std::vector<Element> images(gens.size());
  std::vector<Element> map(n);
  std::vector<char> used(n);
  auto try_images = [&]() -> bool {
    map[0] = 0;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const Element x = bfs[i];
      map[x] = b.mul(map[parent[x]], images[via[x]]);
    }
    std::fill(used.begin(), used.end(), 0);
    for (Element x = 0; x < n; ++x) {
      if (used[map[x]]) return false;
      used[map[x]] = 1;
    }
    for (Element x = 0; x < n; ++x) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (map[a.mul(x, gens[j])] != b.mul(map[x], images[j])) return false;
      }
    }
    return true;
  };
  std::vector<std::size_t> pos(gens.size(), 0);
  if (gens.empty()) return {0};
  for (const auto& c : candidates) {
    if (c.empty()) return {};
  }
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][pos[j]];
    if (try_images()) return map;
    std::size_t j = 0;
    while (j < gens.size() && ++pos[j] == candidates[j].size()) {
      pos[j] = 0;
      ++j;
    }
    if (j == gens.size()) return {};
  }
}

}  // namespace stablab::fp

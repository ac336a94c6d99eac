#include "stablab/fp/reidemeister_schreier.hpp"

#include "stablab/error.hpp"

namespace stablab::fp {

SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& ct) {
  const std::size_t n = ct.num_cosets;
  const std::size_t ng = p.num_generators();
  if (ct.num_generators != ng) throw NotClosed("coset table does not match the presentation");
  if (ct.table.size() != n * 2 * ng) throw NotClosed("coset table is incomplete");
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < 2 * ng; ++x) {
      const std::size_t y = ct.act(c, x);
      if (y >= n || ct.act(y, x ^ 1u) != c) throw NotClosed("coset action is not a permutation action");
    }
  // Breadth-first Schreier tree.
  std::vector<long> tree_parent(n, -1);
  std::vector<std::size_t> via(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order{0};
  SubgroupPresentation out;
  out.transversal.assign(n, Word());
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < 2 * ng; ++x) {
      const std::size_t y = ct.act(order[i], x);
      if (seen[y]) continue;
      seen[y] = 1;
      tree_parent[y] = static_cast<long>(order[i]);
      via[y] = x;
      out.transversal[y] = out.transversal[order[i]] * Word({Letter::from_column(x)});
      order.push_back(y);
    }
  }
  if (order.size() != n) throw NotClosed("coset action is not transitive");
  // Schreier generator index for each (coset, positive generator), -1 on tree edges.
  std::vector<long> gen_id(n * ng, -1);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t g = 0; g < ng; ++g) {
      const std::size_t y = ct.act(c, 2 * g);
      const bool tree = (tree_parent[y] == static_cast<long>(c) && via[y] == 2 * g) ||
                        (tree_parent[c] == static_cast<long>(y) && via[c] == 2 * g + 1);
      if (tree) continue;
      gen_id[c * ng + g] = static_cast<long>(names.size());
      names.push_back(p.generator_names()[g] + "_" + std::to_string(c));
      out.generator_words.push_back(out.transversal[c] * Word::generator(static_cast<std::uint32_t>(g)) *
                                    out.transversal[y].inverse());
    }
  }
  std::vector<Word> rels;
  for (std::size_t c = 0; c < n; ++c) {
    for (const Word& r : p.relators()) {
      std::vector<Letter> letters;
      std::size_t a = c;
      for (const Letter& l : r) {
        if (l.sign > 0) {
          const long id = gen_id[a * ng + l.generator];
          if (id >= 0) letters.push_back({static_cast<std::uint32_t>(id), 1});
          a = ct.act(a, l.column());
        } else {
          const std::size_t b = ct.act(a, l.column());
          const long id = gen_id[b * ng + l.generator];
          if (id >= 0) letters.push_back({static_cast<std::uint32_t>(id), -1});
          a = b;
        }
      }
      if (a != c) throw NotClosed("relator does not close in the coset action");
      Word w(std::move(letters));
      if (!w.empty()) rels.push_back(std::move(w));
    }
  }
  out.presentation = Presentation(std::move(names), std::move(rels), p.name() + "_sub");
  return out;
}

}  // namespace stablab::fp

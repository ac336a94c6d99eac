#include "stablab/fp/tietze.hpp"

#include <algorithm>
#include <set>

namespace stablab::fp {

namespace {

// Least rotation of r or r^-1, so conjugate/inverse relators compare equal.
std::vector<Letter> canonical(const Word& w) {
  const Word r = w.cyclically_reduced();
  std::vector<Letter> best;
  bool have = false;
  for (const Word& v : {r, r.inverse().cyclically_reduced()}) {
    const auto letters = std::vector<Letter>(v.begin(), v.end());
    for (std::size_t s = 0; s < letters.size(); ++s) {
      std::vector<Letter> rot(letters.begin() + static_cast<long>(s), letters.end());
      rot.insert(rot.end(), letters.begin(), letters.begin() + static_cast<long>(s));
      if (!have || rot < best) {
        best = rot;
        have = true;
      }
    }
  }
  return best;
}

Word substitute(const Word& w, std::uint32_t g, const Word& value) {
  bool uses = false;
  for (const Letter& l : w)
    if (l.generator == g) {
      uses = true;
      break;
    }
  if (!uses) return w;
  std::vector<Letter> out;
  const Word inv = value.inverse();
  for (const Letter& l : w) {
    if (l.generator != g) {
      out.push_back(l);
    } else {
      const Word& v = l.sign > 0 ? value : inv;
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return Word(std::move(out));
}

class Simplifier {
 public:
  Simplifier(const Presentation& p, long max_growth) : p_(p), max_growth_(max_growth) {
    alive_.assign(p.num_generators(), 1);
    for (std::uint32_t g = 0; g < p.num_generators(); ++g) images_.push_back(Word::generator(g));
    rels_ = p.relators();
  }

  TietzeResult run() {
    cleanup();
    while (true) {
      if (eliminate_short()) continue;
      if (eliminate_single_occurrence()) continue;
      break;
    }
    return finish();
  }

 private:
  void cleanup() {
    std::set<std::vector<Letter>> seen;
    std::vector<Word> kept;
    for (const Word& r : rels_) {
      auto c = canonical(r);
      if (c.empty()) continue;
      if (seen.insert(c).second) kept.push_back(Word(std::move(c)));
    }
    rels_ = std::move(kept);
  }

  void eliminate(std::uint32_t g, const Word& value) {
    for (Word& r : rels_) r = substitute(r, g, value);
    for (Word& im : images_) im = substitute(im, g, value);
    alive_[g] = 0;
  }

  // Relators of length 1 kill a generator; length 2 with distinct generators
  // identify one with a power of the other.
  bool eliminate_short() {
    bool any = false;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      const Word r = rels_[i].cyclically_reduced();
      if (r.size() == 1) {
        eliminate(r[0].generator, Word());
        any = true;
      } else if (r.size() == 2 && r[0].generator != r[1].generator) {
        // x^a y^b = 1 with x the larger index: x = (y^-b)^a.
        Letter x = r[0], y = r[1];
        if (x.generator < y.generator) std::swap(x, y);
        const Word value = Word({y.inverse()}).pow(x.sign);
        eliminate(x.generator, value);
        any = true;
      }
    }
    if (any) cleanup();
    return any;
  }

  bool eliminate_single_occurrence() {
    std::vector<long> occurrences(p_.num_generators(), 0);
    for (const Word& r : rels_) {
      for (const Letter& l : r) ++occurrences[l.generator];
    }
    // Shortest relator first; within it, the generator with fewest occurrences.
    std::vector<std::size_t> order(rels_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rels_[a].size() < rels_[b].size(); });
    for (std::size_t idx : order) {
      const Word& r = rels_[idx];
      long best_growth = 0;
      std::size_t best_pos = r.size();
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const std::uint32_t g = r[pos].generator;
        long count = 0;
        for (const Letter& l : r) count += l.generator == g;
        if (count != 1) continue;
        const long len = static_cast<long>(r.size());
        const long growth = (occurrences[g] - 1) * (len - 2) - len;
        if (growth <= max_growth_ && (best_pos == r.size() || growth < best_growth)) {
          best_growth = growth;
          best_pos = pos;
        }
      }
      if (best_pos == r.size()) continue;
      // Rotate so the generator leads: g^e t = 1, so g = t^-e.
      std::vector<Letter> rot(r.begin() + static_cast<long>(best_pos), r.end());
      rot.insert(rot.end(), r.begin(), r.begin() + static_cast<long>(best_pos));
      const Letter lead = rot.front();
      const Word tail(std::vector<Letter>(rot.begin() + 1, rot.end()));
      const Word value = lead.sign > 0 ? tail.inverse() : tail;
      eliminate(lead.generator, value);
      cleanup();
      return true;
    }
    return false;
  }

  TietzeResult finish() {
    std::vector<std::uint32_t> renum(p_.num_generators(), 0);
    std::vector<std::string> names;
    for (std::uint32_t g = 0; g < p_.num_generators(); ++g) {
      if (!alive_[g]) continue;
      renum[g] = static_cast<std::uint32_t>(names.size());
      names.push_back(p_.generator_names()[g]);
    }
    auto rename = [&](const Word& w) {
      std::vector<Letter> out;
      for (const Letter& l : w) out.push_back({renum[l.generator], l.sign});
      return Word(std::move(out));
    };
    TietzeResult res;
    std::vector<Word> rels;
    for (const Word& r : rels_) rels.push_back(rename(r));
    res.presentation = Presentation(std::move(names), std::move(rels), p_.name());
    for (const Word& im : images_) res.generator_images.push_back(rename(im));
    return res;
  }

  const Presentation& p_;
  long max_growth_;
  std::vector<char> alive_;
  std::vector<Word> images_;
  std::vector<Word> rels_;
};

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, long max_growth) { return Simplifier(p, max_growth).run(); }

}  // namespace stablab::fp

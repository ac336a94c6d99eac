#include "stablab/fp/coset_enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "stablab/error.hpp"

namespace stablab::fp {

std::uint32_t CosetTable::act(std::size_t coset, const Word& w) const {
  std::size_t c = coset;
  for (const Letter& l : w) c = act(c, l.column());
  return static_cast<std::uint32_t>(c);
}

namespace {

constexpr std::int32_t kUndef = -1;

inline std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : cols_(2 * p.num_generators()), max_cosets_(max_cosets) {
    if (max_cosets_ < 1) throw InvalidArgument("max_cosets must be at least 1");
    // All cyclic conjugates of relators and their inverses, grouped by first column.
    std::set<std::vector<std::uint32_t>> seen;
    by_column_.assign(cols_, {});
    for (const Word& r0 : p.relators()) {
      const Word r = r0.cyclically_reduced();
      if (r.empty()) continue;
      for (const Word& w : {r, r.inverse()}) {
        std::vector<std::uint32_t> cols;
        for (const Letter& l : w) cols.push_back(static_cast<std::uint32_t>(l.column()));
        for (std::size_t s = 0; s < cols.size(); ++s) {
          std::vector<std::uint32_t> rot(cols.begin() + static_cast<long>(s), cols.end());
          rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<long>(s));
          if (seen.insert(rot).second) by_column_[rot[0]].push_back(rot);
        }
      }
    }
    new_coset();
  }

  CosetTable run(const std::vector<Word>& subgroup_words) {
    for (const Word& w : subgroup_words) {
      std::vector<std::uint32_t> cols;
      for (const Letter& l : w) cols.push_back(static_cast<std::uint32_t>(l.column()));
      if (cols.empty()) continue;
      scan_and_fill(0, cols);
      process_deductions();
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < parent_.size(); ++a) {
        if (!alive(a)) continue;
        for (std::size_t x = 0; x < cols_; ++x) {
          if (!alive(a)) break;
          if (entry(a, x) == kUndef) {
            if (parent_.size() > 4 * max_cosets_ + 4096) a = compact(a);
            define(a, x);
            process_deductions();
            changed = true;
          }
        }
      }
    }
    return standardize();
  }

 private:
  bool alive(std::size_t a) const { return parent_[a] == static_cast<std::int32_t>(a); }
  std::int32_t& entry(std::size_t a, std::size_t x) { return table_[a * cols_ + x]; }

  std::size_t new_coset() {
    if (live_ >= max_cosets_) {
      throw EnumerationOverflow("coset enumeration exceeded " + std::to_string(max_cosets_) + " cosets");
    }
    const std::size_t a = parent_.size();
    parent_.push_back(static_cast<std::int32_t>(a));
    table_.resize(table_.size() + cols_, kUndef);
    ++live_;
    return a;
  }

  void define(std::size_t a, std::size_t x) {
    const std::size_t b = new_coset();
    entry(a, x) = static_cast<std::int32_t>(b);
    entry(b, inverse_column(x)) = static_cast<std::int32_t>(a);
    deductions_.push_back({a, x});
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (parent_[r] != static_cast<std::int32_t>(r)) r = static_cast<std::size_t>(parent_[r]);
    while (parent_[k] != static_cast<std::int32_t>(r)) {
      const std::size_t next = static_cast<std::size_t>(parent_[k]);
      parent_[k] = static_cast<std::int32_t>(r);
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
    const std::size_t phi = rep(k);
    const std::size_t psi = rep(l);
    if (phi == psi) return;
    const std::size_t mu = std::min(phi, psi);
    const std::size_t nu = std::max(phi, psi);
    parent_[nu] = static_cast<std::int32_t>(mu);
    --live_;
    queue.push_back(nu);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t g = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t d = entry(g, x);
        if (d == kUndef) continue;
        const std::size_t xi = inverse_column(x);
        if (entry(static_cast<std::size_t>(d), xi) == static_cast<std::int32_t>(g)) {
          entry(static_cast<std::size_t>(d), xi) = kUndef;
        }
        const std::size_t mu = rep(g);
        const std::size_t nu = rep(static_cast<std::size_t>(d));
        if (entry(mu, x) != kUndef) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)), queue);
        } else if (entry(nu, xi) != kUndef) {
          merge(mu, static_cast<std::size_t>(entry(nu, xi)), queue);
        } else {
          entry(mu, x) = static_cast<std::int32_t>(nu);
          entry(nu, xi) = static_cast<std::int32_t>(mu);
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  // Scans w from coset a in both directions; fills a single gap by deduction.
  void scan(std::size_t a, const std::vector<std::uint32_t>& w) {
    std::size_t f = a;
    std::size_t b = a;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    while (i < j && entry(f, w[i]) != kUndef) f = static_cast<std::size_t>(entry(f, w[i++]));
    if (i == j) {
      if (f != a) coincidence(f, a);
      return;
    }
    while (j > i && entry(b, inverse_column(w[j - 1])) != kUndef) {
      b = static_cast<std::size_t>(entry(b, inverse_column(w[j - 1])));
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      entry(f, w[i]) = static_cast<std::int32_t>(b);
      entry(b, inverse_column(w[i])) = static_cast<std::int32_t>(f);
      deductions_.push_back({f, w[i]});
    }
  }

  void scan_and_fill(std::size_t a, const std::vector<std::uint32_t>& w) {
    while (true) {
      std::size_t f = a;
      std::size_t b = a;
      std::size_t i = 0;
      std::size_t j = w.size();
      while (i < j && entry(f, w[i]) != kUndef) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == j) {
        if (f != a) coincidence(f, a);
        return;
      }
      while (j > i && entry(b, inverse_column(w[j - 1])) != kUndef) {
        b = static_cast<std::size_t>(entry(b, inverse_column(w[j - 1])));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = static_cast<std::int32_t>(b);
        entry(b, inverse_column(w[i])) = static_cast<std::int32_t>(f);
        deductions_.push_back({f, w[i]});
        return;
      }
      define(f, w[i]);
      process_deductions();
      a = rep(a);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(a) || entry(a, x) == kUndef) continue;
      for (const auto& w : by_column_[x]) {
        if (!alive(a)) break;
        scan(a, w);
      }
      if (!alive(a) || entry(a, x) == kUndef) continue;
      const std::size_t b = static_cast<std::size_t>(entry(a, x));
      const std::size_t xi = inverse_column(x);
      for (const auto& w : by_column_[xi]) {
        if (!alive(b)) break;
        scan(b, w);
      }
    }
  }

  // Renumbers live cosets densely; returns the new index of `current`.
  std::size_t compact(std::size_t current) {
    std::vector<std::int32_t> renum(parent_.size(), kUndef);
    std::size_t n = 0;
    for (std::size_t a = 0; a < parent_.size(); ++a) {
      if (alive(a)) renum[a] = static_cast<std::int32_t>(n++);
    }
    std::vector<std::int32_t> table(n * cols_, kUndef);
    for (std::size_t a = 0; a < parent_.size(); ++a) {
      if (!alive(a)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t v = entry(a, x);
        table[static_cast<std::size_t>(renum[a]) * cols_ + x] = v == kUndef ? kUndef : renum[static_cast<std::size_t>(v)];
      }
    }
    table_ = std::move(table);
    parent_.resize(n);
    for (std::size_t a = 0; a < n; ++a) parent_[a] = static_cast<std::int32_t>(a);
    return static_cast<std::size_t>(renum[current]);
  }

  CosetTable standardize() {
    std::vector<std::int32_t> renum(parent_.size(), kUndef);
    std::vector<std::size_t> order{0};
    renum[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t v = entry(order[i], x);
        if (v == kUndef) throw NotClosed("coset table incomplete after enumeration");
        if (renum[static_cast<std::size_t>(v)] == kUndef) {
          renum[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(order.size());
          order.push_back(static_cast<std::size_t>(v));
        }
      }
    }
    CosetTable ct;
    ct.num_cosets = order.size();
    ct.num_generators = cols_ / 2;
    ct.table.resize(ct.num_cosets * cols_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t x = 0; x < cols_; ++x) {
        ct.table[i * cols_ + x] = static_cast<std::uint32_t>(renum[static_cast<std::size_t>(entry(order[i], x))]);
      }
    }
    return ct;
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::size_t live_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::vector<std::vector<std::uint32_t>>> by_column_;
  std::vector<std::pair<std::size_t, std::size_t>> deductions_;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_words,
                           std::size_t max_cosets) {
  if (p.num_generators() == 0) {
    CosetTable ct;
    ct.num_cosets = 1;
    return ct;
  }
  Enumerator e(p, max_cosets);
  CosetTable ct = e.run(subgroup_words);
  // Every relator must close at every coset.
  for (std::size_t c = 0; c < ct.num_cosets; ++c) {
    for (const Word& r : p.relators()) {
      if (ct.act(c, r) != c) throw NotClosed("relator does not close in the coset table");
    }
  }
  return ct;
}

GroupTable enumerate_group(const Presentation& p, std::size_t max_cosets, std::size_t max_order) {
  const CosetTable ct = coset_enumerate(p, {}, max_cosets);
  const std::size_t n = ct.num_cosets;
  if (n > max_order) {
    throw CapExceeded("group of order " + std::to_string(n) + " exceeds the order cap " + std::to_string(max_order));
  }
  // BFS tree: element b = parent(b) * letter(b).
  std::vector<std::size_t> parent(n, 0), via(n, 0);
  std::vector<std::size_t> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < ct.columns(); ++x) {
      const std::size_t y = ct.act(order[i], x);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        via[y] = x;
        order.push_back(y);
      }
    }
  }
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    mul[a * n] = static_cast<Element>(a);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const std::size_t b = order[i];
      mul[a * n + b] = ct.act(mul[a * n + parent[b]], via[b]);
    }
  }
  std::vector<Element> gens;
  for (std::size_t g = 0; g < p.num_generators(); ++g) gens.push_back(n == 1 ? 0 : ct.act(0, 2 * g));
  GroupTable table(n, std::move(mul), std::move(gens));
  for (const Word& r : p.relators()) {
    if (table.evaluate(r) != 0) throw NotClosed("relator does not evaluate to the identity");
  }
  return table;
}

CosetTable coset_table_of(const GroupTable& g, const std::vector<Element>& generator_images,
                          const std::vector<Element>& subgroup) {
  const std::size_t n = g.order();
  // Right cosets H x; label each element with its coset id in BFS order.
  std::vector<std::int64_t> coset_of(n, -1);
  std::vector<Element> reps;
  auto add_coset = [&](Element x) {
    const auto id = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
    for (Element h : subgroup) coset_of[g.mul(h, x)] = id;
  };
  add_coset(0);
  const std::size_t cols = 2 * generator_images.size();
  CosetTable ct;
  ct.num_generators = generator_images.size();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Element s = generator_images[c / 2];
      const Element y = g.mul(reps[i], c % 2 ? g.inv(s) : s);
      if (coset_of[y] < 0) add_coset(y);
      ct.table.push_back(static_cast<std::uint32_t>(coset_of[y]));
    }
  }
  ct.num_cosets = reps.size();
  for (std::int64_t c : coset_of) {
    if (c < 0) throw NotClosed("generator images do not generate the group");
  }
  return ct;
}

}  // namespace stablab::fp

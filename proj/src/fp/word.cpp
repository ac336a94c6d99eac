#include "stablab/fp/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace stablab::fp {

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(std::move(letters))) {}

Word Word::generator(std::uint32_t g, int exponent) {
  std::vector<Letter> ls(static_cast<std::size_t>(std::abs(exponent)),
                         Letter{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)});
  return Word(std::move(ls));
}

Word Word::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) ls.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(ls);  // inverse of a reduced word is reduced
  return w;
}

Word Word::pow(long exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  std::vector<Letter> ls;
  for (long i = 0; i < std::abs(exponent); ++i) {
    ls.insert(ls.end(), base.letters_.begin(), base.letters_.end());
  }
  return Word(std::move(ls));
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<long>(lo), letters_.begin() + static_cast<long>(hi));
  return w;
}

std::vector<long> Word::exponent_sums(std::size_t num_generators) const {
  std::vector<long> sums(num_generators, 0);
  for (const Letter& l : letters_) sums.at(l.generator) += l.sign;
  return sums;
}

std::uint32_t Word::max_generator() const {
  std::uint32_t m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> ls(a.letters_);
  ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(ls));
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

std::string to_string(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    const auto g = w[i].generator;
    out += g < names.size() ? names[g] : "x" + std::to_string(g);
    const long e = static_cast<long>(j - i) * w[i].sign;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace stablab::fp

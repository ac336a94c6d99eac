#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stablab::fp {

// One generator raised to +1 or -1.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;

  Letter inverse() const { return {generator, static_cast<std::int8_t>(-sign)}; }
  // Column of a coset table: 2g for g, 2g+1 for g^-1.
  std::size_t column() const { return 2 * generator + (sign < 0 ? 1 : 0); }
  static Letter from_column(std::size_t col) {
    return {static_cast<std::uint32_t>(col / 2), static_cast<std::int8_t>(col % 2 ? -1 : 1)};
  }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (a.generator != b.generator) return a.generator <=> b.generator;
    return b.sign <=> a.sign;  // g before g^-1
  }
};

/// An element of a free group, always stored freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  static Word generator(std::uint32_t g, int exponent = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word pow(long exponent) const;
  // Conjugates by cyclic permutation until no cancellation between the ends.
  Word cyclically_reduced() const;
  // Exponent sum of every generator; vector of length num_generators.
  std::vector<long> exponent_sums(std::size_t num_generators) const;
  std::uint32_t max_generator() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word commutator(const Word& x, const Word& y);  // x y x^-1 y^-1

// Free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::vector<Letter> letters);

std::string to_string(const Word& w, std::span<const std::string> names);

}  // namespace stablab::fp

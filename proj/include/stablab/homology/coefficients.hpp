#pragma once

#include <string>

#include "stablab/fp/abelian_group.hpp"

namespace stablab::homology {

/// Trivial-action coefficient module: a finite abelian group, a prime field, or Q.
struct CoefficientModule {
  enum class Kind { FiniteAbelian, PrimeField, Rationals };

  Kind kind = Kind::FiniteAbelian;
  fp::AbelianGroup group;  // for FiniteAbelian and PrimeField (Z/p)
  long p = 0;              // for PrimeField

  static CoefficientModule finite(const std::vector<long>& cyclic_orders);
  static CoefficientModule prime_field(long p);
  static CoefficientModule rationals();
  // "Z/2", "Z/2+Z/4", "F_3", "Q"
  static CoefficientModule parse(const std::string& text);

  bool is_field() const { return kind != Kind::FiniteAbelian; }
  bool is_finite() const { return kind != Kind::Rationals; }
  std::string to_string() const;
};

bool is_prime(long n);

}  // namespace stablab::homology

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace stablab::symspace {

/// Coefficient i is dim H^i(M, Q).
struct PoincarePolynomial {
  std::vector<long> coefficients;

  std::size_t degree() const;  // top nonzero degree
  long at(std::size_t i) const { return i < coefficients.size() ? coefficients[i] : 0; }
  bool is_palindromic() const;
  long euler_characteristic() const;
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&);
};

struct SymmetricSpaceEntry {
  enum class Kind { Sphere, Exterior, Explicit };
  std::string name;
  std::string group;  // noncompact group whose dual this is
  std::size_t dimension = 0;
  Kind kind = Kind::Sphere;
  std::vector<long> data;  // generator degrees or coefficients
  long euler = 0;
};

/// Entries are cross-checked when loaded (dimension against generator degrees
/// and the SL_n(R) formula, top degree, palindromy, Euler characteristic);
/// a failing entry makes the load throw.
class Catalog {
 public:
  static Catalog load(const std::string& path);
  static const Catalog& builtin();  // data/symspace/catalog.txt

  const std::vector<SymmetricSpaceEntry>& entries() const { return entries_; }
  const SymmetricSpaceEntry& find(const std::string& name) const;  // UnknownEntry

 private:
  std::vector<SymmetricSpaceEntry> entries_;
};

PoincarePolynomial poincare_polynomial(const SymmetricSpaceEntry& entry);
PoincarePolynomial kunneth_product(const PoincarePolynomial& p, const PoincarePolynomial& q);

// Throws DualityViolation unless p is palindromic with top degree dim.
bool is_odd_rational_homology_sphere(const PoincarePolynomial& p, std::size_t dim);

struct VerdictReport {
  std::vector<std::string> factors;
  std::vector<std::string> groups;
  PoincarePolynomial product;
  std::vector<std::size_t> even_degrees;  // positive even degrees with nonzero coefficient
  bool not_operator_stable = false;
  std::string verdict;
  std::vector<std::string> mirrors;  // which argument steps the computation stands in for
};
VerdictReport instability_verdict(const std::vector<std::string>& factors, const Catalog& catalog = Catalog::builtin());

// Names whose singleton verdict is the exception case.
std::vector<std::string> exception_entries(const Catalog& catalog);

nlohmann::json to_json(const VerdictReport& r);

}  // namespace stablab::symspace

#include "stablab/homology/coefficients.hpp"

#include <sstream>

#include "stablab/error.hpp"

namespace stablab::homology {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientModule CoefficientModule::finite(const std::vector<long>& cyclic_orders) {
  for (long o : cyclic_orders)
    if (o < 1) throw InvalidArgument("finite coefficient module needs positive cyclic orders");
  CoefficientModule m;
  m.kind = Kind::FiniteAbelian;
  m.group = fp::AbelianGroup::from_cyclic_orders(cyclic_orders);
  return m;
}

CoefficientModule CoefficientModule::prime_field(long p) {
  if (!is_prime(p)) throw InvalidArgument("F_p needs a prime p, got " + std::to_string(p));
  CoefficientModule m;
  m.kind = Kind::PrimeField;
  m.p = p;
  m.group = fp::AbelianGroup::from_cyclic_orders({p});
  return m;
}

CoefficientModule CoefficientModule::rationals() {
  CoefficientModule m;
  m.kind = Kind::Rationals;
  return m;
}

CoefficientModule CoefficientModule::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q") return rationals();
  auto read_int = [&](const std::string& digits) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad coefficient module '" + text + "'");
    }
    return std::stol(digits);
  };
  if (s.rfind("F_", 0) == 0) return prime_field(read_int(s.substr(2)));
  std::vector<long> orders;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.rfind("Z/", 0) != 0) throw ParseError("bad coefficient module '" + text + "'");
    orders.push_back(read_int(part.substr(2)));
  }
  if (orders.empty()) throw ParseError("bad coefficient module '" + text + "'");
  return finite(orders);
}

std::string CoefficientModule::to_string() const {
  switch (kind) {
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F_" + std::to_string(p);
    case Kind::FiniteAbelian:
      break;
  }
  if (group.is_trivial()) return "0";
  std::string out;
  for (long f : group.invariant_factors()) out += (out.empty() ? "" : "+") + std::string("Z/") + std::to_string(f);
  return out;
}

}  // namespace stablab::homology

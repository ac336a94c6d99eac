#include "stablab/symspace/symspace.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "stablab/error.hpp"

namespace stablab::symspace {

std::size_t PoincarePolynomial::degree() const {
  for (std::size_t i = coefficients.size(); i-- > 0;)
    if (coefficients[i] != 0) return i;
  return 0;
}

bool PoincarePolynomial::is_palindromic() const {
  const std::size_t d = degree();
  for (std::size_t i = 0; i <= d; ++i)
    if (at(i) != at(d - i)) return false;
  return true;
}

long PoincarePolynomial::euler_characteristic() const {
  long s = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) s += i % 2 ? -coefficients[i] : coefficients[i];
  return s;
}

bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  const std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

PoincarePolynomial kunneth_product(const PoincarePolynomial& p, const PoincarePolynomial& q) {
  PoincarePolynomial r;
  if (p.coefficients.empty() || q.coefficients.empty()) return r;
  r.coefficients.assign(p.coefficients.size() + q.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < p.coefficients.size(); ++i)
    for (std::size_t j = 0; j < q.coefficients.size(); ++j) r.coefficients[i + j] += p.coefficients[i] * q.coefficients[j];
  while (r.coefficients.size() > 1 && r.coefficients.back() == 0) r.coefficients.pop_back();
  return r;
}

PoincarePolynomial poincare_polynomial(const SymmetricSpaceEntry& e) {
  PoincarePolynomial p;
  switch (e.kind) {
    case SymmetricSpaceEntry::Kind::Sphere:
      p.coefficients.assign(e.dimension + 1, 0);
      p.coefficients.front() = 1;
      p.coefficients.back() += 1;
      return p;
    case SymmetricSpaceEntry::Kind::Exterior:
      p.coefficients = {1};
      for (long d : e.data) {
        PoincarePolynomial f;
        f.coefficients.assign(static_cast<std::size_t>(d) + 1, 0);
        f.coefficients.front() = 1;
        f.coefficients.back() = 1;
        p = kunneth_product(p, f);
      }
      return p;
    case SymmetricSpaceEntry::Kind::Explicit:
      p.coefficients = e.data;
      return p;
  }
  return p;
}

namespace {

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  if (s == "-") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

void validate(const SymmetricSpaceEntry& e) {
  const PoincarePolynomial p = poincare_polynomial(e);
  auto fail = [&](const std::string& why) { throw InvalidArgument("catalog entry " + e.name + ": " + why); };
  if (e.kind == SymmetricSpaceEntry::Kind::Exterior) {
    long sum = 0;
    for (std::size_t i = 0; i < e.data.size(); ++i) {
      if (e.data[i] <= 0 || (i > 0 && e.data[i] <= e.data[i - 1])) fail("generator degrees must increase");
      sum += e.data[i];
    }
    if (static_cast<std::size_t>(sum) != e.dimension) fail("dimension is not the sum of generator degrees");
  }
  static const std::regex sl_real(R"(SL(\d+)\(R\))");
  std::smatch m;
  if (std::regex_match(e.group, m, sl_real)) {
    const long n = std::stol(m[1]);
    if (static_cast<long>(e.dimension) != (n - 1) * (n + 2) / 2) fail("dimension differs from (n-1)(n+2)/2");
  }
  if (p.at(0) != 1) fail("H^0 must be one-dimensional");
  if (p.degree() != e.dimension) fail("top degree differs from the dimension");
  if (!p.is_palindromic()) fail("Poincare polynomial is not palindromic");
  if (p.euler_characteristic() != e.euler) fail("Euler characteristic mismatch");
  if (e.dimension % 2 == 1 && e.euler != 0) fail("odd-dimensional entry with nonzero Euler characteristic");
}

}  // namespace

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog " + path);
  Catalog c;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    SymmetricSpaceEntry e;
    std::string kind, data;
    if (!(ls >> e.name)) continue;
    if (!(ls >> e.group >> e.dimension >> kind >> data >> e.euler)) throw ParseError("malformed catalog line: " + line);
    if (kind == "sphere") {
      e.kind = SymmetricSpaceEntry::Kind::Sphere;
    } else if (kind == "exterior") {
      e.kind = SymmetricSpaceEntry::Kind::Exterior;
    } else if (kind == "poly") {
      e.kind = SymmetricSpaceEntry::Kind::Explicit;
    } else {
      throw ParseError("unknown catalog kind '" + kind + "'");
    }
    e.data = parse_list(data);
    validate(e);
    c.entries_.push_back(std::move(e));
  }
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog c = load(std::string(STABLAB_DATA_DIR) + "/symspace/catalog.txt");
  return c;
}

const SymmetricSpaceEntry& Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

bool is_odd_rational_homology_sphere(const PoincarePolynomial& p, std::size_t dim) {
  if (p.degree() != dim || !p.is_palindromic() || p.at(0) != 1)
    throw DualityViolation("Poincare polynomial is not palindromic of top degree " + std::to_string(dim));
  PoincarePolynomial sphere;
  sphere.coefficients.assign(dim + 1, 0);
  sphere.coefficients.front() = 1;
  sphere.coefficients.back() += 1;
  const bool direct = dim % 2 == 1 && p == sphere;
  bool even_vanish = true;
  for (std::size_t i = 2; i <= dim; i += 2) even_vanish &= p.at(i) == 0;
  if (direct != even_vanish) throw DualityViolation("sphere test and even-degree test disagree");
  return direct;
}

VerdictReport instability_verdict(const std::vector<std::string>& factors, const Catalog& catalog) {
  if (factors.empty()) throw InvalidArgument("verdict needs at least one factor");
  VerdictReport r;
  r.product.coefficients = {1};
  for (const auto& name : factors) {
    const auto& e = catalog.find(name);
    r.factors.push_back(e.name);
    r.groups.push_back(e.group);
    r.product = kunneth_product(r.product, poincare_polynomial(e));
  }
  for (std::size_t i = 2; i < r.product.coefficients.size(); i += 2)
    if (r.product.coefficients[i] != 0) r.even_degrees.push_back(i);
  r.not_operator_stable = !r.even_degrees.empty();
  r.verdict = r.not_operator_stable ? "not operator stable" : "exception case";
  r.mirrors = {"continuous cohomology of G read from the compact dual (Matsushima injection into lattice cohomology)",
               "product of factors by Kunneth",
               "nonzero even positive degree rules out an odd rational homology sphere"};
  return r;
}

std::vector<std::string> exception_entries(const Catalog& catalog) {
  std::vector<std::string> out;
  for (const auto& e : catalog.entries())
    if (!instability_verdict({e.name}, catalog).not_operator_stable) out.push_back(e.name);
  return out;
}

nlohmann::json to_json(const VerdictReport& r) {
  return {{"factors", r.factors},
          {"groups", r.groups},
          {"poincare", r.product.coefficients},
          {"even_degrees", r.even_degrees},
          {"verdict", r.verdict},
          {"not_operator_stable", r.not_operator_stable},
          {"mirrors", r.mirrors}};
}

}  // namespace stablab::symspace

#include "stablab/homology/cohomology.hpp"

#include "stablab/error.hpp"
#include "stablab/homology/bar_complex.hpp"

namespace stablab::homology {

CohomologyGroup cohomology(const fp::GroupTable& g, const CoefficientModule& m, int degree) {
  if (degree < 0 || degree > 3) throw InvalidArgument("cohomology degree must be 0..3");
  CohomologyGroup out;
  out.degree = degree;
  out.module = m;
  if (m.kind == CoefficientModule::Kind::Rationals) {
    out.dimension = bar_rational_dimension(g, degree);
    return out;
  }
  BarCohomology h(g, m.group, degree);
  out.value = h.group();
  out.dimension = out.value.rank();
  for (std::size_t i = 0; i < out.value.rank(); ++i) {
    AVec e = out.value.zero();
    e[i] = 1;
    out.representatives.push_back(h.representative(e));
  }
  return out;
}

bool is_bar_cocycle(const fp::GroupTable& g, const fp::AbelianGroup& k, int degree,
                    const std::vector<AVec>& table) {
  const std::size_t n = g.order();
  std::size_t total = 1;
  for (int i = 0; i < degree; ++i) total *= n;
  if (table.size() != total) return false;
  // (df)(g_0..g_d) = f(g_1..g_d) + sum (-1)^i f(..g_{i-1}g_i..) + (-1)^(d+1) f(g_0..g_{d-1})
  std::vector<fp::Element> t(static_cast<std::size_t>(degree) + 1, 0);
  auto index = [&](const std::vector<fp::Element>& v) {
    std::size_t idx = 0;
    for (fp::Element e : v) idx = idx * n + e;
    return idx;
  };
  std::size_t count = total * n;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t r = c;
    for (int i = degree; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<fp::Element>(r % n);
      r /= n;
    }
    AVec sum = k.zero();
    std::vector<fp::Element> face(t.begin() + 1, t.end());
    sum = k.add(sum, table[index(face)]);
    for (int i = 1; i <= degree; ++i) {
      face.clear();
      for (int j = 0; j <= degree; ++j) {
        if (j == i - 1) {
          face.push_back(g.mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j + 1)]));
          ++j;
        } else {
          face.push_back(t[static_cast<std::size_t>(j)]);
        }
      }
      const AVec& v = table[index(face)];
      sum = k.add(sum, i % 2 ? k.neg(v) : v);
    }
    face.assign(t.begin(), t.end() - 1);
    const AVec& v = table[index(face)];
    sum = k.add(sum, (degree + 1) % 2 ? k.neg(v) : v);
    if (!k.is_zero(sum)) return false;
  }
  return true;
}

nlohmann::json to_json(const CohomologyGroup& h) {
  nlohmann::json j;
  j["degree"] = h.degree;
  j["coefficients"] = h.module.to_string();
  if (h.module.kind == CoefficientModule::Kind::Rationals) {
    j["invariant_factors"] = nlohmann::json::array();
    j["dimension"] = h.dimension;
  } else {
    j["invariant_factors"] = h.value.invariant_factors();
    if (h.module.is_field()) j["dimension"] = h.dimension;
  }
  j["representative_count"] = h.representatives.size();
  return j;
}

}  // namespace stablab::homology

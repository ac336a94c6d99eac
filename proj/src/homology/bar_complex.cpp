#include "stablab/homology/bar_complex.hpp"

#include "stablab/error.hpp"

namespace stablab::homology {

using fp::Element;

std::size_t BarComplex::cells(int degree) const {
  std::size_t n = 1;
  for (int i = 0; i < degree; ++i) n *= g_.order() - 1;
  return n;
}

std::size_t BarComplex::cell_index(const std::vector<Element>& tuple) const {
  std::size_t idx = 0;
  for (Element e : tuple) idx = idx * (g_.order() - 1) + (e - 1);
  return idx;
}

std::vector<Element> BarComplex::cell_tuple(std::size_t index, int degree) const {
  std::vector<Element> t(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<Element>(index % (g_.order() - 1) + 1);
    index /= g_.order() - 1;
  }
  return t;
}

void BarComplex::check_cap(int degree) const {
  if (degree < 0 || degree > 3) throw InvalidArgument("bar cohomology degree must be 0..3");
  const double prod = static_cast<double>(cells(degree)) * static_cast<double>(cells(degree + 1));
  if (prod > static_cast<double>(kBarCellCap)) {
    throw CapExceeded("bar complex in degree " + std::to_string(degree) + " for a group of order " +
                      std::to_string(g_.order()) + " exceeds the cell cap");
  }
}

fp::IntegerMatrix BarComplex::boundary(int degree) const {
  const std::size_t rows = cells(degree);
  const std::size_t cols = cells(degree - 1);
  fp::IntegerMatrix m(rows, cols);
  if (degree <= 1) return m;  // d[g] = [] - [] = 0
  for (std::size_t r = 0; r < rows; ++r) {
    const auto t = cell_tuple(r, degree);
    std::vector<Element> face;
    auto add_face = [&](const std::vector<Element>& f, int sign) {
      for (Element e : f)
        if (e == 0) return;  // degenerate
      m(r, cell_index(f)) += sign;
    };
    face.assign(t.begin() + 1, t.end());
    add_face(face, 1);
    for (int i = 1; i < degree; ++i) {
      face.clear();
      for (int j = 0; j < degree; ++j) {
        if (j == i - 1) {
          face.push_back(g_.mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j + 1)]));
          ++j;
        } else {
          face.push_back(t[static_cast<std::size_t>(j)]);
        }
      }
      add_face(face, i % 2 ? -1 : 1);
    }
    face.assign(t.begin(), t.end() - 1);
    add_face(face, degree % 2 ? -1 : 1);
  }
  return m;
}

namespace {

std::vector<std::vector<long>> columns_of(const fp::IntegerMatrix& m) {
  std::vector<std::vector<long>> out(m.cols(), std::vector<long>(m.rows(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[c][r] = m(r, c).get_si();
  return out;
}

}  // namespace

BarCohomology::BarCohomology(const fp::GroupTable& g, const fp::AbelianGroup& k, int degree)
    : g_(g), k_(k), degree_(degree), bar_(g) {
  if (!k.is_finite()) throw InvalidArgument("bar cohomology needs finite coefficients");
  bar_.check_cap(degree);
  const fp::IntegerMatrix next = bar_.boundary(degree + 1);
  const fp::SmithForm sf = fp::smith_normal_form(next, true, false);
  std::vector<std::vector<long>> cob;
  if (degree > 0) cob = columns_of(bar_.boundary(degree));
  q_ = CocycleQuotient(sf, bar_.cells(degree), cob, k);
}

namespace {

std::size_t table_index(const std::vector<Element>& t, std::size_t n) {
  std::size_t idx = 0;
  for (Element e : t) idx = idx * n + e;
  return idx;
}

}  // namespace

AVec BarCohomology::classify(const std::vector<AVec>& cochain) const {
  const std::size_t nc = bar_.cells(degree_);
  std::vector<std::vector<long>> x(k_.rank(), std::vector<long>(nc, 0));
  for (std::size_t c = 0; c < nc; ++c) {
    const AVec& v = cochain[table_index(bar_.cell_tuple(c, degree_), g_.order())];
    for (std::size_t j = 0; j < k_.rank(); ++j) x[j][c] = v[j];
  }
  return q_.classify(x);
}

std::vector<AVec> BarCohomology::representative(const AVec& cls) const {
  const auto x = q_.lift(cls);
  std::size_t total = 1;
  for (int i = 0; i < degree_; ++i) total *= g_.order();
  std::vector<AVec> table(total, k_.zero());
  const std::size_t nc = bar_.cells(degree_);
  for (std::size_t c = 0; c < nc; ++c) {
    AVec v(k_.rank());
    for (std::size_t j = 0; j < k_.rank(); ++j) v[j] = x[j][c];
    table[table_index(bar_.cell_tuple(c, degree_), g_.order())] = k_.reduce(v);
  }
  return table;
}

bool BarCohomology::is_cocycle(const std::vector<AVec>& cochain) const {
  try {
    classify(cochain);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

std::size_t bar_rational_dimension(const fp::GroupTable& g, int degree) {
  BarComplex bar(g);
  bar.check_cap(degree);
  const std::size_t r_next = fp::smith_normal_form(bar.boundary(degree + 1), false).rank();
  const std::size_t r_this = degree > 0 ? fp::smith_normal_form(bar.boundary(degree), false).rank() : 0;
  return bar.cells(degree) - r_next - r_this;
}

fp::AbelianGroup bar_homology(const fp::GroupTable& g, int degree) {
  BarComplex bar(g);
  bar.check_cap(degree);
  const fp::SmithForm next = fp::smith_normal_form(bar.boundary(degree + 1), false);
  const std::size_t r_this = degree > 0 ? fp::smith_normal_form(bar.boundary(degree), false).rank() : 0;
  std::vector<long> orders;
  for (const auto& d : next.diagonal)
    if (d > 1) orders.push_back(d.get_si());
  const std::size_t free = bar.cells(degree) - next.rank() - r_this;
  orders.insert(orders.end(), free, 0L);
  return fp::AbelianGroup::from_cyclic_orders(orders);
}

}  // namespace stablab::homology

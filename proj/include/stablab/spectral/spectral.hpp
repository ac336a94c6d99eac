#pragma once

#include <json.hpp>
#include <vector>

#include "stablab/extensions/extension.hpp"
#include "stablab/homology/coefficients.hpp"

namespace stablab::spectral {

// Matrix over F_p (entries in [0,p)) or over Q (integers); column j is the
// image of basis vector j.
struct LinearMap {
  long p = 0;  // 0 for Q
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<long>> columns;
  std::size_t rank() const;
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// dim E_2^{pq} = dim H^p(Gamma, H^q(A, F)) for p + q <= 2.
struct E2Page {
  homology::CoefficientModule field;
  std::size_t dims[3][3] = {};  // [p][q], zero when p + q > 2
  std::size_t base_dims[3] = {};    // dim H^p(Gamma, F)
  std::size_t kernel_dims[3] = {};  // dim H^q(A, F)
  bool product_formula = false;     // rechecked with H^p(Gamma, F^d) directly
  LinearMap d2_01;
};

// Fields: F_p with p <= 7, or Q. Throws CapExceeded beyond |L| = 64.
E2Page e2_page(const extensions::CentralExtension& e, const homology::CoefficientModule& field);

// d_2^{01}: H^1(A, F) -> H^2(Gamma, F) by the connecting map: extend beta to
// the 1-cochain f(i(a) s(g)) = beta(a) on L, note that df is inflated from a
// cocycle z on Gamma and take -[z].
LinearMap d2_01(const extensions::CentralExtension& e, const homology::CoefficientModule& field);
// The transgression in the same bases.
LinearMap transgression_matrix(const extensions::CentralExtension& e, const homology::CoefficientModule& field);

/// H^2(L, F) by inflation and restriction images.
struct FiltrationReport {
  homology::CoefficientModule field;
  std::size_t h2_total = 0;
  std::size_t inflation_image = 0;    // E_inf^{20}
  std::size_t restriction_image = 0;  // E_inf^{02}
  std::size_t middle = 0;             // E_inf^{11} = dim ker(res) - inflation image
  bool inflation_in_kernel = false;   // res o inf = 0 on representatives
  bool d2_consistent = false;         // inflation image = dim H^2(Gamma) - rank d_2^{01}
  bool within_e2 = false;             // each piece bounded by its E_2 term
  bool sums() const { return inflation_image + middle + restriction_image == h2_total; }
  bool passed() const { return sums() && inflation_in_kernel && d2_consistent && within_e2; }
};
FiltrationReport h2_filtration(const extensions::CentralExtension& e, const homology::CoefficientModule& field);

/// x ^ y -> x (x) y - y (x) x from Lambda^2 V to V (x) V, dim V = n.
struct Symmetrization {
  std::size_t n = 0;
  LinearMap matrix;  // rows n^2, columns n(n-1)/2 (pairs i<j in order)
  bool injective = false;
};
Symmetrization symmetrization(std::size_t n, const homology::CoefficientModule& field);

nlohmann::json to_json(const E2Page& page);
nlohmann::json to_json(const FiltrationReport& r);
nlohmann::json to_json(const LinearMap& m);

}  // namespace stablab::spectral

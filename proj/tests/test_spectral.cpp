#include <gtest/gtest.h>

#include "stablab/error.hpp"
#include "stablab/extensions/extension.hpp"
#include "stablab/extensions/lemmas.hpp"
#include "stablab/homology/bar_complex.hpp"
#include "stablab/spectral/spectral.hpp"
#include "test_util.hpp"

using namespace stablab;
using namespace stablab::spectral;
using homology::CoefficientModule;

TEST(Spectral, SplitHasZeroDifferential) {
  const auto e = testutil::extension("split_v4_c2");
  EXPECT_EQ(d2_01(e, CoefficientModule::prime_field(2)).rank(), 0u);
}

TEST(Spectral, Z4OverZ2HasRankOne) {
  const auto e = testutil::extension("z4_over_z2");
  const auto d = d2_01(e, CoefficientModule::prime_field(2));
  EXPECT_EQ(d.rank(), 1u);
  EXPECT_EQ(d, transgression_matrix(e, CoefficientModule::prime_field(2)));
}

TEST(Spectral, D2EqualsTransgressionOnCatalog) {
  for (const char* name : {"heis2", "heis3", "q8_over_v4", "dic3_over_s3", "c6_over_c3", "pauli_over_v4"})
    for (long p : {2, 3, 5, 7}) {
      const auto e = testutil::extension(name);
      const auto f = CoefficientModule::prime_field(p);
      EXPECT_EQ(d2_01(e, f), transgression_matrix(e, f)) << name << " " << p;
    }
}

TEST(Spectral, FiltrationMatchesBarDimension) {
  for (const char* name : {"heis2", "q8_over_v4", "z4_over_z2", "split_v4_c2", "d8_over_d4"})
    for (long p : {2, 3}) {
      const auto e = testutil::extension(name);
      const auto f = CoefficientModule::prime_field(p);
      const auto r = h2_filtration(e, f);
      EXPECT_TRUE(r.passed()) << name << " " << p;
      const homology::BarCohomology bar(*e.total, testutil::ab({p}), 2);
      EXPECT_EQ(r.h2_total, bar.group().rank()) << name << " " << p;
    }
}

TEST(Spectral, E2PageProductFormula) {
  const auto page = e2_page(testutil::extension("heis2"), CoefficientModule::prime_field(2));
  EXPECT_TRUE(page.product_formula);
  EXPECT_EQ(page.base_dims[1], 2u);
  EXPECT_EQ(page.dims[1][1], 2u);
  EXPECT_THROW(e2_page(testutil::extension("heis2"), CoefficientModule::prime_field(11)), Error);
}

TEST(Spectral, SymmetrizationInjective) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto s = symmetrization(n, CoefficientModule::rationals());
    EXPECT_TRUE(s.injective) << n;
    EXPECT_EQ(s.matrix.rank(), n * (n - 1) / 2);
  }
}

TEST(TransgressionIdentities, SplitIdentity) {
  for (const char* name : {"c2xc2", "c4", "q8", "s3"})
    for (const char* k : {"Z/2", "Z/4", "Z/3"}) {
      const auto r = extensions::split_identity_check(testutil::group(name), CoefficientModule::parse(k));
      EXPECT_TRUE(r.passed()) << name << " " << k;
      EXPECT_EQ(r.sum_order, r.h2_order);
    }
  const auto v = extensions::split_identity_check(testutil::group("c2xc2"), CoefficientModule::finite({2}));
  EXPECT_EQ(v.h2_order, 8);
  EXPECT_EQ(v.tg_image_order, 2);
  EXPECT_EQ(v.ext_order, 4);
  const auto q = extensions::split_identity_check(testutil::group("q8"), CoefficientModule::finite({2}));
  EXPECT_EQ(q.hom_order, 1);
  EXPECT_EQ(q.ext_order, q.h2_order);
}

TEST(TransgressionIdentities, RestrictionToDerivedSubgroup) {
  for (const char* name : {"s3", "d4"})
    for (const char* k : {"Z/2", "Z/3"}) {
      const auto r = extensions::lemma_i_check(testutil::group(name), CoefficientModule::parse(k));
      EXPECT_TRUE(r.passed()) << name << " " << k;
    }
}

#include <gtest/gtest.h>

#include "stablab/error.hpp"
#include "stablab/homology/bar_complex.hpp"
#include "stablab/homology/cohomology.hpp"
#include "stablab/homology/relation_module.hpp"
#include "stablab/homology/uct.hpp"
#include "test_util.hpp"

using namespace stablab;
using namespace stablab::homology;
using testutil::ab;
using testutil::group;

TEST(Coefficients, Parse) {
  EXPECT_EQ(CoefficientModule::parse("Z/2+Z/4").group.invariant_factors(), (std::vector<long>{2, 4}));
  EXPECT_EQ(CoefficientModule::parse("F_3").p, 3);
  EXPECT_EQ(CoefficientModule::parse("Q").kind, CoefficientModule::Kind::Rationals);
  EXPECT_THROW(CoefficientModule::parse("F_4"), Error);
  EXPECT_THROW(CoefficientModule::parse("Z/x"), Error);
}

TEST(Multiplier, HopfMatchesBar) {
  for (const char* name : {"c6", "c2xc2", "c3xc3", "c4xc4", "q8", "d4", "a4", "s3", "c2xc2xc2", "dic3"}) {
    const auto g = group(name);
    EXPECT_EQ(RelationModule(g).h2(), bar_homology(*g, 2)) << name;
  }
}

TEST(Multiplier, KnownValues) {
  EXPECT_TRUE(RelationModule(group("c7")).h2().is_trivial());
  EXPECT_EQ(RelationModule(group("c2xc2")).h2(), ab({2}));
  EXPECT_EQ(RelationModule(group("c4xc4")).h2(), ab({4}));
  EXPECT_TRUE(RelationModule(group("q8")).h2().is_trivial());
  EXPECT_EQ(RelationModule(group("a4")).h2(), ab({2}));
  EXPECT_EQ(RelationModule(group("c2xc2xc2")).h2(), ab({2, 2, 2}));
  const auto p = testutil::group_presentation("d4");
  EXPECT_EQ(schur_multiplier(p, *group("d4")), ab({2}));
}

TEST(BarComplex, BoundarySquaresToZero) {
  const auto g = group("s3");
  BarComplex bar(*g);
  for (int d = 2; d <= 3; ++d) {
    const auto prod = bar.boundary(d) * bar.boundary(d - 1);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) ASSERT_EQ(prod(i, j), 0) << d;
  }
  for (std::size_t i = 0; i < bar.cells(2); ++i) EXPECT_EQ(bar.cell_index(bar.cell_tuple(i, 2)), i);
}

TEST(BarComplex, CapIsEnforced) {
  const auto g = testutil::extension("heis3").total;  // order 27
  EXPECT_THROW(BarCohomology(*g, ab({3}), 2), CapExceeded);
}

TEST(Cohomology, SmallValues) {
  const auto c2 = group("c2");
  EXPECT_EQ(cohomology(*c2, CoefficientModule::finite({2}), 2).value, ab({2}));
  EXPECT_EQ(cohomology(*group("c5"), CoefficientModule::rationals(), 1).dimension, 0u);
  EXPECT_EQ(cohomology(*group("c3xc3"), CoefficientModule::prime_field(3), 2).dimension, 3u);
  EXPECT_EQ(cohomology(*group("d4"), CoefficientModule::prime_field(2), 3).dimension, 4u);
  EXPECT_EQ(cohomology(*group("c4"), CoefficientModule::finite({2}), 0).value, ab({2}));
}

TEST(Cohomology, RepresentativesAreNormalizedCocycles) {
  const auto g = group("c2xc2");
  const auto h = cohomology(*g, CoefficientModule::finite({2}), 2);
  ASSERT_EQ(h.representatives.size(), h.value.rank());
  for (const auto& rep : h.representatives) {
    EXPECT_TRUE(is_bar_cocycle(*g, ab({2}), 2, rep));
    for (fp::Element x = 0; x < g->order(); ++x) {
      EXPECT_TRUE(ab({2}).is_zero(rep[x * g->order()]));
      EXPECT_TRUE(ab({2}).is_zero(rep[x]));
    }
  }
}

TEST(Classifier, RoundTripAgreesWithBar) {
  for (const char* name : {"q8", "d4", "c4xc2", "s3"}) {
    const auto g = group(name);
    for (const auto& k : {ab({2}), ab({4}), ab({2, 2})}) {
      const H2Classifier cls(g, k);
      const BarCohomology bar(*g, k, 2);
      ASSERT_EQ(cls.group(), bar.group()) << name;
      for (const auto& x : cls.group().elements()) {
        const auto f = cls.representative(x);
        EXPECT_TRUE(is_cocycle(f));
        EXPECT_TRUE(is_normalized(f));
        EXPECT_EQ(cls.classify(f), x);
      }
    }
  }
}

TEST(Classifier, CoboundariesClassifyToZero) {
  const auto g = group("a4");
  const auto k = ab({2, 4});
  const H2Classifier cls(g, k);
  std::vector<AVec> f(g->order(), k.zero());
  for (fp::Element x = 1; x < g->order(); ++x) f[x] = k.reduce({static_cast<long>(x), static_cast<long>(x * x)});
  EXPECT_TRUE(cls.group().is_zero(cls.classify(coboundary(g, k, f))));
}

TEST(Uct, Examples) {
  const auto u1 = uct_sequence(*group("c2"), CoefficientModule::finite({2}));
  EXPECT_EQ(u1.ext_term, ab({2}));
  EXPECT_EQ(u1.h2, ab({2}));
  EXPECT_TRUE(u1.hom_term.is_trivial());
  EXPECT_TRUE(u1.exact());
  const auto u2 = uct_sequence(*group("c2xc2"), CoefficientModule::finite({2}));
  EXPECT_EQ(u2.ext_term.order(), 4);
  EXPECT_EQ(u2.hom_term.order(), 2);
  EXPECT_EQ(u2.h2.order(), 8);
  EXPECT_TRUE(u2.exact());
  const auto u3 = uct_sequence(*group("c1"), CoefficientModule::finite({3}));
  EXPECT_TRUE(u3.ext_term.is_trivial() && u3.h2.is_trivial() && u3.hom_term.is_trivial());
}

TEST(Uct, ExactOnCatalogSample) {
  for (const char* name : {"q8", "d4", "a4", "c4xc4", "dic3", "c2xq8"})
    for (const char* k : {"Z/2", "Z/4", "Z/3", "Z/2+Z/4", "F_2", "Q"})
      EXPECT_TRUE(uct_sequence(*group(name), CoefficientModule::parse(k)).exact()) << name << " " << k;
}

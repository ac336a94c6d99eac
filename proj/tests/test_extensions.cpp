#include <gtest/gtest.h>

#include <random>

#include "stablab/error.hpp"
#include "stablab/extensions/extension.hpp"
#include "stablab/extensions/extension_file.hpp"
#include "stablab/extensions/five_term.hpp"
#include "stablab/fp/coset_enumeration.hpp"
#include "test_util.hpp"

using namespace stablab;
using namespace stablab::extensions;
using homology::CoefficientModule;
using testutil::ab;
using testutil::group;

namespace {

// c((a,b),(a',b')) = a b' on (Z/p)^2
Cocycle2 heisenberg_cocycle(long p) {
  const auto base = std::make_shared<const fp::GroupTable>(abelian_table(ab({p, p})));
  const auto k = ab({p});
  Cocycle2 c = Cocycle2::zero(base, k);
  const auto gab = ab({p, p});
  for (fp::Element x = 0; x < base->order(); ++x)
    for (fp::Element y = 0; y < base->order(); ++y) {
      const auto u = gab.element_at(x), v = gab.element_at(y);
      c.at(x, y) = k.reduce({u[0] * v[1]});
    }
  return c;
}

}  // namespace

TEST(Extension, ZeroCocycleIsDirectProduct) {
  const auto base = group("s3");
  const auto e = extension_from_cocycle(Cocycle2::zero(base, ab({2})));
  EXPECT_FALSE(fp::find_isomorphism(*e.total, fp::direct_product(*base, fp::cyclic_group(2))).empty());
}

TEST(Extension, NontrivialCocycleOverZ2GivesZ4) {
  const auto base = group("c2");
  Cocycle2 c = Cocycle2::zero(base, ab({2}));
  c.at(1, 1) = {1};
  const auto e = extension_from_cocycle(c);
  ASSERT_EQ(e.total->order(), 4u);
  bool has_order_four = false;
  for (fp::Element x = 0; x < 4; ++x) has_order_four |= e.total->element_order(x) == 4;
  EXPECT_TRUE(has_order_four);
}

TEST(Extension, HeisenbergFromCocycle) {
  for (long p : {2, 3, 5}) {
    const auto e = extension_from_cocycle(heisenberg_cocycle(p));
    ASSERT_EQ(e.total->order(), static_cast<std::size_t>(p * p * p));
    EXPECT_FALSE(e.total->is_abelian());
    if (p > 2)
      for (fp::Element x = 0; x < e.total->order(); ++x) EXPECT_EQ(e.total->power(x, p), 0u);
  }
}

TEST(Extension, RandomSectionsGiveCohomologousCocycles) {
  std::mt19937_64 rng(17);
  for (const char* name : {"heis2", "q8_over_v4", "dic3_over_s3"}) {
    const auto e = testutil::extension(name);
    for (int i = 0; i < 4; ++i) EXPECT_TRUE(cohomologous(e.cocycle, cocycle_from_extension(e, random_section(e, rng))));
  }
}

TEST(Extension, NotCentralIsRejected) {
  const auto s3 = group("s3");
  // A3 in S3 is normal but not central
  std::vector<fp::Element> a3;
  for (fp::Element x = 0; x < 6; ++x)
    if (s3->element_order(x) != 2) a3.push_back(x);
  EXPECT_THROW(central_quotient(s3, a3), NotCentral);
}

TEST(Extension, ExtensionFileParsing) {
  const auto spec = parse_extension("extension t\ngens a z\nrel a^2 z^-1\nrel z^2\nrel [a,z]\nkernel z\n");
  EXPECT_EQ(spec.name, "t");
  EXPECT_EQ(spec.kernel_words.size(), 1u);
  const auto e = realize(spec);
  EXPECT_EQ(e.total->order(), 4u);
  EXPECT_EQ(e.base->order(), 2u);
  EXPECT_THROW(parse_extension("extension t\ngens a\nkernel b\n"), ParseError);
}

TEST(Pushforward, ZeroGivesSplit) {
  const auto e = testutil::extension("z4_over_z2");
  const auto pf = pushforward(e, fp::AbelianHom::zero(e.kernel, ab({3})));
  EXPECT_TRUE(is_coboundary(pf.extension.cocycle));
  EXPECT_TRUE(pf.diagram_commutes);
}

TEST(Pushforward, MatchesQuotientConstruction) {
  const auto e = testutil::extension("z4_over_z2");
  fp::AbelianHom beta = fp::AbelianHom::zero(e.kernel, ab({4}));
  beta.images[0] = {2};  // Z/2 into Z/4
  const auto pf = pushforward(e, beta);
  const auto q = pushforward_quotient(e, beta);
  EXPECT_TRUE(pf.diagram_commutes);
  EXPECT_EQ(pf.extension.total->order(), 8u);
  EXPECT_FALSE(fp::find_isomorphism(*pf.extension.total, *q.total).empty());
}

TEST(Transgression, SplitIsZeroAndZ4IsNot) {
  const auto split = testutil::extension("split_v4_c2");
  for (const auto& v : Transgression(split, ab({2})).matrix()) EXPECT_TRUE(std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }));
  const auto z4 = testutil::extension("z4_over_z2");
  const Transgression tg(z4, ab({2}));
  EXPECT_FALSE(tg.h2().is_zero(tg.apply(AVec{1})));
}

TEST(FiveTerm, CatalogExtensions) {
  for (const char* name : {"z4_over_z2", "heis2", "heis3", "split_v4_c2", "q8_over_v4"})
    for (const char* k : {"Z/2", "Z/3", "F_3", "Z/2+Z/4"}) {
      const auto r = five_term_check(testutil::extension(name), CoefficientModule::parse(k));
      EXPECT_TRUE(r.exact()) << name << " " << k;
      EXPECT_EQ(r.nodes.size(), 4u);
    }
}

TEST(FiveTerm, HeisenbergThreeDimensions) {
  const auto r = five_term_check(testutil::extension("heis3"), CoefficientModule::prime_field(3));
  EXPECT_EQ(r.h1_total, 9);  // dim H^1(L, F_3) = 2
  EXPECT_EQ(r.h1_base, 9);
  EXPECT_TRUE(r.exact());
}

TEST(FiveTerm, SplitDegreeOneKunneth) {
  const auto r = five_term_check(testutil::extension("split_v4_c2"), CoefficientModule::finite({2}));
  EXPECT_EQ(r.h1_total, r.h1_base * r.h1_kernel);
}

#include <gtest/gtest.h>

#include <random>

#include "stablab/error.hpp"
#include "stablab/extensions/extension.hpp"
#include "stablab/extsq/exterior_square.hpp"
#include "stablab/homology/relation_module.hpp"
#include "test_util.hpp"

using namespace stablab;
using namespace stablab::extsq;
using testutil::ab;
using testutil::group;

namespace {

bool is_iso(const fp::AbelianHom& h) {
  if (h.source.order() != h.target.order()) return false;
  return fp::kernel_indices(h).size() == 1;
}

}  // namespace

TEST(ExteriorSquare, SmallOrders) {
  EXPECT_EQ(exterior_square(group("c5")).realized->order(), 1u);
  EXPECT_EQ(exterior_square(group("c2xc2")).realized->order(), 2u);
  const auto s3 = exterior_square(group("s3"));
  EXPECT_EQ(s3.realized->order(), 3u);
  EXPECT_TRUE(check_relations(s3));
  EXPECT_TRUE(id_bar_onto_derived(s3));
}

TEST(ExteriorSquare, MillerKernel) {
  EXPECT_EQ(miller_kernel(exterior_square(group("c2xc2"))), ab({2}));
  EXPECT_TRUE(miller_kernel(exterior_square(group("s3"))).is_trivial());
  EXPECT_EQ(miller_kernel(exterior_square(group("a4"))), ab({2}));
  for (const char* name : {"d4", "q8", "c4xc4", "c2xc2xc2", "dic3", "d6", "c2xd4"}) {
    const auto g = group(name);
    EXPECT_EQ(miller_kernel(exterior_square(g)), homology::RelationModule(g).h2()) << name;
  }
}

TEST(ExteriorSquare, CapAndSymbols) {
  const auto big = std::make_shared<const fp::GroupTable>(fp::direct_product(*group("s3"), *group("c3xc3")));
  EXPECT_THROW(exterior_square(big), CapExceeded);
  const auto e = exterior_square(group("d4"));
  for (fp::Element x = 0; x < e.source->order(); ++x) EXPECT_EQ(e.symbol_of(x, x), 0u);
}

TEST(PiBar, IdentityExtensionGivesIdBar) {
  const auto g = group("d4");
  const auto e = exterior_square(g);
  const auto ident = extensions::central_quotient(g, {0});
  const auto map = pi_bar_map(e, ident);
  for (fp::Element w = 0; w < e.realized->order(); ++w) EXPECT_EQ(ident.projection[map[w]], e.id_bar[w]);
}

TEST(PiBar, SectionIndependent) {
  std::mt19937_64 rng(3);
  const auto ext = testutil::extension("q8_over_v4");
  for (int i = 0; i < 5; ++i) {
    const auto s = extensions::random_section(ext, rng);
    for (fp::Element x = 0; x < ext.base->order(); ++x)
      for (fp::Element y = 0; y < ext.base->order(); ++y) EXPECT_EQ(pi_bar(ext, s, x, y), pi_bar(ext, x, y));
  }
}

TEST(HMap, Examples) {
  const auto split = testutil::extension("split_v4_c2");
  EXPECT_TRUE(h_of_extension(exterior_square(split.base), split).is_zero());
  const auto z4 = testutil::extension("z4_over_z2");
  const auto h = h_of_extension(exterior_square(z4.base), z4);
  EXPECT_TRUE(h.source.is_trivial());
  for (const char* name : {"heis2", "heis3"}) {
    const auto heis = testutil::extension(name);
    EXPECT_TRUE(is_iso(h_of_extension(exterior_square(heis.base), heis))) << name;
  }
}

TEST(SchurCovering, Examples) {
  EXPECT_EQ(schur_covering(exterior_square(group("c6"))).total->order(), 6u);
  EXPECT_EQ(schur_covering(exterior_square(group("s3"))).total->order(), 6u);
  const auto v4 = exterior_square(group("c2xc2"));
  const auto cover = schur_covering(v4);
  EXPECT_EQ(cover.total->order(), 8u);
  EXPECT_FALSE(cover.total->is_abelian());
  const auto h = h_of_extension(v4, cover);
  for (std::size_t i = 0; i < h.source.rank(); ++i) {
    AVec unit(h.source.rank(), 0);
    unit[i] = 1;
    EXPECT_EQ(h.apply(unit), unit);
  }
}

TEST(ExteriorSquare, SummaryFields) {
  const auto j = summary(exterior_square(group("a4")));
  EXPECT_EQ(j["source_order"], 12);
  EXPECT_EQ(j["kernel_invariant_factors"], std::vector<long>{2});
}

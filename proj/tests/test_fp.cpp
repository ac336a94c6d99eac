#include <gtest/gtest.h>

#include "stablab/error.hpp"
#include "stablab/fp/abelian_group.hpp"
#include "stablab/fp/coset_enumeration.hpp"
#include "stablab/fp/reidemeister_schreier.hpp"
#include "stablab/fp/smith.hpp"
#include "stablab/fp/tietze.hpp"
#include "test_util.hpp"

using namespace stablab;
using namespace stablab::fp;

namespace {

std::vector<long> snf_diagonal(const IntegerMatrix& m) {
  std::vector<long> out;
  for (const auto& d : smith_normal_form(m).diagonal) out.push_back(d.get_si());
  return out;
}

}  // namespace

TEST(Word, FreeReductionAndInverse) {
  const Word a = Word::generator(0), b = Word::generator(1);
  EXPECT_TRUE((a * b * b.inverse() * a.inverse()).empty());
  EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
  EXPECT_EQ(commutator(a, b).size(), 4u);
  EXPECT_EQ(a.pow(-3).exponent_sums(2), (std::vector<long>{-3, 0}));
  EXPECT_EQ((b * a * b.inverse()).cyclically_reduced(), a);
}

TEST(Parser, WordsAndPresentations) {
  const auto p = parse_presentation("group q8\ngens a b\nrel a^4\nrel a^2 b^-2\nrel b^-1 a b a\n");
  EXPECT_EQ(p.num_generators(), 2u);
  EXPECT_EQ(p.relators().size(), 3u);
  const Word w = parse_word("[a,b] (a b)^2", p.generator_names());
  EXPECT_EQ(w.exponent_sums(2), (std::vector<long>{2, 2}));
  EXPECT_THROW(parse_presentation("gens a\nrel c^2\n"), ParseError);
  EXPECT_THROW(parse_word("a^", {"a"}), ParseError);
  EXPECT_EQ(parse_presentation(p.to_text()).relators(), p.relators());
}

TEST(CosetEnumeration, CyclicAndS3) {
  EXPECT_EQ(enumerate_group(parse_presentation("gens a\nrel a^5\n")).order(), 5u);
  const auto s3 = enumerate_group(parse_presentation("gens a b\nrel a^2\nrel b^2\nrel (a b)^3\n"));
  ASSERT_EQ(s3.order(), 6u);
  // oracle: hand-built S3 as permutations of {0,1,2}
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<Element> mul;
  auto index = [&](const std::array<int, 3>& p) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  for (const auto& x : perms)
    for (const auto& y : perms) mul.push_back(index({x[y[0]], x[y[1]], x[y[2]]}));
  const GroupTable hand(6, mul);
  EXPECT_FALSE(find_isomorphism(s3, hand).empty());
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_TRUE(s3.check_associativity());
}

TEST(CosetEnumeration, Overflow) {
  const auto z2 = parse_presentation("gens a b\nrel [a,b]\n");
  EXPECT_THROW(coset_enumerate(z2, {Word::generator(0)}, 1000), EnumerationOverflow);
}

TEST(CosetEnumeration, CatalogOrders) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"a4", 12}, {"q8", 8}, {"d4", 8}, {"s3", 6}, {"c2xc2xc2xc2", 16}, {"q16", 16}, {"sd16", 16}, {"m16", 16}};
  for (const auto& [name, order] : expected) EXPECT_EQ(testutil::group(name)->order(), order) << name;
}

TEST(Smith, Examples) {
  EXPECT_EQ(snf_diagonal(IntegerMatrix::from_rows({{4, 0}, {0, 6}})), (std::vector<long>{2, 12}));
  EXPECT_EQ(snf_diagonal(IntegerMatrix::from_rows({{2, 0}, {0, 2}, {3, 3}})), (std::vector<long>{1, 2}));
  EXPECT_EQ(snf_diagonal(IntegerMatrix::from_rows({{0}})), (std::vector<long>{0}));
}

TEST(Smith, TransformsReproduceDiagonal) {
  const auto m = IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto sf = smith_normal_form(m);
  const IntegerMatrix d = sf.L * m * sf.R;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(d(i, j), i == j ? sf.diagonal[i] : mpz_class(0));
  EXPECT_EQ(sf.R * sf.R_inv, IntegerMatrix::identity(3));
  EXPECT_EQ(abs(determinant(m)), sf.diagonal[0] * sf.diagonal[1] * sf.diagonal[2]);
}

TEST(AbelianGroup, AbelianizationOfPresentations) {
  EXPECT_EQ(abelianization(parse_presentation("gens a b\nrel [a,b]\n")).invariant_factors(), (std::vector<long>{0, 0}));
  EXPECT_EQ(abelianization(parse_presentation("gens a b\nrel a^2\nrel b^2\nrel (a b)^3\n")).invariant_factors(),
            (std::vector<long>{2}));
  EXPECT_EQ(abelianization(parse_presentation("gens a\nrel a^5\n")).invariant_factors(), (std::vector<long>{5}));
  EXPECT_EQ(abelianization(*testutil::group("q8")).invariant_factors(), (std::vector<long>{2, 2}));
}

TEST(AbelianGroup, ArithmeticAndHomExt) {
  const auto a = testutil::ab({4, 6});
  EXPECT_EQ(a.invariant_factors(), (std::vector<long>{2, 12}));
  EXPECT_EQ(a.order(), 24);
  for (long long i = 0; i < a.order(); ++i) EXPECT_EQ(a.index_of(a.element_at(i)), i);
  EXPECT_EQ(hom_group(testutil::ab({2, 4}), testutil::ab({4})).order(), 8);
  EXPECT_EQ(ext_group(testutil::ab({2, 2}), testutil::ab({2})).order(), 4);
  EXPECT_EQ(ext_group(testutil::ab({0}), testutil::ab({3})).order(), 1);
  EXPECT_THROW(testutil::ab({0}).order(), InvalidArgument);
}

TEST(ReidemeisterSchreier, S3DerivedSubgroup) {
  const auto p = testutil::group_presentation("s3");
  const auto g = enumerate_group(p);
  const auto ct = coset_table_of(g, g.generators(), commutator_subgroup(g));
  ASSERT_EQ(ct.num_cosets, 2u);
  const auto sub = reidemeister_schreier(p, ct);
  EXPECT_EQ(abelianization(sub.presentation).invariant_factors(), (std::vector<long>{3}));
}

TEST(ReidemeisterSchreier, IndexTwoInZ) {
  const auto z = parse_presentation("gens a\n");
  const auto ct = coset_enumerate(z, {Word::generator(0, 2)});
  const auto sub = tietze_simplify(reidemeister_schreier(z, ct).presentation).presentation;
  EXPECT_EQ(sub.num_generators(), 1u);
  EXPECT_TRUE(sub.relators().empty());
}

TEST(ReidemeisterSchreier, WholeGroup) {
  const auto p = testutil::group_presentation("q8");
  const auto sub = reidemeister_schreier(p, coset_enumerate(p, {Word::generator(0), Word::generator(1)}));
  EXPECT_EQ(enumerate_group(sub.presentation).order(), 8u);
}

TEST(Tietze, PreservesGroup) {
  for (const char* name : {"a4", "d4", "q8", "c4xc2"}) {
    const auto p = testutil::group_presentation(name);
    const auto t = tietze_simplify(p.with_relators({}), 4);
    EXPECT_EQ(enumerate_group(t.presentation).order(), enumerate_group(p).order()) << name;
  }
}

TEST(GroupTable, SubgroupsAndQuotients) {
  const auto g = testutil::group("d4");
  EXPECT_EQ(center(*g).size(), 2u);
  EXPECT_EQ(commutator_subgroup(*g).size(), 2u);
  const auto q = make_quotient(*g, center(*g));
  EXPECT_EQ(q.table.order(), 4u);
  EXPECT_TRUE(q.table.is_abelian());
  EXPECT_TRUE(is_homomorphism(*g, q.table, q.projection));
}

#include <gtest/gtest.h>

#include <fstream>

#include "stablab/error.hpp"
#include "stablab/symspace/symspace.hpp"

using namespace stablab;
using namespace stablab::symspace;

namespace {

PoincarePolynomial poly(std::vector<long> c) { return PoincarePolynomial{std::move(c)}; }

PoincarePolynomial sphere(std::size_t n) {
  std::vector<long> c(n + 1, 0);
  c.front() = 1;
  c.back() = 1;
  return poly(c);
}

Catalog catalog_from(const std::string& text) {
  const std::string path = ::testing::TempDir() + "/catalog_test.txt";
  std::ofstream(path) << text;
  return Catalog::load(path);
}

}  // namespace

TEST(Poincare, CatalogEntries) {
  const auto& c = Catalog::builtin();
  EXPECT_EQ(poincare_polynomial(c.find("S7")), sphere(7));
  EXPECT_EQ(poincare_polynomial(c.find("SU3_SO3")), sphere(5));
  EXPECT_NE(poincare_polynomial(c.find("SU16_SO16")).at(14), 0);
  EXPECT_EQ(poincare_polynomial(c.find("CP2")), poly({1, 0, 1, 0, 1}));
  EXPECT_THROW(c.find("missing"), UnknownEntry);
}

TEST(Poincare, Kunneth) {
  EXPECT_EQ(kunneth_product(sphere(3), sphere(5)), poly({1, 0, 0, 1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(kunneth_product(sphere(4), poly({1})), sphere(4));
  const auto sq = kunneth_product(sphere(5), sphere(5));
  EXPECT_EQ(sq.at(5), 2);
  EXPECT_EQ(sq.at(10), 1);
}

TEST(OddSphere, Predicate) {
  EXPECT_TRUE(is_odd_rational_homology_sphere(sphere(5), 5));
  EXPECT_FALSE(is_odd_rational_homology_sphere(sphere(8), 8));
  EXPECT_FALSE(is_odd_rational_homology_sphere(poly({1, 0, 0, 1, 0, 1, 0, 0, 1}), 8));
  EXPECT_THROW(is_odd_rational_homology_sphere(poly({1, 1, 0}), 2), DualityViolation);
  EXPECT_THROW(is_odd_rational_homology_sphere(sphere(5), 7), DualityViolation);
}

TEST(Verdict, SingletonsAndProducts) {
  const auto& c = Catalog::builtin();
  EXPECT_EQ(instability_verdict({"SU3_SO3"}).verdict, "exception case");
  EXPECT_EQ(instability_verdict({"S5"}).verdict, "exception case");
  EXPECT_EQ(instability_verdict({"S4"}).verdict, "not operator stable");
  EXPECT_EQ(instability_verdict({"S3", "S3"}).verdict, "not operator stable");
  EXPECT_EQ(exception_entries(c), (std::vector<std::string>{"S3", "S5", "S7", "S9", "S11", "SU3_SO3"}));
  EXPECT_THROW(instability_verdict({}), InvalidArgument);
  const auto j = to_json(instability_verdict({"S3", "CP2"}));
  EXPECT_EQ(j["even_degrees"], (std::vector<std::size_t>{2, 4}));
}

TEST(Catalog, LoadTimeChecks) {
  EXPECT_NO_THROW(catalog_from("X SO(3,1) 3 sphere - 0\n"));
  // generator degrees do not add up to the dimension
  EXPECT_THROW(catalog_from("X SL3(R) 6 exterior 5 0\n"), InvalidArgument);
  // SL_n(R) dimension formula
  EXPECT_THROW(catalog_from("X SL4(R) 10 exterior 5,5 0\n"), InvalidArgument);
  // not palindromic
  EXPECT_THROW(catalog_from("X G 4 poly 1,1,0,0,1 1\n"), InvalidArgument);
  // wrong Euler characteristic
  EXPECT_THROW(catalog_from("X SO(4,1) 4 sphere - 0\n"), InvalidArgument);
  EXPECT_THROW(catalog_from("X G 4 weird - 0\n"), ParseError);
}

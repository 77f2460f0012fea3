#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace dblgpd;
using namespace testing_support;

TEST(Gamma, RejectsNonCoverings) {
  const auto path = share(path_graph(3, "v", "e"));
  const auto cycle = share(cycle_graph(4, "b", "c"));
  EXPECT_THROW(gamma(GraphMap{path, cycle, {0, 1, 2}, {0, 1}}), PreconditionError);
  const auto c4 = share(cycle_graph(4, "v", "e"));
  const auto c3 = share(cycle_graph(3, "b", "c"));
  EXPECT_THROW(gamma(GraphMap{c4, c3, {0, 1, 2, 0}, {0, 1, 2, std::nullopt}}), PreconditionError);
  EXPECT_THROW(gamma(GraphMap{c4, c3, {0, 1, 2, 1}, {0, 1, 2, 0}}), InputError);
}

TEST(Gamma, AxiomsAtSmallBound) {
  for (int sheets : {2, 3}) {
    const auto g = gamma(cyclic_cover(sheets, 3));
    EXPECT_TRUE(audit_double_groupoid(g.value, {3, 20, 4}).ok()) << sheets;
  }
  EXPECT_TRUE(audit_double_groupoid(gamma(random_covering(2, 8)).value, {2, 0, 1}).ok());
}

TEST(Gamma, CensusMatchesOracle) {
  const auto p = cyclic_cover(2, 3);
  EXPECT_EQ(gamma_census(gamma(p), 3), gamma_oracle(p, 3));
  const auto r = random_covering(2, 17);
  EXPECT_EQ(gamma_census(gamma(r), 3), gamma_oracle(r, 3));
}

TEST(Gamma, VerticalCountForCyclicCover) {
  // Pairs in a common fibre: 3 fibres of 2 points each.
  const auto g = gamma(cyclic_cover(2, 3));
  EXPECT_EQ(g.value.squares.objects().size(), 12u);
  EXPECT_EQ(g.value.horizontal.objects().size(), 6u);
}

TEST(Gamma, ZipRoundTrip) {
  const auto g = gamma(cyclic_cover(3, 3));
  for (const auto& u : g.value.all_squares(3)) {
    const auto z = zip_square(*g.pairs, u);
    ASSERT_TRUE(z.has_value());
    EXPECT_EQ(z->length(), u.upper.length());
    EXPECT_EQ(unzip_square(*g.pairs, *z), u);
  }
}

TEST(Gamma, VerticalComposeIsSplice) {
  const auto g = gamma(cyclic_cover(2, 3));
  const auto all = g.value.all_squares(2);
  std::size_t checked = 0;
  for (const auto& u : all) {
    for (const auto& v : all) {
      if (u.lower != v.upper) {
        EXPECT_THROW(vertical_compose(u, v), CompositionError);
        continue;
      }
      const auto s = splice(g, u, v);
      ASSERT_TRUE(s.has_value());
      EXPECT_EQ(vertical_compose(u, v), *s);
      EXPECT_EQ(*g.value.compose1(u, v), *s);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Gamma, CanonicalMorphisms) {
  EXPECT_TRUE(check_canonical_morphisms(cyclic_cover(2, 3), 3).ok());
  EXPECT_TRUE(check_canonical_morphisms(random_covering(4, 2), 2).ok());
}

TEST(ProductGamma, BoundariesAreBaseWithFibreComponent) {
  const auto b = share(cycle_graph(3, "b", "c"));
  const auto f = share(path_graph(2, "f", "g"));
  const auto pg = product_gamma(b, f);
  const auto squares = pg.value.all_squares(3);
  ASSERT_FALSE(squares.empty());
  for (const auto& s : squares) {
    EXPECT_EQ(pg.value.d1(Sign::minus, s), (ProductArrow{s.base, s.fiber_minus}));
    EXPECT_EQ(pg.value.d1(Sign::plus, s), (ProductArrow{s.base, s.fiber_plus}));
  }
  EXPECT_TRUE(audit_double_groupoid(pg.value, {3, 0, 1}).ok());
  EXPECT_TRUE(map_problems(product_projection(b, f)).empty());
}

TEST(ProductGamma, DiscreteFibreIsomorphism) {
  const DiscreteFibreIso iso(share(cycle_graph(3, "b", "c")), share(discrete_graph({"p", "q"})));
  const auto prod = iso.product.value.all_squares(3);
  const auto gal = iso.galois.value.all_squares(3);
  EXPECT_EQ(prod.size(), gal.size());
  const std::set<GaloisSquare> gal_set(gal.begin(), gal.end());
  for (const auto& s : prod) {
    const auto u = iso.to_galois(s);
    EXPECT_TRUE(gal_set.count(u));
    EXPECT_EQ(iso.to_product(u), s);
    EXPECT_EQ(iso.galois.value.d2(Sign::minus, u),
              iso.to_galois(iso.product.value.d2(Sign::minus, s)));
  }
  for (const auto& u : gal) EXPECT_EQ(iso.to_galois(iso.to_product(u)), u);
}

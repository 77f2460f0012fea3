#include <gtest/gtest.h>

#include "dblgpd/double_groupoid.hpp"
#include "dblgpd/galois.hpp"
#include "dblgpd/internal.hpp"
#include "dblgpd/rho.hpp"
#include "support.hpp"

using namespace dblgpd;
using namespace testing_support;

TEST(DoubleGroupoidAudit, CleanOnCover) {
  const auto g = gamma(cyclic_cover(2, 3));
  const auto report = audit_double_groupoid(g.value, {3, 50, 9});
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.checks().at("interchange"), 0u);
  EXPECT_EQ(report.checks().at("interchange.sampled"), 50u);
}

TEST(DoubleGroupoidAudit, CatchesWrongVerticalComposite) {
  auto d = gamma(cyclic_cover(2, 3)).value;
  d.compose1 = [](const GaloisSquare& a, const GaloisSquare& b) -> std::optional<GaloisSquare> {
    if (a.lower != b.upper) return std::nullopt;
    return GaloisSquare{a.upper, a.lower};
  };
  const auto report = audit_double_groupoid(d, {2, 0, 1});
  EXPECT_FALSE(report.ok());
  EXPECT_GT(report.failures("compose1.boundary"), 0u);
}

TEST(DoubleGroupoidAudit, CatchesWrongVerticalInverse) {
  auto d = gamma(cyclic_cover(2, 3)).value;
  d.inverse1 = [](const GaloisSquare& a) { return a; };
  const auto report = audit_double_groupoid(d, {2, 0, 1});
  EXPECT_FALSE(report.ok());
}

TEST(DoubleGroupoidAudit, CatchesBrokenInterchange) {
  // Composing vertically in the wrong order still has the right boundary
  // on trivial squares but breaks interchange and associativity elsewhere.
  auto d = gamma(cyclic_cover(2, 3)).value;
  const auto g0 = d.horizontal;
  d.compose1 = [g0](const GaloisSquare& a, const GaloisSquare& b) -> std::optional<GaloisSquare> {
    if (a.lower != b.upper) return std::nullopt;
    if (a.upper.length() == 1 && b.lower.length() == 1 && a.upper != b.lower)
      return GaloisSquare{b.lower, a.upper};
    return GaloisSquare{a.upper, b.lower};
  };
  EXPECT_FALSE(audit_double_groupoid(d, {2, 0, 1}).ok());
}

TEST(DoubleGroupoid, UnitSquaresAndFaces) {
  const auto g = gamma(cyclic_cover(2, 3)).value;
  const auto e = g.horizontal.arrows_from(0, 1).back();
  const auto u = g.eps1(e);
  EXPECT_EQ(g.d1(Sign::minus, u), e);
  EXPECT_EQ(g.d1(Sign::plus, u), e);
  const auto v = g.eps2(g.d2(Sign::minus, u));
  EXPECT_EQ(g.compose2_or_throw(v, u), u);
  EXPECT_EQ(g.compose1_or_throw(u, u), u);
}

TEST(Induced, RestrictionToObjectsKeepsAxioms) {
  const auto r = rho(cyclic_cover(2, 3));
  const auto sub = induced(r.value, full_inclusion(r.value.horizontal, {0, 1}));
  EXPECT_EQ(sub.horizontal.objects().size(), 2u);
  EXPECT_TRUE(audit_double_groupoid(sub, {2, 0, 1}).ok());
}

TEST(TwoGroupoid, ExtractionHasOnlyIdentityVerticals) {
  const auto r = rho(cyclic_cover(2, 3));
  EXPECT_FALSE(is_2groupoid(r.value));
  const auto two = extract_2groupoid(r.value);
  EXPECT_TRUE(is_2groupoid(two));
  EXPECT_TRUE(audit_double_groupoid(two, {3, 0, 1}).ok());
}

TEST(Internal, KernelPairAndApplyPi1) {
  const auto p = cyclic_cover(2, 3);
  const auto c = kernel_pair_graphs(p);
  EXPECT_EQ(c.objects->vertex_count(), 6u);
  EXPECT_TRUE(check_comparison_maps(c, 3).ok());
  const auto applied = apply_pi1(c, 3);
  EXPECT_TRUE(applied.comparisons.ok());
  EXPECT_TRUE(audit_double_groupoid(applied.value, {3, 0, 1}).ok());
}

TEST(Internal, ComparisonMapsOnRandomCovering) {
  const auto p = random_covering(4, 21);
  ASSERT_TRUE(is_covering(p));
  EXPECT_TRUE(check_comparison_maps(kernel_pair_graphs(p), 2).ok());
}

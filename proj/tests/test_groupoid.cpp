#include <gtest/gtest.h>

#include "dblgpd/finite_groupoid.hpp"
#include "dblgpd/groupoid.hpp"

using namespace dblgpd;

TEST(FiniteGroupoid, StandardGroupoidsValidate) {
  EXPECT_TRUE(validate_groupoid(discrete({"a", "b", "c"})).ok());
  EXPECT_TRUE(validate_groupoid(indiscrete({"a", "b", "c"})).ok());
  const auto k = kernel_pair({"x", "y", "z"}, {{"x", "0"}, {"y", "0"}, {"z", "1"}});
  EXPECT_TRUE(validate_groupoid(k).ok());
  // (x,x) (x,y) (y,x) (y,y) (z,z)
  EXPECT_EQ(k.arrows.size(), 5u);
  EXPECT_TRUE(validate_groupoid(disjoint_union({discrete({"p"}), indiscrete({"q", "r"})})).ok());
}

TEST(FiniteGroupoid, IndiscreteHasOneArrowPerPair) {
  const auto g = indiscrete({"a", "b", "c", "d"});
  EXPECT_EQ(g.arrows.size(), 16u);
}

TEST(FiniteGroupoid, CorruptedTablesAreCaught) {
  auto g = indiscrete({"a", "b"});
  auto broken_inverse = g;
  broken_inverse.inverse[static_cast<std::size_t>(g.arrow_index("(a,b)"))] = g.arrow_index("(a,b)");
  EXPECT_FALSE(validate_groupoid(broken_inverse).ok());

  auto broken_compose = g;
  broken_compose.compose.erase(broken_compose.compose.begin());
  EXPECT_FALSE(validate_groupoid(broken_compose).ok());

  auto broken_identity = g;
  broken_identity.identity[0] = g.arrow_index("(a,b)");
  EXPECT_FALSE(validate_groupoid(broken_identity).ok());
}

TEST(Groupoid, ComputableViewPassesAudit) {
  const auto g = as_groupoid(indiscrete({"a", "b", "c"}));
  const auto report = audit_groupoid(g, 2);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.total_checks(), 0u);
  EXPECT_EQ(count_arrows(g, 1), 9u);
  EXPECT_EQ(count_arrows(g, 0), 3u);
}

TEST(Groupoid, ProductAndPullback) {
  const auto a = as_groupoid(indiscrete({"a", "b"}));
  const auto c = as_groupoid(discrete({"*"}));
  const auto p = product(a, c);
  EXPECT_TRUE(audit_groupoid(p, 2).ok());
  EXPECT_EQ(count_arrows(p, 2), 4u);

  GroupoidFunctor<std::string, std::string, std::string, std::string> to_point{
      a, c, [](const std::string&) { return std::string("*"); },
      [](const std::string&) { return std::string("id:*"); }};
  EXPECT_TRUE(audit_functor(to_point, 2).ok());
  const auto pb = pullback(to_point, to_point);
  EXPECT_TRUE(audit_groupoid(pb.groupoid, 2).ok());
  // a x_* a is a x a
  EXPECT_EQ(count_arrows(pb.groupoid, 2), 16u);
  EXPECT_TRUE(audit_functor(pb.first, 2).ok());
  const auto m = mediating_functor(pb, identity_functor(a), identity_functor(a));
  EXPECT_TRUE(audit_functor(m, 2).ok());
}

TEST(Groupoid, FullInclusionKeepsOnlyChosenObjects) {
  const auto g = as_groupoid(indiscrete({"a", "b", "c"}));
  const auto inc = full_inclusion(g, {"a", "c"});
  EXPECT_EQ(inc.domain.objects().size(), 2u);
  EXPECT_EQ(count_arrows(inc.domain, 2), 4u);
  EXPECT_TRUE(audit_functor(inc, 2).ok());
}

TEST(Groupoid, ComposeOrThrow) {
  const auto g = as_groupoid(indiscrete({"a", "b"}));
  EXPECT_THROW((void)g.compose_or_throw("(a,b)", "(a,b)"), CompositionError);
  EXPECT_EQ(g.compose_or_throw("(a,b)", "(b,a)"), "(a,a)");
}

TEST(AuditReport, MergeAndWrite) {
  AuditReport r;
  r.expect(true, "x", "");
  r.expect(false, "y", "w");
  AuditReport s;
  s.merge(r, "p.");
  EXPECT_EQ(s.checks().at("p.x"), 1u);
  EXPECT_EQ(s.failures("p.y"), 1u);
  std::ostringstream os;
  s.write(os);
  EXPECT_NE(os.str().find("audit FAIL checks=2 violations=1"), std::string::npos);
}

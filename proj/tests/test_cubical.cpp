#include <gtest/gtest.h>

#include "dblgpd/cubical.hpp"

using namespace dblgpd;
using namespace dblgpd::cube;

namespace {

Signature generic() {
  Signature sig;
  for (int d = 0; d <= 3; ++d) sig.declare("x" + std::to_string(d), d);
  return sig;
}

TermPtr raw(Term::Kind kind, int dim, int index, Sign sign, TermPtr left, TermPtr right = {}) {
  Term t;
  t.kind = kind;
  t.dim = dim;
  t.index = index;
  t.sign = sign;
  t.left = std::move(left);
  t.right = std::move(right);
  return std::make_shared<const Term>(std::move(t));
}

Coord at(int num, int den) { return dyadic(num, den); }

}  // namespace

TEST(Cube, EvaluationFormulas) {
  const auto sig = generic();
  const auto x1 = gen(sig, "x1");
  const auto x2 = gen(sig, "x2");
  // Gamma-_1 is max, Gamma+_1 is min.
  EXPECT_EQ(evaluate(sig, conn(Sign::minus, 1, x1), {at(1, 4), at(3, 4)}),
            (Value{"x1", {at(3, 4)}}));
  EXPECT_EQ(evaluate(sig, conn(Sign::plus, 1, x1), {at(1, 4), at(3, 4)}),
            (Value{"x1", {at(1, 4)}}));
  EXPECT_EQ(evaluate(sig, inv(2, x2), {at(1, 8), at(1, 8)}), (Value{"x2", {at(1, 8), at(7, 8)}}));
  EXPECT_EQ(evaluate(sig, eps(1, x1), {at(1, 2), at(1, 4)}), (Value{"x1", {at(1, 4)}}));
  const auto y = comp(1, x1, inv(1, x1));
  EXPECT_EQ(evaluate(sig, y, {at(1, 4)}), (Value{"x1", {at(1, 2)}}));
  EXPECT_EQ(evaluate(sig, y, {at(3, 4)}), (Value{"x1", {at(1, 2)}}));
  EXPECT_THROW(evaluate(sig, x2, {at(1, 2)}), InputError);
  EXPECT_THROW(dyadic(1, 3), InputError);
}

TEST(Cube, DeclaredFacesEvaluate) {
  Signature sig;
  sig.declare("m", 0);
  sig.declare("a", 1, {{{1, Sign::minus}, gen(sig, "m")}});
  const auto a = gen(sig, "a");
  EXPECT_EQ(evaluate(sig, a, {0}), (Value{"m", {}}));
  EXPECT_EQ(evaluate(sig, a, {kOne}), (Value{"a", {kOne}}));
  EXPECT_THROW(sig.declare("a", 1), InputError);
  EXPECT_THROW(sig.declare("b", 1, {{{2, Sign::minus}, gen(sig, "m")}}), InputError);
  EXPECT_THROW(sig.declare("c", 2, {{{1, Sign::minus}, gen(sig, "m")}}), InputError);
}

TEST(Cube, SimplificationPreservesEvaluation) {
  const auto sig = generic();
  using K = Term::Kind;
  const auto x0 = gen(sig, "x0");
  const auto x1 = gen(sig, "x1");
  const auto x2 = gen(sig, "x2");
  std::vector<std::pair<TermPtr, TermPtr>> cases;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      cases.emplace_back(raw(K::degeneracy, 3, j, Sign::minus, raw(K::degeneracy, 2, i, Sign::minus, x1)),
                         eps(j, eps(i, x1)));
  for (Sign a : {Sign::minus, Sign::plus})
    for (int k = 1; k <= 2; ++k)
      for (int i = 1; i <= 2; ++i)
        cases.emplace_back(raw(K::connection, 3, i, a, raw(K::degeneracy, 2, k, Sign::minus, x1)),
                           conn(a, i, eps(k, x1)));
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= 3; ++i)
      cases.emplace_back(raw(K::inversion, 3, i, Sign::minus, raw(K::degeneracy, 3, k, Sign::minus, x2)),
                         inv(i, eps(k, x2)));
  cases.emplace_back(raw(K::inversion, 2, 1, Sign::minus, raw(K::inversion, 2, 1, Sign::minus, x2)),
                     inv(1, inv(1, x2)));
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 2; ++i)
      cases.emplace_back(raw(K::composition, 2, i, Sign::minus,
                             raw(K::degeneracy, 2, k, Sign::minus, x1),
                             raw(K::degeneracy, 2, k, Sign::minus, x1)),
                         comp(i, eps(k, x1), eps(k, x1)));
  cases.emplace_back(raw(K::composition, 1, 1, Sign::minus, eps(1, x0), eps(1, x0)),
                     comp(1, eps(1, x0), eps(1, x0)));
  for (const auto& [slow, fast] : cases) {
    std::string where;
    EXPECT_TRUE(equivalent(sig, slow, fast, 16, &where)) << to_sexpr(slow) << " at " << where;
  }
}

TEST(Cube, FacesOfOperators) {
  const auto sig = generic();
  const auto x1 = gen(sig, "x1");
  const auto g = conn(Sign::minus, 1, x1);
  EXPECT_EQ(to_sexpr(face(sig, g, 1, Sign::minus)), "x1");
  EXPECT_EQ(to_sexpr(face(sig, g, 2, Sign::minus)), "x1");
  EXPECT_EQ(to_sexpr(face(sig, g, 1, Sign::plus)), "(eps 1 (face x1 1+))");
  const auto h = conn(Sign::plus, 1, x1);
  EXPECT_EQ(to_sexpr(face(sig, h, 1, Sign::plus)), "x1");
  EXPECT_EQ(to_sexpr(face(sig, h, 2, Sign::minus)), "(eps 1 (face x1 1-))");
  EXPECT_EQ(to_sexpr(face(sig, inv(1, x1), 1, Sign::minus)), "(face x1 1+)");
}

TEST(Cube, CompositionChecksFaces) {
  const auto sig = generic();
  const auto x1 = gen(sig, "x1");
  EXPECT_THROW(compose_checked(sig, 1, x1, x1), CompositionError);
  EXPECT_NO_THROW(compose_checked(sig, 1, x1, inv(1, x1)));
  const auto x2 = gen(sig, "x2");
  EXPECT_THROW(matrix_composite(sig, {{x2, x2}, {x2, x2}}, 1, 2), CompositionError);
}

TEST(Cube, SexprRoundTrip) {
  const auto sig = generic();
  const auto t = comp(2, conn(Sign::plus, 1, gen(sig, "x2")),
                      inv(3, eps(2, face(sig, gen(sig, "x3"), 3, Sign::minus))));
  const auto text = to_sexpr(t);
  EXPECT_EQ(to_sexpr(parse_sexpr(sig, text)), text);
  EXPECT_THROW(parse_sexpr(sig, "(comp 1 x1"), InputError);
  EXPECT_THROW(parse_sexpr(sig, "(face x2 9+)"), InputError);
  EXPECT_THROW(parse_sexpr(sig, "unknown"), InputError);
}

TEST(Cube, EquivalenceSeesDifferences) {
  const auto sig = generic();
  const auto x2 = gen(sig, "x2");
  std::string where;
  EXPECT_FALSE(equivalent(sig, x2, inv(1, x2), 16, &where));
  EXPECT_FALSE(where.empty());
  EXPECT_FALSE(equivalent(sig, conn(Sign::minus, 1, gen(sig, "x1")),
                          conn(Sign::plus, 1, gen(sig, "x1"))));
  EXPECT_TRUE(equivalent(sig, x2, inv(1, inv(1, x2))));
}

TEST(Cube, LawTableAndRandomTerms) {
  EXPECT_TRUE(check_law_table(16).ok());
  const auto r = check_random_terms(60, 3, 8);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks().at("random.sexpr_round_trip"), 60u);
}

TEST(Cube, MovedAndFilledHomotopies) {
  EXPECT_TRUE(audit_hprime(false, 16).ok());
  EXPECT_TRUE(audit_hprime(true, 16).ok());
  EXPECT_TRUE(audit_lambda2prime(16).ok());
}

TEST(Cube, WrongConnectionBreaksTheMovedHomotopy) {
  // With the min connection in place of max, the bottom face of the corner
  // square is theta instead of a double identity.
  Signature sig;
  sig.declare("m", 0);
  const auto m1 = constant(gen(sig, "m"), 1);
  sig.declare("theta", 2,
              {{{1, Sign::minus}, m1}, {{1, Sign::plus}, m1}, {{2, Sign::minus}, m1},
               {{2, Sign::plus}, m1}});
  const auto theta = gen(sig, "theta");
  const auto right = conn(Sign::minus, 1, theta);
  const auto wrong = conn(Sign::plus, 1, theta);
  const auto box = constant(gen(sig, "m"), 2);
  EXPECT_TRUE(equivalent(sig, face(sig, right, 1, Sign::plus), box));
  EXPECT_FALSE(equivalent(sig, face(sig, wrong, 1, Sign::plus), box));
}

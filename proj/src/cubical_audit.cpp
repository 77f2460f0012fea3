#include <random>

#include "dblgpd/cubical.hpp"

namespace dblgpd::cube {

namespace {

std::vector<Coord> insert(const std::vector<Coord>& p, int i, Sign a) {
  auto q = p;
  q.insert(q.begin() + (i - 1), a == Sign::minus ? 0 : kOne);
  return q;
}

/// face(t, i, a) evaluated on the grid against t evaluated on the face.
bool face_matches_restriction(const Signature& sig, const TermPtr& t, int i, Sign a,
                              int resolution, std::string* witness) {
  const auto f = face(sig, t, i, a);
  for (const auto& p : grid(t->dim - 1, resolution)) {
    if (evaluate(sig, f, p) != evaluate(sig, t, insert(p, i, a))) {
      if (witness) *witness = show_point(p);
      return false;
    }
  }
  return true;
}

std::string face_label(const TermPtr& t, int i, Sign a) {
  return "d" + std::to_string(i) + sign_name(a) + " " + to_sexpr(t);
}

void check_all_faces(const Signature& sig, const TermPtr& t, const std::string& law,
                     int resolution, AuditReport& report) {
  for (int i = 1; i <= t->dim; ++i) {
    for (Sign a : {Sign::minus, Sign::plus}) {
      std::string where;
      report.expect(face_matches_restriction(sig, t, i, a, resolution, &where), law,
                    face_label(t, i, a) + " at " + where);
    }
  }
}

void expect_equivalent(const Signature& sig, const TermPtr& a, const TermPtr& b,
                       const std::string& law, int resolution, AuditReport& report) {
  std::string where;
  report.expect(equivalent(sig, a, b, resolution, &where), law,
                to_sexpr(a) + " vs " + to_sexpr(b) + " at " + where);
}

std::string x_name(int dim) { return "x" + std::to_string(dim); }

}  // namespace

AuditReport check_declarations(const Signature& sig, int resolution) {
  AuditReport report;
  for (const auto& [name, g] : sig.generators()) {
    for (const auto& [k1, d1] : g.faces) {
      for (const auto& [k2, d2] : g.faces) {
        if (k1.first >= k2.first) continue;
        // d_c d_c' x computed both ways, c < c'.
        const auto lhs = face(sig, d1, k2.first - 1, k2.second);
        const auto rhs = face(sig, d2, k1.first, k1.second);
        std::string where;
        report.expect(equivalent(sig, lhs, rhs, resolution, &where), "declarations.coherent",
                      name + " faces " + std::to_string(k1.first) + sign_name(k1.second) +
                          " and " + std::to_string(k2.first) + sign_name(k2.second) + " at " +
                          where);
      }
    }
  }
  return report;
}

AuditReport check_law_table(int resolution) {
  Signature sig;
  for (int d = 0; d <= 3; ++d) sig.declare(x_name(d), d);
  // y{n}_{j} starts where x{n} ends in direction j.
  for (int n = 1; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      sig.declare("y" + std::to_string(n) + "_" + std::to_string(j), n,
                  {{{j, Sign::minus}, face(sig, gen(sig, x_name(n)), j, Sign::plus)}});
    }
  }

  AuditReport report;
  auto check = [&](const TermPtr& t, int i, Sign a, const std::string& law) {
    std::string where;
    report.expect(face_matches_restriction(sig, t, i, a, resolution, &where), law,
                  face_label(t, i, a) + " at " + where);
  };

  for (int n = 1; n <= 3; ++n) check_all_faces(sig, gen(sig, x_name(n)), "law.generator", resolution, report);

  for (int n = 1; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto t = eps(j, gen(sig, x_name(n - 1)));
      for (int i = 1; i <= n; ++i)
        for (Sign a : {Sign::minus, Sign::plus})
          check(t, i, a, i < j ? "law.eps.i<j" : i == j ? "law.eps.i=j" : "law.eps.i>j");
    }
  }
  for (int n = 2; n <= 3; ++n) {
    for (int j = 1; j < n; ++j) {
      for (Sign alpha : {Sign::minus, Sign::plus}) {
        const auto t = conn(alpha, j, gen(sig, x_name(n - 1)));
        const std::string op = std::string("law.conn") + sign_name(alpha);
        for (int i = 1; i <= n; ++i) {
          for (Sign a : {Sign::minus, Sign::plus}) {
            const std::string which = i < j        ? ".i<j"
                                      : i == j     ? ".i=j"
                                      : i == j + 1 ? ".i=j+1"
                                                   : ".i>j+1";
            check(t, i, a, op + which);
          }
        }
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto t = inv(j, gen(sig, x_name(n)));
      for (int i = 1; i <= n; ++i)
        for (Sign a : {Sign::minus, Sign::plus})
          check(t, i, a, i == j ? "law.inv.i=j" : "law.inv.i!=j");
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      const auto y = gen(sig, "y" + std::to_string(n) + "_" + std::to_string(j));
      const auto t = compose_checked(sig, j, gen(sig, x_name(n)), y);
      for (int i = 1; i <= n; ++i)
        for (Sign a : {Sign::minus, Sign::plus})
          check(t, i, a, i == j ? "law.comp.i=j" : "law.comp.i!=j");
    }
  }
  report.merge(check_declarations(sig, resolution), "law.");
  return report;
}

// ---------------------------------------------------------------------------
// Random terms

namespace {

class TermSampler {
 public:
  TermSampler(Signature& sig, std::uint64_t seed) : sig_(sig), rng_(seed) {}

  TermPtr sample(int dim, int depth) {
    if (depth == 0) return generator(dim);
    switch (roll(5)) {
      case 0:
        return generator(dim);
      case 1:
        if (dim >= 1) {
          const int i = 1 + roll(dim);
          return eps(i, sample(dim - 1, depth - 1));
        }
        return generator(dim);
      case 2:
        if (dim >= 2) {
          const Sign a = roll(2) ? Sign::plus : Sign::minus;
          const int i = 1 + roll(dim - 1);
          return conn(a, i, sample(dim - 1, depth - 1));
        }
        return generator(dim);
      case 3:
        if (dim >= 1) return inv(1 + roll(dim), sample(dim, depth - 1));
        return generator(dim);
      default: {
        if (dim == 0) return generator(dim);
        const int i = 1 + roll(dim);
        auto left = sample(dim, depth - 1);
        // A fresh right operand glued along the end of the left one.
        const std::string name = "g" + std::to_string(fresh_++);
        sig_.declare(name, dim, {{{i, Sign::minus}, face(sig_, left, i, Sign::plus)}});
        return comp(i, left, gen(sig_, name));
      }
    }
  }

 private:
  int roll(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  TermPtr generator(int dim) {
    if (roll(2) == 0) return gen(sig_, x_name(dim));
    const std::string name = "g" + std::to_string(fresh_++);
    sig_.declare(name, dim);
    return gen(sig_, name);
  }

  Signature& sig_;
  std::mt19937_64 rng_;
  int fresh_ = 0;
};

}  // namespace

AuditReport check_random_terms(std::size_t count, std::uint64_t seed, int resolution) {
  Signature sig;
  for (int d = 0; d <= 3; ++d) sig.declare(x_name(d), d);
  TermSampler sampler(sig, seed);
  std::mt19937_64 dims(seed ^ 0x9e3779b97f4a7c15ULL);
  AuditReport report;
  for (std::size_t k = 0; k < count; ++k) {
    const int dim = 1 + static_cast<int>(dims() % 3);
    const auto t = sampler.sample(dim, 3);
    check_all_faces(sig, t, "random.face", resolution, report);
    for (int j = 2; j <= t->dim; ++j) {
      for (int i = 1; i < j; ++i) {
        for (Sign a : {Sign::minus, Sign::plus}) {
          for (Sign b : {Sign::minus, Sign::plus}) {
            const auto lhs = face(sig, face(sig, t, j, b), i, a);
            const auto rhs = face(sig, face(sig, t, i, a), j - 1, b);
            expect_equivalent(sig, lhs, rhs, "random.face_commutation", resolution, report);
          }
        }
      }
    }
    const auto text = to_sexpr(t);
    const auto back = parse_sexpr(sig, text);
    report.expect(to_sexpr(back) == text && equivalent(sig, back, t, resolution),
                  "random.sexpr_round_trip", text);
  }
  report.merge(check_declarations(sig, resolution), "random.");
  return report;
}

// ---------------------------------------------------------------------------
// h'

AuditReport audit_hprime(bool degenerate_h, int resolution) {
  Signature sig;
  sig.declare("m", 0);
  const auto m = gen(sig, "m");
  const auto box = constant(m, 2);
  const auto m1 = constant(m, 1);
  TermPtr alpha_minus, alpha_plus, theta, k, h;
  if (degenerate_h) {
    alpha_minus = alpha_plus = theta = box;
    k = box;
    h = constant(m, 3);
  } else {
    sig.declare("a-", 1, {{{1, Sign::minus}, m}, {{1, Sign::plus}, m}});
    sig.declare("a+", 1, {{{1, Sign::minus}, m}, {{1, Sign::plus}, m}});
    for (const char* s : {"-", "+"}) {
      sig.declare(std::string("alpha") + s, 2,
                  {{{1, Sign::minus}, gen(sig, std::string("a") + s)},
                   {{1, Sign::plus}, m1},
                   {{2, Sign::minus}, m1},
                   {{2, Sign::plus}, m1}});
    }
    sig.declare("theta", 2,
                {{{1, Sign::minus}, m1}, {{1, Sign::plus}, m1}, {{2, Sign::minus}, m1},
                 {{2, Sign::plus}, m1}});
    sig.declare("k", 2,
                {{{1, Sign::minus}, m1},
                 {{1, Sign::plus}, m1},
                 {{2, Sign::minus}, gen(sig, "a-")},
                 {{2, Sign::plus}, gen(sig, "a+")}});
    sig.declare("h", 3,
                {{{1, Sign::minus}, gen(sig, "k")},
                 {{1, Sign::plus}, gen(sig, "theta")},
                 {{2, Sign::minus}, box},
                 {{2, Sign::plus}, box},
                 {{3, Sign::minus}, gen(sig, "alpha-")},
                 {{3, Sign::plus}, gen(sig, "alpha+")}});
    alpha_minus = gen(sig, "alpha-");
    alpha_plus = gen(sig, "alpha+");
    theta = gen(sig, "theta");
    k = gen(sig, "k");
    h = gen(sig, "h");
  }

  AuditReport report = check_declarations(sig, resolution);
  TermPtr hp;
  try {
    const auto corner = conn(Sign::minus, 1, theta);
    hp = matrix_composite(sig, {{eps(1, inv(1, theta)), h}, {inv(2, corner), corner}}, 1, 2);
    report.expect(true, "hprime.composable", "");
  } catch (const CompositionError& e) {
    report.fail("hprime.composable", e.what());
    return report;
  }
  const auto box3 = constant(m, 3);
  check_all_faces(sig, hp, "hprime.face_vs_restriction", resolution, report);

  for (Sign a : {Sign::minus, Sign::plus}) {
    const auto& alpha = a == Sign::minus ? alpha_minus : alpha_plus;
    const auto end = face(sig, hp, 3, a);
    const auto expected = matrix_composite(sig, {{box, alpha}, {box, box}}, 1, 2);
    expect_equivalent(sig, end, expected, std::string("hprime.end") + sign_name(a), resolution,
                      report);
    if (!degenerate_h) {
      // The displayed matrix survives the face literally: alpha sits top right.
      const bool placed = end->kind == Term::Kind::composition && end->index == 1 &&
                          end->left->kind == Term::Kind::composition &&
                          end->left->index == 2 && to_sexpr(end->left->right) == to_sexpr(alpha);
      report.expect(placed, std::string("hprime.position") + sign_name(a), to_sexpr(end));
    }
    expect_equivalent(sig, face(sig, hp, 2, a), box, std::string("hprime.side") + sign_name(a),
                      resolution, report);
  }
  expect_equivalent(sig, face(sig, hp, 1, Sign::plus), box, "hprime.bottom", resolution, report);
  expect_equivalent(sig, face(sig, hp, 1, Sign::minus),
                    compose_checked(sig, 1, inv(1, theta), k), "hprime.top", resolution, report);
  if (degenerate_h) expect_equivalent(sig, hp, box3, "hprime.degenerate", resolution, report);
  return report;
}

// ---------------------------------------------------------------------------
// lambda2'

AuditReport audit_lambda2prime(int resolution) {
  Signature sig;
  sig.declare("y0", 0);
  sig.declare("y1", 0);
  const auto y0 = gen(sig, "y0");
  const auto y1 = gen(sig, "y1");
  const auto c0 = constant(y0, 1);
  const auto c1 = constant(y1, 1);
  const auto box0 = constant(y0, 2);
  const auto box1 = constant(y1, 2);

  using Faces = std::map<std::pair<int, Sign>, TermPtr>;
  for (const char* p : {"qg", "qh", "qk", "qg'", "qh'", "qk'"})
    sig.declare(p, 1, {{{1, Sign::minus}, y0}, {{1, Sign::plus}, y1}});
  auto g = [&](const std::string& name) { return gen(sig, name); };
  // A homotopy rel end points from `from` to `to`, running in direction 1.
  auto across = [&](const std::string& from, const std::string& to) {
    return Faces{{{1, Sign::minus}, g(from)},
                 {{1, Sign::plus}, g(to)},
                 {{2, Sign::minus}, c0},
                 {{2, Sign::plus}, c1}};
  };
  // The same, running in direction 2.
  auto along = [&](const std::string& from, const std::string& to) {
    return Faces{{{1, Sign::minus}, c0},
                 {{1, Sign::plus}, c1},
                 {{2, Sign::minus}, g(from)},
                 {{2, Sign::plus}, g(to)}};
  };
  sig.declare("qxi", 2, across("qg", "qh"));
  sig.declare("qxi'", 2, across("qg'", "qh'"));
  sig.declare("beta", 2, across("qh", "qk"));
  sig.declare("beta'", 2, across("qh'", "qk'"));
  sig.declare("qkappa3", 2, along("qg", "qg'"));
  sig.declare("qlambda1", 2, along("qh", "qh'"));
  sig.declare("qlambda3", 2, along("qk", "qk'"));
  sig.declare("w", 2,
              {{{1, Sign::minus}, c1}, {{1, Sign::plus}, c1}, {{2, Sign::minus}, c1},
               {{2, Sign::plus}, c1}});
  const auto w = g("w");
  sig.declare("qzeta", 3,
              {{{1, Sign::minus}, g("qkappa3")},
               {{1, Sign::plus}, g("qlambda1")},
               {{2, Sign::minus}, box0},
               {{2, Sign::plus}, w},
               {{3, Sign::minus}, g("qxi")},
               {{3, Sign::plus}, g("qxi'")}});
  sig.declare("lambda2", 3,
              {{{1, Sign::minus}, g("qlambda1")},
               {{1, Sign::plus}, g("qlambda3")},
               {{2, Sign::minus}, box0},
               {{2, Sign::plus}, box1},
               {{3, Sign::minus}, g("beta")},
               {{3, Sign::plus}, g("beta'")}});
  // The filler as a generator, faces read off (s,t,u) -> w(min(s, 1-t), u).
  sig.declare("F", 3,
              {{{1, Sign::minus}, box1},
               {{1, Sign::plus}, inv(1, w)},
               {{2, Sign::minus}, w},
               {{2, Sign::plus}, box1},
               {{3, Sign::minus}, box1},
               {{3, Sign::plus}, box1}});

  AuditReport report = check_declarations(sig, resolution);

  const auto filler = inv(2, conn(Sign::plus, 1, w));
  for (int i = 1; i <= 3; ++i) {
    for (Sign a : {Sign::minus, Sign::plus}) {
      expect_equivalent(sig, face(sig, g("F"), i, a), face(sig, filler, i, a),
                        "filler.faces", resolution, report);
    }
  }
  bool formula = true;
  std::string where;
  for (const auto& p : grid(3, resolution)) {
    const std::vector<Coord> q{std::min(p[0], kOne - p[1]), p[2]};
    if (evaluate(sig, filler, p) != evaluate(sig, w, q)) {
      formula = false;
      where = show_point(p);
      break;
    }
  }
  report.expect(formula, "filler.formula", "at " + where);

  const auto e = eps(1, inv(1, w));
  TermPtr lp;
  try {
    lp = matrix_composite(sig, {{g("qzeta"), filler}, {g("lambda2"), e}}, 1, 2);
    report.expect(true, "lambda2prime.composable", "");
  } catch (const CompositionError& err) {
    report.fail("lambda2prime.composable", err.what());
    return report;
  }
  check_all_faces(sig, lp, "lambda2prime.face_vs_restriction", resolution, report);

  const auto start = compose_checked(sig, 2, compose_checked(sig, 1, g("qxi"), g("beta")), box1);
  const auto finish =
      compose_checked(sig, 2, compose_checked(sig, 1, g("qxi'"), g("beta'")), box1);
  expect_equivalent(sig, face(sig, lp, 3, Sign::minus), start, "lambda2prime.end-", resolution,
                    report);
  expect_equivalent(sig, face(sig, lp, 3, Sign::plus), finish, "lambda2prime.end+", resolution,
                    report);
  expect_equivalent(sig, face(sig, lp, 1, Sign::minus),
                    compose_checked(sig, 1, g("qkappa3"), box1), "lambda2prime.top", resolution,
                    report);
  expect_equivalent(sig, face(sig, lp, 1, Sign::plus),
                    compose_checked(sig, 1, g("qlambda3"), inv(1, w)), "lambda2prime.bottom",
                    resolution, report);
  expect_equivalent(sig, face(sig, lp, 2, Sign::minus), box0, "lambda2prime.side-", resolution,
                    report);
  expect_equivalent(sig, face(sig, lp, 2, Sign::plus), box1, "lambda2prime.side+", resolution,
                    report);
  return report;
}

}  // namespace dblgpd::cube

#pragma once

// Computable groupoids: a finite object set, arrows with canonical normal
// forms (so operator== is the equality of the groupoid), and bounded
// enumeration of hom-sets. Infinite groupoids such as free groupoids on
// graphs are only ever touched through `homset` / `arrows_from` with an
// explicit bound.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dblgpd/describe.hpp"
#include "dblgpd/report.hpp"

namespace dblgpd {

/// Raised when an operation is applied to arrows that are not composable
/// where the caller required them to be.
class CompositionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for malformed input: unknown names, ill-formed words.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction's precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Type-erased computable groupoid. Composition is diagrammatic:
/// `compose(a, b)` is "a then b" and is defined iff target(a) == source(b);
/// otherwise it returns std::nullopt.
template <class Object, class Arrow>
struct Groupoid {
  using object_type = Object;
  using arrow_type = Arrow;

  std::function<std::vector<Object>()> objects;
  std::function<Object(const Arrow&)> source;
  std::function<Object(const Arrow&)> target;
  std::function<Arrow(const Object&)> identity;
  std::function<std::optional<Arrow>(const Arrow&, const Arrow&)> compose;
  std::function<Arrow(const Arrow&)> inverse;
  /// All arrows x -> y whose length measure is at most `bound`, sorted.
  std::function<std::vector<Arrow>(const Object&, const Object&, std::size_t)> homset;
  /// All arrows out of x whose length measure is at most `bound`, sorted.
  std::function<std::vector<Arrow>(const Object&, std::size_t)> arrows_from;
  std::function<std::string(const Object&)> show_object;
  std::function<std::string(const Arrow&)> show_arrow;

  /// Composition that throws instead of returning nullopt.
  Arrow compose_or_throw(const Arrow& a, const Arrow& b) const {
    auto c = compose(a, b);
    if (!c) {
      throw CompositionError("not composable: " + show_arrow(a) + " then " + show_arrow(b));
    }
    return *std::move(c);
  }
};

/// Fills in whichever of homset / arrows_from is missing and default
/// printers. Every constructor in this library goes through it.
template <class O, class A>
Groupoid<O, A> complete(Groupoid<O, A> g) {
  if (!g.show_object) g.show_object = [](const O& o) { return describe(o); };
  if (!g.show_arrow) g.show_arrow = [](const A& a) { return describe(a); };
  if (!g.arrows_from && g.homset) {
    g.arrows_from = [objects = g.objects, homset = g.homset](const O& x, std::size_t bound) {
      std::vector<A> out;
      for (const auto& y : objects()) {
        auto h = homset(x, y, bound);
        out.insert(out.end(), h.begin(), h.end());
      }
      return out;
    };
  }
  if (!g.homset && g.arrows_from) {
    g.homset = [from = g.arrows_from, target = g.target](const O& x, const O& y,
                                                         std::size_t bound) {
      std::vector<A> out;
      for (auto& a : from(x, bound))
        if (target(a) == y) out.push_back(std::move(a));
      return out;
    };
  }
  return g;
}

template <class O1, class A1, class O2, class A2>
struct GroupoidFunctor {
  Groupoid<O1, A1> domain;
  Groupoid<O2, A2> codomain;
  std::function<O2(const O1&)> on_objects;
  std::function<A2(const A1&)> on_arrows;
};

template <class O, class A>
GroupoidFunctor<O, A, O, A> identity_functor(const Groupoid<O, A>& g) {
  return {g, g, [](const O& o) { return o; }, [](const A& a) { return a; }};
}

template <class O1, class A1, class O2, class A2, class O3, class A3>
GroupoidFunctor<O1, A1, O3, A3> compose_functors(const GroupoidFunctor<O1, A1, O2, A2>& f,
                                                const GroupoidFunctor<O2, A2, O3, A3>& g) {
  return {f.domain, g.codomain,
          [fo = f.on_objects, go = g.on_objects](const O1& o) { return go(fo(o)); },
          [fa = f.on_arrows, ga = g.on_arrows](const A1& a) { return ga(fa(a)); }};
}

// ---------------------------------------------------------------------------
// Auditing

/// Checks the groupoid axioms on every arrow of length <= bound, every
/// composable pair and every composable triple drawn from that set.
template <class O, class A>
AuditReport audit_groupoid(const Groupoid<O, A>& g, std::size_t bound) {
  AuditReport report;
  const auto objects = g.objects();
  std::map<O, std::vector<A>> out;
  for (const auto& x : objects) out[x] = g.arrows_from(x, bound);

  for (const auto& x : objects) {
    const A id = g.identity(x);
    report.expect(g.source(id) == x && g.target(id) == x, "identity.boundary", g.show_object(x));
  }

  for (const auto& x : objects) {
    for (const auto& a : out[x]) {
      const std::string sa = g.show_arrow(a);
      report.expect(g.source(a) == x, "enumeration.source", sa);
      const O y = g.target(a);
      auto left = g.compose(g.identity(x), a);
      auto right = g.compose(a, g.identity(y));
      report.expect(left && *left == a, "unit.left", sa);
      report.expect(right && *right == a, "unit.right", sa);

      const A inv = g.inverse(a);
      report.expect(g.source(inv) == y && g.target(inv) == x, "inverse.boundary", sa);
      auto ai = g.compose(a, inv);
      auto ia = g.compose(inv, a);
      report.expect(ai && *ai == g.identity(x), "inverse.right", sa);
      report.expect(ia && *ia == g.identity(y), "inverse.left", sa);

      for (const auto& z : objects) {
        if (z == y) continue;
        report.expect(!g.compose(a, g.identity(z)), "composable.undefined",
                      sa + " then id(" + g.show_object(z) + ")");
      }

      for (const auto& b : out[y]) {
        auto ab = g.compose(a, b);
        const std::string pair = sa + " ; " + g.show_arrow(b);
        if (!report.expect(ab.has_value(), "composable.defined", pair)) continue;
        report.expect(g.source(*ab) == x && g.target(*ab) == g.target(b), "compose.boundary",
                      pair);
        for (const auto& c : out[g.target(b)]) {
          auto bc = g.compose(b, c);
          auto lhs = g.compose(*ab, c);
          auto rhs = bc ? g.compose(a, *bc) : std::nullopt;
          report.expect(lhs && rhs && *lhs == *rhs, "associativity",
                        pair + " ; " + g.show_arrow(c));
        }
      }
    }
  }
  return report;
}

/// Checks that F preserves boundaries, identities and composition on
/// arrows of length <= bound.
template <class O1, class A1, class O2, class A2>
AuditReport audit_functor(const GroupoidFunctor<O1, A1, O2, A2>& f, std::size_t bound) {
  AuditReport report;
  const auto& d = f.domain;
  const auto& c = f.codomain;
  for (const auto& x : d.objects()) {
    report.expect(f.on_arrows(d.identity(x)) == c.identity(f.on_objects(x)),
                  "functor.identity", d.show_object(x));
    for (const auto& a : d.arrows_from(x, bound)) {
      const A2 fa = f.on_arrows(a);
      report.expect(c.source(fa) == f.on_objects(d.source(a)) &&
                        c.target(fa) == f.on_objects(d.target(a)),
                    "functor.boundary", d.show_arrow(a));
      report.expect(f.on_arrows(d.inverse(a)) == c.inverse(fa), "functor.inverse",
                    d.show_arrow(a));
      for (const auto& b : d.arrows_from(d.target(a), bound)) {
        auto ab = d.compose(a, b);
        auto fab = c.compose(fa, f.on_arrows(b));
        report.expect(ab && fab && f.on_arrows(*ab) == *fab, "functor.composition",
                      d.show_arrow(a) + " ; " + d.show_arrow(b));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Constructions

/// Componentwise product; the length measure of a pair is the max of the
/// component lengths.
template <class O1, class A1, class O2, class A2>
Groupoid<std::pair<O1, O2>, std::pair<A1, A2>> product(const Groupoid<O1, A1>& g,
                                                        const Groupoid<O2, A2>& h) {
  using O = std::pair<O1, O2>;
  using A = std::pair<A1, A2>;
  Groupoid<O, A> p;
  p.objects = [g, h] {
    std::vector<O> out;
    const auto ho = h.objects();
    for (const auto& x : g.objects())
      for (const auto& y : ho) out.emplace_back(x, y);
    return out;
  };
  p.source = [g, h](const A& a) { return O{g.source(a.first), h.source(a.second)}; };
  p.target = [g, h](const A& a) { return O{g.target(a.first), h.target(a.second)}; };
  p.identity = [g, h](const O& x) { return A{g.identity(x.first), h.identity(x.second)}; };
  p.compose = [g, h](const A& a, const A& b) -> std::optional<A> {
    auto l = g.compose(a.first, b.first);
    auto r = h.compose(a.second, b.second);
    if (!l || !r) return std::nullopt;
    return A{*std::move(l), *std::move(r)};
  };
  p.inverse = [g, h](const A& a) { return A{g.inverse(a.first), h.inverse(a.second)}; };
  p.homset = [g, h](const O& x, const O& y, std::size_t bound) {
    std::vector<A> out;
    const auto right = h.homset(x.second, y.second, bound);
    for (const auto& l : g.homset(x.first, y.first, bound))
      for (const auto& r : right) out.emplace_back(l, r);
    return out;
  };
  p.arrows_from = [g, h](const O& x, std::size_t bound) {
    std::vector<A> out;
    const auto right = h.arrows_from(x.second, bound);
    for (const auto& l : g.arrows_from(x.first, bound))
      for (const auto& r : right) out.emplace_back(l, r);
    std::sort(out.begin(), out.end());
    return out;
  };
  p.show_object = [g, h](const O& x) {
    return "(" + g.show_object(x.first) + ", " + h.show_object(x.second) + ")";
  };
  p.show_arrow = [g, h](const A& a) {
    return "(" + g.show_arrow(a.first) + ", " + h.show_arrow(a.second) + ")";
  };
  return p;
}

template <class AO, class AA, class BO, class BA>
struct Pullback {
  using Object = std::pair<AO, BO>;
  using Arrow = std::pair<AA, BA>;
  Groupoid<Object, Arrow> groupoid;
  GroupoidFunctor<Object, Arrow, AO, AA> first;
  GroupoidFunctor<Object, Arrow, BO, BA> second;
};

/// Pullback of F: A -> C and G: B -> C. Objects are pairs with equal
/// images, arrows are pairs of arrows with equal images.
template <class AO, class AA, class BO, class BA, class CO, class CA>
Pullback<AO, AA, BO, BA> pullback(const GroupoidFunctor<AO, AA, CO, CA>& f,
                                  const GroupoidFunctor<BO, BA, CO, CA>& g) {
  using O = std::pair<AO, BO>;
  using A = std::pair<AA, BA>;
  const auto pa = f.domain;
  const auto pb = g.domain;
  const auto fo = f.on_objects;
  const auto fa = f.on_arrows;
  const auto go = g.on_objects;
  const auto ga = g.on_arrows;

  const auto prod = product(pa, pb);
  Groupoid<O, A> p = prod;
  p.objects = [pa, pb, fo, go] {
    std::vector<O> out;
    const auto bo = pb.objects();
    for (const auto& x : pa.objects())
      for (const auto& y : bo)
        if (fo(x) == go(y)) out.emplace_back(x, y);
    return out;
  };
  p.homset = [prod, fa, ga](const O& x, const O& y, std::size_t bound) {
    auto all = prod.homset(x, y, bound);
    std::erase_if(all, [&](const A& a) { return !(fa(a.first) == ga(a.second)); });
    return all;
  };
  p.arrows_from = [prod, fa, ga](const O& x, std::size_t bound) {
    auto all = prod.arrows_from(x, bound);
    std::erase_if(all, [&](const A& a) { return !(fa(a.first) == ga(a.second)); });
    return all;
  };
  Pullback<AO, AA, BO, BA> result;
  result.groupoid = p;
  result.first = {p, pa, [](const O& o) { return o.first; }, [](const A& a) { return a.first; }};
  result.second = {p, pb, [](const O& o) { return o.second; },
                   [](const A& a) { return a.second; }};
  return result;
}

/// The mediating functor of a cone (f: P -> A, g: P -> B) into a pullback,
/// assembled pairwise.
template <class PO, class PA, class AO, class AA, class BO, class BA>
GroupoidFunctor<PO, PA, std::pair<AO, BO>, std::pair<AA, BA>> mediating_functor(
    const Pullback<AO, AA, BO, BA>& pb, const GroupoidFunctor<PO, PA, AO, AA>& f,
    const GroupoidFunctor<PO, PA, BO, BA>& g) {
  return {f.domain, pb.groupoid,
          [fo = f.on_objects, go = g.on_objects](const PO& o) {
            return std::pair<AO, BO>{fo(o), go(o)};
          },
          [fa = f.on_arrows, ga = g.on_arrows](const PA& a) {
            return std::pair<AA, BA>{fa(a), ga(a)};
          }};
}

/// Full subgroupoid on a subset of objects, with its inclusion functor.
template <class O, class A>
GroupoidFunctor<O, A, O, A> full_inclusion(const Groupoid<O, A>& g, std::vector<O> keep) {
  std::sort(keep.begin(), keep.end());
  auto shared = std::make_shared<const std::vector<O>>(std::move(keep));
  auto member = [shared](const O& o) {
    return std::binary_search(shared->begin(), shared->end(), o);
  };
  Groupoid<O, A> sub = g;
  sub.objects = [shared] { return *shared; };
  sub.homset = [g, member](const O& x, const O& y, std::size_t bound) {
    if (!member(x) || !member(y)) return std::vector<A>{};
    return g.homset(x, y, bound);
  };
  sub.arrows_from = [g, member](const O& x, std::size_t bound) {
    if (!member(x)) return std::vector<A>{};
    auto all = g.arrows_from(x, bound);
    std::erase_if(all, [&](const A& a) { return !member(g.target(a)); });
    return all;
  };
  return {sub, g, [](const O& o) { return o; }, [](const A& a) { return a; }};
}

/// Count of arrows of length <= bound, summed over all objects.
template <class O, class A>
std::size_t count_arrows(const Groupoid<O, A>& g, std::size_t bound) {
  std::size_t n = 0;
  for (const auto& x : g.objects()) n += g.arrows_from(x, bound).size();
  return n;
}

}  // namespace dblgpd

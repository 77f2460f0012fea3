#pragma once

// Double groupoids as internal groupoids in groupoids.
//
// Conventions: direction 1 is vertical and is realized by `compose1` (the
// structure map m); direction 2 is horizontal and is the composition of the
// square groupoid G1. For a square u:
//
//            d1-(u)
//        x ---------> y
//        |            |
//  d2-(u)|     u      |d2+(u)
//        v            v
//        x' --------> y'
//            d1+(u)
//
// a o1 b needs d1+(a) == d1-(b); a o2 b needs d2+(a) == d2-(b).

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dblgpd/groupoid.hpp"
#include "dblgpd/report.hpp"

namespace dblgpd {

enum class Sign { minus, plus };

inline const char* sign_name(Sign s) { return s == Sign::minus ? "-" : "+"; }

struct AuditConfig {
  std::size_t bound = 3;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
};

template <class Obj, class H, class V, class Sq>
struct DoubleGroupoid {
  using object_type = Obj;
  using horizontal_type = H;
  using vertical_type = V;
  using square_type = Sq;

  Groupoid<Obj, H> horizontal;           // G0
  Groupoid<V, Sq> squares;               // G1, composition is o2
  GroupoidFunctor<V, Sq, Obj, H> source; // s: d1-
  GroupoidFunctor<V, Sq, Obj, H> target; // t: d1+
  GroupoidFunctor<Obj, H, V, Sq> unit;   // e: eps1
  std::function<std::optional<V>(const V&, const V&)> compose_vertical;
  std::function<V(const V&)> inverse_vertical;
  std::function<std::optional<Sq>(const Sq&, const Sq&)> compose1;
  std::function<Sq(const Sq&)> inverse1;

  [[nodiscard]] H d1(Sign s, const Sq& u) const {
    return s == Sign::minus ? source.on_arrows(u) : target.on_arrows(u);
  }
  [[nodiscard]] V d2(Sign s, const Sq& u) const {
    return s == Sign::minus ? squares.source(u) : squares.target(u);
  }
  [[nodiscard]] std::optional<Sq> compose2(const Sq& a, const Sq& b) const {
    return squares.compose(a, b);
  }
  [[nodiscard]] Sq inverse2(const Sq& u) const { return squares.inverse(u); }
  [[nodiscard]] Sq eps1(const H& h) const { return unit.on_arrows(h); }
  [[nodiscard]] Sq eps2(const V& v) const { return squares.identity(v); }

  [[nodiscard]] Sq compose1_or_throw(const Sq& a, const Sq& b) const {
    auto c = compose1(a, b);
    if (!c) {
      throw CompositionError("not vertically composable: " + squares.show_arrow(a) + " over " +
                             squares.show_arrow(b));
    }
    return *std::move(c);
  }
  [[nodiscard]] Sq compose2_or_throw(const Sq& a, const Sq& b) const {
    return squares.compose_or_throw(a, b);
  }

  /// Vertical arrows as a groupoid over the same objects. Vertical arrow
  /// sets are finite, so the bound is ignored.
  [[nodiscard]] Groupoid<Obj, V> vertical() const {
    Groupoid<Obj, V> g;
    g.objects = horizontal.objects;
    g.source = source.on_objects;
    g.target = target.on_objects;
    g.identity = unit.on_objects;
    g.compose = compose_vertical;
    g.inverse = inverse_vertical;
    g.arrows_from = [all = squares.objects, s = source.on_objects](const Obj& x, std::size_t) {
      std::vector<V> out;
      for (auto& v : all())
        if (s(v) == x) out.push_back(std::move(v));
      std::sort(out.begin(), out.end());
      return out;
    };
    g.show_object = horizontal.show_object;
    g.show_arrow = squares.show_object;
    return complete(g);
  }

  /// Every square whose o2-length is at most bound.
  [[nodiscard]] std::vector<Sq> all_squares(std::size_t bound) const {
    std::vector<Sq> out;
    for (const auto& v : squares.objects()) {
      auto from = squares.arrows_from(v, bound);
      out.insert(out.end(), from.begin(), from.end());
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Auditing

namespace detail {

template <class Obj, class H, class V, class Sq>
void audit_compose1(const DoubleGroupoid<Obj, H, V, Sq>& d, const std::vector<Sq>& all,
                    const std::map<H, std::vector<Sq>>& by_top, AuditReport& report) {
  const auto show = d.squares.show_arrow;
  const auto objects = d.horizontal.objects();
  auto starting_at = [&](const H& h) -> const std::vector<Sq>& {
    static const std::vector<Sq> none;
    auto it = by_top.find(h);
    return it == by_top.end() ? none : it->second;
  };

  for (const auto& a : all) {
    const std::string sa = show(a);
    const H top = d.d1(Sign::minus, a);
    const H bottom = d.d1(Sign::plus, a);

    auto up = d.compose1(d.eps1(top), a);
    auto down = d.compose1(a, d.eps1(bottom));
    report.expect(up && *up == a, "compose1.unit.left", sa);
    report.expect(down && *down == a, "compose1.unit.right", sa);

    const Sq inv = d.inverse1(a);
    report.expect(d.d1(Sign::minus, inv) == bottom && d.d1(Sign::plus, inv) == top,
                  "compose1.inverse.boundary", sa);
    auto ai = d.compose1(a, inv);
    auto ia = d.compose1(inv, a);
    report.expect(ai && *ai == d.eps1(top), "compose1.inverse.right", sa);
    report.expect(ia && *ia == d.eps1(bottom), "compose1.inverse.left", sa);

    for (const auto& x : objects) {
      const H id = d.horizontal.identity(x);
      if (id == bottom) continue;
      report.expect(!d.compose1(a, d.eps1(id)), "compose1.undefined",
                    sa + " over eps1(" + d.horizontal.show_arrow(id) + ")");
      break;
    }

    for (const auto& b : starting_at(bottom)) {
      const std::string pair = sa + " over " + show(b);
      auto ab = d.compose1(a, b);
      if (!report.expect(ab.has_value(), "compose1.defined", pair)) continue;
      auto left = d.compose_vertical(d.d2(Sign::minus, a), d.d2(Sign::minus, b));
      auto right = d.compose_vertical(d.d2(Sign::plus, a), d.d2(Sign::plus, b));
      report.expect(d.d1(Sign::minus, *ab) == top &&
                        d.d1(Sign::plus, *ab) == d.d1(Sign::plus, b) && left && right &&
                        d.d2(Sign::minus, *ab) == *left && d.d2(Sign::plus, *ab) == *right,
                    "compose1.boundary", pair);
      for (const auto& c : starting_at(d.d1(Sign::plus, b))) {
        auto bc = d.compose1(b, c);
        auto lhs = d.compose1(*ab, c);
        auto rhs = bc ? d.compose1(a, *bc) : std::nullopt;
        report.expect(lhs && rhs && *lhs == *rhs, "compose1.associativity",
                      pair + " over " + show(c));
      }
    }
  }
}

template <class Obj, class H, class V, class Sq>
void check_interchange(const DoubleGroupoid<Obj, H, V, Sq>& d, const Sq& a, const Sq& b,
                       const Sq& c, const Sq& e, const std::string& law, AuditReport& report) {
  const auto show = d.squares.show_arrow;
  auto ab = d.compose2(a, b);
  auto ce = d.compose2(c, e);
  auto ac = d.compose1(a, c);
  auto be = d.compose1(b, e);
  std::optional<Sq> rows = ab && ce ? d.compose1(*ab, *ce) : std::nullopt;
  std::optional<Sq> cols = ac && be ? d.compose2(*ac, *be) : std::nullopt;
  report.expect(rows && cols && *rows == *cols, law,
                "[[" + show(a) + ", " + show(b) + "], [" + show(c) + ", " + show(e) + "]]");
}

}  // namespace detail

/// Bounded audit of every double-groupoid axiom. All squares of o2-length
/// <= bound are enumerated and every law instance among them is checked;
/// `samples` further 2x2 arrays are then drawn at random from squares of
/// length <= bound + 2.
template <class Obj, class H, class V, class Sq>
AuditReport audit_double_groupoid(const DoubleGroupoid<Obj, H, V, Sq>& d,
                                  const AuditConfig& config) {
  const std::size_t bound = config.bound;
  AuditReport report;
  report.merge(audit_groupoid(d.horizontal, bound), "horizontal.");
  report.merge(audit_groupoid(d.squares, bound), "squares.");
  const auto vertical = d.vertical();
  report.merge(audit_groupoid(vertical, bound), "vertical.");
  report.merge(audit_functor(d.source, bound), "s.");
  report.merge(audit_functor(d.target, bound), "t.");
  report.merge(audit_functor(d.unit, bound), "e.");

  for (const auto& x : d.horizontal.objects()) {
    const V ex = d.unit.on_objects(x);
    report.expect(d.source.on_objects(ex) == x && d.target.on_objects(ex) == x,
                  "unit.section.objects", d.horizontal.show_object(x));
    for (const auto& h : d.horizontal.arrows_from(x, bound)) {
      const Sq eh = d.eps1(h);
      report.expect(d.d1(Sign::minus, eh) == h && d.d1(Sign::plus, eh) == h,
                    "unit.section.arrows", d.horizontal.show_arrow(h));
    }
  }

  // m restricted to identities: eps2(v) o1 eps2(w) = eps2(v w).
  for (const auto& x : d.horizontal.objects()) {
    for (const auto& v : vertical.arrows_from(x, bound)) {
      for (const auto& w : vertical.arrows_from(vertical.target(v), bound)) {
        auto vw = d.compose_vertical(v, w);
        auto lhs = d.compose1(d.eps2(v), d.eps2(w));
        report.expect(vw && lhs && *lhs == d.eps2(*vw), "compose1.identities",
                      vertical.show_arrow(v) + " ; " + vertical.show_arrow(w));
      }
    }
  }

  const auto all = d.all_squares(bound);
  std::map<H, std::vector<Sq>> by_top;
  std::map<V, std::vector<Sq>> by_left;
  for (const auto& u : all) {
    by_top[d.d1(Sign::minus, u)].push_back(u);
    by_left[d.d2(Sign::minus, u)].push_back(u);
  }
  for (const auto& u : all) {
    report.expect(d.horizontal.source(d.d1(Sign::minus, u)) ==
                          vertical.source(d.d2(Sign::minus, u)) &&
                      d.horizontal.target(d.d1(Sign::minus, u)) ==
                          vertical.source(d.d2(Sign::plus, u)) &&
                      d.horizontal.source(d.d1(Sign::plus, u)) ==
                          vertical.target(d.d2(Sign::minus, u)) &&
                      d.horizontal.target(d.d1(Sign::plus, u)) ==
                          vertical.target(d.d2(Sign::plus, u)),
                  "square.corners", d.squares.show_arrow(u));
  }
  detail::audit_compose1(d, all, by_top, report);

  // Exhaustive interchange on 2x2 arrays [[a, b], [c, e]].
  for (const auto& a : all) {
    const auto b_it = by_left.find(d.d2(Sign::plus, a));
    if (b_it == by_left.end()) continue;
    const auto c_it = by_top.find(d.d1(Sign::plus, a));
    if (c_it == by_top.end()) continue;
    for (const auto& b : b_it->second) {
      const auto e_it = by_top.find(d.d1(Sign::plus, b));
      if (e_it == by_top.end()) continue;
      for (const auto& c : c_it->second) {
        const V right = d.d2(Sign::plus, c);
        for (const auto& e : e_it->second) {
          if (!(d.d2(Sign::minus, e) == right)) continue;
          detail::check_interchange(d, a, b, c, e, "interchange", report);
        }
      }
    }
  }

  if (config.samples > 0) {
    const auto pool = d.all_squares(bound + 2);
    std::map<H, std::vector<Sq>> pool_top;
    std::map<V, std::vector<Sq>> pool_left;
    for (const auto& u : pool) {
      pool_top[d.d1(Sign::minus, u)].push_back(u);
      pool_left[d.d2(Sign::minus, u)].push_back(u);
    }
    std::mt19937_64 rng(config.seed);
    auto pick = [&rng](const std::vector<Sq>& v) -> const Sq& { return v[rng() % v.size()]; };
    std::size_t drawn = 0;
    for (std::size_t attempt = 0; drawn < config.samples && attempt < 20 * config.samples;
         ++attempt) {
      const Sq& a = pick(pool);
      auto b_it = pool_left.find(d.d2(Sign::plus, a));
      auto c_it = pool_top.find(d.d1(Sign::plus, a));
      if (b_it == pool_left.end() || c_it == pool_top.end()) continue;
      const Sq& b = pick(b_it->second);
      const Sq& c = pick(c_it->second);
      auto e_it = pool_top.find(d.d1(Sign::plus, b));
      if (e_it == pool_top.end()) continue;
      std::vector<Sq> candidates;
      for (const auto& e : e_it->second)
        if (d.d2(Sign::minus, e) == d.d2(Sign::plus, c)) candidates.push_back(e);
      if (candidates.empty()) continue;
      detail::check_interchange(d, a, b, c, pick(candidates), "interchange.sampled", report);
      ++drawn;
    }
  }
  return report;
}

template <class Obj, class H, class V, class Sq>
struct Checked {
  DoubleGroupoid<Obj, H, V, Sq> value;
  AuditReport report;
};

/// Assembles a double groupoid from its structure maps and audits it.
template <class Obj, class H, class V, class Sq>
Checked<Obj, H, V, Sq> make_double_groupoid(
    Groupoid<Obj, H> g0, Groupoid<V, Sq> g1, GroupoidFunctor<V, Sq, Obj, H> s,
    GroupoidFunctor<V, Sq, Obj, H> t, GroupoidFunctor<Obj, H, V, Sq> e,
    std::function<std::optional<V>(const V&, const V&)> compose_vertical,
    std::function<V(const V&)> inverse_vertical,
    std::function<std::optional<Sq>(const Sq&, const Sq&)> m, std::function<Sq(const Sq&)> inv1,
    const AuditConfig& config) {
  DoubleGroupoid<Obj, H, V, Sq> d{std::move(g0), std::move(g1), std::move(s), std::move(t),
                                  std::move(e), std::move(compose_vertical),
                                  std::move(inverse_vertical), std::move(m), std::move(inv1)};
  auto report = audit_double_groupoid(d, config);
  return {std::move(d), std::move(report)};
}

// ---------------------------------------------------------------------------
// Induced double groupoids

template <class MO, class V>
struct InducedVertical {
  V arrow;
  MO from;
  MO to;
  auto operator<=>(const InducedVertical&) const = default;
};

template <class MA, class Sq>
struct InducedSquare {
  Sq square;
  MA top;
  MA bottom;
  auto operator<=>(const InducedSquare&) const = default;
};

/// The double groupoid induced along j: M -> G0. Objects and horizontal
/// arrows come from M; a vertical arrow m -> m' is a vertical arrow of D
/// from j(m) to j(m'); a square is a square of D together with lifts of its
/// two horizontal edges. For a full inclusion this is the full
/// sub-double-groupoid on the chosen objects.
template <class Obj, class H, class V, class Sq, class MO, class MA>
DoubleGroupoid<MO, MA, InducedVertical<MO, V>, InducedSquare<MA, Sq>> induced(
    const DoubleGroupoid<Obj, H, V, Sq>& d, const GroupoidFunctor<MO, MA, Obj, H>& j) {
  using IV = InducedVertical<MO, V>;
  using IS = InducedSquare<MA, Sq>;
  const auto m = j.domain;
  const auto jo = j.on_objects;
  const auto ja = j.on_arrows;

  Groupoid<IV, IS> g1;
  g1.objects = [d, m, jo] {
    std::vector<IV> out;
    const auto objs = m.objects();
    for (const auto& v : d.squares.objects()) {
      const Obj s = d.source.on_objects(v);
      const Obj t = d.target.on_objects(v);
      for (const auto& x : objs) {
        if (!(jo(x) == s)) continue;
        for (const auto& y : objs)
          if (jo(y) == t) out.push_back({v, x, y});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  g1.source = [d, m](const IS& u) {
    return IV{d.squares.source(u.square), m.source(u.top), m.source(u.bottom)};
  };
  g1.target = [d, m](const IS& u) {
    return IV{d.squares.target(u.square), m.target(u.top), m.target(u.bottom)};
  };
  g1.identity = [d, m](const IV& v) {
    return IS{d.eps2(v.arrow), m.identity(v.from), m.identity(v.to)};
  };
  g1.compose = [d, m](const IS& a, const IS& b) -> std::optional<IS> {
    auto u = d.compose2(a.square, b.square);
    auto top = m.compose(a.top, b.top);
    auto bottom = m.compose(a.bottom, b.bottom);
    if (!u || !top || !bottom) return std::nullopt;
    return IS{*u, *top, *bottom};
  };
  g1.inverse = [d, m](const IS& a) {
    return IS{d.inverse2(a.square), m.inverse(a.top), m.inverse(a.bottom)};
  };
  g1.homset = [d, m, ja](const IV& x, const IV& y, std::size_t bound) {
    std::vector<IS> out;
    const auto tops = m.homset(x.from, y.from, bound);
    const auto bottoms = m.homset(x.to, y.to, bound);
    for (const auto& u : d.squares.homset(x.arrow, y.arrow, bound)) {
      const H top = d.d1(Sign::minus, u);
      const H bottom = d.d1(Sign::plus, u);
      for (const auto& mu : tops) {
        if (!(ja(mu) == top)) continue;
        for (const auto& nu : bottoms)
          if (ja(nu) == bottom) out.push_back({u, mu, nu});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  g1.show_object = [d, m](const IV& v) {
    return d.squares.show_object(v.arrow) + "[" + m.show_object(v.from) + "->" +
           m.show_object(v.to) + "]";
  };
  g1.show_arrow = [d](const IS& u) { return d.squares.show_arrow(u.square); };
  g1 = complete(g1);

  DoubleGroupoid<MO, MA, IV, IS> out;
  out.horizontal = m;
  out.squares = g1;
  out.source = {g1, m, [](const IV& v) { return v.from; }, [](const IS& u) { return u.top; }};
  out.target = {g1, m, [](const IV& v) { return v.to; }, [](const IS& u) { return u.bottom; }};
  out.unit = {m, g1, [d, jo](const MO& x) { return IV{d.unit.on_objects(jo(x)), x, x}; },
              [d, ja](const MA& a) { return IS{d.eps1(ja(a)), a, a}; }};
  out.compose_vertical = [d](const IV& a, const IV& b) -> std::optional<IV> {
    if (!(a.to == b.from)) return std::nullopt;
    auto v = d.compose_vertical(a.arrow, b.arrow);
    if (!v) return std::nullopt;
    return IV{*v, a.from, b.to};
  };
  out.inverse_vertical = [d](const IV& a) { return IV{d.inverse_vertical(a.arrow), a.to, a.from}; };
  out.compose1 = [d](const IS& a, const IS& b) -> std::optional<IS> {
    if (!(a.bottom == b.top)) return std::nullopt;
    auto u = d.compose1(a.square, b.square);
    if (!u) return std::nullopt;
    return IS{*u, a.top, b.bottom};
  };
  out.inverse1 = [d](const IS& a) { return IS{d.inverse1(a.square), a.bottom, a.top}; };
  return out;
}

/// Squares whose vertical edges are identities, over the same horizontal
/// groupoid. The result has only identity vertical arrows, so it is a
/// 2-groupoid.
template <class Obj, class H, class V, class Sq>
DoubleGroupoid<Obj, H, V, Sq> extract_2groupoid(const DoubleGroupoid<Obj, H, V, Sq>& d) {
  DoubleGroupoid<Obj, H, V, Sq> out = d;
  const auto unit = d.unit.on_objects;
  const auto objects = d.horizontal.objects;
  auto degenerate = [unit, src = d.source.on_objects](const V& v) { return v == unit(src(v)); };
  out.squares.objects = [objects, unit] {
    std::vector<V> vs;
    for (const auto& x : objects()) vs.push_back(unit(x));
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  out.squares.homset = [g = d.squares, degenerate](const V& x, const V& y, std::size_t bound) {
    if (!degenerate(x) || !degenerate(y)) return std::vector<Sq>{};
    return g.homset(x, y, bound);
  };
  out.squares.arrows_from = [g = d.squares, degenerate](const V& x, std::size_t bound) {
    if (!degenerate(x)) return std::vector<Sq>{};
    auto all = g.arrows_from(x, bound);
    std::erase_if(all, [&](const Sq& u) { return !degenerate(g.target(u)); });
    return all;
  };
  out.source.domain = out.squares;
  out.target.domain = out.squares;
  out.unit.codomain = out.squares;
  return out;
}

/// True iff every vertical arrow is an identity.
template <class Obj, class H, class V, class Sq>
bool is_2groupoid(const DoubleGroupoid<Obj, H, V, Sq>& d) {
  for (const auto& v : d.squares.objects())
    if (!(v == d.unit.on_objects(d.source.on_objects(v)))) return false;
  return true;
}

}  // namespace dblgpd

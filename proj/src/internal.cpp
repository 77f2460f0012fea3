#include "dblgpd/internal.hpp"

#include <map>

namespace dblgpd {

std::pair<EdgeOrIdentity, EdgeOrIdentity> edge_components(const FiberProduct& fp, EdgeId e) {
  EdgeOrIdentity a = fp.first.edge_map.at(e) ? EdgeOrIdentity::of(*fp.first.edge_map[e])
                                             : EdgeOrIdentity::identity_at(fp.first(
                                                   fp.graph->edge(e).source));
  EdgeOrIdentity b = fp.second.edge_map.at(e) ? EdgeOrIdentity::of(*fp.second.edge_map[e])
                                              : EdgeOrIdentity::identity_at(fp.second(
                                                    fp.graph->edge(e).source));
  return {a, b};
}

std::pair<VertexId, VertexId> vertex_components(const FiberProduct& fp, VertexId v) {
  return {fp.first(v), fp.second(v)};
}

InternalGroupoidInGraphs kernel_pair_graphs(const GraphMap& p) {
  InternalGroupoidInGraphs c;
  auto eq = fiber_product(p, p);
  c.objects = p.domain;
  c.arrows = eq.graph;
  c.source = eq.first;
  c.target = eq.second;

  c.identity = {c.objects, c.arrows, {}, {}};
  for (std::size_t x = 0; x < c.objects->vertex_count(); ++x) {
    c.identity.vertex_map.push_back(*eq.vertex(static_cast<VertexId>(x), static_cast<VertexId>(x)));
  }
  for (std::size_t e = 0; e < c.objects->edge_count(); ++e) {
    const auto side = EdgeOrIdentity::of(static_cast<EdgeId>(e));
    c.identity.edge_map.emplace_back(eq.edge(side, side));
  }

  c.inverse = {c.arrows, c.arrows, {}, {}};
  for (std::size_t v = 0; v < c.arrows->vertex_count(); ++v) {
    const auto [a, b] = vertex_components(eq, static_cast<VertexId>(v));
    c.inverse.vertex_map.push_back(*eq.vertex(b, a));
  }
  for (std::size_t e = 0; e < c.arrows->edge_count(); ++e) {
    const auto [a, b] = edge_components(eq, static_cast<EdgeId>(e));
    c.inverse.edge_map.emplace_back(eq.edge(b, a));
  }

  c.composable = fiber_product(c.target, c.source);
  const auto& c2 = c.composable;
  c.compose = {c2.graph, c.arrows, {}, {}};
  for (std::size_t v = 0; v < c2.graph->vertex_count(); ++v) {
    const auto [x, y] = vertex_components(c2, static_cast<VertexId>(v));
    c.compose.vertex_map.push_back(*eq.vertex(eq.first(x), eq.second(y)));
  }
  // An edge of C2 is a pair (X, Y) of C1 edges-or-identities; its composite
  // is (first component of X, second component of Y).
  auto component = [&](const EdgeOrIdentity& side, VertexId at, bool first) {
    if (side.edge) {
      const auto [a, b] = edge_components(eq, *side.edge);
      return first ? a : b;
    }
    const auto [a, b] = vertex_components(eq, at);
    return EdgeOrIdentity::identity_at(first ? a : b);
  };
  for (std::size_t e = 0; e < c2.graph->edge_count(); ++e) {
    const auto [x, y] = edge_components(c2, static_cast<EdgeId>(e));
    const auto src = c2.graph->edge(static_cast<EdgeId>(e)).source;
    const auto [vx, vy] = vertex_components(c2, src);
    const auto left = component(x, vx, true);
    const auto right = component(y, vy, false);
    if (!left.edge && !right.edge) {
      c.compose.edge_map.emplace_back(std::nullopt);
    } else {
      c.compose.edge_map.emplace_back(eq.edge(left, right));
    }
  }
  return c;
}

std::optional<ReducedPath> glue(const FiberProduct& fp, const GraphMap& f, const GraphMap& g,
                                const ReducedPath& u, const ReducedPath& v) {
  const auto start = fp.vertex(u.start, v.start);
  if (!start) return std::nullopt;
  const auto& x = *f.domain;
  const auto& y = *g.domain;
  std::vector<SignedEdge> word;
  VertexId at_u = u.start;
  VertexId at_v = v.start;
  std::size_t i = 0;
  std::size_t j = 0;
  auto push = [&](const EdgeOrIdentity& a, const EdgeOrIdentity& b, bool inverted) {
    auto e = fp.edge(a, b);
    if (!e) return false;
    word.push_back({*e, inverted});
    return true;
  };
  while (i < u.word.size() || j < v.word.size()) {
    if (i < u.word.size() && !f(u.word[i])) {
      const auto s = u.word[i++];
      if (!push(EdgeOrIdentity::of(s.edge), EdgeOrIdentity::identity_at(at_v), s.inverted))
        return std::nullopt;
      at_u = x.to(s);
      continue;
    }
    if (j < v.word.size() && !g(v.word[j])) {
      const auto s = v.word[j++];
      if (!push(EdgeOrIdentity::identity_at(at_u), EdgeOrIdentity::of(s.edge), s.inverted))
        return std::nullopt;
      at_v = y.to(s);
      continue;
    }
    if (i == u.word.size() || j == v.word.size()) return std::nullopt;
    const auto a = u.word[i++];
    const auto b = v.word[j++];
    if (f(a) != g(b)) return std::nullopt;
    if (!push(EdgeOrIdentity::of(a.edge), EdgeOrIdentity::of(b.edge), a.inverted))
      return std::nullopt;
    at_u = x.to(a);
    at_v = y.to(b);
  }
  return reduce_path(*fp.graph, *start, word);
}

namespace {

struct Triple {
  ReducedPath a, b, c;
  auto operator<=>(const Triple&) const = default;
};

std::string show_pair(const ReflexiveGraph& g, const ReducedPath& a, const ReducedPath& b) {
  return "(" + show_path(g, a) + ", " + show_path(g, b) + ")";
}

}  // namespace

AuditReport check_comparison_maps(const InternalGroupoidInGraphs& c, std::size_t bound) {
  AuditReport report;
  const auto& c1 = *c.arrows;
  const auto& c2 = c.composable;
  const auto n1 = static_cast<VertexId>(c1.vertex_count());

  // Pullback pairs (u, v) of pi1 C1 over pi1 C0, |u|, |v| <= bound.
  std::vector<std::pair<ReducedPath, ReducedPath>> pairs;
  for (VertexId a = 0; a < n1; ++a) {
    const auto from_a = reduced_paths_from(c1, a, bound);
    for (VertexId b = 0; b < n1; ++b) {
      if (c.target(a) != c.source(b)) continue;
      const auto from_b = reduced_paths_from(c1, b, bound);
      for (const auto& u : from_a) {
        const auto tu = map_path(c.target, u);
        for (const auto& v : from_b)
          if (map_path(c.source, v) == tu) pairs.emplace_back(u, v);
      }
    }
  }

  // Pair comparison: Phi(w) = (pi1 first w, pi1 second w), Xi = glue.
  for (std::size_t w0 = 0; w0 < c2.graph->vertex_count(); ++w0) {
    for (const auto& w : reduced_paths_from(*c2.graph, static_cast<VertexId>(w0), bound)) {
      const auto u = map_path(c2.first, w);
      const auto v = map_path(c2.second, w);
      const auto back = glue(c2, c.target, c.source, u, v);
      report.expect(back && *back == w, "comparison.pair.section", show_path(*c2.graph, w));
    }
  }
  for (const auto& [u, v] : pairs) {
    const auto w = glue(c2, c.target, c.source, u, v);
    report.expect(w && map_path(c2.first, *w) == u && map_path(c2.second, *w) == v,
                  "comparison.pair.retraction", show_pair(c1, u, v));
  }

  // Triple comparison through C3 = C2 x_{C0} C1 along (t o second, s).
  const GraphMap last_target = compose_maps(c2.second, c.target);
  const auto c3 = fiber_product(last_target, c.source);
  for (std::size_t w0 = 0; w0 < c3.graph->vertex_count(); ++w0) {
    for (const auto& w : reduced_paths_from(*c3.graph, static_cast<VertexId>(w0), bound)) {
      const auto left = map_path(c3.first, w);
      const auto a = map_path(c2.first, left);
      const auto b = map_path(c2.second, left);
      const auto cc = map_path(c3.second, w);
      const auto ab = glue(c2, c.target, c.source, a, b);
      const auto back = ab ? glue(c3, last_target, c.source, *ab, cc) : std::nullopt;
      report.expect(back && *back == w, "comparison.triple.section", show_path(*c3.graph, w));
    }
  }
  std::map<ReducedPath, std::vector<ReducedPath>> next;
  for (const auto& [u, v] : pairs) next[u].push_back(v);
  for (const auto& [u, v] : pairs) {
    auto it = next.find(v);
    if (it == next.end()) continue;
    for (const auto& x : it->second) {
      const Triple t{u, v, x};
      const auto uv = glue(c2, c.target, c.source, u, v);
      const auto w = uv ? glue(c3, last_target, c.source, *uv, x) : std::nullopt;
      bool ok = false;
      if (w) {
        const auto left = map_path(c3.first, *w);
        ok = Triple{map_path(c2.first, left), map_path(c2.second, left),
                    map_path(c3.second, *w)} == t;
      }
      report.expect(ok, "comparison.triple.retraction",
                    "(" + show_path(c1, u) + ", " + show_path(c1, v) + ", " + show_path(c1, x) +
                        ")");
    }
  }
  return report;
}

AppliedPi1 apply_pi1(const InternalGroupoidInGraphs& c, std::size_t bound) {
  auto report = check_comparison_maps(c, bound);
  if (!report.ok()) {
    const auto& v = report.violations().front();
    throw PreconditionError("comparison map is not bijective at bound " + std::to_string(bound) +
                            ": " + v.law + " fails at " + v.witness);
  }
  const auto c0 = pi1(c.objects);
  const auto c1 = pi1(c.arrows);
  GraphDoubleGroupoid d;
  d.horizontal = c0;
  d.squares = c1;
  d.source = pi1_functor(c.source);
  d.target = pi1_functor(c.target);
  d.unit = pi1_functor(c.identity);
  d.compose_vertical = [c](VertexId a, VertexId b) -> std::optional<VertexId> {
    auto ab = c.composable.vertex(a, b);
    if (!ab) return std::nullopt;
    return c.compose(*ab);
  };
  d.inverse_vertical = [c](VertexId a) { return c.inverse(a); };
  d.compose1 = [c](const ReducedPath& u, const ReducedPath& v) -> std::optional<ReducedPath> {
    if (map_path(c.target, u) != map_path(c.source, v)) return std::nullopt;
    auto w = glue(c.composable, c.target, c.source, u, v);
    if (!w) return std::nullopt;
    return map_path(c.compose, *w);
  };
  d.inverse1 = [c](const ReducedPath& u) { return map_path(c.inverse, u); };
  return {d, report};
}

}  // namespace dblgpd

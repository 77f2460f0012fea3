#include "dblgpd/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dblgpd {

// ---------------------------------------------------------------------------
// ReflexiveGraph

VertexId ReflexiveGraph::add_vertex(std::string name) {
  if (vertex_index_.count(name)) throw InputError("duplicate vertex " + name);
  const auto id = static_cast<VertexId>(vertices_.size());
  vertex_index_[name] = id;
  vertices_.push_back(std::move(name));
  stars_.emplace_back();
  return id;
}

EdgeId ReflexiveGraph::add_edge(std::string name, VertexId source, VertexId target) {
  if (edge_index_.count(name)) throw InputError("duplicate edge " + name);
  if (source < 0 || target < 0 || source >= static_cast<VertexId>(vertices_.size()) ||
      target >= static_cast<VertexId>(vertices_.size())) {
    throw InputError("edge " + name + " has an endpoint outside the graph");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edge_index_[name] = id;
  edges_.push_back({std::move(name), source, target});
  stars_[source].push_back({id, false});
  stars_[target].push_back({id, true});
  std::sort(stars_[target].begin(), stars_[target].end());
  std::sort(stars_[source].begin(), stars_[source].end());
  return id;
}

EdgeId ReflexiveGraph::add_edge(std::string name, const std::string& source,
                                const std::string& target) {
  const auto s = find_vertex(source);
  if (!s) throw InputError("edge " + name + ": unknown vertex " + source);
  const auto t = find_vertex(target);
  if (!t) throw InputError("edge " + name + ": unknown vertex " + target);
  return add_edge(std::move(name), *s, *t);
}

std::optional<VertexId> ReflexiveGraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> ReflexiveGraph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId ReflexiveGraph::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw InputError("unknown vertex " + name);
}

EdgeId ReflexiveGraph::edge_id(const std::string& name) const {
  if (auto e = find_edge(name)) return *e;
  throw InputError("unknown edge " + name);
}

// ---------------------------------------------------------------------------
// Paths

ReducedPath reduce_path(const ReflexiveGraph& g, VertexId start,
                        const std::vector<SignedEdge>& word) {
  ReducedPath out{start, start, {}};
  VertexId at = start;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto s = word[i];
    if (s.edge < 0 || s.edge >= static_cast<EdgeId>(g.edge_count())) {
      throw InputError("word step " + std::to_string(i) + " is not an edge");
    }
    if (g.from(s) != at) {
      throw InputError("word is not composable at step " + std::to_string(i) + " (" +
                       g.show(s) + " does not leave " + g.vertex_name(at) + ")");
    }
    if (!out.word.empty() && out.word.back() == s.reversed()) {
      out.word.pop_back();
    } else {
      out.word.push_back(s);
    }
    at = g.to(s);
  }
  out.end = at;
  return out;
}

std::vector<SignedEdge> parse_word(const ReflexiveGraph& g, const std::string& text) {
  std::vector<SignedEdge> word;
  if (text.empty()) return word;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, '.')) {
    const bool inverted = !token.empty() && token.front() == '~';
    if (inverted) token.erase(0, 1);
    word.push_back({g.edge_id(token), inverted});
  }
  return word;
}

std::string show_path(const ReflexiveGraph& g, const ReducedPath& p) {
  std::string out = g.vertex_name(p.start) + ":";
  if (p.word.empty()) return out + "id";
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    if (i) out += ".";
    out += g.show(p.word[i]);
  }
  return out;
}

std::optional<ReducedPath> concat(const ReflexiveGraph& g, const ReducedPath& p,
                                  const ReducedPath& q) {
  if (p.end != q.start) return std::nullopt;
  ReducedPath out = p;
  for (const auto s : q.word) {
    if (!out.word.empty() && out.word.back() == s.reversed()) {
      out.word.pop_back();
    } else {
      out.word.push_back(s);
    }
  }
  out.end = q.end;
  (void)g;
  return out;
}

ReducedPath inverse_path(const ReducedPath& p) {
  ReducedPath out{p.end, p.start, {}};
  out.word.reserve(p.word.size());
  for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) out.word.push_back(it->reversed());
  return out;
}

ReducedPath empty_path(VertexId v) { return {v, v, {}}; }

std::vector<ReducedPath> reduced_paths_from(const ReflexiveGraph& g, VertexId x,
                                            std::size_t bound) {
  std::vector<ReducedPath> out;
  ReducedPath current = empty_path(x);
  auto walk = [&](auto&& self) -> void {
    out.push_back(current);
    if (current.word.size() == bound) return;
    for (const auto s : g.star(current.end)) {
      if (!current.word.empty() && current.word.back() == s.reversed()) continue;
      const VertexId saved = current.end;
      current.word.push_back(s);
      current.end = g.to(s);
      self(self);
      current.word.pop_back();
      current.end = saved;
    }
  };
  walk(walk);
  std::sort(out.begin(), out.end());
  return out;
}

Groupoid<VertexId, ReducedPath> pi1(GraphPtr g) {
  Groupoid<VertexId, ReducedPath> out;
  out.objects = [g] {
    std::vector<VertexId> v(g->vertex_count());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<VertexId>(i);
    return v;
  };
  out.source = [](const ReducedPath& p) { return p.start; };
  out.target = [](const ReducedPath& p) { return p.end; };
  out.identity = [](VertexId v) { return empty_path(v); };
  out.compose = [g](const ReducedPath& p, const ReducedPath& q) { return concat(*g, p, q); };
  out.inverse = [](const ReducedPath& p) { return inverse_path(p); };
  out.arrows_from = [g](VertexId x, std::size_t bound) { return reduced_paths_from(*g, x, bound); };
  out.homset = [g](VertexId x, VertexId y, std::size_t bound) {
    auto all = reduced_paths_from(*g, x, bound);
    std::erase_if(all, [y](const ReducedPath& p) { return p.end != y; });
    return all;
  };
  out.show_object = [g](VertexId v) { return g->vertex_name(v); };
  out.show_arrow = [g](const ReducedPath& p) { return show_path(*g, p); };
  return out;
}

// ---------------------------------------------------------------------------
// Maps

std::vector<std::string> map_problems(const GraphMap& m) {
  std::vector<std::string> problems;
  if (!m.domain || !m.codomain) return {"map has no domain or codomain"};
  const auto& d = *m.domain;
  const auto& c = *m.codomain;
  if (m.vertex_map.size() != d.vertex_count()) problems.push_back("vertex map size mismatch");
  if (m.edge_map.size() != d.edge_count()) problems.push_back("edge map size mismatch");
  if (!problems.empty()) return problems;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    if (m.vertex_map[v] < 0 || m.vertex_map[v] >= static_cast<VertexId>(c.vertex_count()))
      problems.push_back("vertex " + d.vertex_name(static_cast<VertexId>(v)) + " has no image");
  }
  if (!problems.empty()) return problems;
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const auto& edge = d.edge(static_cast<EdgeId>(e));
    const VertexId s = m.vertex_map[edge.source];
    const VertexId t = m.vertex_map[edge.target];
    if (const auto& img = m.edge_map[e]) {
      if (*img < 0 || *img >= static_cast<EdgeId>(c.edge_count())) {
        problems.push_back("edge " + edge.name + " has no image");
        continue;
      }
      const auto& ce = c.edge(*img);
      if (ce.source != s || ce.target != t) {
        problems.push_back("edge " + edge.name + " -> " + ce.name +
                           " does not preserve endpoints");
      }
    } else if (s != t) {
      problems.push_back("edge " + edge.name + " collapses onto an identity but its endpoints map to " +
                         c.vertex_name(s) + " and " + c.vertex_name(t));
    }
  }
  return problems;
}

GraphMap identity_map(GraphPtr g) {
  GraphMap m{g, g, {}, {}};
  for (std::size_t v = 0; v < g->vertex_count(); ++v) m.vertex_map.push_back(static_cast<VertexId>(v));
  for (std::size_t e = 0; e < g->edge_count(); ++e) m.edge_map.emplace_back(static_cast<EdgeId>(e));
  return m;
}

GraphMap compose_maps(const GraphMap& f, const GraphMap& g) {
  GraphMap m{f.domain, g.codomain, {}, {}};
  for (auto v : f.vertex_map) m.vertex_map.push_back(g.vertex_map.at(v));
  for (const auto& e : f.edge_map) {
    if (e) {
      m.edge_map.push_back(g.edge_map.at(*e));
    } else {
      m.edge_map.emplace_back(std::nullopt);
    }
  }
  return m;
}

std::vector<SignedEdge> map_word(const GraphMap& m, const std::vector<SignedEdge>& word) {
  std::vector<SignedEdge> out;
  out.reserve(word.size());
  for (const auto s : word)
    if (auto img = m(s)) out.push_back(*img);
  return out;
}

ReducedPath map_path(const GraphMap& m, const ReducedPath& p) {
  ReducedPath out = reduce_path(*m.codomain, m(p.start), map_word(m, p.word));
  return out;
}

GroupoidFunctor<VertexId, ReducedPath, VertexId, ReducedPath> pi1_functor(const GraphMap& m) {
  return {pi1(m.domain), pi1(m.codomain), [m](VertexId v) { return m(v); },
          [m](const ReducedPath& p) { return map_path(m, p); }};
}

// ---------------------------------------------------------------------------
// Fiber products

std::optional<VertexId> FiberProduct::vertex(VertexId a, VertexId b) const {
  auto it = vertex_of.find({a, b});
  if (it == vertex_of.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> FiberProduct::edge(const EdgeOrIdentity& a, const EdgeOrIdentity& b) const {
  auto it = edge_of.find({a, b});
  if (it == edge_of.end()) return std::nullopt;
  return it->second;
}

FiberProduct fiber_product(const GraphMap& p, const GraphMap& q) {
  if (p.codomain != q.codomain && p.codomain->vertex_names() != q.codomain->vertex_names()) {
    throw PreconditionError("fiber_product: maps have different codomains");
  }
  const auto& e1 = *p.domain;
  const auto& e2 = *q.domain;
  auto graph = std::make_shared<ReflexiveGraph>();
  FiberProduct fp;
  fp.first = {graph, p.domain, {}, {}};
  fp.second = {graph, q.domain, {}, {}};

  for (std::size_t a = 0; a < e1.vertex_count(); ++a) {
    for (std::size_t b = 0; b < e2.vertex_count(); ++b) {
      if (p(static_cast<VertexId>(a)) != q(static_cast<VertexId>(b))) continue;
      const VertexId v = graph->add_vertex("(" + e1.vertex_name(static_cast<VertexId>(a)) + "," +
                                           e2.vertex_name(static_cast<VertexId>(b)) + ")");
      fp.vertex_of[{static_cast<VertexId>(a), static_cast<VertexId>(b)}] = v;
      fp.first.vertex_map.push_back(static_cast<VertexId>(a));
      fp.second.vertex_map.push_back(static_cast<VertexId>(b));
    }
  }

  auto add = [&](const EdgeOrIdentity& x, const EdgeOrIdentity& y, VertexId s1, VertexId s2,
                 VertexId t1, VertexId t2) {
    const std::string n1 = x.edge ? e1.edge(*x.edge).name : "id:" + e1.vertex_name(x.vertex);
    const std::string n2 = y.edge ? e2.edge(*y.edge).name : "id:" + e2.vertex_name(y.vertex);
    const EdgeId id = graph->add_edge("(" + n1 + "," + n2 + ")", fp.vertex_of.at({s1, s2}),
                                      fp.vertex_of.at({t1, t2}));
    fp.edge_of[{x, y}] = id;
    fp.first.edge_map.push_back(x.edge);
    fp.second.edge_map.push_back(y.edge);
  };

  // Images compare equal when they are the same edge, or identity loops at
  // the same vertex.
  auto image = [](const GraphMap& m, EdgeId e) {
    const auto& edge = m.domain->edge(e);
    return std::pair{m.edge_map.at(e), m.edge_map.at(e) ? -1 : m(edge.source)};
  };

  for (std::size_t a = 0; a < e1.edge_count(); ++a) {
    const auto& ea = e1.edge(static_cast<EdgeId>(a));
    const auto ia = image(p, static_cast<EdgeId>(a));
    for (std::size_t b = 0; b < e2.edge_count(); ++b) {
      const auto& eb = e2.edge(static_cast<EdgeId>(b));
      if (ia != image(q, static_cast<EdgeId>(b))) continue;
      add(EdgeOrIdentity::of(static_cast<EdgeId>(a)), EdgeOrIdentity::of(static_cast<EdgeId>(b)),
          ea.source, eb.source, ea.target, eb.target);
    }
    if (!ia.first) {
      for (std::size_t b = 0; b < e2.vertex_count(); ++b) {
        if (q(static_cast<VertexId>(b)) != ia.second) continue;
        add(EdgeOrIdentity::of(static_cast<EdgeId>(a)),
            EdgeOrIdentity::identity_at(static_cast<VertexId>(b)), ea.source,
            static_cast<VertexId>(b), ea.target, static_cast<VertexId>(b));
      }
    }
  }
  for (std::size_t b = 0; b < e2.edge_count(); ++b) {
    const auto& eb = e2.edge(static_cast<EdgeId>(b));
    const auto ib = image(q, static_cast<EdgeId>(b));
    if (ib.first) continue;
    for (std::size_t a = 0; a < e1.vertex_count(); ++a) {
      if (p(static_cast<VertexId>(a)) != ib.second) continue;
      add(EdgeOrIdentity::identity_at(static_cast<VertexId>(a)),
          EdgeOrIdentity::of(static_cast<EdgeId>(b)), static_cast<VertexId>(a), eb.source,
          static_cast<VertexId>(a), eb.target);
    }
  }
  fp.graph = graph;
  return fp;
}

FiberProduct product_graph(GraphPtr b, GraphPtr f) {
  auto point = std::make_shared<ReflexiveGraph>();
  point->add_vertex("*");
  auto to_point = [&](const GraphPtr& g) {
    GraphMap m{g, point, std::vector<VertexId>(g->vertex_count(), 0),
               std::vector<std::optional<EdgeId>>(g->edge_count())};
    return m;
  };
  return fiber_product(to_point(b), to_point(f));
}

// ---------------------------------------------------------------------------
// Star conditions

std::optional<std::string> star_condition_witness(const GraphMap& p, bool unique) {
  const auto& e = *p.domain;
  const auto& b = *p.codomain;
  for (std::size_t xi = 0; xi < e.vertex_count(); ++xi) {
    const auto x = static_cast<VertexId>(xi);
    if (unique) {
      for (const auto s : e.star(x)) {
        if (!p(s)) {
          return "edge " + e.show(s) + " at " + e.vertex_name(x) + " collapses to an identity";
        }
      }
    }
    for (const auto sigma : b.star(p(x))) {
      int lifts = 0;
      for (const auto s : e.star(x))
        if (p(s) == sigma) ++lifts;
      if (lifts == 0) {
        return "no lift of " + b.show(sigma) + " at vertex " + e.vertex_name(x);
      }
      if (unique && lifts > 1) {
        return std::to_string(lifts) + " lifts of " + b.show(sigma) + " at vertex " +
               e.vertex_name(x);
      }
    }
  }
  return std::nullopt;
}

bool is_star_surjective(const GraphMap& p) { return !star_condition_witness(p, false); }
bool is_covering(const GraphMap& p) { return !star_condition_witness(p, true); }

std::optional<std::vector<SignedEdge>> lift_word(const GraphMap& p, VertexId x,
                                                 const std::vector<SignedEdge>& word) {
  const auto& e = *p.domain;
  std::vector<SignedEdge> out;
  VertexId at = x;
  for (const auto sigma : word) {
    std::optional<SignedEdge> chosen;
    for (const auto s : e.star(at)) {
      if (p(s) == sigma) {
        chosen = s;
        break;
      }
    }
    if (!chosen) return std::nullopt;
    out.push_back(*chosen);
    at = e.to(*chosen);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Foliations

std::vector<std::string> foliation_problems(const FoliatedGraph& f) {
  std::vector<std::string> problems;
  const auto& g = *f.graph;
  if (f.edge_blocks.size() > f.vertex_blocks.size()) {
    problems.push_back("more edge blocks than vertex blocks");
  }
  std::vector<int> leaf_of_vertex(g.vertex_count(), -1);
  for (std::size_t i = 0; i < f.vertex_blocks.size(); ++i) {
    for (auto v : f.vertex_blocks[i]) {
      if (leaf_of_vertex.at(v) != -1) {
        problems.push_back("vertex " + g.vertex_name(v) + " appears in two blocks");
      }
      leaf_of_vertex[v] = static_cast<int>(i);
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (leaf_of_vertex[v] == -1) {
      problems.push_back("vertex " + g.vertex_name(static_cast<VertexId>(v)) + " is in no block");
    }
  }
  std::vector<int> leaf_of_edge(g.edge_count(), -1);
  for (std::size_t i = 0; i < f.edge_blocks.size(); ++i) {
    for (auto e : f.edge_blocks[i]) {
      const auto& edge = g.edge(e);
      if (leaf_of_edge.at(e) != -1) problems.push_back("edge " + edge.name + " appears in two blocks");
      leaf_of_edge[e] = static_cast<int>(i);
      if (leaf_of_vertex[edge.source] != static_cast<int>(i) ||
          leaf_of_vertex[edge.target] != static_cast<int>(i)) {
        problems.push_back("edge " + edge.name + " leaves its block");
      }
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (leaf_of_edge[e] == -1) {
      problems.push_back("edge " + g.edge(static_cast<EdgeId>(e)).name + " is in no block");
    }
  }
  return problems;
}

LeafSpace foliation_space(const FoliatedGraph& f) {
  if (auto problems = foliation_problems(f); !problems.empty()) {
    throw InputError("foliation is not a partition: " + problems.front());
  }
  const auto& g = *f.graph;
  auto leaves = std::make_shared<ReflexiveGraph>();
  GraphMap to_base{leaves, f.graph, {}, {}};
  std::vector<VertexId> new_id(g.vertex_count());
  for (std::size_t i = 0; i < f.vertex_blocks.size(); ++i) {
    for (auto v : f.vertex_blocks[i]) {
      new_id[v] = leaves->add_vertex(g.vertex_name(v));
      to_base.vertex_map.push_back(v);
    }
    if (i < f.edge_blocks.size()) {
      for (auto e : f.edge_blocks[i]) {
        const auto& edge = g.edge(e);
        leaves->add_edge(edge.name, new_id[edge.source], new_id[edge.target]);
        to_base.edge_map.emplace_back(e);
      }
    }
  }
  return {leaves, to_base};
}

// ---------------------------------------------------------------------------
// Fixtures

ReflexiveGraph cycle_graph(int n, const std::string& vertex_prefix,
                           const std::string& edge_prefix) {
  ReflexiveGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vertex_prefix + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(edge_prefix + std::to_string(i), i, (i + 1) % n);
  return g;
}

ReflexiveGraph path_graph(int n, const std::string& vertex_prefix,
                          const std::string& edge_prefix) {
  ReflexiveGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vertex_prefix + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(edge_prefix + std::to_string(i), i, i + 1);
  return g;
}

ReflexiveGraph discrete_graph(const std::vector<std::string>& names) {
  ReflexiveGraph g;
  for (const auto& n : names) g.add_vertex(n);
  return g;
}

GraphMap cyclic_cover(int sheets, int n) {
  auto total = std::make_shared<ReflexiveGraph>(cycle_graph(sheets * n, "x", "a"));
  auto base = std::make_shared<ReflexiveGraph>(cycle_graph(n, "b", "c"));
  GraphMap m{total, base, {}, {}};
  for (int i = 0; i < sheets * n; ++i) {
    m.vertex_map.push_back(i % n);
    m.edge_map.emplace_back(i % n);
  }
  return m;
}

}  // namespace dblgpd

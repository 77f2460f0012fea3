#pragma once

// Reflexive graphs as combinatorial stand-ins for spaces. Every vertex has
// an implicit identity loop and every edge an implicit formal inverse; a
// path is a word of signed edges, and the free groupoid on the graph has
// backtrack-free words as normal forms.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "dblgpd/groupoid.hpp"

namespace dblgpd {

using VertexId = int;
using EdgeId = int;

struct Edge {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;
};

/// An edge traversed forwards or backwards.
struct SignedEdge {
  EdgeId edge = 0;
  bool inverted = false;

  [[nodiscard]] SignedEdge reversed() const { return {edge, !inverted}; }
  auto operator<=>(const SignedEdge&) const = default;
};

class ReflexiveGraph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId source, VertexId target);
  EdgeId add_edge(std::string name, const std::string& source, const std::string& target);

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<std::string>& vertex_names() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  [[nodiscard]] std::optional<VertexId> find_vertex(const std::string& name) const;
  [[nodiscard]] std::optional<EdgeId> find_edge(const std::string& name) const;
  /// Throws InputError naming the unknown vertex.
  [[nodiscard]] VertexId vertex(const std::string& name) const;
  [[nodiscard]] EdgeId edge_id(const std::string& name) const;

  [[nodiscard]] VertexId from(SignedEdge s) const {
    return s.inverted ? edges_.at(s.edge).target : edges_.at(s.edge).source;
  }
  [[nodiscard]] VertexId to(SignedEdge s) const {
    return s.inverted ? edges_.at(s.edge).source : edges_.at(s.edge).target;
  }
  /// Non-degenerate signed edges leaving v, ordered by (edge, sign).
  [[nodiscard]] const std::vector<SignedEdge>& star(VertexId v) const { return stars_.at(v); }

  [[nodiscard]] std::string show(SignedEdge s) const {
    return (s.inverted ? "~" : "") + edges_.at(s.edge).name;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<SignedEdge>> stars_;
};

using GraphPtr = std::shared_ptr<const ReflexiveGraph>;

/// Backtrack-free word of signed edges from `start` to `end`; the unique
/// representative of its arrow in the free groupoid.
struct ReducedPath {
  VertexId start = 0;
  VertexId end = 0;
  std::vector<SignedEdge> word;

  [[nodiscard]] std::size_t length() const { return word.size(); }
  [[nodiscard]] bool empty() const { return word.empty(); }
  auto operator<=>(const ReducedPath&) const = default;
};

/// Reduces a consecutive-composable word by cancelling adjacent e·ē pairs.
/// Throws InputError if the word does not chain from `start`.
ReducedPath reduce_path(const ReflexiveGraph& g, VertexId start,
                        const std::vector<SignedEdge>& word);

/// Parses "e.~f.g" (edge names, "~" for the formal inverse). Empty string is
/// the empty word.
std::vector<SignedEdge> parse_word(const ReflexiveGraph& g, const std::string& text);

std::string show_path(const ReflexiveGraph& g, const ReducedPath& p);

/// Concatenation followed by reduction; nullopt unless p.end == q.start.
std::optional<ReducedPath> concat(const ReflexiveGraph& g, const ReducedPath& p,
                                  const ReducedPath& q);
ReducedPath inverse_path(const ReducedPath& p);
ReducedPath empty_path(VertexId v);

/// Every reduced path out of x of length <= bound, sorted.
std::vector<ReducedPath> reduced_paths_from(const ReflexiveGraph& g, VertexId x,
                                            std::size_t bound);

/// Free fundamental groupoid of a reflexive graph. Bounds are reduced word
/// lengths.
Groupoid<VertexId, ReducedPath> pi1(GraphPtr g);

// ---------------------------------------------------------------------------
// Maps

/// Graph morphism. Edges go to edges or to identity loops (nullopt). Never
/// to formal inverses.
struct GraphMap {
  GraphPtr domain;
  GraphPtr codomain;
  std::vector<VertexId> vertex_map;
  std::vector<std::optional<EdgeId>> edge_map;

  [[nodiscard]] VertexId operator()(VertexId v) const { return vertex_map.at(v); }
  /// Image of a signed edge: nullopt means the identity loop at the image of
  /// its endpoint.
  [[nodiscard]] std::optional<SignedEdge> operator()(SignedEdge s) const {
    const auto& img = edge_map.at(s.edge);
    if (!img) return std::nullopt;
    return SignedEdge{*img, s.inverted};
  }
};

/// Typing problems (endpoint mismatch, sizes). Empty iff well-typed.
std::vector<std::string> map_problems(const GraphMap& m);

GraphMap identity_map(GraphPtr g);
/// f then g.
GraphMap compose_maps(const GraphMap& f, const GraphMap& g);

/// Edgewise image of a word (identity loops dropped, no reduction).
std::vector<SignedEdge> map_word(const GraphMap& m, const std::vector<SignedEdge>& word);
/// Image of a path in the free groupoid of the codomain.
ReducedPath map_path(const GraphMap& m, const ReducedPath& p);

GroupoidFunctor<VertexId, ReducedPath, VertexId, ReducedPath> pi1_functor(const GraphMap& m);

// ---------------------------------------------------------------------------
// Fiber products

/// One side of an edge pair in a fiber product: a genuine edge or the
/// identity loop at `vertex`.
struct EdgeOrIdentity {
  std::optional<EdgeId> edge;
  VertexId vertex = -1;  // only set for identity loops

  static EdgeOrIdentity of(EdgeId e) { return {e, -1}; }
  static EdgeOrIdentity identity_at(VertexId v) { return {std::nullopt, v}; }
  auto operator<=>(const EdgeOrIdentity&) const = default;
};

struct FiberProduct {
  GraphPtr graph;
  GraphMap first;
  GraphMap second;
  std::map<std::pair<VertexId, VertexId>, VertexId> vertex_of;
  std::map<std::pair<EdgeOrIdentity, EdgeOrIdentity>, EdgeId> edge_of;

  [[nodiscard]] std::optional<VertexId> vertex(VertexId a, VertexId b) const;
  [[nodiscard]] std::optional<EdgeId> edge(const EdgeOrIdentity& a,
                                           const EdgeOrIdentity& b) const;
};

/// Pullback of p: E -> B and p': E' -> B in reflexive graphs. Edge pairs
/// with equal image (edge or identity loop), plus (edge, identity) pairs
/// whenever the edge is collapsed onto that identity.
FiberProduct fiber_product(const GraphMap& p, const GraphMap& q);

/// Categorical product, realized as the fiber product over the one-vertex
/// graph.
FiberProduct product_graph(GraphPtr b, GraphPtr f);

// ---------------------------------------------------------------------------
// Fibration surrogates

/// First failure of the star condition, or nullopt. With `unique` set the
/// lift must be unique and no edge at the vertex may collapse.
std::optional<std::string> star_condition_witness(const GraphMap& p, bool unique);
bool is_star_surjective(const GraphMap& p);
bool is_covering(const GraphMap& p);

/// Lifts a word of the base starting at x, one edge at a time. Returns
/// nullopt if some step has no lift; takes the first lift if several exist.
std::optional<std::vector<SignedEdge>> lift_word(const GraphMap& p, VertexId x,
                                                 const std::vector<SignedEdge>& word);

// ---------------------------------------------------------------------------
// Foliations

/// Leaves are paired by index: edge_blocks[i] lives in vertex_blocks[i].
/// Missing trailing edge blocks are empty.
struct FoliatedGraph {
  GraphPtr graph;
  std::vector<std::vector<VertexId>> vertex_blocks;
  std::vector<std::vector<EdgeId>> edge_blocks;
};

std::vector<std::string> foliation_problems(const FoliatedGraph& f);

struct LeafSpace {
  GraphPtr graph;   // disjoint union of the leaf subgraphs
  GraphMap to_base; // identity on names
};

/// Throws InputError if the blocks are not an exact partition.
LeafSpace foliation_space(const FoliatedGraph& f);

// ---------------------------------------------------------------------------
// Fixtures

/// Cycle v0 -> v1 -> ... -> v(n-1) -> v0 with edges e0..e(n-1).
ReflexiveGraph cycle_graph(int n, const std::string& vertex_prefix = "v",
                           const std::string& edge_prefix = "e");
/// Path v0 -> v1 -> ... -> v(n-1).
ReflexiveGraph path_graph(int n, const std::string& vertex_prefix = "v",
                          const std::string& edge_prefix = "e");
/// Graph with the given vertices and no edges.
ReflexiveGraph discrete_graph(const std::vector<std::string>& names);
/// The k-fold wrap C(k*n) -> C(n), i -> i mod n.
GraphMap cyclic_cover(int sheets, int n);

}  // namespace dblgpd

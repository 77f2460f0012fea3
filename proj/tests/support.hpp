#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.
// Nothing here calls the library's own path enumeration or reduction.

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dblgpd/graph.hpp"

namespace testing_support {

using namespace dblgpd;

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(DBLGPD_FIXTURES) / name;
}

inline GraphPtr share(ReflexiveGraph g) { return std::make_shared<ReflexiveGraph>(std::move(g)); }

/// Every backtrack-free signed word of length <= bound starting at x, by
/// plain recursion over the edge list.
inline std::vector<ReducedPath> brute_paths(const ReflexiveGraph& g, VertexId x,
                                            std::size_t bound) {
  std::vector<ReducedPath> out;
  ReducedPath cur{x, x, {}};
  auto rec = [&](auto&& self) -> void {
    out.push_back(cur);
    if (cur.word.size() == bound) return;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      for (bool inv : {false, true}) {
        const VertexId from = inv ? edge.target : edge.source;
        const VertexId to = inv ? edge.source : edge.target;
        if (from != cur.end) continue;
        const SignedEdge s{static_cast<EdgeId>(e), inv};
        if (!cur.word.empty() && cur.word.back() == s.reversed()) continue;
        const VertexId saved = cur.end;
        cur.word.push_back(s);
        cur.end = to;
        self(self);
        cur.word.pop_back();
        cur.end = saved;
      }
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// Free reduction of an arbitrary signed word by repeated scanning.
inline std::vector<SignedEdge> naive_reduce(std::vector<SignedEdge> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == w[i].reversed()) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// Edge images of a word under q, collapsed edges dropped, then reduced.
inline std::vector<SignedEdge> naive_image(const GraphMap& q, const std::vector<SignedEdge>& w) {
  std::vector<SignedEdge> out;
  for (const auto& s : w)
    if (q.edge_map[s.edge]) out.push_back({*q.edge_map[s.edge], s.inverted});
  return naive_reduce(out);
}

/// A `sheets`-fold covering of the base u -a-> v, v -b-> u, u -c-> u with
/// one random permutation of the sheets per base edge.
inline GraphMap random_covering(int sheets, std::uint64_t seed) {
  auto base = std::make_shared<ReflexiveGraph>();
  base->add_vertex("u");
  base->add_vertex("v");
  base->add_edge("a", "u", "v");
  base->add_edge("b", "v", "u");
  base->add_edge("c", "u", "u");
  auto total = std::make_shared<ReflexiveGraph>();
  GraphMap p{total, base, {}, {}};
  for (int b = 0; b < 2; ++b) {
    for (int k = 0; k < sheets; ++k) {
      total->add_vertex(base->vertex_name(b) + std::to_string(k));
      p.vertex_map.push_back(b);
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t e = 0; e < base->edge_count(); ++e) {
    const auto& edge = base->edge(static_cast<EdgeId>(e));
    std::vector<int> perm(static_cast<std::size_t>(sheets));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int k = 0; k < sheets; ++k) {
      total->add_edge(edge.name + std::to_string(k), edge.source * sheets + k,
                      edge.target * sheets + perm[static_cast<std::size_t>(k)]);
      p.edge_map.emplace_back(static_cast<EdgeId>(e));
    }
  }
  return p;
}

}  // namespace testing_support

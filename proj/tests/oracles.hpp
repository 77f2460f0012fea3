#pragma once

// Brute-force descriptions of the square sets, and the explicit comparison
// isomorphism for discrete fibres, used by unit and acceptance tests.

#include <array>
#include <map>
#include <set>
#include <utility>

#include "dblgpd/galois.hpp"
#include "dblgpd/internal.hpp"
#include "dblgpd/rho.hpp"
#include "support.hpp"

namespace testing_support {

using Corners = std::array<VertexId, 4>;  // upper start, lower start, upper end, lower end
using PathPair = std::pair<ReducedPath, ReducedPath>;
using Census = std::map<Corners, std::set<PathPair>>;

inline Corners corners(const ReducedPath& f, const ReducedPath& g) {
  return {f.start, g.start, f.end, g.end};
}

/// Pairs of reduced paths of equal length whose projections agree edge by
/// edge, grouped by corners.
inline Census gamma_oracle(const GraphMap& p, std::size_t bound) {
  Census out;
  const auto n = static_cast<VertexId>(p.domain->vertex_count());
  for (VertexId x = 0; x < n; ++x) {
    const auto from_x = brute_paths(*p.domain, x, bound);
    for (VertexId y = 0; y < n; ++y) {
      if (p(x) != p(y)) continue;
      for (const auto& g : brute_paths(*p.domain, y, bound)) {
        for (const auto& f : from_x) {
          if (f.length() != g.length()) continue;
          bool same = true;
          for (std::size_t i = 0; same && i < f.length(); ++i) same = p(f.word[i]) == p(g.word[i]);
          if (same) out[corners(f, g)].insert({f, g});
        }
      }
    }
  }
  return out;
}

/// Every square of gamma(p) at the bound, read through homset for every
/// pair of vertical arrows.
inline Census gamma_census(const Galois& g, std::size_t bound) {
  Census out;
  const auto verticals = g.value.squares.objects();
  for (const auto& v : verticals) {
    for (const auto& w : verticals) {
      for (const auto& u : g.value.squares.homset(v, w, bound))
        out[corners(u.upper, u.lower)].insert({u.upper, u.lower});
    }
  }
  return out;
}

/// Pairs (f, g) of reduced paths with the same reduced image under q;
/// with `share_ends`, additionally f and g share both end points.
inline std::set<PathPair> rho_oracle(const GraphMap& q, std::size_t bound, bool share_ends) {
  std::set<PathPair> out;
  const auto n = static_cast<VertexId>(q.domain->vertex_count());
  std::vector<std::vector<ReducedPath>> from(static_cast<std::size_t>(n));
  for (VertexId x = 0; x < n; ++x) from[x] = brute_paths(*q.domain, x, bound);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      if (q(x) != q(y) || (share_ends && x != y)) continue;
      for (const auto& f : from[x]) {
        const auto fi = naive_image(q, f.word);
        for (const auto& g : from[y]) {
          if (share_ends && f.end != g.end) continue;
          if (q(f.end) == q(g.end) && naive_image(q, g.word) == fi) out.insert({f, g});
        }
      }
    }
  }
  return out;
}

template <class D>
std::set<PathPair> square_set(const D& d, std::size_t bound) {
  std::set<PathPair> out;
  for (const auto& u : d.all_squares(bound)) out.insert({u.upper, u.lower});
  return out;
}

/// The vertical composite of two Galois squares computed by zipping both
/// into E x_B E, gluing in (E x_B E) x_E (E x_B E) and projecting out the
/// outer components.
inline std::optional<GaloisSquare> splice(const Galois& g, const GaloisSquare& u,
                                          const GaloisSquare& v) {
  const auto& fp = *g.pairs;
  const auto zu = zip_square(fp, u);
  const auto zv = zip_square(fp, v);
  if (!zu || !zv) return std::nullopt;
  const auto triple = fiber_product(fp.second, fp.first);
  const auto w = glue(triple, fp.second, fp.first, *zu, *zv);
  if (!w) return std::nullopt;
  return GaloisSquare{map_path(compose_maps(triple.first, fp.first), *w),
                      map_path(compose_maps(triple.second, fp.second), *w)};
}

/// For a discrete fibre F: product_gamma(B, F) against gamma of the
/// projection B x F -> B, in both directions.
struct DiscreteFibreIso {
  FiberProduct total;  // B x F with its projections
  Galois galois;
  ProductGalois product;

  DiscreteFibreIso(GraphPtr base, GraphPtr fibre)
      : total(product_graph(base, fibre)),
        galois(gamma(total.first)),
        product(product_gamma(base, fibre)) {}

  [[nodiscard]] VertexId point(VertexId b, VertexId f) const { return *total.vertex(b, f); }

  [[nodiscard]] ReducedPath lift(const ReducedPath& beta, VertexId f) const {
    const VertexId start = point(beta.start, f);
    const auto word = lift_word(total.first, start, beta.word);
    return reduce_path(*total.graph, start, *word);
  }

  [[nodiscard]] GaloisSquare to_galois(const ProductSquare& s) const {
    return {lift(s.base, s.fiber_minus.start), lift(s.base, s.fiber_plus.start)};
  }

  [[nodiscard]] ProductSquare to_product(const GaloisSquare& u) const {
    const auto fm = total.second(u.upper.start);
    const auto fp = total.second(u.lower.start);
    return {map_path(total.first, u.upper), empty_path(fm), empty_path(fp)};
  }

  [[nodiscard]] VertexPair to_galois(const ProductVertical& v) const {
    return {point(v.base, v.fiber_minus), point(v.base, v.fiber_plus)};
  }
};

}  // namespace testing_support

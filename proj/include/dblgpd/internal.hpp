#pragma once

// Internal groupoids in reflexive graphs and the double groupoid obtained by
// applying the free fundamental groupoid to one.

#include <optional>
#include <utility>
#include <vector>

#include "dblgpd/double_groupoid.hpp"
#include "dblgpd/graph.hpp"

namespace dblgpd {

/// Graphs C0 (objects) and C1 (arrows) with structure maps. `composable` is
/// C2 = C1 x_{C0} C1 formed from (target, source); `compose` maps C2 to C1.
struct InternalGroupoidInGraphs {
  GraphPtr objects;
  GraphPtr arrows;
  GraphMap source;
  GraphMap target;
  GraphMap identity;
  FiberProduct composable;
  GraphMap compose;
  GraphMap inverse;
};

/// Eq(p) = E x_B E as an internal groupoid in graphs over E.
InternalGroupoidInGraphs kernel_pair_graphs(const GraphMap& p);

/// The two components of a fiber-product edge or vertex.
std::pair<EdgeOrIdentity, EdgeOrIdentity> edge_components(const FiberProduct& fp, EdgeId e);
std::pair<VertexId, VertexId> vertex_components(const FiberProduct& fp, VertexId v);

/// Inverse of the comparison map pi1(X x_Z Y) -> pi1(X) x_{pi1 Z} pi1(Y):
/// interleaves u and v into one path of the fiber product. Steps collapsed
/// by their structure map are paired with identity loops; the remaining
/// steps must have verbatim equal images. Returns nullopt when the images
/// do not align.
std::optional<ReducedPath> glue(const FiberProduct& fp, const GraphMap& f, const GraphMap& g,
                                const ReducedPath& u, const ReducedPath& v);

using GraphDoubleGroupoid = DoubleGroupoid<VertexId, ReducedPath, VertexId, ReducedPath>;

struct AppliedPi1 {
  GraphDoubleGroupoid value;
  /// Round-trip checks of the pair and triple comparison maps.
  AuditReport comparisons;
};

/// Bounded round trips of the comparison maps
///   pi1(C1 x_{C0} C1)        -> pi1 C1 x_{pi1 C0} pi1 C1
///   pi1(C1 x_{C0} C1 x_{C0} C1) -> the triple pullback
/// on every class of length <= bound.
AuditReport check_comparison_maps(const InternalGroupoidInGraphs& c, std::size_t bound);

/// pi1 applied to an internal groupoid in graphs. Throws PreconditionError
/// with a witness if a comparison map is not bijective at the bound.
AppliedPi1 apply_pi1(const InternalGroupoidInGraphs& c, std::size_t bound);

}  // namespace dblgpd

#pragma once

// The Galois double groupoid of a covering of reflexive graphs, and the
// direct model for a product projection B x F -> B.

#include <memory>
#include <optional>

#include "dblgpd/double_groupoid.hpp"
#include "dblgpd/graph.hpp"
#include "dblgpd/internal.hpp"

namespace dblgpd {

/// A vertical arrow (e, e') with p(e) = p(e').
struct VertexPair {
  VertexId first = 0;
  VertexId second = 0;
  auto operator<=>(const VertexPair&) const = default;
};

/// A path of E x_B E kept componentwise: `upper` is d1- and `lower` is d1+.
/// The components run in lockstep, step i of one lying over step i of the
/// other.
struct GaloisSquare {
  ReducedPath upper;
  ReducedPath lower;
  auto operator<=>(const GaloisSquare&) const = default;
};

using GaloisDouble = DoubleGroupoid<VertexId, ReducedPath, VertexPair, GaloisSquare>;

/// Edgewise zip into the fiber-product graph; nullopt if the components do
/// not run in lockstep over the same base edges.
std::optional<ReducedPath> zip_square(const FiberProduct& fp, const GaloisSquare& u);
/// Inverse of zip_square for fiber products without mixed edge pairs.
GaloisSquare unzip_square(const FiberProduct& fp, const ReducedPath& w);

/// u o1 u'. Requires u.lower == u'.upper verbatim; throws CompositionError
/// otherwise.
GaloisSquare vertical_compose(const GaloisSquare& u, const GaloisSquare& v);

struct Galois {
  GraphMap p;
  std::shared_ptr<const FiberProduct> pairs; // E x_B E
  GaloisDouble value;
};

/// gamma(p) for a covering p. Throws PreconditionError naming the first
/// vertex where unique lifting fails.
Galois gamma(const GraphMap& p);

/// Bounded round trips of the comparison maps for Eq(p). Requires a
/// covering.
AuditReport check_canonical_morphisms(const GraphMap& p, std::size_t bound);

// ---------------------------------------------------------------------------
// Product fibrations

using ProductPoint = std::pair<VertexId, VertexId>; // (b, f)
using ProductArrow = std::pair<ReducedPath, ReducedPath>; // (beta, phi)

struct ProductVertical {
  VertexId base = 0;
  VertexId fiber_minus = 0;
  VertexId fiber_plus = 0;
  auto operator<=>(const ProductVertical&) const = default;
};

struct ProductSquare {
  ReducedPath base;
  ReducedPath fiber_minus;
  ReducedPath fiber_plus;
  auto operator<=>(const ProductSquare&) const = default;
};

using ProductDouble = DoubleGroupoid<ProductPoint, ProductArrow, ProductVertical, ProductSquare>;

struct ProductGalois {
  GraphPtr base;
  GraphPtr fiber;
  ProductDouble value;
};

/// Squares are triples (beta, phi-, phi+) with d1+-(beta, phi-, phi+) =
/// (beta, phi+-). Vertical arrows are all triples (b, f-, f+).
ProductGalois product_gamma(GraphPtr base, GraphPtr fiber);

/// The total graph B x F and its projection to B.
GraphMap product_projection(GraphPtr base, GraphPtr fiber);

}  // namespace dblgpd

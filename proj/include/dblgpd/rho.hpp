#pragma once

// The homotopy double groupoid of a graph map q: M -> B. Because B is a
// graph, a filling square between q f and q g exists exactly when the two
// classes agree in pi1(B), and is then unique; a square is therefore stored
// as the pair ([f], [g]).

#include <optional>
#include <vector>

#include "dblgpd/double_groupoid.hpp"
#include "dblgpd/galois.hpp"
#include "dblgpd/graph.hpp"

namespace dblgpd {

struct RhoSquare {
  ReducedPath upper; // [f], d1-
  ReducedPath lower; // [g], d1+
  auto operator<=>(const RhoSquare&) const = default;
};

using RhoDouble = DoubleGroupoid<VertexId, ReducedPath, VertexPair, RhoSquare>;

struct Rho {
  GraphMap q;
  RhoDouble value;
};

Rho rho(const GraphMap& q);

/// rho of q restricted to the leaves: rho(q o (M_F -> M)). Throws
/// InputError if the blocks are not a partition.
Rho rho_foliated(const FoliatedGraph& leaves, const GraphMap& q);

/// Squares of rho(q) are exactly the pairs with equal image in pi1(B).
bool is_rho_square(const GraphMap& q, const RhoSquare& u);

// ---------------------------------------------------------------------------
// The Moebius band model

struct MobiusModel {
  int n = 0;
  GraphPtr band;  // centre n-cycle plus boundary 2n-cycle
  GraphPtr base;  // n-cycle
  GraphMap q;
  FoliatedGraph leaves;
  VertexId A = 0, B = 0, C = 0;
  ReducedPath iota;  // A -> A, once round the centre
  ReducedPath theta; // B -> C, half the boundary
  ReducedPath phi;   // C -> B, the other half
  VertexPair eta;    // (B, A)
  VertexPair xi;     // (C, A)
  RhoSquare alpha;   // (theta, iota)
  RhoSquare beta;    // (iota, phi)
};

/// Throws PreconditionError for n < 3.
MobiusModel mobius_model(int n);

/// rho of the foliated model.
Rho mobius_rho(const MobiusModel& model);

using DmDouble = DoubleGroupoid<VertexId, ReducedPath, InducedVertical<VertexId, VertexPair>,
                                InducedSquare<ReducedPath, RhoSquare>>;

/// The three-object double groupoid on {A, B, C}.
DmDouble dm_extract(const MobiusModel& model);

struct CyclicCheck {
  std::vector<RhoSquare> composites; // x_1 .. x_N
  std::size_t distinct = 0;
  AuditReport report;
};

/// Forms x_1 = -1 alpha, x_{k+1} = x_k o2 beta or x_k o2 (-1 alpha)
/// alternately, and checks that the centre edge of x_k is iota^k with
/// strictly increasing length.
CyclicCheck infinite_cyclic_check(const MobiusModel& model, std::size_t count);

}  // namespace dblgpd

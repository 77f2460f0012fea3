#pragma once

// Symbolic cubes of dimension <= 3 over named generators, with faces,
// degeneracies, connections, inversions and compositions, and an exact
// evaluation semantics on dyadic points.
//
// Evaluation: eps_i deletes coordinate i; Gamma^a_i replaces (t_i, t_{i+1})
// by max(t_i, t_{i+1}) for a = - and min(t_i, t_{i+1}) for a = +; -_i sends
// t_i to 1 - t_i; x o_i y reads x at 2 t_i when t_i <= 1/2 and y at
// 2 t_i - 1 otherwise.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dblgpd/double_groupoid.hpp"
#include "dblgpd/groupoid.hpp"
#include "dblgpd/report.hpp"

namespace dblgpd::cube {

using dblgpd::Sign;

inline Sign flip(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { generator, degeneracy, connection, inversion, composition };
  Kind kind = Kind::generator;
  int dim = 0;
  // generator: name, plus the original coordinates fixed by iterated faces
  std::string name;
  std::map<int, Sign> fixed;
  // operators
  int index = 0;
  Sign sign = Sign::minus;
  TermPtr left;
  TermPtr right;
};

struct Generator {
  std::string name;
  int dim = 0;
  std::map<std::pair<int, Sign>, TermPtr> faces;
};

/// Generators and their declared faces. Undeclared faces are generic.
class Signature {
 public:
  /// Throws InputError on a duplicate name, a face index out of range or a
  /// face of the wrong dimension.
  void declare(const std::string& name, int dim,
               const std::map<std::pair<int, Sign>, TermPtr>& faces = {});
  [[nodiscard]] const Generator& at(const std::string& name) const;
  [[nodiscard]] bool contains(const std::string& name) const { return gens_.count(name) > 0; }
  [[nodiscard]] const std::map<std::string, Generator>& generators() const { return gens_; }

 private:
  std::map<std::string, Generator> gens_;
};

// ---------------------------------------------------------------------------
// Construction. These are smart constructors: they apply the simplification
// rules but never check composability.

TermPtr gen(const Signature& sig, const std::string& name);
TermPtr eps(int i, TermPtr t);
TermPtr conn(Sign a, int i, TermPtr t);
TermPtr inv(int i, TermPtr t);
TermPtr comp(int i, TermPtr a, TermPtr b);

/// Iterated degeneracy eps_1 ... eps_1 x raising x to dimension `dim`.
TermPtr constant(TermPtr x, int dim);

/// The face d^a_i t, pushed down to generators by the law table.
TermPtr face(const Signature& sig, const TermPtr& t, int i, Sign a);

/// a o_i b after checking d+_i a == d-_i b; throws CompositionError with the
/// two faces otherwise.
TermPtr compose_checked(const Signature& sig, int i, const TermPtr& a, const TermPtr& b);

/// Rows are composed along `col_dir`, the resulting rows along `row_dir`.
/// Every adjacent pair is checked; throws CompositionError naming the first
/// mismatching pair.
TermPtr matrix_composite(const Signature& sig, const std::vector<std::vector<TermPtr>>& rows,
                         int row_dir, int col_dir);

// ---------------------------------------------------------------------------
// Evaluation

/// Fixed-point coordinate in [0, 1] with denominator 2^30.
using Coord = std::int64_t;
inline constexpr int kScaleBits = 30;
inline constexpr Coord kOne = Coord{1} << kScaleBits;

/// num / den as a coordinate; throws InputError unless den is a power of two
/// no larger than 2^30 and 0 <= num <= den.
Coord dyadic(std::int64_t num, std::int64_t den);

struct Value {
  std::string gen;
  std::vector<Coord> coords;
  auto operator<=>(const Value&) const = default;
};

/// Generic valuation: a generator sends a point to (name, point) unless the
/// point lies on a declared face, where the declared face is evaluated
/// instead (lowest coordinate first).
Value evaluate(const Signature& sig, const TermPtr& t, const std::vector<Coord>& point);

/// All points of [0,1]^dim with coordinates k / resolution.
std::vector<std::vector<Coord>> grid(int dim, int resolution);

/// Equal dimension and equal values on the whole grid. On failure `witness`
/// receives the first differing point.
bool equivalent(const Signature& sig, const TermPtr& a, const TermPtr& b, int resolution = 16,
                std::string* witness = nullptr);

// ---------------------------------------------------------------------------
// Text

std::string to_sexpr(const TermPtr& t);
/// Inverse of to_sexpr; throws InputError on malformed text or unknown
/// generators.
TermPtr parse_sexpr(const Signature& sig, const std::string& text);
std::string show_point(const std::vector<Coord>& p);

// ---------------------------------------------------------------------------
// Audits

/// Every pair of declared faces agrees on their common edge.
AuditReport check_declarations(const Signature& sig, int resolution = 16);

/// Every rule of the face law table against evaluation, for every operator
/// instance with result dimension <= 3 on generic generators, on the full
/// grid at the given resolution.
AuditReport check_law_table(int resolution = 16);

/// `count` seeded random terms of dimension <= 3: every face against the
/// restriction of the term, and face commutation.
AuditReport check_random_terms(std::size_t count, std::uint64_t seed, int resolution = 16);

/// The moved homotopy h' = [[eps1(-1 theta), h], [-2 Gamma-1 theta, Gamma-1 theta]]:
/// its ends d+-3 are [[box, alpha+-], [box, box]], d+-2 and d+1 are double
/// identities. With `degenerate_h` the homotopy is the triple identity on m
/// and h' must be one as well.
AuditReport audit_hprime(bool degenerate_h = false, int resolution = 16);

/// lambda2' = [[q zeta, F], [lambda2, eps1(-1 w)]] with the filler
/// F = -2 Gamma+1 w, (s,t,u) -> w(min(s, 1-t), u): the declared filler faces
/// and the ends of lambda2'.
AuditReport audit_lambda2prime(int resolution = 16);

}  // namespace dblgpd::cube

#include "dblgpd/galois.hpp"

namespace dblgpd {

std::optional<ReducedPath> zip_square(const FiberProduct& fp, const GaloisSquare& u) {
  if (u.upper.length() != u.lower.length()) return std::nullopt;
  const auto start = fp.vertex(u.upper.start, u.lower.start);
  if (!start) return std::nullopt;
  ReducedPath w{*start, *start, {}};
  for (std::size_t i = 0; i < u.upper.length(); ++i) {
    const auto a = u.upper.word[i];
    const auto b = u.lower.word[i];
    if (a.inverted != b.inverted) return std::nullopt;
    const auto e = fp.edge(EdgeOrIdentity::of(a.edge), EdgeOrIdentity::of(b.edge));
    if (!e) return std::nullopt;
    w.word.push_back({*e, a.inverted});
  }
  if (!w.word.empty()) w.end = fp.graph->to(w.word.back());
  return w;
}

GaloisSquare unzip_square(const FiberProduct& fp, const ReducedPath& w) {
  GaloisSquare u{{fp.first(w.start), fp.first(w.end), {}}, {fp.second(w.start), fp.second(w.end), {}}};
  for (const auto s : w.word) {
    const auto a = fp.first(s);
    const auto b = fp.second(s);
    if (!a || !b) throw PreconditionError("unzip_square: path uses a mixed edge pair");
    u.upper.word.push_back(*a);
    u.lower.word.push_back(*b);
  }
  return u;
}

GaloisSquare vertical_compose(const GaloisSquare& u, const GaloisSquare& v) {
  if (u.lower != v.upper) {
    throw CompositionError("vertical_compose: lower edge of the first square differs from the "
                           "upper edge of the second");
  }
  // Both components of a lockstep-reduced pair are reduced, so u.upper and
  // v.lower still run in lockstep and need no further reduction.
  return {u.upper, v.lower};
}

namespace {

void require_covering(const GraphMap& p) {
  if (auto problems = map_problems(p); !problems.empty()) {
    throw InputError("ill-typed map: " + problems.front());
  }
  if (auto witness = star_condition_witness(p, true)) {
    throw PreconditionError("map is not a covering: " + *witness);
  }
}

}  // namespace

Galois gamma(const GraphMap& p) {
  require_covering(p);
  auto fp = std::make_shared<const FiberProduct>(fiber_product(p, p));
  const GraphPtr e = p.domain;
  const GraphPtr pe = fp->graph;
  const auto g0 = pi1(e);
  const auto paths = pi1(pe);

  Groupoid<VertexPair, GaloisSquare> g1;
  g1.objects = [fp] {
    std::vector<VertexPair> out;
    for (const auto& [key, v] : fp->vertex_of) out.push_back({key.first, key.second});
    return out;
  };
  g1.source = [](const GaloisSquare& u) { return VertexPair{u.upper.start, u.lower.start}; };
  g1.target = [](const GaloisSquare& u) { return VertexPair{u.upper.end, u.lower.end}; };
  g1.identity = [](const VertexPair& x) {
    return GaloisSquare{empty_path(x.first), empty_path(x.second)};
  };
  g1.compose = [fp, paths](const GaloisSquare& a,
                           const GaloisSquare& b) -> std::optional<GaloisSquare> {
    if (a.upper.end != b.upper.start || a.lower.end != b.lower.start) return std::nullopt;
    auto wa = zip_square(*fp, a);
    auto wb = zip_square(*fp, b);
    if (!wa || !wb) return std::nullopt;
    auto w = paths.compose(*wa, *wb);
    if (!w) return std::nullopt;
    return unzip_square(*fp, *w);
  };
  g1.inverse = [](const GaloisSquare& a) {
    return GaloisSquare{inverse_path(a.upper), inverse_path(a.lower)};
  };
  g1.arrows_from = [fp](const VertexPair& x, std::size_t bound) {
    std::vector<GaloisSquare> out;
    const auto start = fp->vertex(x.first, x.second);
    if (!start) return out;
    for (const auto& w : reduced_paths_from(*fp->graph, *start, bound))
      out.push_back(unzip_square(*fp, w));
    std::sort(out.begin(), out.end());
    return out;
  };
  g1.show_object = [e](const VertexPair& x) {
    return "(" + e->vertex_name(x.first) + "," + e->vertex_name(x.second) + ")";
  };
  g1.show_arrow = [e](const GaloisSquare& u) {
    return "{" + show_path(*e, u.upper) + " | " + show_path(*e, u.lower) + "}";
  };
  g1 = complete(g1);

  GaloisDouble d;
  d.horizontal = g0;
  d.squares = g1;
  d.source = {g1, g0, [](const VertexPair& x) { return x.first; },
              [](const GaloisSquare& u) { return u.upper; }};
  d.target = {g1, g0, [](const VertexPair& x) { return x.second; },
              [](const GaloisSquare& u) { return u.lower; }};
  d.unit = {g0, g1, [](VertexId x) { return VertexPair{x, x}; },
            [](const ReducedPath& h) { return GaloisSquare{h, h}; }};
  d.compose_vertical = [](const VertexPair& a, const VertexPair& b) -> std::optional<VertexPair> {
    if (a.second != b.first) return std::nullopt;
    return VertexPair{a.first, b.second};
  };
  d.inverse_vertical = [](const VertexPair& a) { return VertexPair{a.second, a.first}; };
  d.compose1 = [](const GaloisSquare& a, const GaloisSquare& b) -> std::optional<GaloisSquare> {
    if (a.lower != b.upper) return std::nullopt;
    return vertical_compose(a, b);
  };
  d.inverse1 = [](const GaloisSquare& a) { return GaloisSquare{a.lower, a.upper}; };
  return {p, fp, d};
}

AuditReport check_canonical_morphisms(const GraphMap& p, std::size_t bound) {
  require_covering(p);
  return check_comparison_maps(kernel_pair_graphs(p), bound);
}

// ---------------------------------------------------------------------------
// Product fibrations

GraphMap product_projection(GraphPtr base, GraphPtr fiber) {
  return product_graph(std::move(base), std::move(fiber)).first;
}

ProductGalois product_gamma(GraphPtr base, GraphPtr fiber) {
  const auto pb = pi1(base);
  const auto pf = pi1(fiber);
  const auto g0 = product(pb, pf);

  Groupoid<ProductVertical, ProductSquare> g1;
  g1.objects = [base, fiber] {
    std::vector<ProductVertical> out;
    const auto nb = static_cast<VertexId>(base->vertex_count());
    const auto nf = static_cast<VertexId>(fiber->vertex_count());
    for (VertexId b = 0; b < nb; ++b)
      for (VertexId f = 0; f < nf; ++f)
        for (VertexId g = 0; g < nf; ++g) out.push_back({b, f, g});
    return out;
  };
  g1.source = [](const ProductSquare& u) {
    return ProductVertical{u.base.start, u.fiber_minus.start, u.fiber_plus.start};
  };
  g1.target = [](const ProductSquare& u) {
    return ProductVertical{u.base.end, u.fiber_minus.end, u.fiber_plus.end};
  };
  g1.identity = [](const ProductVertical& v) {
    return ProductSquare{empty_path(v.base), empty_path(v.fiber_minus), empty_path(v.fiber_plus)};
  };
  g1.compose = [pb, pf](const ProductSquare& a,
                        const ProductSquare& b) -> std::optional<ProductSquare> {
    auto beta = pb.compose(a.base, b.base);
    auto minus = pf.compose(a.fiber_minus, b.fiber_minus);
    auto plus = pf.compose(a.fiber_plus, b.fiber_plus);
    if (!beta || !minus || !plus) return std::nullopt;
    return ProductSquare{*beta, *minus, *plus};
  };
  g1.inverse = [](const ProductSquare& a) {
    return ProductSquare{inverse_path(a.base), inverse_path(a.fiber_minus),
                         inverse_path(a.fiber_plus)};
  };
  g1.homset = [pb, pf](const ProductVertical& x, const ProductVertical& y, std::size_t bound) {
    std::vector<ProductSquare> out;
    const auto minus = pf.homset(x.fiber_minus, y.fiber_minus, bound);
    const auto plus = pf.homset(x.fiber_plus, y.fiber_plus, bound);
    for (const auto& beta : pb.homset(x.base, y.base, bound))
      for (const auto& m : minus)
        for (const auto& p : plus) out.push_back({beta, m, p});
    return out;
  };
  g1.show_object = [base, fiber](const ProductVertical& v) {
    return "(" + base->vertex_name(v.base) + "," + fiber->vertex_name(v.fiber_minus) + "," +
           fiber->vertex_name(v.fiber_plus) + ")";
  };
  g1.show_arrow = [base, fiber](const ProductSquare& u) {
    return "{" + show_path(*base, u.base) + " | " + show_path(*fiber, u.fiber_minus) + " | " +
           show_path(*fiber, u.fiber_plus) + "}";
  };
  g1 = complete(g1);

  ProductDouble d;
  d.horizontal = g0;
  d.squares = g1;
  d.source = {g1, g0,
              [](const ProductVertical& v) { return ProductPoint{v.base, v.fiber_minus}; },
              [](const ProductSquare& u) { return ProductArrow{u.base, u.fiber_minus}; }};
  d.target = {g1, g0,
              [](const ProductVertical& v) { return ProductPoint{v.base, v.fiber_plus}; },
              [](const ProductSquare& u) { return ProductArrow{u.base, u.fiber_plus}; }};
  d.unit = {g0, g1,
            [](const ProductPoint& x) { return ProductVertical{x.first, x.second, x.second}; },
            [](const ProductArrow& h) { return ProductSquare{h.first, h.second, h.second}; }};
  d.compose_vertical = [](const ProductVertical& a,
                          const ProductVertical& b) -> std::optional<ProductVertical> {
    if (a.base != b.base || a.fiber_plus != b.fiber_minus) return std::nullopt;
    return ProductVertical{a.base, a.fiber_minus, b.fiber_plus};
  };
  d.inverse_vertical = [](const ProductVertical& a) {
    return ProductVertical{a.base, a.fiber_plus, a.fiber_minus};
  };
  d.compose1 = [](const ProductSquare& a, const ProductSquare& b) -> std::optional<ProductSquare> {
    if (a.base != b.base || a.fiber_plus != b.fiber_minus) return std::nullopt;
    return ProductSquare{a.base, a.fiber_minus, b.fiber_plus};
  };
  d.inverse1 = [](const ProductSquare& a) {
    return ProductSquare{a.base, a.fiber_plus, a.fiber_minus};
  };
  return {base, fiber, d};
}

}  // namespace dblgpd

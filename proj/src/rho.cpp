#include "dblgpd/rho.hpp"

#include <map>
#include <set>

namespace dblgpd {

bool is_rho_square(const GraphMap& q, const RhoSquare& u) {
  return q(u.upper.start) == q(u.lower.start) && q(u.upper.end) == q(u.lower.end) &&
         map_path(q, u.upper) == map_path(q, u.lower);
}

Rho rho(const GraphMap& q) {
  if (auto problems = map_problems(q); !problems.empty()) {
    throw InputError("ill-typed map: " + problems.front());
  }
  const GraphPtr m = q.domain;
  const auto g0 = pi1(m);

  Groupoid<VertexPair, RhoSquare> g1;
  g1.objects = [q, m] {
    std::vector<VertexPair> out;
    const auto n = static_cast<VertexId>(m->vertex_count());
    for (VertexId x = 0; x < n; ++x)
      for (VertexId y = 0; y < n; ++y)
        if (q(x) == q(y)) out.push_back({x, y});
    return out;
  };
  g1.source = [](const RhoSquare& u) { return VertexPair{u.upper.start, u.lower.start}; };
  g1.target = [](const RhoSquare& u) { return VertexPair{u.upper.end, u.lower.end}; };
  g1.identity = [](const VertexPair& x) {
    return RhoSquare{empty_path(x.first), empty_path(x.second)};
  };
  g1.compose = [g0](const RhoSquare& a, const RhoSquare& b) -> std::optional<RhoSquare> {
    auto upper = g0.compose(a.upper, b.upper);
    auto lower = g0.compose(a.lower, b.lower);
    if (!upper || !lower) return std::nullopt;
    return RhoSquare{*upper, *lower};
  };
  g1.inverse = [](const RhoSquare& a) {
    return RhoSquare{inverse_path(a.upper), inverse_path(a.lower)};
  };
  g1.arrows_from = [q, m](const VertexPair& x, std::size_t bound) {
    std::map<ReducedPath, std::vector<ReducedPath>> by_image;
    for (auto& g : reduced_paths_from(*m, x.second, bound))
      by_image[map_path(q, g)].push_back(std::move(g));
    std::vector<RhoSquare> out;
    for (const auto& f : reduced_paths_from(*m, x.first, bound)) {
      auto it = by_image.find(map_path(q, f));
      if (it == by_image.end()) continue;
      for (const auto& g : it->second) out.push_back({f, g});
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  g1.show_object = [m](const VertexPair& x) {
    return "(" + m->vertex_name(x.first) + "," + m->vertex_name(x.second) + ")";
  };
  g1.show_arrow = [m](const RhoSquare& u) {
    return "{" + show_path(*m, u.upper) + " | " + show_path(*m, u.lower) + "}";
  };
  g1 = complete(g1);

  RhoDouble d;
  d.horizontal = g0;
  d.squares = g1;
  d.source = {g1, g0, [](const VertexPair& x) { return x.first; },
              [](const RhoSquare& u) { return u.upper; }};
  d.target = {g1, g0, [](const VertexPair& x) { return x.second; },
              [](const RhoSquare& u) { return u.lower; }};
  d.unit = {g0, g1, [](VertexId x) { return VertexPair{x, x}; },
            [](const ReducedPath& h) { return RhoSquare{h, h}; }};
  d.compose_vertical = [](const VertexPair& a, const VertexPair& b) -> std::optional<VertexPair> {
    if (a.second != b.first) return std::nullopt;
    return VertexPair{a.first, b.second};
  };
  d.inverse_vertical = [](const VertexPair& a) { return VertexPair{a.second, a.first}; };
  d.compose1 = [](const RhoSquare& a, const RhoSquare& b) -> std::optional<RhoSquare> {
    if (a.lower != b.upper) return std::nullopt;
    return RhoSquare{a.upper, b.lower};
  };
  d.inverse1 = [](const RhoSquare& a) { return RhoSquare{a.lower, a.upper}; };
  return {q, d};
}

Rho rho_foliated(const FoliatedGraph& leaves, const GraphMap& q) {
  const auto space = foliation_space(leaves);
  return rho(compose_maps(space.to_base, q));
}

// ---------------------------------------------------------------------------
// Moebius band

MobiusModel mobius_model(int n) {
  if (n < 3) throw PreconditionError("mobius model needs n >= 3, got " + std::to_string(n));
  MobiusModel model;
  model.n = n;
  auto base = std::make_shared<ReflexiveGraph>(cycle_graph(n, "b", "c"));
  auto band = std::make_shared<ReflexiveGraph>();
  for (int i = 0; i < n; ++i) band->add_vertex("a" + std::to_string(i));
  for (int j = 0; j < 2 * n; ++j) band->add_vertex("r" + std::to_string(j));
  for (int i = 0; i < n; ++i) band->add_edge("i" + std::to_string(i), i, (i + 1) % n);
  for (int j = 0; j < 2 * n; ++j)
    band->add_edge("s" + std::to_string(j), n + j, n + (j + 1) % (2 * n));

  GraphMap q{band, base, {}, {}};
  for (int i = 0; i < n; ++i) q.vertex_map.push_back(i);
  for (int j = 0; j < 2 * n; ++j) q.vertex_map.push_back(j % n);
  for (int i = 0; i < n; ++i) q.edge_map.emplace_back(i);
  for (int j = 0; j < 2 * n; ++j) q.edge_map.emplace_back(j % n);

  FoliatedGraph leaves{band, {{}, {}}, {{}, {}}};
  for (int i = 0; i < n; ++i) {
    leaves.vertex_blocks[0].push_back(i);
    leaves.edge_blocks[0].push_back(i);
  }
  for (int j = 0; j < 2 * n; ++j) {
    leaves.vertex_blocks[1].push_back(n + j);
    leaves.edge_blocks[1].push_back(n + j);
  }

  model.band = band;
  model.base = base;
  model.q = q;
  model.leaves = leaves;
  model.A = 0;
  model.B = n;
  model.C = 2 * n;
  std::vector<SignedEdge> centre, first_half, second_half;
  for (int i = 0; i < n; ++i) centre.push_back({i, false});
  for (int j = 0; j < n; ++j) first_half.push_back({n + j, false});
  for (int j = n; j < 2 * n; ++j) second_half.push_back({n + j, false});
  model.iota = reduce_path(*band, model.A, centre);
  model.theta = reduce_path(*band, model.B, first_half);
  model.phi = reduce_path(*band, model.C, second_half);
  model.eta = {model.B, model.A};
  model.xi = {model.C, model.A};
  model.alpha = {model.theta, model.iota};
  model.beta = {model.iota, model.phi};
  return model;
}

Rho mobius_rho(const MobiusModel& model) { return rho_foliated(model.leaves, model.q); }

DmDouble dm_extract(const MobiusModel& model) {
  const auto r = mobius_rho(model);
  return induced(r.value, full_inclusion(r.value.horizontal, {model.A, model.B, model.C}));
}

CyclicCheck infinite_cyclic_check(const MobiusModel& model, std::size_t count) {
  if (count < 1) throw PreconditionError("infinite_cyclic_check needs N >= 1");
  const auto r = mobius_rho(model);
  const auto& d = r.value;
  const RhoSquare minus_alpha = d.inverse1(model.alpha);
  CyclicCheck out;
  ReducedPath centre = empty_path(model.A);
  RhoSquare x = minus_alpha;
  for (std::size_t k = 1; k <= count; ++k) {
    if (k > 1) {
      const RhoSquare& next = k % 2 == 0 ? model.beta : minus_alpha;
      auto composite = d.compose2(x, next);
      if (!composite) {
        throw CompositionError("alternating chain is not composable at step " +
                               std::to_string(k));
      }
      x = *composite;
    }
    centre = *concat(*model.band, centre, model.iota);
    out.composites.push_back(x);
    const std::string label = "x" + std::to_string(k);
    out.report.expect(is_rho_square(model.q, x), "chain.square", label);
    out.report.expect(x.upper == centre, "chain.centre_boundary", label);
    if (k > 1) {
      out.report.expect(x.upper.length() > out.composites[k - 2].upper.length(),
                        "chain.length_increasing", label);
    }
  }
  out.distinct = std::set<RhoSquare>(out.composites.begin(), out.composites.end()).size();
  out.report.expect(out.distinct == count, "chain.distinct",
                    std::to_string(out.distinct) + " of " + std::to_string(count));
  return out;
}

}  // namespace dblgpd

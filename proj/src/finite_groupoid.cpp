#include "dblgpd/finite_groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace dblgpd {

int FiniteGroupoid::object_index(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  if (it == objects.end()) throw std::out_of_range("unknown object " + name);
  return static_cast<int>(it - objects.begin());
}

int FiniteGroupoid::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  throw std::out_of_range("unknown arrow " + name);
}

AuditReport validate_groupoid(const FiniteGroupoid& g) {
  AuditReport report;
  const int n_obj = static_cast<int>(g.objects.size());
  const int n_arr = static_cast<int>(g.arrows.size());
  auto valid_arrow = [&](int a) { return a >= 0 && a < n_arr; };
  auto comp = [&](int a, int b) -> int {
    auto it = g.compose.find({a, b});
    return it == g.compose.end() ? -1 : it->second;
  };
  auto name = [&](int a) { return valid_arrow(a) ? g.arrows[a].name : std::string("<none>"); };

  if (!report.expect(static_cast<int>(g.identity.size()) == n_obj, "table.identity",
                     "identity table size") ||
      !report.expect(static_cast<int>(g.inverse.size()) == n_arr, "table.inverse",
                     "inverse table size")) {
    return report;
  }

  for (int x = 0; x < n_obj; ++x) {
    const int id = g.identity[x];
    report.expect(valid_arrow(id) && g.arrows[id].source == x && g.arrows[id].target == x,
                  "identity.boundary", g.objects[x]);
  }

  for (const auto& [key, c] : g.compose) {
    const auto [a, b] = key;
    report.expect(valid_arrow(a) && valid_arrow(b) && g.arrows[a].target == g.arrows[b].source,
                  "composable.undefined", name(a) + " ; " + name(b));
  }

  for (int a = 0; a < n_arr; ++a) {
    const auto& arr = g.arrows[a];
    const int s = arr.source;
    const int t = arr.target;
    report.expect(comp(g.identity[s], a) == a, "unit.left", arr.name);
    report.expect(comp(a, g.identity[t]) == a, "unit.right", arr.name);
    const int inv = g.inverse[a];
    report.expect(comp(a, inv) == g.identity[s], "inverse.right", arr.name);
    report.expect(comp(inv, a) == g.identity[t], "inverse.left", arr.name);

    for (int b = 0; b < n_arr; ++b) {
      if (g.arrows[b].source != t) continue;
      const int ab = comp(a, b);
      const std::string pair = arr.name + " ; " + g.arrows[b].name;
      if (!report.expect(valid_arrow(ab), "composable.defined", pair)) continue;
      report.expect(g.arrows[ab].source == s && g.arrows[ab].target == g.arrows[b].target,
                    "compose.boundary", pair);
      for (int c = 0; c < n_arr; ++c) {
        if (g.arrows[c].source != g.arrows[b].target) continue;
        const int bc = comp(b, c);
        const int lhs = comp(ab, c);
        const int rhs = valid_arrow(bc) ? comp(a, bc) : -1;
        report.expect(lhs >= 0 && lhs == rhs, "associativity",
                      pair + " ; " + g.arrows[c].name);
      }
    }
  }
  return report;
}

FiniteGroupoid discrete(const std::vector<std::string>& objects) {
  FiniteGroupoid g;
  g.objects = objects;
  for (int x = 0; x < static_cast<int>(objects.size()); ++x) {
    g.arrows.push_back({"id:" + objects[x], x, x});
    g.identity.push_back(x);
    g.inverse.push_back(x);
    g.compose[{x, x}] = x;
  }
  return g;
}

FiniteGroupoid indiscrete(const std::vector<std::string>& objects) {
  FiniteGroupoid g;
  g.objects = objects;
  const int n = static_cast<int>(objects.size());
  // arrow index of (x, y) is x * n + y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.arrows.push_back({"(" + objects[x] + "," + objects[y] + ")", x, y});
  for (int x = 0; x < n; ++x) g.identity.push_back(x * n + x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.inverse.push_back(y * n + x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) g.compose[{x * n + y, y * n + z}] = x * n + z;
  return g;
}

FiniteGroupoid kernel_pair(const std::vector<std::string>& domain,
                           const std::map<std::string, std::string>& q) {
  FiniteGroupoid g;
  g.objects = domain;
  const int n = static_cast<int>(domain.size());
  std::vector<std::string> image(n);
  for (int x = 0; x < n; ++x) {
    auto it = q.find(domain[x]);
    if (it == q.end()) throw PreconditionError("kernel_pair: no image for " + domain[x]);
    image[x] = it->second;
  }
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image[x] == image[y]) {
        index[{x, y}] = static_cast<int>(g.arrows.size());
        g.arrows.push_back({"(" + domain[x] + "," + domain[y] + ")", x, y});
      }
  for (int x = 0; x < n; ++x) g.identity.push_back(index.at({x, x}));
  for (const auto& arr : g.arrows) g.inverse.push_back(index.at({arr.target, arr.source}));
  for (const auto& [xy, a] : index)
    for (int z = 0; z < n; ++z) {
      auto bc = index.find({xy.second, z});
      if (bc != index.end()) g.compose[{a, bc->second}] = index.at({xy.first, z});
    }
  return g;
}

FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts) {
  FiniteGroupoid g;
  for (const auto& part : parts) {
    const int obj_offset = static_cast<int>(g.objects.size());
    const int arr_offset = static_cast<int>(g.arrows.size());
    g.objects.insert(g.objects.end(), part.objects.begin(), part.objects.end());
    for (const auto& a : part.arrows)
      g.arrows.push_back({a.name, a.source + obj_offset, a.target + obj_offset});
    for (int id : part.identity) g.identity.push_back(id + arr_offset);
    for (int inv : part.inverse) g.inverse.push_back(inv + arr_offset);
    for (const auto& [key, c] : part.compose)
      g.compose[{key.first + arr_offset, key.second + arr_offset}] = c + arr_offset;
  }
  return g;
}

Groupoid<std::string, std::string> as_groupoid(const FiniteGroupoid& table) {
  auto g = std::make_shared<const FiniteGroupoid>(table);
  Groupoid<std::string, std::string> out;
  out.objects = [g] { return g->objects; };
  out.source = [g](const std::string& a) {
    return g->objects[g->arrows[g->arrow_index(a)].source];
  };
  out.target = [g](const std::string& a) {
    return g->objects[g->arrows[g->arrow_index(a)].target];
  };
  out.identity = [g](const std::string& x) {
    return g->arrows[g->identity[g->object_index(x)]].name;
  };
  out.inverse = [g](const std::string& a) {
    return g->arrows[g->inverse[g->arrow_index(a)]].name;
  };
  out.compose = [g](const std::string& a, const std::string& b) -> std::optional<std::string> {
    const int ia = g->arrow_index(a);
    const int ib = g->arrow_index(b);
    if (g->arrows[ia].target != g->arrows[ib].source) return std::nullopt;
    auto it = g->compose.find({ia, ib});
    if (it == g->compose.end()) return std::nullopt;
    return g->arrows[it->second].name;
  };
  out.homset = [g](const std::string& x, const std::string& y, std::size_t bound) {
    const int ix = g->object_index(x);
    const int iy = g->object_index(y);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < g->arrows.size(); ++a) {
      const auto& arr = g->arrows[a];
      if (arr.source != ix || arr.target != iy) continue;
      const bool is_identity = g->identity[ix] == static_cast<int>(a);
      if (bound == 0 && !is_identity) continue;
      names.push_back(arr.name);
    }
    std::sort(names.begin(), names.end());
    return names;
  };
  return complete(out);
}

}  // namespace dblgpd

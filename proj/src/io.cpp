#include "dblgpd/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dblgpd::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(what + ": malformed JSON: " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(what + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": expected a string, got " + j.dump());
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected an array");
  return j;
}

VertexId vertex_named(const ReflexiveGraph& g, const std::string& name, const std::string& what) {
  auto v = g.find_vertex(name);
  if (!v) throw InputError(what + ": unknown vertex " + name);
  return *v;
}

EdgeId edge_named(const ReflexiveGraph& g, const std::string& name, const std::string& what) {
  auto e = g.find_edge(name);
  if (!e) throw InputError(what + ": unknown edge " + name);
  return *e;
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class F>
void sorted_edges(const ReflexiveGraph& g, F&& f) {
  std::vector<EdgeId> order(g.edge_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<EdgeId>(i);
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return g.edge(a).name < g.edge(b).name; });
  for (EdgeId e : order) f(e);
}

std::vector<std::string> sorted_vertices(const ReflexiveGraph& g) {
  auto names = g.vertex_names();
  std::sort(names.begin(), names.end());
  return names;
}

std::string legend(const std::vector<std::string>& notes) {
  std::string label;
  for (const auto& n : notes) {
    for (char c : n) {
      if (c == '"' || c == '\\') label += '\\';
      label += c;
    }
    label += "\\l";
  }
  return "  legend [shape=box, label=\"" + label + "\"];\n";
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

FileKind detect_kind(const std::filesystem::path& path) {
  const auto j = parse_json(read_file(path), path.string());
  if (j.is_object()) {
    if (j.contains("vertices")) return FileKind::graph;
    if (j.contains("domain")) return FileKind::map;
    if (j.contains("vertex_blocks")) return FileKind::foliation;
  }
  throw InputError(path.string() + ": not a graph, map or foliation file");
}

ReflexiveGraph parse_graph(const std::string& text) {
  const auto j = parse_json(text, "graph");
  ReflexiveGraph g;
  for (const auto& v : as_array(field(j, "vertices", "graph"), "graph vertices"))
    g.add_vertex(as_string(v, "graph vertex"));
  for (const auto& e : as_array(field(j, "edges", "graph"), "graph edges")) {
    const auto name = as_string(field(e, "name", "graph edge"), "graph edge name");
    g.add_edge(name, as_string(field(e, "src", "edge " + name), "edge " + name),
               as_string(field(e, "tgt", "edge " + name), "edge " + name));
  }
  return g;
}

MapFile parse_map(const std::string& text, GraphPtr domain, GraphPtr codomain) {
  const auto j = parse_json(text, "map");
  MapFile out;
  out.domain_ref = as_string(field(j, "domain", "map"), "map domain");
  out.codomain_ref = as_string(field(j, "codomain", "map"), "map codomain");
  GraphMap& m = out.map;
  m.domain = domain;
  m.codomain = codomain;

  const auto& vm = field(j, "vertex_map", "map");
  if (!vm.is_object()) throw InputError("map: vertex_map must be an object");
  for (const auto& [key, value] : vm.items()) vertex_named(*domain, key, "vertex_map");
  for (const auto& name : domain->vertex_names()) {
    if (!vm.contains(name)) throw InputError("vertex_map: no image for vertex " + name);
    m.vertex_map.push_back(
        vertex_named(*codomain, as_string(vm.at(name), "vertex_map " + name), "vertex_map"));
  }

  const auto& em = field(j, "edge_map", "map");
  if (!em.is_object()) throw InputError("map: edge_map must be an object");
  for (const auto& [key, value] : em.items()) edge_named(*domain, key, "edge_map");
  for (const auto& e : domain->edges()) {
    if (!em.contains(e.name)) throw InputError("edge_map: no image for edge " + e.name);
    const auto image = as_string(em.at(e.name), "edge_map " + e.name);
    if (image.rfind("id:", 0) == 0) {
      const VertexId b = vertex_named(*codomain, image.substr(3), "edge_map");
      m.edge_map.emplace_back(std::nullopt);
      if (m.vertex_map[e.source] != b || m.vertex_map[e.target] != b) {
        out.identity_problems.push_back("edge " + e.name + " collapses to " + image +
                                        " but its ends map elsewhere");
      }
    } else {
      m.edge_map.emplace_back(edge_named(*codomain, image, "edge_map"));
    }
  }
  return out;
}

std::vector<std::string> problems(const MapFile& f) {
  auto out = map_problems(f.map);
  out.insert(out.end(), f.identity_problems.begin(), f.identity_problems.end());
  return out;
}

FoliatedGraph parse_foliation(const std::string& text, GraphPtr graph) {
  const auto j = parse_json(text, "foliation");
  FoliatedGraph f{graph, {}, {}};
  for (const auto& block : as_array(field(j, "vertex_blocks", "foliation"), "vertex_blocks")) {
    auto& out = f.vertex_blocks.emplace_back();
    for (const auto& v : as_array(block, "vertex block"))
      out.push_back(vertex_named(*graph, as_string(v, "vertex block"), "foliation"));
  }
  for (const auto& block : as_array(field(j, "edge_blocks", "foliation"), "edge_blocks")) {
    auto& out = f.edge_blocks.emplace_back();
    for (const auto& e : as_array(block, "edge block"))
      out.push_back(edge_named(*graph, as_string(e, "edge block"), "foliation"));
  }
  return f;
}

GraphPtr load_graph(const std::filesystem::path& path) {
  try {
    return std::make_shared<ReflexiveGraph>(parse_graph(read_file(path)));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

MapFile load_map(const std::filesystem::path& path) {
  const auto text = read_file(path);
  const auto j = parse_json(text, path.string());
  const auto dir = path.parent_path();
  try {
    const auto domain = load_graph(dir / as_string(field(j, "domain", "map"), "map domain"));
    const auto codomain =
        load_graph(dir / as_string(field(j, "codomain", "map"), "map codomain"));
    return parse_map(text, domain, codomain);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

FoliatedGraph load_foliation(const std::filesystem::path& path, GraphPtr graph) {
  try {
    return parse_foliation(read_file(path), std::move(graph));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string write_graph(const ReflexiveGraph& g) {
  json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) {
    j["edges"].push_back(
        {{"name", e.name}, {"src", g.vertex_name(e.source)}, {"tgt", g.vertex_name(e.target)}});
  }
  return j.dump(2) + "\n";
}

std::string write_map(const GraphMap& m, const std::string& domain_ref,
                      const std::string& codomain_ref) {
  json j;
  j["domain"] = domain_ref;
  j["codomain"] = codomain_ref;
  j["vertex_map"] = json::object();
  j["edge_map"] = json::object();
  const auto& d = *m.domain;
  const auto& c = *m.codomain;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    j["vertex_map"][d.vertex_name(static_cast<VertexId>(v))] =
        c.vertex_name(m.vertex_map[v]);
  }
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const auto& edge = d.edge(static_cast<EdgeId>(e));
    j["edge_map"][edge.name] = m.edge_map[e] ? c.edge(*m.edge_map[e]).name
                                             : "id:" + c.vertex_name(m.vertex_map[edge.source]);
  }
  return j.dump(2) + "\n";
}

std::string write_foliation(const FoliatedGraph& f) {
  json j;
  j["vertex_blocks"] = json::array();
  j["edge_blocks"] = json::array();
  for (const auto& block : f.vertex_blocks) {
    json names = json::array();
    for (VertexId v : block) names.push_back(f.graph->vertex_name(v));
    j["vertex_blocks"].push_back(names);
  }
  for (const auto& block : f.edge_blocks) {
    json names = json::array();
    for (EdgeId e : block) names.push_back(f.graph->edge(e).name);
    j["edge_blocks"].push_back(names);
  }
  return j.dump(2) + "\n";
}

std::string to_dot(const ReflexiveGraph& g, const std::string& title,
                   const std::vector<std::string>& notes) {
  std::string out = "digraph " + dot_id(title) + " {\n";
  for (const auto& v : sorted_vertices(g)) out += "  " + dot_id(v) + ";\n";
  sorted_edges(g, [&](EdgeId e) {
    const auto& edge = g.edge(e);
    out += "  " + dot_id(g.vertex_name(edge.source)) + " -> " +
           dot_id(g.vertex_name(edge.target)) + " [label=" + dot_id(edge.name) + "];\n";
  });
  if (!notes.empty()) out += legend(notes);
  return out + "}\n";
}

std::string map_to_dot(const GraphMap& m, const std::vector<std::string>& notes) {
  const auto& d = *m.domain;
  const auto& c = *m.codomain;
  std::string out = "digraph map {\n";
  auto cluster = [&](const ReflexiveGraph& g, const std::string& tag, auto&& label) {
    out += "  subgraph cluster_" + tag + " {\n    label=" + dot_id(tag) + ";\n";
    for (const auto& v : sorted_vertices(g)) out += "    " + dot_id(tag + ":" + v) + ";\n";
    sorted_edges(g, [&](EdgeId e) {
      const auto& edge = g.edge(e);
      out += "    " + dot_id(tag + ":" + g.vertex_name(edge.source)) + " -> " +
             dot_id(tag + ":" + g.vertex_name(edge.target)) + " [label=" + dot_id(label(e)) +
             "];\n";
    });
    out += "  }\n";
  };
  cluster(d, "domain", [&](EdgeId e) {
    const auto& img = m.edge_map.at(e);
    return d.edge(e).name + " -> " +
           (img ? c.edge(*img).name : "id:" + c.vertex_name(m(d.edge(e).source)));
  });
  cluster(c, "codomain", [&](EdgeId e) { return c.edge(e).name; });
  if (!notes.empty()) out += legend(notes);
  return out + "}\n";
}

}  // namespace dblgpd::io

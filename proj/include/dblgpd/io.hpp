#pragma once

// JSON file formats for graphs, maps and foliations, and DOT export.
//
//   graph:     {"vertices": [name], "edges": [{"name", "src", "tgt"}]}
//   map:       {"domain": file, "codomain": file,
//               "vertex_map": {name: name}, "edge_map": {name: name | "id:<vertex>"}}
//   foliation: {"vertex_blocks": [[name]], "edge_blocks": [[name]]}
//
// Map files refer to graph files by path relative to the map file. Every
// loader throws InputError on malformed text or unresolved names, with the
// offending name in the message.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "dblgpd/graph.hpp"

namespace dblgpd::io {

enum class FileKind { graph, map, foliation };

/// Guesses the kind from the top-level keys.
FileKind detect_kind(const std::filesystem::path& path);

ReflexiveGraph parse_graph(const std::string& text);
struct MapFile {
  GraphMap map;
  std::string domain_ref;
  std::string codomain_ref;
  /// "id:<vertex>" entries whose vertex is not the image of the edge ends.
  std::vector<std::string> identity_problems;
};

/// Typing problems: map_problems plus identity_problems.
std::vector<std::string> problems(const MapFile& f);

/// Resolves names; typing is reported by problems().
MapFile parse_map(const std::string& text, GraphPtr domain, GraphPtr codomain);
/// Resolves names only; the partition property is left to foliation_problems.
FoliatedGraph parse_foliation(const std::string& text, GraphPtr graph);

GraphPtr load_graph(const std::filesystem::path& path);
MapFile load_map(const std::filesystem::path& path);
FoliatedGraph load_foliation(const std::filesystem::path& path, GraphPtr graph);

std::string write_graph(const ReflexiveGraph& g);
std::string write_map(const GraphMap& m, const std::string& domain_ref,
                      const std::string& codomain_ref);
std::string write_foliation(const FoliatedGraph& f);

/// One node per vertex and one labelled edge per edge, ordered by name.
/// `notes` become a boxed legend node.
std::string to_dot(const ReflexiveGraph& g, const std::string& title,
                   const std::vector<std::string>& notes = {});

/// Domain and codomain as two clusters, domain edges labelled with images.
std::string map_to_dot(const GraphMap& m, const std::vector<std::string>& notes = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace dblgpd::io

#include "dblgpd/cli.hpp"

#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dblgpd/cubical.hpp"
#include "dblgpd/galois.hpp"
#include "dblgpd/io.hpp"
#include "dblgpd/rho.hpp"

namespace dblgpd::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct Options {
  AuditConfig audit;
  std::string dot;
  std::string json_report;
  std::string foliation;
  std::vector<std::string> files;
  int n = 3;
  std::size_t count = 20;
  bool check_laws = false;
  bool hprime = false;
  bool lambda2prime = false;
  bool random_terms = false;
  int resolution = 16;
  std::string out_dir;
};

/// A command's result: ordered facts, free-form table lines and an audit.
struct Outcome {
  std::string command;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> lines;
  AuditReport report;

  void fact(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
  void fact(const std::string& key, std::size_t value) { fact(key, std::to_string(value)); }
};

void print(const Outcome& o, std::ostream& out) {
  out << "command: " << o.command << "\n";
  for (const auto& [k, v] : o.facts) out << k << ": " << v << "\n";
  for (const auto& l : o.lines) out << l << "\n";
  o.report.write(out);
}

std::string as_json(const Outcome& o) {
  ordered_json j;
  j["command"] = o.command;
  j["facts"] = ordered_json::object();
  for (const auto& [k, v] : o.facts) j["facts"][k] = v;
  j["lines"] = o.lines;
  j["checks"] = ordered_json::object();
  for (const auto& [law, n] : o.report.checks())
    j["checks"][law] = {{"instances", n}, {"failures", o.report.failures(law)}};
  j["violations"] = ordered_json::array();
  for (const auto& v : o.report.violations())
    j["violations"].push_back({{"law", v.law}, {"witness", v.witness}});
  j["ok"] = o.report.ok();
  return j.dump(2) + "\n";
}

void add_audit_flags(CLI::App* app, Options& opt) {
  app->add_option("--bound", opt.audit.bound, "maximum reduced word length")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--samples", opt.audit.samples, "random 2x2 arrays beyond the exhaustive tier");
  app->add_option("--seed", opt.audit.seed, "seed for sampling");
  app->add_option("--json-report", opt.json_report, "also write the report as JSON");
}

template <class D>
void census(const D& d, std::size_t bound, Outcome& o) {
  const auto objects = d.horizontal.objects();
  std::size_t arrows = 0;
  for (const auto& x : objects) arrows += d.horizontal.arrows_from(x, bound).size();
  o.fact("bound", bound);
  o.fact("objects", objects.size());
  o.fact("horizontal_arrows", arrows);
  o.fact("vertical_arrows", d.squares.objects().size());
  o.fact("squares", d.all_squares(bound).size());
}

/// Squares whose top edge is a single positively oriented edge.
template <class D>
std::vector<std::string> square_generators(const D& d) {
  std::vector<std::string> out;
  for (const auto& u : d.all_squares(1)) {
    if (u.upper.word.size() == 1 && !u.upper.word.front().inverted)
      out.push_back(d.squares.show_arrow(u));
  }
  return out;
}

io::MapFile typed_map(const std::string& path) {
  auto m = io::load_map(path);
  if (auto p = io::problems(m); !p.empty()) throw PreconditionError("ill-typed map: " + p.front());
  return m;
}

// ---------------------------------------------------------------------------

Outcome cmd_validate(const Options& opt) {
  Outcome o{"validate", {}, {}, {}};
  GraphPtr last_graph;
  auto check_foliation = [&](const std::string& path) {
    if (!last_graph) throw InputError(path + ": foliation given before any graph or map");
    const auto f = io::load_foliation(path, last_graph);
    const auto problems = foliation_problems(f);
    o.report.expect(problems.empty(), "foliation.partition",
                    path + ": " + (problems.empty() ? "" : problems.front()));
    o.lines.push_back("foliation " + path + ": " + std::to_string(f.vertex_blocks.size()) +
                      " leaves, " + (problems.empty() ? "partition" : "not a partition"));
  };
  for (const auto& path : opt.files) {
    switch (io::detect_kind(path)) {
      case io::FileKind::graph: {
        last_graph = io::load_graph(path);
        o.report.count("graph.well_formed");
        o.lines.push_back("graph " + path + ": " + std::to_string(last_graph->vertex_count()) +
                          " vertices, " + std::to_string(last_graph->edge_count()) + " edges");
        break;
      }
      case io::FileKind::map: {
        const auto m = io::load_map(path);
        const auto problems = io::problems(m);
        for (const auto& p : problems) o.report.fail("map.typed", path + ": " + p);
        o.report.count("map.typed");
        std::string line = "map " + path + ": ";
        if (problems.empty()) {
          line += "well-typed, covering: ";
          line += is_covering(m.map) ? "yes" : "no";
        } else {
          line += "ill-typed";
        }
        o.lines.push_back(line);
        last_graph = m.map.domain;
        break;
      }
      case io::FileKind::foliation:
        check_foliation(path);
        break;
    }
  }
  if (!opt.foliation.empty()) check_foliation(opt.foliation);
  o.fact("valid", o.report.ok() ? "true" : "false");
  return o;
}

Outcome cmd_gamma(const Options& opt) {
  Outcome o{"gamma", {}, {}, {}};
  const auto m = typed_map(opt.files.at(0));
  const auto g = gamma(m.map);
  o.fact("map", opt.files.at(0));
  census(g.value, opt.audit.bound, o);
  o.report = audit_double_groupoid(g.value, opt.audit);
  o.report.merge(check_canonical_morphisms(m.map, opt.audit.bound), "canonical.");
  if (!opt.dot.empty()) io::write_file(opt.dot, io::map_to_dot(m.map, square_generators(g.value)));
  return o;
}

Outcome cmd_rho(const Options& opt) {
  Outcome o{"rho", {}, {}, {}};
  const auto m = typed_map(opt.files.at(0));
  std::optional<Rho> r;
  if (opt.foliation.empty()) {
    r = rho(m.map);
  } else {
    const auto f = io::load_foliation(opt.foliation, m.map.domain);
    if (auto p = foliation_problems(f); !p.empty())
      throw PreconditionError("foliation is not a partition: " + p.front());
    r = rho_foliated(f, m.map);
    o.fact("foliation", opt.foliation);
  }
  o.fact("map", opt.files.at(0));
  census(r->value, opt.audit.bound, o);
  o.fact("2-groupoid", is_2groupoid(r->value) ? "true" : "false");
  o.report = audit_double_groupoid(r->value, opt.audit);
  if (!opt.dot.empty()) io::write_file(opt.dot, io::map_to_dot(m.map, square_generators(r->value)));
  return o;
}

std::vector<std::string> generator_table(const MobiusModel& model) {
  const auto& g = *model.band;
  auto vertex = [&](VertexId v) { return g.vertex_name(v); };
  auto path = [&](const ReducedPath& p) {
    return vertex(p.start) + " -> " + vertex(p.end) + "  " + show_path(g, p);
  };
  auto pair = [&](const VertexPair& p) {
    return "(" + vertex(p.first) + ", " + vertex(p.second) + ")";
  };
  auto square = [&](const RhoSquare& u) {
    return "d1- = " + show_path(g, u.upper) + ", d1+ = " + show_path(g, u.lower) + ", d2- = " +
           pair({u.upper.start, u.lower.start}) + ", d2+ = " + pair({u.upper.end, u.lower.end});
  };
  return {
      "generator  kind        boundary",
      "A          object      " + vertex(model.A),
      "B          object      " + vertex(model.B),
      "C          object      " + vertex(model.C),
      "theta      horizontal  " + path(model.theta),
      "iota       horizontal  " + path(model.iota),
      "phi        horizontal  " + path(model.phi),
      "eta        vertical    " + pair(model.eta),
      "xi         vertical    " + pair(model.xi),
      "alpha      square      " + square(model.alpha),
      "beta       square      " + square(model.beta),
  };
}

MobiusModel checked_model(int n) {
  if (n < 3) throw InputError("mobius model needs n >= 3, got " + std::to_string(n));
  return mobius_model(n);
}

Outcome cmd_mobius(const Options& opt) {
  Outcome o{"mobius", {}, {}, {}};
  if (opt.count < 1) throw InputError("mobius needs N >= 1");
  const auto model = checked_model(opt.n);
  o.fact("n", std::to_string(opt.n));
  o.fact("band_vertices", model.band->vertex_count());
  o.fact("band_edges", model.band->edge_count());
  o.lines = generator_table(model);

  const auto dm = dm_extract(model);
  const auto objects = dm.horizontal.objects();
  const auto verticals = dm.squares.objects();
  o.fact("dm_objects", objects.size());
  o.fact("dm_vertical_arrows", verticals.size());
  const auto vertical = dm.vertical();
  bool indiscrete = true;
  for (const auto& x : objects)
    for (const auto& y : objects) indiscrete = indiscrete && vertical.homset(x, y, 0).size() == 1;
  o.report.expect(indiscrete, "dm.indiscrete", "vertical groupoid of D(M)");
  o.fact("dm_indiscrete", indiscrete ? "true" : "false");
  o.report.merge(audit_double_groupoid(dm, opt.audit), "dm.");

  const auto chain = infinite_cyclic_check(model, opt.count);
  std::string lengths;
  for (const auto& x : chain.composites)
    lengths += (lengths.empty() ? "" : " ") + std::to_string(x.upper.length());
  o.fact("centre_lengths", lengths);
  o.lines.push_back(std::to_string(chain.distinct) + " distinct alternating composites");
  o.report.merge(chain.report);
  if (!opt.dot.empty()) io::write_file(opt.dot, io::to_dot(*model.band, "mobius", o.lines));
  return o;
}

Outcome cmd_cube(const Options& opt) {
  Outcome o{"cube", {}, {}, {}};
  const bool all = !opt.check_laws && !opt.hprime && !opt.lambda2prime && !opt.random_terms;
  const int res = opt.resolution;
  if (res < 1 || res > (1 << 10) || (res & (res - 1)) != 0)
    throw InputError("resolution must be a power of two up to 1024");
  o.fact("resolution", "1/" + std::to_string(res));
  if (all || opt.check_laws) o.report.merge(cube::check_law_table(res));
  if (all || opt.random_terms) {
    const std::size_t count = opt.audit.samples ? opt.audit.samples : 100;
    o.fact("random_terms", count);
    o.fact("seed", std::to_string(opt.audit.seed));
    o.report.merge(cube::check_random_terms(count, opt.audit.seed, res));
  }
  if (all || opt.hprime) {
    o.report.merge(cube::audit_hprime(false, res));
    o.report.merge(cube::audit_hprime(true, res), "degenerate.");
  }
  if (all || opt.lambda2prime) o.report.merge(cube::audit_lambda2prime(res));
  return o;
}

Outcome cmd_export(const Options& opt) {
  Outcome o{"export", {}, {}, {}};
  const auto model = checked_model(opt.n);
  const fs::path dir = opt.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
  const auto table = generator_table(model);
  std::string table_text;
  for (const auto& l : table) table_text += l + "\n";
  const std::vector<std::pair<std::string, std::string>> files{
      {"band.json", io::write_graph(*model.band)},
      {"base.json", io::write_graph(*model.base)},
      {"map.json", io::write_map(model.q, "band.json", "base.json")},
      {"foliation.json", io::write_foliation(model.leaves)},
      {"dm_table.txt", table_text},
      {"dm.dot", io::to_dot(*model.band, "mobius", table)},
  };
  for (const auto& [name, text] : files) {
    io::write_file(dir / name, text);
    o.lines.push_back("wrote " + (dir / name).string());
  }
  o.fact("n", std::to_string(opt.n));
  o.report.count("export.files", files.size());
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double groupoids of graph maps, and cubical audits"};
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand("validate", "check graph, map and foliation files");
  validate->add_option("files", opt.files, "files to check")->required();
  validate->add_option("--foliation", opt.foliation, "foliation of the preceding graph or map");
  validate->add_option("--json-report", opt.json_report, "also write the report as JSON");

  auto* gam = app.add_subcommand("gamma", "Galois double groupoid of a covering");
  gam->add_option("map", opt.files, "map file")->required()->expected(1);
  add_audit_flags(gam, opt);
  gam->add_option("--dot", opt.dot, "write DOT of the map with square generators");

  auto* rh = app.add_subcommand("rho", "homotopy double groupoid of a map");
  rh->add_option("map", opt.files, "map file")->required()->expected(1);
  rh->add_option("--foliation", opt.foliation, "foliation of the domain");
  add_audit_flags(rh, opt);
  rh->add_option("--dot", opt.dot, "write DOT of the map with square generators");

  auto* mob = app.add_subcommand("mobius", "foliated Moebius band model and D(M)");
  mob->add_option("-n,--n", opt.n, "length of the centre cycle");
  mob->add_option("-N,--count", opt.count, "length of the alternating chain");
  add_audit_flags(mob, opt);
  mob->add_option("--dot", opt.dot, "write DOT of the band with the generator table");

  auto* cub = app.add_subcommand("cube", "cubical law table and homotopy audits");
  cub->add_flag("--check-laws", opt.check_laws, "face law table against evaluation");
  cub->add_flag("--random", opt.random_terms, "random terms (count from --samples)");
  cub->add_flag("--hprime", opt.hprime, "moved homotopy audit");
  cub->add_flag("--lambda2prime", opt.lambda2prime, "filled homotopy audit");
  cub->add_option("--resolution", opt.resolution, "grid resolution");
  cub->add_option("--samples", opt.audit.samples, "number of random terms");
  cub->add_option("--seed", opt.audit.seed, "seed for random terms");
  cub->add_option("--json-report", opt.json_report, "also write the report as JSON");

  auto* exp = app.add_subcommand("export", "write the Moebius model files");
  exp->add_option("dir", opt.out_dir, "output directory")->required();
  exp->add_option("-n,--n", opt.n, "length of the centre cycle");
  exp->add_option("--json-report", opt.json_report, "also write the report as JSON");

  std::vector<std::string> argv_store{"dblgpd"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return input_error;
  }

  try {
    Outcome o;
    if (validate->parsed()) o = cmd_validate(opt);
    else if (gam->parsed()) o = cmd_gamma(opt);
    else if (rh->parsed()) o = cmd_rho(opt);
    else if (mob->parsed()) o = cmd_mobius(opt);
    else if (cub->parsed()) o = cmd_cube(opt);
    else o = cmd_export(opt);
    print(o, out);
    if (!opt.json_report.empty()) io::write_file(opt.json_report, as_json(o));
    return o.report.ok() ? ok : check_failed;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return check_failed;
  } catch (const CompositionError& e) {
    err << "composition error: " << e.what() << "\n";
    return check_failed;
  }
}

}  // namespace dblgpd::cli

#include <gtest/gtest.h>

#include <sstream>

#include "dblgpd/cli.hpp"
#include "dblgpd/io.hpp"
#include "support.hpp"

using namespace dblgpd;
using namespace testing_support;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string f(const std::string& name) { return fixture(name).string(); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "dblgpd_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Io, GraphRoundTrip) {
  const auto g = cycle_graph(4, "v", "e");
  const auto back = io::parse_graph(io::write_graph(g));
  EXPECT_EQ(back.vertex_names(), g.vertex_names());
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    EXPECT_EQ(back.edges()[e].name, g.edges()[e].name);
    EXPECT_EQ(back.edges()[e].source, g.edges()[e].source);
  }
  EXPECT_THROW(io::parse_graph("{\"vertices\": [\"a\"]"), InputError);
  EXPECT_THROW(io::parse_graph("{\"vertices\": [1], \"edges\": []}"), InputError);
}

TEST(Io, MapFileWithCollapsedEdge) {
  const auto m = io::load_map(fixture("c4_to_c3_collapse.json"));
  EXPECT_TRUE(io::problems(m).empty());
  EXPECT_FALSE(m.map.edge_map[3].has_value());
  const auto text = io::write_map(m.map, m.domain_ref, m.codomain_ref);
  const auto again = io::parse_map(text, m.map.domain, m.map.codomain);
  EXPECT_EQ(again.map.edge_map, m.map.edge_map);
  EXPECT_EQ(again.map.vertex_map, m.map.vertex_map);
}

TEST(Io, IdentityImageMustMatchEnds) {
  const auto c4 = io::load_graph(fixture("c4.json"));
  const auto c3 = io::load_graph(fixture("c3.json"));
  const std::string text = R"({"domain": "c4.json", "codomain": "c3.json",
    "vertex_map": {"v0": "b0", "v1": "b1", "v2": "b2", "v3": "b0"},
    "edge_map": {"e0": "c0", "e1": "c1", "e2": "c2", "e3": "id:b1"}})";
  EXPECT_FALSE(io::problems(io::parse_map(text, c4, c3)).empty());
}

TEST(Io, DotIsSortedAndStable) {
  const auto dot = io::to_dot(cycle_graph(3, "v", "e"), "c3", {"note"});
  EXPECT_LT(dot.find("\"v0\";"), dot.find("\"v1\";"));
  EXPECT_NE(dot.find("[label=\"e2\"]"), std::string::npos);
  EXPECT_NE(dot.find("legend"), std::string::npos);
  EXPECT_EQ(dot, io::to_dot(cycle_graph(3, "v", "e"), "c3", {"note"}));
}

TEST(Cli, Validate) {
  EXPECT_EQ(run({"validate", f("c3.json")}).code, 0);
  const auto bad = run({"validate", f("bad_edge.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("nowhere"), std::string::npos);
  EXPECT_EQ(run({"validate", f("c6_to_c3.json"), "--foliation", f("c6_overlap.json")}).code, 1);
  EXPECT_EQ(run({"validate", f("c6_to_c3.json"), f("c6_leaves.json")}).code, 0);
  EXPECT_EQ(run({"validate", f("c6_leaves.json")}).code, 2);
  EXPECT_EQ(run({"validate", f("missing.json")}).code, 2);
}

TEST(Cli, Gamma) {
  const auto ok = run({"gamma", f("c6_to_c3.json"), "--bound", "3"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("audit pass"), std::string::npos);
  EXPECT_NE(ok.out.find("vertical_arrows: 12"), std::string::npos);
  const auto bad = run({"gamma", f("p3_to_c4.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("not a covering"), std::string::npos);
  EXPECT_EQ(run({"gamma", f("c4_to_c3_collapse.json")}).code, 1);
  EXPECT_EQ(run({"gamma"}).code, 2);
  EXPECT_EQ(run({"gamma", f("c6_to_c3.json"), "--bound", "x"}).code, 2);
}

TEST(Cli, Rho) {
  const auto inj = run({"rho", f("p3_to_c4.json")});
  EXPECT_EQ(inj.code, 0);
  EXPECT_NE(inj.out.find("2-groupoid: true"), std::string::npos);
  const auto cover = run({"rho", f("c6_to_c3.json"), "--foliation", f("c6_leaves.json")});
  EXPECT_EQ(cover.code, 0);
  EXPECT_NE(cover.out.find("2-groupoid: false"), std::string::npos);
  EXPECT_EQ(run({"rho", f("c6_to_c3.json"), "--foliation", f("c6_overlap.json")}).code, 1);
}

TEST(Cli, Mobius) {
  const auto r = run({"mobius", "-n", "3", "-N", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("20 distinct alternating composites"), std::string::npos);
  for (const char* g : {"A ", "B ", "C ", "theta", "eta", "xi", "iota", "phi", "alpha", "beta"})
    EXPECT_NE(r.out.find(std::string("\n") + g), std::string::npos) << g;
  EXPECT_EQ(run({"mobius", "-n", "2"}).code, 2);
  EXPECT_EQ(run({"mobius", "-N", "0"}).code, 2);
}

TEST(Cli, Cube) {
  const auto r = run({"cube", "--check-laws"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("resolution: 1/16"), std::string::npos);
  EXPECT_EQ(run({"cube", "--hprime", "--lambda2prime"}).code, 0);
  EXPECT_EQ(run({"cube", "--resolution", "3"}).code, 2);
}

TEST(Cli, ExportRoundTrips) {
  const auto dir = scratch("mobius");
  const auto r = run({"export", dir.string(), "-n", "4"});
  ASSERT_EQ(r.code, 0);
  for (const char* name : {"band.json", "base.json", "map.json", "foliation.json",
                           "dm_table.txt", "dm.dot"})
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  EXPECT_EQ(run({"validate", (dir / "map.json").string(), (dir / "foliation.json").string()}).code,
            0);
  const auto rh = run({"rho", (dir / "map.json").string(), "--foliation",
                       (dir / "foliation.json").string(), "--bound", "2"});
  EXPECT_EQ(rh.code, 0);
}

TEST(Cli, JsonReportAndDot) {
  const auto json = scratch("report.json");
  const auto dot = scratch("gamma.dot");
  ASSERT_EQ(run({"gamma", f("c6_to_c3.json"), "--json-report", json.string(), "--dot",
                 dot.string()})
                .code,
            0);
  const auto text = io::read_file(json);
  EXPECT_NE(text.find("\"ok\": true"), std::string::npos);
  EXPECT_NE(io::read_file(dot).find("cluster_domain"), std::string::npos);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gamma"), std::string::npos);
}

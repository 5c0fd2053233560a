#include "latvar/io.hpp"

#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <regex>

using namespace latvar;
using namespace testing_support;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "latvar-io-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

TEST(Json, PosetRoundTrip) {
  const PosetSpec s{"p", {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}};
  const PosetSpec back = poset_spec_from_json(to_json(s));
  EXPECT_EQ(back.name, s.name);
  EXPECT_EQ(back.elements, s.elements);
  EXPECT_EQ(back.covers, s.covers);
}

TEST(Json, IntegerLabelsAndRoot) {
  const PosetSpec s = poset_spec_from_json(json::parse(R"({"elements":[1,2,3],"covers":[[1,2],[1,3]],"root":1})"));
  EXPECT_EQ(s.elements, (std::vector<std::string>{"2", "3"}));
  EXPECT_TRUE(s.covers.empty());
}

TEST(Json, MalformedInputsAreParseErrors) {
  EXPECT_ERROR_CODE(poset_spec_from_json(json::parse("[]")), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(poset_spec_from_json(json::parse(R"({"covers":[]})")), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(poset_spec_from_json(json::parse(R"({"elements":["a"],"covers":[["a"]]})")),
                    ErrorCode::ParseError);
  EXPECT_ERROR_CODE(poset_spec_from_json(json::parse(R"({"elements":[true]})")), ErrorCode::ParseError);
  const auto bad = temp_file("bad.json", "{ not json");
  try {
    read_json_file(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("bad.json"), std::string::npos);
  }
  EXPECT_ERROR_CODE(read_json_file("/nonexistent/x.json"), ErrorCode::IoError);
}

TEST(Json, ExportReloads) {
  const Lattice l = singular10();
  const json exported = lattice_export_json(l);
  EXPECT_EQ(exported.at("ji_count"), 5);
  EXPECT_EQ(exported.at("codim"), 5);
  EXPECT_EQ(exported.at("elements").size(), 10u);
  const Lattice back = load_from_ji(temp_file("export.json", exported.dump()), 4096);
  ASSERT_EQ(back.size(), l.size());
  for (ElementId e = 0; e < l.size(); ++e) EXPECT_EQ(back.ideal_text(e), l.ideal_text(e));
}

TEST(Json, LoadCapAndSummary) {
  EXPECT_ERROR_CODE(load_from_ji(fixture("singular10.json"), 5), ErrorCode::SizeLimitExceeded);
  EXPECT_ERROR_CODE(load_from_lattice(fixture("singular10.json"), 5), ErrorCode::SizeLimitExceeded);
  const json s = lattice_summary_json(singular10());
  EXPECT_EQ(s.dump(), R"({"codim":5,"dim":5,"ji_count":5,"name":"singular10","size":10})");
}

TEST(Json, SmoothnessReportFields) {
  const Lattice l = singular10();
  const json j = to_json(l, smoothness_report(l));
  EXPECT_EQ(j.at("singular"), json::array({"{}", "3"}));
  EXPECT_EQ(j.at("origin"), "singular");
  EXPECT_EQ(j.at("deficit_histogram"), json::parse(R"({"0":8,"1":2})"));
  bool found = false;
  for (const auto& e : j.at("elements"))
    if (e.at("id") == "3") {
      found = true;
      EXPECT_EQ(e.at("E"), 4);
      EXPECT_EQ(e.at("rank"), 4);
      EXPECT_EQ(e.at("codim"), 5);
      EXPECT_EQ(e.at("verdict"), "singular");
    }
  EXPECT_TRUE(found);
}

TEST(Dot, LatticeDiagramReproducesInputCovers) {
  const Lattice raw = singular10_raw();
  const std::string dot = lattice_dot(raw);
  std::map<std::string, std::string> label;
  const std::regex node(R"re(  (n\d+) \[label="([^"]*)"\];)re");
  const std::regex edge(R"(  (n\d+) -> (n\d+);)");
  std::set<std::pair<std::string, std::string>> edges;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_match(line, m, node)) label[m[1]] = m[2];
    if (std::regex_match(line, m, edge)) edges.emplace(label.at(m[1]), label.at(m[2]));
  }
  const PosetSpec input = poset_spec_from_json(read_json_file(fixture("singular10.json")).at("hasse"));
  EXPECT_EQ(edges, (std::set<std::pair<std::string, std::string>>(input.covers.begin(), input.covers.end())));
  EXPECT_EQ(lattice_dot(raw), dot);
}

TEST(Dot, GoldenChain) {
  EXPECT_EQ(lattice_dot(chain(3)),
            "digraph \"c(3)\" {\n  rankdir=BT;\n  node [shape=ellipse];\n"
            "  n0 [label=\"{}\"];\n  n1 [label=\"1\"];\n  n2 [label=\"2\"];\n"
            "  n0 -> n1;\n  n1 -> n2;\n}\n");
  const std::string j = ji_dot(singular10());
  EXPECT_NE(j.find("[label=\"{}\"]"), std::string::npos);
  EXPECT_EQ(std::count(j.begin(), j.end(), '>'), 4);
}

TEST(Text, RelationsAndPolytope) {
  EXPECT_EQ(relations_text(boolean(2)), "x[1]*x[2] - x[0]*x[3]\n");
  EXPECT_EQ(polytope_text(order_polytope(chain(2))), "# vertices 2 1\n0\n1\n# edges 1\n0 1\n");
  const std::string rel = relations_text(singular10());
  EXPECT_EQ(std::count(rel.begin(), rel.end(), '\n'), static_cast<long>(enumerate_diamonds(singular10()).size()));
}

}  // namespace

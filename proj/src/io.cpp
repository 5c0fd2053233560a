#include "latvar/io.hpp"

#include "latvar/diamonds.hpp"
#include "latvar/error.hpp"

#include <fstream>
#include <sstream>

namespace latvar {

namespace {

std::string label_of(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::ParseError, std::string(what) + " must be a string or integer, got " + v.dump());
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

json names_of(const Lattice& l, const std::vector<ElementId>& ids) {
  json out = json::array();
  for (auto e : ids) out.push_back(l.name(e));
  return out;
}

std::string dot_of(const std::string& name, const std::vector<std::string>& labels,
                   const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::ostringstream out;
  out << "digraph \"" << escape_dot(name) << "\" {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << "  n" << i << " [label=\"" << escape_dot(labels[i]) << "\"];\n";
  for (auto [lo, hi] : covers) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

PosetSpec poset_spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "poset must be a JSON object");
  PosetSpec s;
  if (auto it = j.find("name"); it != j.end()) s.name = label_of(*it, "name");
  const auto el = j.find("elements");
  if (el == j.end() || !el->is_array()) throw Error(ErrorCode::ParseError, "poset needs an \"elements\" array");
  for (const auto& e : *el) s.elements.push_back(label_of(e, "element"));
  if (auto cv = j.find("covers"); cv != j.end()) {
    if (!cv->is_array()) throw Error(ErrorCode::ParseError, "\"covers\" must be an array");
    for (const auto& c : *cv) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "cover must be a pair, got " + c.dump());
      s.covers.emplace_back(label_of(c[0], "cover endpoint"), label_of(c[1], "cover endpoint"));
    }
  }
  if (auto r = j.find("root"); r != j.end()) s = strip_root(s, label_of(*r, "root"));
  return s;
}

json to_json(const PosetSpec& s) {
  json covers = json::array();
  for (const auto& [lo, hi] : s.covers) covers.push_back({lo, hi});
  return {{"name", s.name}, {"elements", s.elements}, {"covers", covers}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

namespace {

PosetSpec spec_in_file(const std::filesystem::path& path, const char* key) {
  const json j = read_json_file(path);
  try {
    PosetSpec s = poset_spec_from_json(j.is_object() && j.contains(key) ? j.at(key) : j);
    if (s.name.empty()) s.name = path.stem().string();
    return s;
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace

Lattice load_from_ji(const std::filesystem::path& path, std::size_t cap) {
  const PosetSpec s = spec_in_file(path, "ji_poset");
  try {
    return birkhoff(validate_poset(s), cap);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

Lattice load_from_lattice(const std::filesystem::path& path, std::size_t cap) {
  const PosetSpec s = spec_in_file(path, "hasse");
  if (s.elements.size() > cap)
    throw Error(ErrorCode::SizeLimitExceeded, path.string() + ": " + std::to_string(s.elements.size()) +
                                                  " elements exceed the cap " + std::to_string(cap));
  try {
    return from_raw(s);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

json lattice_summary_json(const Lattice& l) {
  return {{"name", l.name()},
          {"size", l.size()},
          {"ji_count", l.ji_count()},
          {"codim", l.codim()},
          {"dim", l.ji_count()}};
}

json lattice_export_json(const Lattice& l) {
  json elements = json::array();
  json names = json::array();
  for (ElementId e = 0; e < l.size(); ++e) {
    json members = json::array();
    const Bits& m = l.ideal(e).members;
    for (auto v = m.find_first(); v != Bits::npos; v = m.find_next(v)) members.push_back(l.base().label(v));
    elements.push_back(members);
    names.push_back(l.name(e));
  }
  return {{"ji_poset", to_json(l.base().spec())},
          {"elements", elements},
          {"names", names},
          {"ji_count", l.ji_count()},
          {"codim", l.codim()}};
}

json to_json(const Lattice& l, const ClassificationReport& r) {
  json out = {{"lattice", l.name()},
              {"tree", r.tree},
              {"honest", r.honest},
              {"square", r.square},
              {"factors", nullptr},
              {"lemma_violations", r.lemma_violations}};
  if (r.factors) out["factors"] = *r.factors;
  return out;
}

json to_json(const Lattice& l, const SmoothnessReport& r) {
  json elements = json::array();
  for (const auto& e : r.elements)
    elements.push_back({{"id", l.name(e.alpha)},
                        {"partners", names_of(l, e.partners)},
                        {"E", e.partners.size()},
                        {"rank", e.rank},
                        {"codim", e.codim},
                        {"verdict", to_string(e.verdict)}});
  json histogram = json::object();
  for (auto [deficit, count] : r.deficit_histogram) histogram[std::to_string(deficit)] = count;
  return {{"lattice", l.name()},
          {"size", l.size()},
          {"codim", l.codim()},
          {"elements", elements},
          {"origin", to_string(r.origin)},
          {"all_smooth", r.all_smooth},
          {"theorem_b_holds", r.theorem_b_holds},
          {"singular", names_of(l, r.singular())},
          {"deficit_histogram", histogram},
          {"excess", r.excess}};
}

json to_json(const Lattice& l, const PointVerdict& v) {
  return {{"lattice", l.name()},
          {"id", l.name(v.alpha)},
          {"E", v.partners},
          {"partners", names_of(l, partner_set(l, v.alpha).partners)},
          {"rank", v.rank},
          {"codim", v.codim},
          {"verdict", to_string(v.verdict)}};
}

json to_json(const Lattice& l, const ChainDecomposition& d) {
  json branches = json::array();
  for (const auto& b : d.branches) {
    json labels = json::array();
    for (auto v : b) labels.push_back(l.base().label(v));
    branches.push_back(labels);
  }
  json coords = json::object();
  for (ElementId e = 0; e < l.size(); ++e) coords[l.name(e)] = d.coordinates[e];
  return {{"lattice", l.name()}, {"factors", d.factor_sizes}, {"branches", branches}, {"coordinates", coords}};
}

json diamonds_json(const Lattice& l) {
  json out = json::array();
  for (const auto& d : enumerate_diamonds(l))
    out.push_back({{"x", l.name(d.x)}, {"y", l.name(d.y)}, {"join", l.name(d.top)}, {"meet", l.name(d.bottom)}});
  return {{"lattice", l.name()}, {"count", out.size()}, {"diamonds", out}};
}

json to_json(const CampaignReport& r) {
  json checks = json::array();
  for (auto c : r.checks) checks.push_back(to_string(c));
  json tallies = json::object();
  for (const auto& [c, t] : r.tallies)
    tallies[to_string(c)] = {
        {"lattices", t.lattices}, {"skipped", t.skipped}, {"items", t.items}, {"violations", t.violations}};
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        {{"index", v.lattice_index}, {"lattice", v.lattice}, {"check", to_string(v.check)}, {"witness", v.witness}});
  json singular = json::array();
  for (const auto& s : r.singular)
    singular.push_back({{"index", s.lattice_index}, {"lattice", s.lattice}, {"elements", s.elements}});
  return {{"family", r.family},     {"checks", checks},       {"lattices", r.lattices},
          {"tallies", tallies},     {"violations", violations}, {"singular", singular},
          {"observations", r.observations}, {"passed", r.passed()}};
}

json to_json(const OrderPolytope& p, const ToricSmoothness& toric) {
  json vertices = json::array();
  for (const auto& v : toric.vertices) {
    json entry = {{"vertex", v.vertex},
                  {"coordinates", coordinates(p, v.vertex)},
                  {"edge_directions", v.edge_directions},
                  {"primitive", v.primitive},
                  {"simple", v.simple},
                  {"determinant", nullptr},
                  {"unimodular", v.unimodular},
                  {"reason", v.reason}};
    if (v.determinant) entry["determinant"] = v.determinant->get_str();
    vertices.push_back(entry);
  }
  json edges = json::array();
  for (auto [u, v] : p.edges) edges.push_back({u, v});
  return {{"ambient_dim", p.ambient_dim},
          {"constraints", p.constraints.size()},
          {"vertices", vertices},
          {"edges", edges},
          {"smooth", toric.smooth}};
}

std::string lattice_dot(const Lattice& l) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (ElementId e = 0; e < l.size(); ++e) {
    labels.push_back(l.name(e));
    for (auto up : l.upper_covers(e)) covers.emplace_back(e, up);
  }
  return dot_of(l.name(), labels, covers);
}

std::string ji_dot(const Lattice& l) {
  const Poset j = ji_poset_with_root(l);
  return dot_of(j.name(), j.labels(), j.covers());
}

std::string relations_text(const Lattice& l) {
  std::ostringstream out;
  for (const auto& d : enumerate_diamonds(l)) {
    const auto [a, b] = std::minmax(d.x, d.y);
    const auto [c, e] = std::minmax(d.top, d.bottom);
    out << "x[" << a << "]*x[" << b << "] - x[" << c << "]*x[" << e << "]\n";
  }
  return out.str();
}

std::string polytope_text(const OrderPolytope& p) {
  std::ostringstream out;
  out << "# vertices " << p.vertices.size() << ' ' << p.ambient_dim << '\n';
  for (ElementId v = 0; v < p.vertices.size(); ++v) {
    const auto c = coordinates(p, v);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
  out << "# edges " << p.edges.size() << '\n';
  for (auto [u, v] : p.edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace latvar

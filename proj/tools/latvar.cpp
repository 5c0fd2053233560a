// latvar: build distributive lattices, inspect their Hibi relations, decide
// smoothness at coordinate points, and run verification campaigns.
//
// Exit codes: 0 success or smooth, 2 singular point or check violation,
// 1 usage, input or internal error.

#include "latvar/classify.hpp"
#include "latvar/diamonds.hpp"
#include "latvar/error.hpp"
#include "latvar/harness.hpp"
#include "latvar/io.hpp"
#include "latvar/polytope.hpp"
#include "latvar/smooth.hpp"

#include <CLI11.hpp>

#include <cstring>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace latvar;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kViolation = 2;

struct Input {
  std::string path;
  std::string from_ji;
  std::string from_lattice;
  std::vector<std::size_t> chains;
};

struct Options {
  Input input;
  bool json = false;
  bool text = false;
  std::size_t max_size = 0;
  std::string output;
  std::string point;
  std::string beta;
  bool dot = false;
  bool relations = false;
  bool polytope = false;
  std::string theorem;
  bool lemmas = false;
  std::vector<std::string> checks;
  std::size_t all_posets = 0;
  std::size_t chain_products = 0;
  std::size_t random_trees = 0;
  std::size_t depth = 3;
  std::size_t branches = 3;
  std::uint64_t seed = 0;
};

std::size_t size_cap(const Options& o) { return o.max_size ? o.max_size : global_size_cap(); }

Lattice load(const Options& o) {
  const Input& in = o.input;
  const int given = !in.path.empty() + !in.from_ji.empty() + !in.from_lattice.empty() + !in.chains.empty();
  if (given != 1)
    throw Error(ErrorCode::InvalidArgument, "give exactly one of FILE, --from-ji, --from-lattice, --chains");
  const std::size_t cap = size_cap(o);
  if (!in.chains.empty()) {
    for (auto n : in.chains)
      if (n == 0) throw Error(ErrorCode::InvalidArgument, "chain sizes must be positive");
    return chain_product(in.chains, cap);
  }
  if (!in.from_ji.empty()) return load_from_ji(in.from_ji, cap);
  if (!in.from_lattice.empty()) return load_from_lattice(in.from_lattice, cap);
  // Bare FILE: a J poset unless the file only carries a Hasse diagram.
  const json j = read_json_file(in.path);
  if (j.is_object() && j.contains("hasse") && !j.contains("ji_poset")) return load_from_lattice(in.path, cap);
  return load_from_ji(in.path, cap);
}

void emit(const Options& o, const json& j, const std::string& text) {
  std::string out = o.json ? j.dump(2) + "\n" : text;
  if (!o.output.empty())
    write_text_file(o.output, out);
  else
    std::cout << out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string summary_text(const Lattice& l) {
  return "|L|=" + std::to_string(l.size()) + " |J|=" + std::to_string(l.ji_count()) +
         " codim=" + std::to_string(l.codim()) + " dim=" + std::to_string(l.ji_count()) + "\n";
}

int cmd_build(const Options& o) {
  const Lattice l = load(o);
  emit(o, lattice_summary_json(l), summary_text(l));
  return kOk;
}

int cmd_classify(const Options& o) {
  const Lattice l = load(o);
  const auto r = classify(l);
  std::ostringstream t;
  t << "tree:   " << yes(r.tree) << "\nhonest: " << yes(r.honest) << "\nsquare: " << yes(r.square) << "\n";
  if (r.factors) {
    t << "factors:";
    for (auto n : *r.factors) t << " c(" << n << ")";
    t << "\n";
  }
  for (const auto& v : r.lemma_violations) t << "violation: " << v << "\n";
  emit(o, to_json(l, r), t.str());
  return r.lemma_violations.empty() ? kOk : kViolation;
}

int cmd_diamonds(const Options& o) {
  const Lattice l = load(o);
  std::ostringstream t;
  const auto ds = enumerate_diamonds(l);
  t << ds.size() << " diamonds\n";
  for (const auto& d : ds)
    t << l.name(d.x) << " * " << l.name(d.y) << " - " << l.name(d.top) << " * " << l.name(d.bottom) << "\n";
  emit(o, diamonds_json(l), t.str());
  return kOk;
}

std::string point_text(const PointVerdict& v) {
  if (v.verdict == Verdict::Smooth) return v.codim == 0 ? "smooth (codim 0)" : "smooth";
  return "singular (rank " + std::to_string(v.rank) + " < codim " + std::to_string(v.codim) + ")";
}

int cmd_smoothness(const Options& o) {
  const Lattice l = load(o);
  if (!o.point.empty()) {
    const auto v = is_smooth_at(l, {l.resolve(o.point), 1});
    emit(o, to_json(l, v), point_text(v) + "\n");
    return v.verdict == Verdict::Smooth ? kOk : kViolation;
  }
  const auto r = smoothness_report(l);
  std::size_t width = 2;
  for (const auto& e : r.elements) width = std::max(width, l.name(e.alpha).size());
  std::ostringstream t;
  t << std::left << std::setw(static_cast<int>(width)) << "id" << "  E  rank  codim  verdict\n";
  for (const auto& e : r.elements)
    t << std::left << std::setw(static_cast<int>(width)) << l.name(e.alpha) << std::right << std::setw(3)
      << e.partners.size() << std::setw(6) << e.rank << std::setw(7) << e.codim << "  " << to_string(e.verdict)
      << "\n";
  t << "origin: " << to_string(r.origin) << "\nall coordinate points smooth: " << yes(r.all_smooth) << "\n";
  emit(o, to_json(l, r), t.str());
  return r.all_smooth ? kOk : kViolation;
}

int cmd_polytope(const Options& o) {
  const Lattice l = load(o);
  const auto p = order_polytope(l);
  const auto toric = toric_smooth_all_vertices(p);
  std::ostringstream t;
  t << "dimension " << p.ambient_dim << ", " << p.vertices.size() << " vertices, " << p.edges.size()
    << " edges\n";
  for (const auto& v : toric.vertices)
    t << l.name(v.vertex) << ": " << (v.unimodular ? "unimodular" : v.reason) << "\n";
  t << "toric smooth: " << yes(toric.smooth) << "\n";
  emit(o, to_json(p, toric), t.str());
  return toric.smooth ? kOk : kViolation;
}

int cmd_decompose(const Options& o) {
  const Lattice l = load(o);
  const auto d = decompose_chain_product(l);
  std::ostringstream t;
  for (std::size_t i = 0; i < d.factor_sizes.size(); ++i) t << (i ? " x " : "") << "c(" << d.factor_sizes[i] << ")";
  if (d.factor_sizes.empty()) t << "c(1)";
  t << "\n";
  emit(o, to_json(l, d), t.str());
  return kOk;
}

int cmd_prune(const Options& o) {
  const Lattice l = load(o);
  std::vector<std::size_t> betas;
  if (!o.beta.empty())
    betas.push_back(l.base().index(o.beta));
  else
    betas = maximal_join_irreducibles(l);
  const bool square = is_square_lattice(l);
  json out = json::array();
  std::ostringstream t;
  std::size_t violations = 0;
  for (auto beta : betas) {
    const auto pr = prune(l, beta);
    const std::string label = l.base().label(beta);
    json entry = {{"beta", label},
                  {"pruned_size", pr.sublattice.size()},
                  {"pruned_ji_count", pr.sublattice.ji_count()},
                  {"up_set_size", pr.complement.size()}};
    t << "beta=" << label << ": |L_beta|=" << pr.sublattice.size() << " |B_beta|=" << pr.complement.size()
      << " |J(L_beta)|=" << pr.sublattice.ji_count() << "\n";
    if (l.base().lower_covers(beta).count() <= 1) {
      const auto b = verify_bijection_lemma(l, beta);
      entry["bijection"] = b.isomorphic;
      t << "  x -> x v beta isomorphism: " << yes(b.isomorphic) << "\n";
      violations += !b.isomorphic;
    }
    if (square) {
      const auto ineq = verify_lemma_inequality(l, beta);
      const auto greater = verify_lemma_greater(l, beta);
      entry["inequality_violations"] = ineq.violations;
      entry["greater_violations"] = greater.violations;
      t << "  inequality violations: " << ineq.violations << ", greater violations: " << greater.violations << "\n";
      violations += ineq.violations + greater.violations;
    }
    out.push_back(entry);
  }
  emit(o, {{"lattice", l.name()}, {"prunings", out}}, t.str());
  return violations ? kViolation : kOk;
}

std::vector<Check> checks_for(const Options& o, std::vector<Check> fallback) {
  std::vector<Check> out;
  auto add = [&](Check c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  if (!o.theorem.empty()) {
    if (o.theorem == "a") {
      add(Check::TheoremA);
      add(Check::RankStructure);
    } else if (o.theorem == "b") {
      add(Check::TheoremB);
    } else if (o.theorem == "c") {
      add(Check::TheoremC);
      add(Check::OracleAgreement);
    } else if (o.theorem == "tree-honest") {
      add(Check::TreeHonest);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown theorem '" + o.theorem + "' (a, b, c, tree-honest)");
    }
  }
  if (o.lemmas)
    for (auto c : {Check::LemmaChain, Check::Bijection, Check::LemmaInequality, Check::LemmaGreater}) add(c);
  for (const auto& name : o.checks) {
    auto c = parse_check(name);
    if (!c) throw Error(ErrorCode::InvalidArgument, "unknown check '" + name + "'");
    add(*c);
  }
  return out.empty() ? fallback : out;
}

CampaignReport campaign(const Options& o, const std::vector<Check>& checks) {
  const int families = (o.all_posets > 0) + (o.chain_products > 0) + (o.random_trees > 0);
  const bool single = !o.input.path.empty() || !o.input.from_ji.empty() || !o.input.from_lattice.empty() ||
                      !o.input.chains.empty();
  if (families + single != 1)
    throw Error(ErrorCode::InvalidArgument,
                "give exactly one of --all-posets, --chain-products, --random-trees, or a lattice input");
  if (single) {
    const Lattice l = load(o);
    return run_campaign(l.name(), std::vector<Lattice>{l}, checks);
  }
  FamilySpec spec;
  spec.max_lattice_size = size_cap(o);
  if (o.all_posets)
    spec.kind = AllPosets{0, o.all_posets};
  else if (o.chain_products)
    spec.kind = ChainProducts{o.chain_products};
  else
    spec.kind = RandomTrees{o.random_trees, o.depth, o.branches, o.seed};
  return run_campaign(spec, checks);
}

std::string campaign_text(const CampaignReport& r) {
  std::ostringstream t;
  t << "family: " << r.family << "\nlattices: " << r.lattices << "\n";
  for (const auto& [c, tally] : r.tallies)
    t << std::left << std::setw(20) << to_string(c) << " ran=" << tally.lattices << " skipped=" << tally.skipped
      << " items=" << tally.items << " violations=" << tally.violations << "\n";
  for (const auto& v : r.violations) t << "violation [" << to_string(v.check) << "] " << v.lattice << ": " << v.witness << "\n";
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < r.singular.size() && i < kShown; ++i) {
    t << "singular in " << r.singular[i].lattice << ":";
    for (const auto& e : r.singular[i].elements) t << " " << e;
    t << "\n";
  }
  if (r.singular.size() > kShown)
    t << "singular points in " << r.singular.size() - kShown << " more lattices (see --json)\n";
  for (const auto& obs : r.observations) t << "note: " << obs << "\n";
  t << (r.passed() ? "PASS" : "FAIL") << "\n";
  return t.str();
}

int cmd_verify(const Options& o) {
  if (o.theorem.empty() && !o.lemmas && o.checks.empty())
    throw Error(ErrorCode::InvalidArgument, "verify needs --theorem, --lemmas or --checks");
  const auto r = campaign(o, checks_for(o, {}));
  emit(o, to_json(r), campaign_text(r));
  return r.passed() ? kOk : kViolation;
}

int cmd_campaign(const Options& o) {
  const auto r = campaign(o, checks_for(o, all_checks()));
  emit(o, to_json(r), campaign_text(r));
  return r.passed() ? kOk : kViolation;
}

int cmd_export(const Options& o) {
  const Lattice l = load(o);
  const int kinds = o.dot + o.relations + o.polytope;
  if (kinds > 1) throw Error(ErrorCode::InvalidArgument, "choose one of --dot, --relations, --polytope");
  if (o.dot) {
    if (o.output.empty()) {
      std::cout << lattice_dot(l) << ji_dot(l);
    } else {
      write_text_file(o.output + ".lattice.dot", lattice_dot(l));
      write_text_file(o.output + ".j.dot", ji_dot(l));
    }
  } else if (o.relations) {
    Options plain = o;
    plain.json = false;
    emit(plain, {}, relations_text(l));
  } else if (o.polytope) {
    Options plain = o;
    plain.json = false;
    emit(plain, {}, polytope_text(order_polytope(l)));
  } else {
    Options as_json = o;
    as_json.json = true;
    emit(as_json, lattice_export_json(l), {});
  }
  return kOk;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.input.path, "Lattice input; a J-poset file unless it only holds \"hasse\"");
  cmd->add_option("--from-ji", o.input.from_ji, "JSON file describing the join-irreducible poset");
  cmd->add_option("--from-lattice", o.input.from_lattice, "JSON file with the lattice Hasse diagram");
  cmd->add_option("--chains", o.input.chains, "Product of chains, e.g. 3,2")->delimiter(',');
}

void add_family(CLI::App* cmd, Options& o) {
  cmd->add_option("--all-posets", o.all_posets, "All naturally labeled J' posets with up to N elements");
  cmd->add_option("--chain-products", o.chain_products, "All chain products with at most N elements");
  cmd->add_option("--random-trees", o.random_trees, "K seeded random tree lattices");
  cmd->add_option("--seed", o.seed, "Seed for --random-trees");
  cmd->add_option("--depth", o.depth, "Maximum tree depth for --random-trees")->capture_default_str();
  cmd->add_option("--branches", o.branches, "Maximum children per node for --random-trees")->capture_default_str();
  cmd->add_option("--checks", o.checks, "Comma-separated check names")->delimiter(',');
}

bool wants_json(int argc, char** argv) {
  bool json = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--json") == 0) json = true;
    if (std::strcmp(argv[i], "--text") == 0) json = false;
  }
  return json;
}

int report_error(bool json, const std::string& code, const std::string& message) {
  if (json)
    std::cout << nlohmann::json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
  else
    std::cerr << "error: " << message << "\n";
  return kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  const bool json_mode = wants_json(argc, argv);
  Options o;
  CLI::App app{"Distributive lattices, Hibi relations and smoothness at coordinate points"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", o.json, "Machine-readable JSON output");
  fmt->add_flag("--text", o.text, "Human-readable output (default)");
  fmt->require_option(0, 1);
  app.add_option("--max-size", o.max_size, "Lattice size cap (default LATTICE_MAX_SIZE or 4096)");
  app.add_option("-o,--output", o.output, "Write output to this file (or file prefix for --dot)");

  auto* build = app.add_subcommand("build", "Print |L|, |J|, codim and dim");
  auto* classify_cmd = app.add_subcommand("classify", "Tree, honest and square predicates");
  auto* diamonds = app.add_subcommand("diamonds", "List the diamond relations");
  auto* smoothness = app.add_subcommand("smoothness", "Jacobian verdicts at coordinate points");
  auto* polytope = app.add_subcommand("polytope", "Order polytope vertex cones");
  auto* decompose = app.add_subcommand("decompose", "Chain factors of a square lattice");
  auto* prune_cmd = app.add_subcommand("prune", "Prune at maximal join-irreducibles and check the lemmas");
  auto* verify = app.add_subcommand("verify", "Check one statement over a family");
  auto* exp = app.add_subcommand("export", "JSON, DOT, relations or polytope exports");
  auto* camp = app.add_subcommand("campaign", "Run checks over a family and report");

  for (auto* cmd : {build, classify_cmd, diamonds, smoothness, polytope, decompose, prune_cmd, verify, exp, camp})
    add_input(cmd, o);
  smoothness->add_option("--point", o.point, "Element: alias, J' label, {a,b} or #k");
  prune_cmd->add_option("--beta", o.beta, "Maximal join-irreducible (J' label); default all");
  exp->add_flag("--dot", o.dot, "DOT of the lattice and of J");
  exp->add_flag("--relations", o.relations, "Binomial relations, one per line");
  exp->add_flag("--polytope", o.polytope, "Order polytope vertices and edges");
  verify->add_option("--theorem", o.theorem, "a, b, c or tree-honest");
  verify->add_flag("--lemmas", o.lemmas, "Pruning lemmas");
  add_family(verify, o);
  add_family(camp, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (!json_mode) return app.exit(e) == 0 ? kOk : kFailure;
    return report_error(true, "UsageError", e.what());
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (diamonds->parsed()) return cmd_diamonds(o);
    if (smoothness->parsed()) return cmd_smoothness(o);
    if (polytope->parsed()) return cmd_polytope(o);
    if (decompose->parsed()) return cmd_decompose(o);
    if (prune_cmd->parsed()) return cmd_prune(o);
    if (verify->parsed()) return cmd_verify(o);
    if (exp->parsed()) return cmd_export(o);
    if (camp->parsed()) return cmd_campaign(o);
  } catch (const Error& e) {
    return report_error(o.json, std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return report_error(o.json, "InternalError", e.what());
  }
  return kFailure;
}

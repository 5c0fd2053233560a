#include "latvar/harness.hpp"

#include "latvar/classify.hpp"
#include "latvar/diamonds.hpp"
#include "latvar/error.hpp"
#include "latvar/smooth.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace latvar {

std::size_t global_size_cap() {
  if (const char* env = std::getenv("LATTICE_MAX_SIZE")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultLatticeCap;
}

namespace {

// Lattices above these sizes skip the cubic checks.
constexpr std::size_t kTripleLimit = 200;
constexpr std::size_t kPolytopeLimit = 512;
constexpr std::size_t kMaxPosetElements = 7;

struct Describe {
  std::string operator()(const AllPosets& a) const {
    return "all-posets(" + std::to_string(a.min_elements) + ".." + std::to_string(a.max_elements) + ")";
  }
  std::string operator()(const ChainProducts& c) const {
    return "chain-products(" + std::to_string(c.max_size) + ")";
  }
  std::string operator()(const RandomTrees& r) const {
    return "random-trees(" + std::to_string(r.count) + ",depth=" + std::to_string(r.max_depth) +
           ",branches=" + std::to_string(r.max_branches) + ",seed=" + std::to_string(r.seed) + ")";
  }
};

void shapes_from(std::size_t min_factor, std::size_t budget, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t n = min_factor; n <= budget; ++n) {
    cur.push_back(n);
    out.push_back(cur);
    shapes_from(n, budget / n, cur, out);
    cur.pop_back();
  }
}

// Rooted tree as a parent array over J' nodes 1..k; parent 0 is the root.
struct TreeShape {
  std::vector<std::size_t> parent;  // parent[i] for node i + 1
};

class TreeSampler {
public:
  TreeSampler(const RandomTrees& spec) : spec_(spec), rng_(spec.seed) {}

  TreeShape draw() {
    TreeShape t;
    const std::size_t root_children = spec_.max_branches == 0 ? 0 : 1 + below(spec_.max_branches - 1);
    for (std::size_t c = 0; c < root_children; ++c) grow(t, 0, 1);
    return t;
  }

private:
  // Portable bounded draw; the small modulo bias is irrelevant here.
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(rng_() % (k + 1)); }

  void grow(TreeShape& t, std::size_t parent, std::size_t depth) {
    t.parent.push_back(parent);
    const std::size_t self = t.parent.size();
    if (depth >= spec_.max_depth) return;
    const std::size_t children = below(spec_.max_branches);
    for (std::size_t c = 0; c < children; ++c) grow(t, self, depth + 1);
  }

  RandomTrees spec_;
  std::mt19937_64 rng_;
};

// Ideal count of the tree's J' (a forest under the root), saturating at cap + 1.
std::size_t tree_lattice_size(const TreeShape& t, std::size_t cap) {
  const std::size_t k = t.parent.size();
  std::vector<std::size_t> g(k + 1, 1);  // product of children's counts, then +1
  for (std::size_t i = k; i >= 1; --i) {
    g[i] = std::min(g[i] + 1, cap + 1);
    const std::size_t p = t.parent[i - 1];
    g[p] = std::min(g[p] * g[i], cap + 1);
  }
  return g[0];
}

PosetSpec tree_spec(const TreeShape& t, std::string name) {
  PosetSpec s{std::move(name), {}, {}};
  for (std::size_t i = 1; i <= t.parent.size(); ++i) {
    s.elements.push_back(std::to_string(i));
    if (t.parent[i - 1] != 0) s.covers.emplace_back(std::to_string(t.parent[i - 1]), std::to_string(i));
  }
  return s;
}

}  // namespace

std::string FamilySpec::describe() const { return std::visit(Describe{}, kind); }

std::vector<std::vector<std::size_t>> chain_product_shapes(std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  shapes_from(2, max_size, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<PosetSpec> natural_posets(std::size_t elements) {
  if (elements > kMaxPosetElements)
    throw Error(ErrorCode::SizeLimitExceeded,
                "all-posets supports at most " + std::to_string(kMaxPosetElements) + " elements");
  // Element k is added on top of a poset on 1..k-1 with its lower covers an
  // antichain there; every naturally labeled poset arises exactly once.
  std::vector<PosetSpec> out;
  std::vector<std::uint32_t> down;  // strict down-set masks, indexed by element - 1
  std::vector<std::pair<std::string, std::string>> covers;
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k > elements) {
      PosetSpec s{"P" + std::to_string(elements) + "-" + std::to_string(out.size()), {}, covers};
      for (std::size_t i = 1; i <= elements; ++i) s.elements.push_back(std::to_string(i));
      out.push_back(std::move(s));
      return;
    }
    const std::size_t prev = k - 1;
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << prev); ++a) {
      bool antichain = true;
      std::uint32_t below = a;
      for (std::size_t i = 0; i < prev && antichain; ++i)
        if (a >> i & 1u) {
          if (down[i] & a) antichain = false;
          below |= down[i];
        }
      if (!antichain) continue;
      down.push_back(below);
      const std::size_t added = covers.size();
      for (std::size_t i = 0; i < prev; ++i)
        if (a >> i & 1u) covers.emplace_back(std::to_string(i + 1), std::to_string(k));
      extend(k + 1);
      covers.resize(added);
      down.pop_back();
    }
  };
  extend(1);
  return out;
}

void for_each_in_family(const FamilySpec& spec, const std::function<void(const Lattice&)>& visit) {
  const std::size_t cap = spec.max_lattice_size;
  if (const auto* a = std::get_if<AllPosets>(&spec.kind)) {
    if (a->max_elements > kMaxPosetElements || (std::size_t{1} << a->max_elements) > cap)
      throw Error(ErrorCode::SizeLimitExceeded, spec.describe() + " exceeds the size limits");
    for (std::size_t n = a->min_elements; n <= a->max_elements; ++n)
      for (const auto& s : natural_posets(n)) visit(birkhoff(validate_poset(s), cap));
  } else if (const auto* c = std::get_if<ChainProducts>(&spec.kind)) {
    if (c->max_size > cap)
      throw Error(ErrorCode::SizeLimitExceeded,
                  spec.describe() + " exceeds the lattice size cap " + std::to_string(cap));
    for (const auto& shape : chain_product_shapes(c->max_size)) visit(chain_product(shape, cap));
  } else {
    const auto& r = std::get<RandomTrees>(spec.kind);
    TreeSampler sampler(r);
    for (std::size_t i = 0; i < r.count; ++i) {
      TreeShape t;
      std::size_t attempts = 0;
      do {
        if (++attempts > 10000)
          throw Error(ErrorCode::SizeLimitExceeded, "no tree under the size cap after 10000 draws");
        t = sampler.draw();
      } while (tree_lattice_size(t, cap) > cap);
      visit(birkhoff(validate_poset(tree_spec(t, "tree" + std::to_string(i))), cap));
    }
  }
}

std::vector<Lattice> generate_family(const FamilySpec& spec) {
  std::vector<Lattice> out;
  for_each_in_family(spec, [&](const Lattice& l) { out.push_back(l); });
  return out;
}

namespace {

constexpr std::pair<Check, const char*> kCheckNames[] = {
    {Check::TheoremA, "theorem-a"},
    {Check::TheoremB, "theorem-b"},
    {Check::TheoremC, "theorem-c"},
    {Check::TreeHonest, "tree-honest"},
    {Check::LemmaInequality, "lemma-inequality"},
    {Check::LemmaGreater, "lemma-greater"},
    {Check::Bijection, "bijection"},
    {Check::LemmaChain, "lemma-chain"},
    {Check::BirkhoffRoundtrip, "birkhoff-roundtrip"},
    {Check::OracleAgreement, "oracle-agreement"},
    {Check::RankStructure, "rank-structure"},
    {Check::Structure, "structure"},
    {Check::DualInvariance, "dual-invariance"},
    {Check::Smoothness, "smoothness"},
};

class LatticeRun {
public:
  LatticeRun(CampaignReport& report, std::size_t index, const Lattice& l)
      : report_(report), index_(index), l_(l) {}

  void run(Check c) {
    tally_ = &report_.tallies[c];
    check_ = c;
    switch (c) {
      case Check::TheoremA: theorem_a(); break;
      case Check::TheoremB: theorem_b(); break;
      case Check::TheoremC: theorem_c(); break;
      case Check::TreeHonest: tree_honest(); break;
      case Check::LemmaInequality: lemma_inequality(); break;
      case Check::LemmaGreater: lemma_greater(); break;
      case Check::Bijection: bijection(); break;
      case Check::LemmaChain: lemma_chain(); break;
      case Check::BirkhoffRoundtrip: roundtrip(); break;
      case Check::OracleAgreement: oracle(); break;
      case Check::RankStructure: rank_structure(); break;
      case Check::Structure: structure(); break;
      case Check::DualInvariance: dual_invariance(); break;
      case Check::Smoothness: smoothness(); break;
    }
  }

  // Two-factor chain products where lemma-greater was not tight everywhere.
  std::size_t two_factor_seen = 0;
  std::vector<std::string> two_factor_strict;

private:
  void violation(std::string witness) {
    ++tally_->violations;
    report_.violations.push_back({index_, l_.name(), check_, std::move(witness)});
  }
  void skip() { ++tally_->skipped; }
  void ran(std::size_t items) {
    ++tally_->lattices;
    tally_->items += items;
  }

  bool square() {
    if (!square_) square_ = is_square_lattice(l_);
    return *square_;
  }
  const SmoothnessReport& report() {
    if (!smooth_) smooth_ = smoothness_report(l_);
    return *smooth_;
  }

  void theorem_a() {
    const auto c = verify_theorem_a(l_, report());
    for (const auto& w : c.witnesses) violation(w);
    ran(l_.size());
  }

  void theorem_b() {
    if (!square()) return skip();
    const auto c = verify_theorem_b(l_);
    for (const auto& w : c.witnesses) violation(w);
    ran(l_.size());
  }

  void theorem_c() {
    if (!square() || l_.size() > kPolytopeLimit) return skip();
    const auto c = verify_theorem_c(l_, report());
    for (const auto& w : c.witnesses) violation(w);
    ran(l_.size());
  }

  void tree_honest() {
    const bool tree = is_tree_lattice(l_);
    const bool honest = is_honest(l_);
    if (tree != honest)
      violation(std::string("tree=") + (tree ? "true" : "false") + " honest=" + (honest ? "true" : "false"));
    if (!unique_lower_cover_in_tree(l_)) violation("tree lattice with a J element lacking a unique lower cover");
    ran(1);
  }

  void lemma(bool greater) {
    if (!square()) return skip();
    std::size_t rows = 0;
    bool all_equal = true;
    for (auto beta : maximal_join_irreducibles(l_)) {
      const auto rep = greater ? verify_lemma_greater(l_, beta) : verify_lemma_inequality(l_, beta);
      for (const auto& row : rep.rows) {
        ++rows;
        all_equal = all_equal && row.equality;
        if (!row.holds)
          violation("beta=" + l_.base().label(beta) + " alpha=" + l_.name(row.alpha) + " gained " +
                    std::to_string(row.gained) + " bound " + std::to_string(row.bound) +
                    (row.note.empty() ? "" : " (" + row.note + ")"));
      }
    }
    if (greater && decompose_chain_product(l_).factor_sizes.size() == 2) {
      ++two_factor_seen;
      if (!all_equal) two_factor_strict.push_back(l_.name());
    }
    ran(rows);
  }
  void lemma_inequality() { lemma(false); }
  void lemma_greater() { lemma(true); }

  void bijection() {
    std::size_t checked = 0;
    for (auto beta : maximal_join_irreducibles(l_)) {
      if (l_.base().lower_covers(beta).count() > 1) continue;
      const auto b = verify_bijection_lemma(l_, beta);
      ++checked;
      if (!b.isomorphic || b.source_size != b.target_size)
        violation("beta=" + l_.base().label(beta) + ": source " + std::to_string(b.source_size) + ", target " +
                  std::to_string(b.target_size) + (b.isomorphic ? "" : ", not an order isomorphism"));
    }
    if (checked == 0 && !maximal_join_irreducibles(l_).empty()) return skip();
    ran(checked);
  }

  void lemma_chain() {
    const auto betas = maximal_join_irreducibles(l_);
    for (auto beta : betas) {
      // prune() itself throws if the complement is not the up-set of beta
      const auto pr = prune(l_, beta);
      if (pr.sublattice.ji_count() + 1 != l_.ji_count())
        violation("beta=" + l_.base().label(beta) + ": |J(L_beta)| = " +
                  std::to_string(pr.sublattice.ji_count()));
    }
    ran(betas.size());
  }

  void roundtrip() {
    if (l_.size() > kTripleLimit) return skip();
    const Lattice raw = from_raw(hasse_diagram(l_));
    if (raw.size() != l_.size() || raw.base().size() != l_.base().size()) {
      violation("rebuilt lattice has " + std::to_string(raw.size()) + " elements");
      return ran(1);
    }
    std::vector<ElementId> to_l(raw.size());
    for (ElementId e = 0; e < raw.size(); ++e) to_l[e] = l_.resolve(raw.name(e));
    for (ElementId a = 0; a < raw.size(); ++a)
      for (ElementId b = 0; b < raw.size(); ++b)
        if (raw.leq(a, b) != l_.leq(to_l[a], to_l[b])) {
          violation("order differs at " + raw.name(a) + ", " + raw.name(b));
          return ran(1);
        }
    ran(l_.size());
  }

  void oracle() {
    if (l_.size() > kPolytopeLimit) return skip();
    ran(oracle_agreement(l_, report()));
  }

  void rank_structure() {
    // smoothness_report throws RankMismatch / RankExceedsCodim
    const auto& r = report();
    if (r.excess != 0) violation(std::to_string(r.excess) + " elements with |E| > codim");
    ran(r.elements.size());
  }

  void structure() {
    if (count_order_ideals(l_.base()) != l_.size()) violation("|L| differs from the ideal count");
    if (l_.size() <= kTripleLimit) {
      if (auto t = find_distributivity_violation(l_))
        violation("distributivity fails at " + l_.name(t->x) + ", " + l_.name(t->y) + ", " + l_.name(t->z));
      if (auto t = find_absorption_violation(l_)) violation("absorption fails at " + l_.name(t->x) + ", " + l_.name(t->y));
      if (auto t = find_bound_violation(l_)) violation("bound fails at " + l_.name(t->x) + ", " + l_.name(t->y));
      if (auto t = find_join_prime_violation(l_))
        violation("x=" + l_.name(t->x) + " y=" + l_.name(t->y) + " beta=" + l_.name(t->z) +
                  ": x v y >= beta with neither above beta");
    }
    try {
      const auto s = survey_maximal_chains(l_);
      if (s.min_cardinality != l_.ji_count() || s.max_cardinality != l_.ji_count())
        violation("maximal chain cardinalities " + std::to_string(s.min_cardinality) + ".." +
                  std::to_string(s.max_cardinality) + " != |J| " + std::to_string(l_.ji_count()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeLimitExceeded) throw;
    }
    const auto diamonds = enumerate_diamonds(l_).size();
    if (diamonds != incomparable_pair_count(l_))
      violation(std::to_string(diamonds) + " diamonds vs " + std::to_string(incomparable_pair_count(l_)) +
                " incomparable pairs");
    ran(l_.size());
  }

  void dual_invariance() {
    const Lattice d = dual(l_);
    const auto map = dual_element_map(l_, d);
    const auto& mine = report();
    const auto theirs = smoothness_report(d);
    for (ElementId a = 0; a < l_.size(); ++a) {
      const auto& x = mine.elements[a];
      const auto& y = theirs.elements[map[a]];
      if (x.partners.size() != y.partners.size() || x.verdict != y.verdict) {
        violation("element " + l_.name(a) + ": |E| " + std::to_string(x.partners.size()) + " vs " +
                  std::to_string(y.partners.size()) + " in the dual");
        break;
      }
    }
    ran(l_.size());
  }

  void smoothness() {
    const auto& r = report();
    SingularFinding f{index_, l_.name(), {}};
    for (auto a : r.singular()) f.elements.push_back(l_.name(a));
    if (!f.elements.empty()) report_.singular.push_back(std::move(f));
    ran(r.elements.size());
  }

  CampaignReport& report_;
  std::size_t index_;
  const Lattice& l_;
  CheckTally* tally_ = nullptr;
  Check check_ = Check::TheoremA;
  std::optional<bool> square_;
  std::optional<SmoothnessReport> smooth_;
};

struct Campaign {
  CampaignReport report;
  std::size_t two_factor_seen = 0;
  std::vector<std::string> two_factor_strict;

  Campaign(std::string family, const std::vector<Check>& checks) {
    report.family = std::move(family);
    report.checks = checks;
    for (auto c : checks) report.tallies[c];
  }

  void add(const Lattice& l) {
    LatticeRun run(report, report.lattices++, l);
    for (auto c : report.checks) run.run(c);
    two_factor_seen += run.two_factor_seen;
    two_factor_strict.insert(two_factor_strict.end(), run.two_factor_strict.begin(), run.two_factor_strict.end());
  }

  CampaignReport finish() {
    if (two_factor_seen > 0) {
      report.observations.push_back("lemma-greater equality on " +
                                    std::to_string(two_factor_seen - two_factor_strict.size()) + " of " +
                                    std::to_string(two_factor_seen) + " two-factor chain products");
      for (const auto& name : two_factor_strict)
        report.observations.push_back("lemma-greater strict somewhere on two-factor product " + name);
    }
    return std::move(report);
  }
};

}  // namespace

const char* to_string(Check c) {
  for (auto [k, name] : kCheckNames)
    if (k == c) return name;
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (auto [k, n] : kCheckNames)
    if (name == n) return k;
  return std::nullopt;
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (auto [k, name] : kCheckNames) out.push_back(k);
  return out;
}

CampaignReport run_campaign(const FamilySpec& spec, const std::vector<Check>& checks) {
  Campaign c(spec.describe(), checks);
  for_each_in_family(spec, [&](const Lattice& l) { c.add(l); });
  return c.finish();
}

CampaignReport run_campaign(std::string family, const std::vector<Lattice>& lattices,
                            const std::vector<Check>& checks) {
  Campaign c(std::move(family), checks);
  for (const auto& l : lattices) c.add(l);
  return c.finish();
}

}  // namespace latvar

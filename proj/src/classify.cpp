#include "latvar/classify.hpp"

#include "latvar/diamonds.hpp"
#include "latvar/error.hpp"

#include <algorithm>
#include <set>

namespace latvar {

std::vector<ElementId> ji_elements(const Lattice& l) {
  std::vector<ElementId> out{l.bottom()};
  for (ElementId e = 0; e < l.size(); ++e)
    if (l.lower_covers(e).size() == 1) out.push_back(e);
  return out;
}

Poset ji_poset_with_root(const Lattice& l) {
  const auto elems = ji_elements(l);
  PosetSpec s{l.name() + "-J", {}, {}};
  for (auto e : elems) s.elements.push_back(l.name(e));
  for (auto a : elems)
    for (auto b : elems) {
      if (!l.less(a, b)) continue;
      const bool between = std::any_of(elems.begin(), elems.end(),
                                       [&](ElementId c) { return l.less(a, c) && l.less(c, b); });
      if (!between) s.covers.emplace_back(l.name(a), l.name(b));
    }
  return validate_poset(s);
}

bool is_honest(const Lattice& l) {
  const auto elems = ji_elements(l);
  const Poset j = ji_poset_with_root(l);
  // Poset labels are element names; map them back to lattice ids.
  auto element = [&](std::size_t v) {
    for (auto e : elems)
      if (l.name(e) == j.label(v)) return e;
    throw Error(ErrorCode::UnknownElement, "join-irreducible '" + j.label(v) + "' lost");
  };
  for (auto [lo, hi] : j.covers())
    if (!l.is_cover(element(lo), element(hi))) return false;
  return true;
}

bool is_tree_lattice(const Lattice& l) { return hasse_is_tree(ji_poset_with_root(l)); }

bool is_square_lattice(const Lattice& l) {
  const Poset j = ji_poset_with_root(l);
  return hasse_is_tree(j) && max_degree_except_root(j) <= 2;
}

bool verify_tree_honest_equivalence(const Lattice& l) { return is_tree_lattice(l) == is_honest(l); }

bool unique_lower_cover_in_tree(const Lattice& l) {
  const Poset j = ji_poset_with_root(l);
  if (!hasse_is_tree(j)) return true;
  const std::size_t root = j.minimal_elements().front();
  for (std::size_t v = 0; v < j.size(); ++v)
    if (v != root && j.lower_covers(v).count() != 1) return false;
  return true;
}

ChainDecomposition decompose_chain_product(const Lattice& l) {
  if (!is_square_lattice(l))
    throw Error(ErrorCode::NotSquare, "lattice '" + l.name() + "' is not a square lattice");
  const Poset& base = l.base();
  ChainDecomposition d;
  for (auto start : base.minimal_elements()) {
    std::vector<std::size_t> branch{start};
    while (true) {
      const Bits& up = base.upper_covers(branch.back());
      if (up.none()) break;
      if (up.count() != 1)
        throw Error(ErrorCode::NotSquare, "element '" + base.label(branch.back()) + "' branches");
      branch.push_back(up.find_first());
    }
    d.factor_sizes.push_back(branch.size() + 1);
    d.branches.push_back(std::move(branch));
  }

  std::vector<Bits> branch_bits;
  for (const auto& b : d.branches) {
    Bits bits = base.empty_set();
    for (auto v : b) bits.set(v);
    branch_bits.push_back(bits);
  }
  std::size_t product = 1;
  for (auto n : d.factor_sizes) product *= n;
  if (product != l.size())
    throw Error(ErrorCode::CriterionMismatch, "factor sizes do not multiply to |L|");

  d.coordinates.resize(l.size());
  std::set<std::vector<std::size_t>> seen;
  for (ElementId e = 0; e < l.size(); ++e) {
    for (const auto& bits : branch_bits) d.coordinates[e].push_back((l.ideal(e).members & bits).count());
    if (!seen.insert(d.coordinates[e]).second)
      throw Error(ErrorCode::CriterionMismatch, "coordinate map is not injective");
  }
  const std::size_t t = d.factor_sizes.size();
  for (ElementId a = 0; a < l.size(); ++a)
    for (ElementId b = 0; b < l.size(); ++b) {
      const auto& ca = d.coordinates[a];
      const auto& cb = d.coordinates[b];
      bool below = true;
      for (std::size_t i = 0; i < t; ++i) below = below && ca[i] <= cb[i];
      if (below != l.leq(a, b)) throw Error(ErrorCode::CriterionMismatch, "coordinate map does not preserve order");
      const auto& cj = d.coordinates[l.join(a, b)];
      const auto& cm = d.coordinates[l.meet(a, b)];
      for (std::size_t i = 0; i < t; ++i)
        if (cj[i] != std::max(ca[i], cb[i]) || cm[i] != std::min(ca[i], cb[i]))
          throw Error(ErrorCode::CriterionMismatch, "coordinate map does not preserve join/meet");
    }
  return d;
}

std::vector<std::size_t> maximal_join_irreducibles(const Lattice& l) { return l.base().maximal_elements(); }

PruneResult prune(const Lattice& l, std::size_t beta) {
  const Poset& base = l.base();
  if (beta >= base.size())
    throw Error(ErrorCode::UnknownElement, "join-irreducible #" + std::to_string(beta) + " out of range");
  if (base.upper_covers(beta).any())
    throw Error(ErrorCode::NotMaximalJoinIrreducible,
                "'" + base.label(beta) + "' is not a maximal join-irreducible of '" + l.name() + "'");
  Bits keep = base.full_set();
  keep.reset(beta);
  const Poset sub = induced_subposet(base, keep, l.name() + "/" + base.label(beta));

  PruneResult r;
  r.beta = beta;
  r.sublattice = birkhoff(sub, std::max(l.size(), kDefaultIdealCap));
  std::vector<std::size_t> to_base(sub.size());
  for (std::size_t k = 0; k < sub.size(); ++k) to_base[k] = base.index(sub.label(k));

  std::vector<bool> hit(l.size(), false);
  r.embedding.resize(r.sublattice.size());
  for (ElementId s = 0; s < r.sublattice.size(); ++s) {
    Bits members = base.empty_set();
    const Bits& sm = r.sublattice.ideal(s).members;
    for (auto k = sm.find_first(); k != Bits::npos; k = sm.find_next(k)) members.set(to_base[k]);
    r.embedding[s] = l.element_of(members);
    hit[r.embedding[s]] = true;
  }
  const ElementId b = l.principal(beta);
  for (ElementId e = 0; e < l.size(); ++e) {
    if (!hit[e]) r.complement.push_back(e);
    if (hit[e] == l.leq(b, e))
      throw Error(ErrorCode::CriterionMismatch,
                  "element '" + l.name(e) + "' breaks complement = up-set of '" + base.label(beta) + "'");
  }
  return r;
}

BijectionCheck verify_bijection_lemma(const Lattice& l, std::size_t beta) {
  const PruneResult pr = prune(l, beta);
  const Poset& base = l.base();
  BijectionCheck c;
  c.beta = beta;
  const Bits& lower = base.lower_covers(beta);
  if (lower.count() > 1)
    throw Error(ErrorCode::NoUniquePredecessor,
                "'" + base.label(beta) + "' has " + std::to_string(lower.count()) + " lower covers in J");
  if (lower.count() == 1) c.predecessor = lower.find_first();

  const Lattice& sub = pr.sublattice;
  std::vector<ElementId> source;
  if (c.predecessor) {
    const ElementId p = sub.principal(sub.base().index(base.label(*c.predecessor)));
    for (ElementId s = 0; s < sub.size(); ++s)
      if (sub.leq(p, s)) source.push_back(s);
  } else {
    for (ElementId s = 0; s < sub.size(); ++s) source.push_back(s);
  }
  c.source_size = source.size();
  c.target_size = pr.complement.size();

  const ElementId b = l.principal(beta);
  std::vector<ElementId> image;
  for (auto s : source) image.push_back(l.join(pr.embedding[s], b));
  std::vector<ElementId> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  const bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted == pr.complement;
  bool order = true;
  for (std::size_t i = 0; i < source.size() && order; ++i)
    for (std::size_t j = 0; j < source.size() && order; ++j)
      order = sub.leq(source[i], source[j]) == l.leq(image[i], image[j]);
  c.isomorphic = bijective && order;
  return c;
}

namespace {

void require_square(const Lattice& l) {
  if (!is_square_lattice(l))
    throw Error(ErrorCode::NotSquare, "lattice '" + l.name() + "' is not a square lattice");
}

// Index of alpha's partners inside a partner table row.
bool has_partner(const std::vector<ElementId>& partners, ElementId e) {
  return std::binary_search(partners.begin(), partners.end(), e);
}

// Partners of the sublattice element, mapped into L, must be partners in L.
std::string containment_note(const PruneResult& pr, const PartnerTable& in_l, const PartnerTable& in_sub,
                             ElementId s) {
  const ElementId alpha = pr.embedding[s];
  for (auto p : in_sub.partners[s])
    if (!has_partner(in_l.partners[alpha], pr.embedding[p])) return "partner lost when embedding into L";
  return {};
}

}  // namespace

LemmaReport verify_lemma_inequality(const Lattice& l, std::size_t beta) {
  require_square(l);
  const PruneResult pr = prune(l, beta);
  const PartnerTable in_l = partner_table(l);
  const PartnerTable in_sub = partner_table(pr.sublattice);
  LemmaReport rep;
  rep.beta = beta;
  const std::size_t bound = l.size() - pr.sublattice.size() - 1;
  for (ElementId s = 0; s < pr.sublattice.size(); ++s) {
    LemmaRow row;
    row.alpha = pr.embedding[s];
    row.gained = in_l.partners[row.alpha].size() - in_sub.partners[s].size();
    row.bound = bound;
    row.note = containment_note(pr, in_l, in_sub, s);
    row.holds = row.note.empty() && row.gained >= row.bound;
    row.equality = row.gained == row.bound;
    if (!row.holds) ++rep.violations;
    if (row.gained > row.bound) ++rep.strict;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

LemmaReport verify_lemma_greater(const Lattice& l, std::size_t beta) {
  require_square(l);
  const PruneResult pr = prune(l, beta);
  const ChainDecomposition dec = decompose_chain_product(l);
  const Poset& base = l.base();
  Bits branch = base.empty_set();
  for (const auto& br : dec.branches)
    if (br.back() == beta)
      for (auto v : br) branch.set(v);
  const PartnerTable in_l = partner_table(l);
  const PartnerTable in_sub = partner_table(pr.sublattice);
  const ElementId beta_el = l.principal(beta);
  const std::size_t bound = pr.complement.size() - 1;

  LemmaReport rep;
  rep.beta = beta;
  for (ElementId s = 0; s < pr.sublattice.size(); ++s) {
    LemmaRow row;
    const ElementId alpha = pr.embedding[s];
    row.alpha = alpha;
    row.bound = bound;
    row.gained = in_l.partners[alpha].size() - in_sub.partners[s].size();
    row.note = containment_note(pr, in_l, in_sub, s);

    // b = min{g in B_beta : g >= alpha}, found by scanning and compared with alpha v beta.
    const ElementId b = l.join(alpha, beta_el);
    for (auto g : pr.complement)
      if (l.leq(alpha, g) && !l.leq(b, g)) row.note = "alpha v beta is not the minimum of B_beta above alpha";

    std::set<ElementId> constructed;
    for (auto b1 : pr.complement) {
      if (b1 == b || !row.note.empty()) continue;
      Diamond d{};
      if (l.less(b, b1)) {
        // Case b1 > b: z takes alpha's position on beta's branch and b1's elsewhere.
        Bits zbits = (l.ideal(b1).members - branch) | (l.ideal(alpha).members & branch);
        auto z = l.find(zbits);
        if (!z) {
          row.note = "case b1 > b: z is not an ideal";
          break;
        }
        d = {std::min(*z, b), std::max(*z, b), l.join(*z, b), l.meet(*z, b)};
        if (d.top != b1 || d.bottom != alpha) row.note = "case b1 > b: z v b != b1 or z ^ b != alpha";
      } else if (l.less(b1, b)) {
        d = {std::min(alpha, b1), std::max(alpha, b1), l.join(alpha, b1), l.meet(alpha, b1)};
        if (d.top != b) row.note = "case b1 < b: alpha v b1 != b";
      } else {
        d = {std::min(alpha, b1), std::max(alpha, b1), l.join(alpha, b1), l.meet(alpha, b1)};
      }
      if (!row.note.empty()) break;
      const bool genuine = d.x != d.y && !l.comparable(d.x, d.y) && d.top != d.bottom && d.top != d.x &&
                           d.top != d.y && d.bottom != d.x && d.bottom != d.y;
      if (!genuine || !d.contains(alpha) || monomial_partner(d, alpha) != b1) {
        row.note = "constructed set for '" + l.name(b1) + "' is not a diamond with partner b1";
        break;
      }
      if (!has_partner(in_l.partners[alpha], b1)) {
        row.note = "constructed partner missing from the partner set";
        break;
      }
      constructed.insert(b1);
    }
    if (row.note.empty() && constructed.size() != bound) row.note = "construction produced too few partners";
    row.holds = row.note.empty() && row.gained >= row.bound;
    row.equality = row.gained == row.bound;
    if (!row.holds) ++rep.violations;
    if (row.gained > row.bound) ++rep.strict;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ClassificationReport classify(const Lattice& l) {
  ClassificationReport r;
  r.tree = is_tree_lattice(l);
  r.honest = is_honest(l);
  r.square = r.tree && is_square_lattice(l);
  if (!r.square) return r;
  r.factors = decompose_chain_product(l).factor_sizes;
  for (auto beta : maximal_join_irreducibles(l)) {
    const std::string& label = l.base().label(beta);
    for (const auto& rep : {verify_lemma_inequality(l, beta), verify_lemma_greater(l, beta)})
      for (const auto& row : rep.rows)
        if (!row.holds)
          r.lemma_violations.push_back("beta=" + label + " alpha=" + l.name(row.alpha) + ": gained " +
                                       std::to_string(row.gained) + " < " + std::to_string(row.bound) +
                                       (row.note.empty() ? "" : " (" + row.note + ")"));
    if (!verify_bijection_lemma(l, beta).isomorphic)
      r.lemma_violations.push_back("beta=" + label + ": x -> x v beta is not an order isomorphism");
  }
  return r;
}

}  // namespace latvar

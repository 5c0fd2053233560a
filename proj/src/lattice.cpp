#include "latvar/lattice.hpp"

#include "latvar/error.hpp"

#include <algorithm>
#include <limits>

namespace latvar {

const OrderIdeal& Lattice::ideal(ElementId e) const {
  check(e);
  return elements_[e];
}

void Lattice::check(ElementId e) const {
  if (e >= elements_.size())
    throw Error(ErrorCode::UnknownElement,
                "element #" + std::to_string(e) + " not in lattice '" + name() + "' of size " +
                    std::to_string(elements_.size()));
}

std::optional<ElementId> Lattice::find(const Bits& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Lattice::element_of(const Bits& members) const {
  if (auto e = find(members)) return *e;
  throw Error(ErrorCode::UnknownElement, "set is not an order ideal of '" + name() + "'");
}

ElementId Lattice::join(ElementId a, ElementId b) const {
  return element_of(ideal(a).members | ideal(b).members);
}

ElementId Lattice::meet(ElementId a, ElementId b) const {
  return element_of(ideal(a).members & ideal(b).members);
}

std::optional<std::size_t> Lattice::generator(ElementId e) const {
  const Bits& m = ideal(e).members;
  // A principal ideal has a unique maximal member whose down-set is the ideal.
  for (auto v = m.find_first(); v != Bits::npos; v = m.find_next(v))
    if (base_.down(v) == m) return v;
  return std::nullopt;
}

std::vector<ElementId> Lattice::join_irreducibles() const {
  std::vector<ElementId> out{bottom()};
  out.insert(out.end(), principal_.begin(), principal_.end());
  return out;
}

std::vector<ElementId> Lattice::lower_covers(ElementId e) const {
  std::vector<ElementId> out;
  const Bits& m = ideal(e).members;
  for (auto v = m.find_first(); v != Bits::npos; v = m.find_next(v)) {
    if (base_.upper_covers(v).intersects(m)) continue;
    Bits smaller = m;
    smaller.reset(v);
    out.push_back(element_of(smaller));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> Lattice::upper_covers(ElementId e) const {
  std::vector<ElementId> out;
  const Bits& m = ideal(e).members;
  for (std::size_t v = 0; v < base_.size(); ++v) {
    if (m.test(v) || !base_.lower_covers(v).is_subset_of(m)) continue;
    Bits larger = m;
    larger.set(v);
    out.push_back(element_of(larger));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Lattice::is_cover(ElementId a, ElementId b) const {
  if (!less(a, b)) return false;
  for (ElementId c = 0; c < size(); ++c)
    if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
  return true;
}

std::string Lattice::ideal_text(ElementId e) const {
  std::string out = "{";
  const Bits& m = ideal(e).members;
  bool first = true;
  for (auto v = m.find_first(); v != Bits::npos; v = m.find_next(v)) {
    if (!first) out += ',';
    out += base_.label(v);
    first = false;
  }
  return out + "}";
}

std::string Lattice::name(ElementId e) const {
  check(e);
  if (!aliases_.empty()) return aliases_[e];
  if (auto g = generator(e)) return base_.label(*g);
  return ideal_text(e);
}

ElementId Lattice::resolve(std::string_view id) const {
  if (auto it = alias_index_.find(std::string(id)); it != alias_index_.end()) return it->second;
  if (auto j = base_.find(id)) return principal_[*j];
  if (id.size() >= 2 && id.front() == '{' && id.back() == '}') {
    Bits members = base_.empty_set();
    std::string_view body = id.substr(1, id.size() - 2);
    while (!body.empty()) {
      const auto comma = body.find(',');
      std::string_view token = body.substr(0, comma);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (!token.empty()) members.set(base_.index(token));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return element_of(members);
  }
  if (id.size() >= 2 && id.front() == '#') {
    std::size_t k = 0;
    for (char c : id.substr(1)) {
      if (c < '0' || c > '9') throw Error(ErrorCode::UnknownElement, "bad element index '" + std::string(id) + "'");
      k = k * 10 + static_cast<std::size_t>(c - '0');
      if (k > std::numeric_limits<ElementId>::max()) break;
    }
    check(static_cast<ElementId>(std::min<std::size_t>(k, std::numeric_limits<ElementId>::max())));
    return static_cast<ElementId>(k);
  }
  throw Error(ErrorCode::UnknownElement, "no element '" + std::string(id) + "' in lattice '" + name() + "'");
}

void Lattice::set_aliases(std::vector<std::string> aliases) {
  if (aliases.size() != size()) throw Error(ErrorCode::InvalidArgument, "alias count does not match lattice size");
  alias_index_.clear();
  for (ElementId e = 0; e < aliases.size(); ++e)
    if (!alias_index_.emplace(aliases[e], e).second)
      throw Error(ErrorCode::DuplicateElement, "alias '" + aliases[e] + "' used twice");
  aliases_ = std::move(aliases);
}

Lattice birkhoff(const Poset& jposet, std::size_t cap) {
  Lattice l;
  l.base_ = jposet;
  l.elements_ = enumerate_order_ideals(jposet, cap);
  if (l.elements_.size() > std::numeric_limits<ElementId>::max())
    throw Error(ErrorCode::SizeLimitExceeded, "lattice too large for 32-bit element ids");
  l.index_.reserve(l.elements_.size());
  for (ElementId e = 0; e < l.elements_.size(); ++e) l.index_.emplace(l.elements_[e].members, e);
  l.principal_.resize(jposet.size());
  for (std::size_t j = 0; j < jposet.size(); ++j) l.principal_[j] = l.element_of(jposet.down(j));
  return l;
}

Lattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "chain lattice needs at least one element");
  PosetSpec s{"c(" + std::to_string(n) + ")", {}, {}};
  for (std::size_t i = 1; i < n; ++i) {
    s.elements.push_back(std::to_string(i));
    if (i > 1) s.covers.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return birkhoff(validate_poset(s));
}

Lattice product(std::span<const Lattice> factors, std::size_t cap) {
  if (factors.size() > 26) throw Error(ErrorCode::SizeLimitExceeded, "at most 26 product factors are supported");
  PosetSpec s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string prefix(1, static_cast<char>('a' + i));
    s.name += (i ? "x" : "") + factors[i].name();
    const Poset& p = factors[i].base();
    for (const auto& label : p.labels()) s.elements.push_back(prefix + label);
    for (auto [lo, hi] : p.covers()) s.covers.emplace_back(prefix + p.label(lo), prefix + p.label(hi));
  }
  return birkhoff(validate_poset(s), cap);
}

Lattice product(const Lattice& a, const Lattice& b, std::size_t cap) {
  const std::vector<Lattice> factors{a, b};
  return product(factors, cap);
}

Lattice chain_product(std::span<const std::size_t> sizes, std::size_t cap) {
  if (sizes.size() == 1) {
    if (sizes[0] > cap)
      throw Error(ErrorCode::SizeLimitExceeded, "c(" + std::to_string(sizes[0]) + ") exceeds the cap " + std::to_string(cap));
    return chain(sizes[0]);
  }
  std::vector<Lattice> factors;
  factors.reserve(sizes.size());
  for (auto n : sizes) factors.push_back(chain(n));
  return product(factors, cap);
}

namespace {

// Join/meet tables of a raw poset, or NotALattice.
struct RawTables {
  std::size_t n = 0;
  std::vector<std::uint32_t> join;
  std::vector<std::uint32_t> meet;
};

RawTables raw_tables(const Poset& p) {
  RawTables t;
  t.n = p.size();
  t.join.resize(t.n * t.n);
  t.meet.resize(t.n * t.n);
  for (std::size_t a = 0; a < t.n; ++a) {
    for (std::size_t b = a; b < t.n; ++b) {
      const Bits upper = p.up(a) & p.up(b);
      const Bits lower = p.down(a) & p.down(b);
      std::optional<std::size_t> lub;
      std::optional<std::size_t> glb;
      for (auto u = upper.find_first(); u != Bits::npos; u = upper.find_next(u))
        if (upper.is_subset_of(p.up(u))) lub = u;
      for (auto d = lower.find_first(); d != Bits::npos; d = lower.find_next(d))
        if (lower.is_subset_of(p.down(d))) glb = d;
      if (!lub)
        throw Error(ErrorCode::NotALattice, "elements '" + p.label(a) + "' and '" + p.label(b) + "' have no join");
      if (!glb)
        throw Error(ErrorCode::NotALattice, "elements '" + p.label(a) + "' and '" + p.label(b) + "' have no meet");
      t.join[a * t.n + b] = t.join[b * t.n + a] = static_cast<std::uint32_t>(*lub);
      t.meet[a * t.n + b] = t.meet[b * t.n + a] = static_cast<std::uint32_t>(*glb);
    }
  }
  return t;
}

}  // namespace

Lattice from_raw(const PosetSpec& hasse) {
  const Poset p = validate_poset(hasse);
  if (p.size() == 0) throw Error(ErrorCode::NotALattice, "empty poset '" + hasse.name + "'");
  const RawTables t = raw_tables(p);
  const std::size_t n = t.n;
  auto j = [&](std::size_t a, std::size_t b) { return t.join[a * n + b]; };
  auto m = [&](std::size_t a, std::size_t b) { return t.meet[a * n + b]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m(j(x, y), z) != j(m(x, z), m(y, z)))
          throw Error(ErrorCode::NotDistributive,
                      "(x v y) ^ z != (x ^ z) v (y ^ z) for x='" + p.label(x) + "', y='" + p.label(y) +
                          "', z='" + p.label(z) + "'");

  Bits irreducible = p.empty_set();
  for (std::size_t v = 0; v < n; ++v)
    if (p.lower_covers(v).count() == 1) irreducible.set(v);
  const Poset jprime = induced_subposet(p, irreducible, hasse.name);
  Lattice l = birkhoff(jprime);

  // x -> {j in J' : j <= x} must be an order isomorphism onto the ideals.
  std::vector<std::string> aliases(l.size());
  std::vector<bool> hit(l.size(), false);
  std::vector<ElementId> image(n);
  for (std::size_t x = 0; x < n; ++x) {
    Bits members = jprime.empty_set();
    for (std::size_t k = 0; k < jprime.size(); ++k)
      if (p.leq(p.index(jprime.label(k)), x)) members.set(k);
    auto e = l.find(members);
    if (!e || hit[*e])
      throw Error(ErrorCode::NotDistributive,
                  "element '" + p.label(x) + "' does not match a unique join-irreducible ideal");
    hit[*e] = true;
    image[x] = *e;
    aliases[*e] = p.label(x);
  }
  if (l.size() != n)
    throw Error(ErrorCode::NotDistributive, "ideal lattice of the join-irreducibles has a different size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y) != l.leq(image[x], image[y]))
        throw Error(ErrorCode::NotDistributive, "order of '" + p.label(x) + "' and '" + p.label(y) +
                                                    "' is not preserved by the Birkhoff map");
  l.set_aliases(std::move(aliases));
  return l;
}

Lattice dual(const Lattice& lattice) { return birkhoff(dualize(lattice.base()), std::max(lattice.size(), kDefaultIdealCap)); }

std::vector<ElementId> dual_element_map(const Lattice& lattice, const Lattice& dual_lattice) {
  std::vector<ElementId> out(lattice.size());
  for (ElementId e = 0; e < lattice.size(); ++e) {
    Bits complement = lattice.ideal(e).members;
    complement.flip();
    out[e] = dual_lattice.element_of(complement);
  }
  return out;
}

std::optional<Triple> find_distributivity_violation(const Lattice& l) {
  const auto n = static_cast<ElementId>(l.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const ElementId xy = l.join(x, y);
      for (ElementId z = 0; z < n; ++z)
        if (l.meet(xy, z) != l.join(l.meet(x, z), l.meet(y, z))) return Triple{x, y, z};
    }
  return std::nullopt;
}

std::optional<Triple> find_absorption_violation(const Lattice& l) {
  const auto n = static_cast<ElementId>(l.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (l.meet(x, l.join(x, y)) != x || l.join(x, l.meet(x, y)) != x) return Triple{x, y, x};
  return std::nullopt;
}

std::optional<Triple> find_bound_violation(const Lattice& l) {
  const auto n = static_cast<ElementId>(l.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x; y < n; ++y) {
      const ElementId jn = l.join(x, y);
      const ElementId mt = l.meet(x, y);
      if (!l.leq(x, jn) || !l.leq(y, jn)) return Triple{x, y, jn};
      if (!l.leq(mt, x) || !l.leq(mt, y)) return Triple{x, y, mt};
      for (ElementId z = 0; z < n; ++z) {
        if (l.leq(x, z) && l.leq(y, z) && !l.leq(jn, z)) return Triple{x, y, z};
        if (l.leq(z, x) && l.leq(z, y) && !l.leq(z, mt)) return Triple{x, y, z};
      }
    }
  return std::nullopt;
}

std::optional<Triple> find_join_prime_violation(const Lattice& l) {
  const auto n = static_cast<ElementId>(l.size());
  for (std::size_t j = 0; j < l.base().size(); ++j) {
    const ElementId beta = l.principal(j);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        if (l.leq(beta, l.join(x, y)) && !l.leq(beta, x) && !l.leq(beta, y)) return Triple{x, y, beta};
  }
  return std::nullopt;
}

ChainSurvey survey_maximal_chains(const Lattice& l, std::size_t cap) {
  ChainSurvey s;
  s.min_cardinality = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<ElementId>> up(l.size());
  for (ElementId e = 0; e < l.size(); ++e) up[e] = l.upper_covers(e);
  // Explicit stack of (element, depth) pairs.
  std::vector<std::pair<ElementId, std::size_t>> stack{{l.bottom(), 1}};
  while (!stack.empty()) {
    auto [e, depth] = stack.back();
    stack.pop_back();
    if (up[e].empty()) {
      if (++s.chains > cap)
        throw Error(ErrorCode::SizeLimitExceeded, "more than " + std::to_string(cap) + " maximal chains");
      s.min_cardinality = std::min(s.min_cardinality, depth);
      s.max_cardinality = std::max(s.max_cardinality, depth);
      continue;
    }
    for (auto next : up[e]) stack.emplace_back(next, depth + 1);
  }
  return s;
}

std::size_t incomparable_pair_count(const Lattice& l) {
  std::size_t count = 0;
  for (ElementId a = 0; a < l.size(); ++a)
    for (ElementId b = a + 1; b < l.size(); ++b)
      if (!l.comparable(a, b)) ++count;
  return count;
}

PosetSpec hasse_diagram(const Lattice& l) {
  PosetSpec s{l.name(), {}, {}};
  for (ElementId e = 0; e < l.size(); ++e) s.elements.push_back(l.name(e));
  for (ElementId e = 0; e < l.size(); ++e)
    for (auto up : l.upper_covers(e)) s.covers.emplace_back(l.name(e), l.name(up));
  return s;
}

}  // namespace latvar

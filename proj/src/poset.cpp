#include "latvar/poset.hpp"

#include "latvar/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace latvar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::RedundantCover: return "RedundantCover";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NoUniqueMinimum: return "NoUniqueMinimum";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotMaximalJoinIrreducible: return "NotMaximalJoinIrreducible";
    case ErrorCode::NoUniquePredecessor: return "NoUniquePredecessor";
    case ErrorCode::RankExceedsCodim: return "RankExceedsCodim";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::CriterionMismatch: return "CriterionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_internal_failure(ErrorCode code) {
  return code == ErrorCode::RankExceedsCodim || code == ErrorCode::RankMismatch ||
         code == ErrorCode::OracleDisagreement || code == ErrorCode::CriterionMismatch;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      std::string_view ra = a.substr(i, ei - i);
      std::string_view rb = b.substr(j, ej - j);
      ra.remove_prefix(std::min(ra.find_first_not_of('0'), ra.size()));
      rb.remove_prefix(std::min(rb.find_first_not_of('0'), rb.size()));
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

bool canonical_less(const Bits& a, const Bits& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const Bits diff = a ^ b;
  const auto first = diff.find_first();
  if (first == Bits::npos) return false;
  return a.test(first);
}

std::size_t Poset::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::UnknownElement, "no element '" + std::string(label) + "' in poset '" + name_ + "'");
}

std::optional<std::size_t> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (lower_covers_[i].none()) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (upper_covers_[i].none()) out.push_back(i);
  return out;
}

PosetSpec Poset::spec() const {
  PosetSpec s{name_, labels_, {}};
  for (auto [lo, hi] : covers_) s.covers.emplace_back(labels_[lo], labels_[hi]);
  return s;
}

Poset validate_poset(const PosetSpec& spec) {
  Poset p;
  p.name_ = spec.name;
  p.labels_ = spec.elements;
  std::sort(p.labels_.begin(), p.labels_.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  for (std::size_t i = 0; i < p.labels_.size(); ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second)
      throw Error(ErrorCode::DuplicateElement, "element '" + p.labels_[i] + "' listed twice");
  }
  const std::size_t n = p.labels_.size();

  auto pair_text = [](const std::string& lo, const std::string& hi) {
    return "(" + lo + ", " + hi + ")";
  };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [lo, hi] : spec.covers) {
    auto a = p.find(lo);
    auto b = p.find(hi);
    if (!a || !b)
      throw Error(ErrorCode::UnknownElement,
                  "cover " + pair_text(lo, hi) + " names an element not in the element list");
    if (*a == *b) throw Error(ErrorCode::CycleDetected, "cover " + pair_text(lo, hi) + " is a self-loop");
    if (!seen.emplace(*a, *b).second)
      throw Error(ErrorCode::RedundantCover, "cover " + pair_text(lo, hi) + " listed twice");
    edges.emplace_back(*a, *b);
  }

  // Kahn's algorithm; leftover vertices sit on or above a cycle.
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : edges) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> topo;
  topo.reserve(n);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    topo.push_back(v);
    for (auto w : succ[v])
      if (--indegree[w] == 0) queue.push_back(w);
  }
  if (topo.size() != n) {
    // Report the first input cover whose endpoints both lie on a cycle:
    // b reaches a through the unsorted remainder.
    std::vector<bool> sorted(n, false);
    for (auto v : topo) sorted[v] = true;
    for (const auto& [lo, hi] : spec.covers) {
      const auto a = p.index(lo);
      const auto b = p.index(hi);
      if (sorted[a] || sorted[b]) continue;
      std::vector<bool> reach(n, false);
      std::vector<std::size_t> stack{b};
      reach[b] = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : succ[v])
          if (!reach[w]) {
            reach[w] = true;
            stack.push_back(w);
          }
      }
      if (reach[a]) throw Error(ErrorCode::CycleDetected, "cover " + pair_text(lo, hi) + " lies on a cycle");
    }
    throw Error(ErrorCode::CycleDetected, "cover relation contains a cycle");
  }

  p.down_.assign(n, Bits(n));
  p.up_.assign(n, Bits(n));
  p.lower_covers_.assign(n, Bits(n));
  p.upper_covers_.assign(n, Bits(n));
  for (auto [a, b] : edges) {
    p.lower_covers_[b].set(a);
    p.upper_covers_[a].set(b);
  }
  for (auto v : topo) {
    p.down_[v].set(v);
    for (auto u = p.lower_covers_[v].find_first(); u != Bits::npos; u = p.lower_covers_[v].find_next(u))
      p.down_[v] |= p.down_[u];
  }
  for (std::size_t v = 0; v < n; ++v)
    for (auto u = p.down_[v].find_first(); u != Bits::npos; u = p.down_[v].find_next(u)) p.up_[u].set(v);

  // A cover (a, b) is redundant when another lower cover w of b lies above a.
  for (const auto& [lo, hi] : spec.covers) {
    const auto a = p.index(lo);
    const auto b = p.index(hi);
    const Bits& lower = p.lower_covers_[b];
    for (auto w = lower.find_first(); w != Bits::npos; w = lower.find_next(w)) {
      if (w != a && p.down_[w].test(a))
        throw Error(ErrorCode::RedundantCover,
                    "cover " + pair_text(lo, hi) + " is implied by " + pair_text(lo, p.labels_[w]) +
                        " and " + pair_text(p.labels_[w], hi));
    }
  }

  p.covers_ = edges;
  std::sort(p.covers_.begin(), p.covers_.end());

  p.linear_extension_.resize(n);
  std::iota(p.linear_extension_.begin(), p.linear_extension_.end(), std::size_t{0});
  std::stable_sort(p.linear_extension_.begin(), p.linear_extension_.end(),
                   [&](std::size_t a, std::size_t b) { return p.down_[a].count() < p.down_[b].count(); });
  return p;
}

namespace {

// Decides membership element by element along a linear extension. An element
// may join only when its lower covers are already in, so every leaf of the
// recursion is a distinct ideal.
class IdealWalker {
public:
  IdealWalker(const Poset& poset, std::size_t cap) : poset_(poset), cap_(cap), current_(poset.size()) {
    lower_.resize(poset.size());
    for (std::size_t v = 0; v < poset.size(); ++v) {
      const Bits& lc = poset.lower_covers(v);
      for (auto u = lc.find_first(); u != Bits::npos; u = lc.find_next(u)) lower_[v].push_back(u);
    }
  }

  template <typename Visit>
  bool run(Visit&& visit) {
    return walk(0, visit);
  }

  std::size_t visited() const { return visited_; }

private:
  template <typename Visit>
  bool walk(std::size_t pos, Visit& visit) {
    const auto& order = poset_.linear_extension();
    if (pos == order.size()) {
      if (++visited_ > cap_) return false;
      visit(current_);
      return true;
    }
    const std::size_t v = order[pos];
    if (!walk(pos + 1, visit)) return false;
    const bool allowed = std::all_of(lower_[v].begin(), lower_[v].end(),
                                     [&](std::size_t u) { return current_.test(u); });
    if (allowed) {
      current_.set(v);
      const bool ok = walk(pos + 1, visit);
      current_.reset(v);
      if (!ok) return false;
    }
    return true;
  }

  const Poset& poset_;
  std::size_t cap_;
  Bits current_;
  std::vector<std::vector<std::size_t>> lower_;
  std::size_t visited_ = 0;
};

}  // namespace

std::vector<OrderIdeal> enumerate_order_ideals(const Poset& poset, std::size_t cap) {
  std::vector<OrderIdeal> out;
  IdealWalker walker(poset, cap);
  if (!walker.run([&](const Bits& b) { out.push_back(OrderIdeal{b}); }))
    throw Error(ErrorCode::SizeLimitExceeded, "poset '" + poset.name() + "' has more than " +
                                                  std::to_string(cap) + " order ideals");
  std::sort(out.begin(), out.end(),
            [](const OrderIdeal& a, const OrderIdeal& b) { return canonical_less(a.members, b.members); });
  return out;
}

std::size_t count_order_ideals(const Poset& poset, std::size_t cap) {
  IdealWalker walker(poset, cap);
  walker.run([](const Bits&) {});
  return walker.visited();
}

bool hasse_is_tree(const Poset& poset) {
  const std::size_t n = poset.size();
  if (n == 0 || poset.covers().size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : poset.covers()) {
    const auto ra = root(a);
    const auto rb = root(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

std::size_t max_degree_except_root(const Poset& poset) {
  const auto minimal = poset.minimal_elements();
  if (minimal.size() != 1)
    throw Error(ErrorCode::NoUniqueMinimum, "poset '" + poset.name() + "' has " +
                                                std::to_string(minimal.size()) + " minimal elements");
  std::size_t best = 0;
  for (std::size_t v = 0; v < poset.size(); ++v) {
    if (v == minimal.front()) continue;
    best = std::max(best, poset.lower_covers(v).count() + poset.upper_covers(v).count());
  }
  return best;
}

Poset dualize(const Poset& poset) {
  PosetSpec s{poset.name(), poset.labels(), {}};
  for (auto [lo, hi] : poset.covers()) s.covers.emplace_back(poset.label(hi), poset.label(lo));
  return validate_poset(s);
}

Poset induced_subposet(const Poset& poset, const Bits& keep, std::string name) {
  PosetSpec s{name.empty() ? poset.name() : std::move(name), {}, {}};
  for (auto v = keep.find_first(); v != Bits::npos; v = keep.find_next(v)) {
    s.elements.push_back(poset.label(v));
    Bits below = poset.down(v) & keep;
    below.reset(v);
    // Lower covers in the induced order: maximal elements of `below`.
    for (auto u = below.find_first(); u != Bits::npos; u = below.find_next(u)) {
      Bits strictly_above_u = poset.up(u) & below;
      strictly_above_u.reset(u);
      if (strictly_above_u.none()) s.covers.emplace_back(poset.label(u), poset.label(v));
    }
  }
  return validate_poset(s);
}

PosetSpec strip_root(const PosetSpec& spec, std::string_view root) {
  const Poset p = validate_poset(spec);
  const std::size_t r = p.index(root);
  const auto minimal = p.minimal_elements();
  if (minimal.size() != 1 || minimal.front() != r)
    throw Error(ErrorCode::NoUniqueMinimum,
                "declared root '" + std::string(root) + "' is not the unique minimum of '" + spec.name + "'");
  PosetSpec out{spec.name, {}, {}};
  for (const auto& e : spec.elements)
    if (e != root) out.elements.push_back(e);
  for (const auto& c : spec.covers)
    if (c.first != root && c.second != root) out.covers.push_back(c);
  return out;
}

bool is_order_ideal(const Poset& poset, const Bits& set) {
  for (auto v = set.find_first(); v != Bits::npos; v = set.find_next(v))
    if (!poset.down(v).is_subset_of(set)) return false;
  return true;
}

}  // namespace latvar

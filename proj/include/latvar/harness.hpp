#pragma once

// Lattice families and batch verification campaigns.

#include "latvar/lattice.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace latvar {

inline constexpr std::size_t kDefaultLatticeCap = 4096;

/// LATTICE_MAX_SIZE when set to a positive integer, else 4096.
std::size_t global_size_cap();

/// Naturally labeled posets (i < j in the order implies i < j as numbers)
/// on exactly k elements, for every k in [min_elements, max_elements]. Each
/// poset appears once, identified by its cover set.
struct AllPosets {
  std::size_t min_elements = 0;
  std::size_t max_elements = 0;
};

/// chain_product(n_1, ..., n_t) for every multiset with all n_i >= 2 and
/// product <= max_size; ordered by t, then lexicographically.
struct ChainProducts {
  std::size_t max_size = 0;
};

/// Seeded rooted trees used as J: the root has up to max_branches children,
/// as does every node above depth max_depth. Trees whose lattice exceeds the
/// size cap are redrawn.
struct RandomTrees {
  std::size_t count = 0;
  std::size_t max_depth = 3;
  std::size_t max_branches = 3;
  std::uint64_t seed = 0;
};

struct FamilySpec {
  std::variant<AllPosets, ChainProducts, RandomTrees> kind;
  std::size_t max_lattice_size = kDefaultLatticeCap;

  std::string describe() const;
};

/// Calls `visit` on every member in generation order. Throws
/// SizeLimitExceeded when the limits cannot fit under the cap.
void for_each_in_family(const FamilySpec& spec, const std::function<void(const Lattice&)>& visit);
std::vector<Lattice> generate_family(const FamilySpec& spec);

/// The J' posets (cover sets) of an all-posets family.
std::vector<PosetSpec> natural_posets(std::size_t elements);
/// The factor lists of a chain-products family.
std::vector<std::vector<std::size_t>> chain_product_shapes(std::size_t max_size);

enum class Check {
  TheoremA,
  TheoremB,
  TheoremC,
  TreeHonest,
  LemmaInequality,
  LemmaGreater,
  Bijection,
  LemmaChain,
  BirkhoffRoundtrip,
  OracleAgreement,
  RankStructure,
  Structure,
  DualInvariance,
  Smoothness,
};

const char* to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
std::vector<Check> all_checks();

struct CheckTally {
  std::size_t lattices = 0;  // lattices the check ran on
  std::size_t skipped = 0;   // outside the check's hypothesis or size limit
  std::size_t items = 0;     // points, elements or pairs examined
  std::size_t violations = 0;
};

struct Violation {
  std::size_t lattice_index = 0;
  std::string lattice;
  Check check;
  std::string witness;
};

struct SingularFinding {
  std::size_t lattice_index = 0;
  std::string lattice;
  std::vector<std::string> elements;
};

struct CampaignReport {
  std::string family;
  std::vector<Check> checks;
  std::size_t lattices = 0;
  std::map<Check, CheckTally> tallies;
  std::vector<Violation> violations;
  std::vector<SingularFinding> singular;
  std::vector<std::string> observations;

  bool passed() const { return violations.empty(); }
};

/// Internal-consistency failures (RankExceedsCodim, RankMismatch,
/// OracleDisagreement, CriterionMismatch) propagate as exceptions.
CampaignReport run_campaign(const FamilySpec& spec, const std::vector<Check>& checks);
CampaignReport run_campaign(std::string family, const std::vector<Lattice>& lattices,
                            const std::vector<Check>& checks);

}  // namespace latvar

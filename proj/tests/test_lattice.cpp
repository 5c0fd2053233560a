#include "latvar/lattice.hpp"

#include "latvar/harness.hpp"
#include "support.hpp"

#include <set>

using namespace latvar;
using namespace testing_support;

namespace {

TEST(Birkhoff, SingularTenElementExample) {
  const Lattice l = singular10();
  EXPECT_EQ(l.size(), 10u);
  EXPECT_EQ(l.base().size(), 4u);
  EXPECT_EQ(l.ji_count(), 5u);
  EXPECT_EQ(l.codim(), 5u);
  EXPECT_EQ(l.join_irreducibles().size(), 5u);
  EXPECT_EQ(l.name(l.bottom()), "{}");
  EXPECT_EQ(l.ideal_text(l.resolve("4")), "{2,4}");
}

TEST(Birkhoff, RawHasseFormIsIsomorphic) {
  const Lattice ji = singular10();
  const Lattice raw = singular10_raw();
  ASSERT_EQ(raw.size(), ji.size());
  EXPECT_EQ(raw.ji_count(), 5u);
  EXPECT_TRUE(raw.has_aliases());
  // The raw nodes 2, 3, 4, 5 are the proper join-irreducibles.
  std::set<std::string> ji_names;
  for (std::size_t j = 0; j < raw.base().size(); ++j) ji_names.insert(raw.name(raw.principal(j)));
  EXPECT_EQ(ji_names, (std::set<std::string>{"2", "3", "4", "5"}));
  // Element sizes per rank agree.
  std::multiset<std::size_t> a, b;
  for (ElementId e = 0; e < ji.size(); ++e) a.insert(ji.ideal(e).size());
  for (ElementId e = 0; e < raw.size(); ++e) b.insert(raw.ideal(e).size());
  EXPECT_EQ(a, b);
  // Covers of the rebuilt lattice reproduce the input figure.
  const PosetSpec input = poset_spec_from_json(read_json_file(fixture("singular10.json")).at("hasse"));
  const PosetSpec rebuilt = hasse_diagram(raw);
  std::set<std::pair<std::string, std::string>> in(input.covers.begin(), input.covers.end());
  std::set<std::pair<std::string, std::string>> out(rebuilt.covers.begin(), rebuilt.covers.end());
  EXPECT_EQ(in.size(), 15u);
  EXPECT_EQ(in, out);
}

TEST(Birkhoff, JoinMeetCoversMatchOracle) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& s : natural_posets(n)) {
      const Lattice l = birkhoff(validate_poset(s));
      const auto m = masks(l);
      for (ElementId a = 0; a < l.size(); ++a)
        for (ElementId b = 0; b < l.size(); ++b) {
          ASSERT_EQ(m[l.join(a, b)], m[a] | m[b]);
          ASSERT_EQ(m[l.meet(a, b)], m[a] & m[b]);
          ASSERT_EQ(l.leq(a, b), oracle::subset(m[a], m[b]));
        }
      std::set<std::pair<oracle::Mask, oracle::Mask>> lib;
      for (ElementId e = 0; e < l.size(); ++e)
        for (auto up : l.upper_covers(e)) {
          lib.emplace(m[e], m[up]);
          ASSERT_TRUE(l.is_cover(e, up));
        }
      const auto expected = oracle::covers(m);
      ASSERT_EQ(lib, (std::set<std::pair<oracle::Mask, oracle::Mask>>(expected.begin(), expected.end())));
    }
}

TEST(Chains, SizesAndLabels) {
  const Lattice c = chain(4);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c.ji_count(), 4u);
  EXPECT_EQ(c.codim(), 0u);
  EXPECT_EQ(chain(1).size(), 1u);
  EXPECT_EQ(chain(1).codim(), 0u);
  EXPECT_ERROR_CODE(chain(0), ErrorCode::InvalidArgument);

  const Lattice p = chains({3, 2});
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.ji_count(), 4u);
  EXPECT_EQ(p.codim(), 2u);
  EXPECT_EQ(p.base().labels(), (std::vector<std::string>{"a1", "a2", "b1"}));
  EXPECT_EQ(chains({5}).base().labels(), (std::vector<std::string>{"1", "2", "3", "4"}));
  EXPECT_EQ(boolean(3).size(), 8u);
  EXPECT_ERROR_CODE(latvar::chain_product(std::vector<std::size_t>{64, 64, 64}, 4096), ErrorCode::SizeLimitExceeded);
}

TEST(Chains, WideBaseBeyondOneWord) {
  const Lattice c = chain(256);
  EXPECT_EQ(c.size(), 256u);
  EXPECT_EQ(c.base().size(), 255u);
  EXPECT_EQ(c.join(3, 200), 200u);
}

TEST(FromRaw, RejectsNonLattices) {
  // Two maximal elements.
  EXPECT_ERROR_CODE(from_raw({"v", {"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}}), ErrorCode::NotALattice);
  // M3 and N5.
  EXPECT_ERROR_CODE(from_raw({"m3", {"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}}),
                    ErrorCode::NotDistributive);
  try {
    from_raw({"n5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"0", "c"}, {"b", "1"}, {"c", "1"}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDistributive);
    EXPECT_NE(std::string(e.what()).find("x="), std::string::npos) << e.what();
  }
}

TEST(Dual, ComplementMapReversesOrder) {
  const Lattice l = singular10();
  const Lattice d = dual(l);
  const auto map = dual_element_map(l, d);
  ASSERT_EQ(d.size(), l.size());
  for (ElementId a = 0; a < l.size(); ++a)
    for (ElementId b = 0; b < l.size(); ++b) ASSERT_EQ(l.leq(a, b), d.leq(map[b], map[a]));
}

TEST(Identities, HoldOnEveryLatticeUpToFive) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& s : natural_posets(n)) {
      const Lattice l = birkhoff(validate_poset(s));
      ASSERT_FALSE(find_distributivity_violation(l));
      ASSERT_FALSE(find_absorption_violation(l));
      ASSERT_FALSE(find_bound_violation(l));
      ASSERT_FALSE(find_join_prime_violation(l));
      const auto chains = survey_maximal_chains(l);
      ASSERT_EQ(chains.min_cardinality, l.ji_count());
      ASSERT_EQ(chains.max_cardinality, l.ji_count());
      ASSERT_EQ(incomparable_pair_count(l), oracle::incomparable_pairs(masks(l)));
    }
}

TEST(Identities, BooleanChainCount) {
  EXPECT_EQ(survey_maximal_chains(boolean(3)).chains, 6u);
  EXPECT_EQ(survey_maximal_chains(chains({3, 3})).chains, 6u);
}

TEST(Resolve, AcceptsEveryNaming) {
  const Lattice l = singular10();
  EXPECT_EQ(l.resolve("3"), l.principal(l.base().index("3")));
  EXPECT_EQ(l.resolve("{2,3}"), l.resolve("#3"));
  EXPECT_EQ(l.resolve("{}"), l.bottom());
  EXPECT_ERROR_CODE(l.resolve("9"), ErrorCode::UnknownElement);
  EXPECT_ERROR_CODE(l.resolve("{3,4}"), ErrorCode::UnknownElement);
  const Lattice raw = singular10_raw();
  EXPECT_EQ(raw.name(raw.resolve("10")), "10");
  EXPECT_EQ(raw.resolve("10"), raw.top());
}

}  // namespace

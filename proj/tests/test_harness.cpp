#include "latvar/harness.hpp"

#include "latvar/classify.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace latvar;
using namespace testing_support;

namespace {

TEST(Families, NaturalPosetCountsMatchClosureOracle) {
  const std::size_t expected[] = {1, 1, 2, 7, 40, 357};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto posets = natural_posets(n);
    EXPECT_EQ(posets.size(), oracle::natural_poset_count(n)) << n;
    EXPECT_EQ(posets.size(), expected[n]);
    std::set<std::vector<std::vector<bool>>> closures;
    for (const auto& s : posets) closures.insert(oracle::closure(s).leq);
    EXPECT_EQ(closures.size(), posets.size()) << "duplicate poset for n=" << n;
  }
  EXPECT_EQ(natural_posets(6).size(), oracle::natural_poset_count(6));
  EXPECT_ERROR_CODE(natural_posets(8), ErrorCode::SizeLimitExceeded);
}

// Every nondecreasing factor list with product <= N, by brute force over boxes.
std::set<std::vector<std::size_t>> shape_oracle(std::size_t n) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t t = 1; (std::size_t{1} << t) <= n; ++t) {
    const std::size_t top = n >> (t - 1);  // largest factor with t - 1 factors of 2
    std::vector<std::size_t> cur(t, 2);
    while (true) {
      std::size_t prod = 1;
      for (auto f : cur) prod *= f;
      if (prod <= n && std::is_sorted(cur.begin(), cur.end())) out.insert(cur);
      std::size_t i = 0;
      while (i < t && cur[i] == top) cur[i++] = 2;
      if (i == t) break;
      ++cur[i];
    }
  }
  return out;
}

TEST(Families, ChainProductShapes) {
  const auto eight = chain_product_shapes(8);
  const std::vector<std::vector<std::size_t>> expected = {{2}, {3}, {4}, {5}, {6}, {7}, {8},
                                                          {2, 2}, {2, 3}, {2, 4}, {2, 2, 2}};
  EXPECT_EQ(eight, expected);
  for (std::size_t n : {16, 60, 128}) {
    const auto shapes = chain_product_shapes(n);
    EXPECT_EQ(std::set<std::vector<std::size_t>>(shapes.begin(), shapes.end()), shape_oracle(n));
    EXPECT_EQ(shapes.size(), shape_oracle(n).size());
  }
}

TEST(Families, RandomTreesAreDeterministicTrees) {
  const FamilySpec spec{RandomTrees{20, 3, 3, 42}, 4096};
  const auto a = generate_family(spec);
  const auto b = generate_family(spec);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name(), "tree" + std::to_string(i));
    EXPECT_EQ(to_json(a[i].base().spec()), to_json(b[i].base().spec()));
    EXPECT_TRUE(is_tree_lattice(a[i]));
    EXPECT_LE(a[i].size(), 4096u);
  }
  const auto c = generate_family({RandomTrees{20, 3, 3, 43}, 4096});
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || to_json(a[i].base().spec()) != to_json(c[i].base().spec());
  EXPECT_TRUE(differs);
  for (const auto& l : generate_family({RandomTrees{10, 4, 3, 1}, 64})) EXPECT_LE(l.size(), 64u);
}

TEST(Families, DescribeAndLimits) {
  EXPECT_EQ((FamilySpec{AllPosets{0, 5}}.describe()), "all-posets(0..5)");
  EXPECT_EQ((FamilySpec{ChainProducts{256}}.describe()), "chain-products(256)");
  EXPECT_EQ((FamilySpec{RandomTrees{100, 3, 3, 7}}.describe()), "random-trees(100,depth=3,branches=3,seed=7)");
  EXPECT_ERROR_CODE(generate_family({ChainProducts{256}, 100}), ErrorCode::SizeLimitExceeded);
  EXPECT_ERROR_CODE(generate_family({AllPosets{0, 7}, 64}), ErrorCode::SizeLimitExceeded);
}

TEST(Families, GlobalCapFromEnvironment) {
  ::unsetenv("LATTICE_MAX_SIZE");
  EXPECT_EQ(global_size_cap(), 4096u);
  ::setenv("LATTICE_MAX_SIZE", "300", 1);
  EXPECT_EQ(global_size_cap(), 300u);
  ::setenv("LATTICE_MAX_SIZE", "junk", 1);
  EXPECT_EQ(global_size_cap(), 4096u);
  ::unsetenv("LATTICE_MAX_SIZE");
}

TEST(Checks, NamesRoundTrip) {
  for (auto c : all_checks()) EXPECT_EQ(parse_check(to_string(c)), c);
  EXPECT_EQ(all_checks().size(), 14u);
  EXPECT_FALSE(parse_check("theorem-d"));
}

TEST(Campaign, SmallFamilyPasses) {
  const auto r = run_campaign({AllPosets{0, 3}}, all_checks());
  EXPECT_EQ(r.family, "all-posets(0..3)");
  EXPECT_EQ(r.lattices, 11u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.tallies.at(Check::TreeHonest).lattices, 11u);
  EXPECT_EQ(r.tallies.at(Check::TheoremB).lattices + r.tallies.at(Check::TheoremB).skipped, 11u);
  EXPECT_GT(r.tallies.at(Check::TheoremB).skipped, 0u);
}

TEST(Campaign, SingularExampleIsReportedNotFailed) {
  const auto r = run_campaign("one", {singular10()}, all_checks());
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.singular.size(), 1u);
  EXPECT_EQ(r.singular[0].elements, (std::vector<std::string>{"{}", "3"}));
  EXPECT_EQ(r.tallies.at(Check::TheoremB).skipped, 1u);
  EXPECT_EQ(r.tallies.at(Check::OracleAgreement).items, 10u);
}

TEST(Campaign, TwoFactorObservation) {
  const auto r = run_campaign({ChainProducts{12}}, {Check::LemmaGreater});
  EXPECT_TRUE(r.passed());
  ASSERT_FALSE(r.observations.empty());
  // {2,2}, {2,3}, {2,4}, {2,5}, {2,6}, {3,3}, {3,4}
  EXPECT_EQ(r.observations[0], "lemma-greater equality on 7 of 7 two-factor chain products");
}

}  // namespace

#include "latvar/poset.hpp"

#include "support.hpp"

using namespace latvar;

namespace {

PosetSpec spec(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> covers) {
  return {"t", std::move(elements), std::move(covers)};
}

TEST(NaturalLess, ComparesDigitRunsNumerically) {
  EXPECT_TRUE(natural_less("a2", "a10"));
  EXPECT_FALSE(natural_less("a10", "a2"));
  EXPECT_TRUE(natural_less("2", "10"));
  EXPECT_TRUE(natural_less("a", "b"));
  EXPECT_FALSE(natural_less("x", "x"));
}

TEST(ValidatePoset, ComputesOrder) {
  const Poset p = validate_poset(spec({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"1", "4"}}));
  EXPECT_TRUE(p.leq(p.index("1"), p.index("3")));
  EXPECT_FALSE(p.leq(p.index("4"), p.index("3")));
  EXPECT_FALSE(p.comparable(p.index("2"), p.index("4")));
  EXPECT_EQ(p.minimal_elements(), std::vector<std::size_t>{p.index("1")});
  EXPECT_EQ(p.maximal_elements().size(), 2u);
  EXPECT_EQ(p.covers().size(), 3u);
}

TEST(ValidatePoset, RejectsCycleNamingPair) {
  try {
    validate_poset(spec({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CycleDetected);
    EXPECT_NE(std::string(e.what()).find("(a, b)"), std::string::npos) << e.what();
  }
}

TEST(ValidatePoset, RejectsRedundantCoverNamingWitness) {
  try {
    validate_poset(spec({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RedundantCover);
    EXPECT_NE(std::string(e.what()).find("(a, c)"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("(b, c)"), std::string::npos) << e.what();
  }
}

TEST(ValidatePoset, RejectsBadElements) {
  EXPECT_ERROR_CODE(validate_poset(spec({"a", "a"}, {})), ErrorCode::DuplicateElement);
  EXPECT_ERROR_CODE(validate_poset(spec({"a"}, {{"a", "z"}})), ErrorCode::UnknownElement);
  EXPECT_ERROR_CODE(validate_poset(spec({"a"}, {{"a", "a"}})), ErrorCode::CycleDetected);
}

TEST(OrderIdeals, MatchSubsetFilterOnEveryNaturalPosetUpToFive) {
  // Exhaustive labeled covers on 1..5 that happen to be irredundant.
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(std::to_string(i), std::to_string(j));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
      PosetSpec s{"p", {}, {}};
      for (std::size_t i = 1; i <= n; ++i) s.elements.push_back(std::to_string(i));
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (m >> k & 1) s.covers.push_back(pairs[k]);
      Poset p;
      try {
        p = validate_poset(s);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::RedundantCover);
        continue;
      }
      const auto expected = oracle::ideals(oracle::closure(s));
      const auto got = enumerate_order_ideals(p);
      ASSERT_EQ(got.size(), expected.size());
      ASSERT_EQ(count_order_ideals(p), expected.size());
      for (const auto& ideal : got) ASSERT_TRUE(is_order_ideal(p, ideal.members));
      for (std::size_t i = 1; i < got.size(); ++i) ASSERT_TRUE(canonical_less(got[i - 1].members, got[i].members));
    }
  }
}

TEST(OrderIdeals, CapStopsEnumeration) {
  PosetSpec s{"anti", {}, {}};
  for (int i = 0; i < 12; ++i) s.elements.push_back("e" + std::to_string(i));
  const Poset p = validate_poset(s);
  EXPECT_ERROR_CODE(enumerate_order_ideals(p, 100), ErrorCode::SizeLimitExceeded);
  EXPECT_EQ(count_order_ideals(p, 1u << 12), 4096u);
}

TEST(HasseTree, Predicates) {
  EXPECT_TRUE(hasse_is_tree(validate_poset(spec({"r", "a", "b"}, {{"r", "a"}, {"r", "b"}}))));
  EXPECT_FALSE(hasse_is_tree(validate_poset(spec({"a", "b"}, {}))));
  EXPECT_FALSE(hasse_is_tree(validate_poset(spec({}, {}))));
  EXPECT_FALSE(hasse_is_tree(
      validate_poset(spec({"r", "a", "b", "t"}, {{"r", "a"}, {"r", "b"}, {"a", "t"}, {"b", "t"}}))));
  EXPECT_TRUE(hasse_is_tree(validate_poset(spec({"x"}, {}))));
}

TEST(HasseTree, DegreeExceptRoot) {
  const Poset fork = validate_poset(spec({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"2", "5"}}));
  EXPECT_EQ(max_degree_except_root(fork), 3u);
  EXPECT_ERROR_CODE(max_degree_except_root(validate_poset(spec({"a", "b"}, {}))), ErrorCode::NoUniqueMinimum);
}

TEST(PosetTransforms, DualInducedStrip) {
  const Poset p = validate_poset(spec({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}}));
  const Poset d = dualize(p);
  EXPECT_TRUE(d.leq(d.index("2"), d.index("1")));
  EXPECT_EQ(d.maximal_elements(), std::vector<std::size_t>{d.index("1")});

  // Removing the middle of a chain leaves a cover between the ends.
  const Poset c = validate_poset(spec({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  Bits keep = c.full_set();
  keep.reset(c.index("b"));
  const Poset sub = induced_subposet(c, keep);
  ASSERT_EQ(sub.covers().size(), 1u);
  EXPECT_TRUE(sub.less(sub.index("a"), sub.index("c")));

  const PosetSpec stripped = strip_root(spec({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}}), "1");
  EXPECT_EQ(stripped.elements, (std::vector<std::string>{"2", "3"}));
  EXPECT_TRUE(stripped.covers.empty());
  EXPECT_ERROR_CODE(strip_root(spec({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}}), "2"), ErrorCode::NoUniqueMinimum);
}

}  // namespace

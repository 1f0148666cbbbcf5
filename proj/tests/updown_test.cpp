#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "viennot/oracle.hpp"
#include "viennot/updown.hpp"

namespace viennot {
namespace {

MatchingWord signed_word(std::vector<int> v) { return MatchingWord::from_signed(v); }

TEST(SundaramStanley, BigMovie) {
  const auto ud = sundaram_stanley(fixtures::big_word());
  EXPECT_EQ(ud.shapes(), fixtures::big_movie());
  EXPECT_EQ(sundaram_stanley_frames(fixtures::big_word()), fixtures::big_movie_frames());
  EXPECT_EQ(ud.max_rows(), 4);
}

TEST(SundaramStanley, SingleStrand) {
  const auto ud = sundaram_stanley(signed_word({1, -1}));
  EXPECT_EQ(ud.shapes(), (std::vector<Partition>{Partition{}, Partition({1}), Partition{}}));
}

TEST(SundaramStanley, EmptyWord) { EXPECT_EQ(sundaram_stanley(MatchingWord{}), UpDownTableau{}); }

TEST(SundaramStanley, PermutationWordsGrowThenShrink) {
  const Permutation w({2, 4, 3, 1});
  const auto ud = sundaram_stanley(permutation_to_matching_word(w));
  EXPECT_EQ(ud[4], rs(w).shape);
}

TEST(SsInverse, BigMovie) {
  EXPECT_EQ(ss_inverse(UpDownTableau(fixtures::big_movie())), fixtures::big_word());
}

TEST(SsInverse, RejectsBadSteps) {
  // A two-box jump cannot be built through the validated constructor, so the
  // error path is the constructor's.
  EXPECT_THROW(UpDownTableau({Partition{}, Partition({1, 1}), Partition{}}), Error);
}

TEST(SsInverse, MutuallyInverseOnTenPoints) {
  std::set<std::vector<int>> words;
  oracle::MatchingStream ms(5);
  while (auto m = ms.next()) {
    const auto w = matching_to_word(*m);
    ASSERT_EQ(ss_inverse(sundaram_stanley(w)), w);
    words.insert(w.to_signed());
  }
  EXPECT_EQ(words.size(), 945u);
  std::size_t movies = 0;
  oracle::UpDownStream us(5);
  while (auto ud = us.next()) {
    ASSERT_EQ(sundaram_stanley(ss_inverse(*ud)), *ud);
    ++movies;
  }
  EXPECT_EQ(movies, 945u);
}

TEST(BuildUpdown, SmallWordSlices) {
  const auto d = build_updown(fixtures::small_word());
  using P = Partition;
  EXPECT_EQ(ud_from_slices(d).shapes(),
            (std::vector<P>{P{}, P({1}), P({1, 1}), P({2, 1}), P({2}), P({1}), P({1, 1}), P({1}), P{}}));
  EXPECT_EQ(diagram_to_word(d), fixtures::small_word());
  EXPECT_EQ(d.dots().size(), 4u);
  EXPECT_EQ(d.crosses().size(), 4u);
}

TEST(BuildUpdown, SlicesEqualBijectionExhaustively) {
  for (int k = 0; k <= 5; ++k) {
    oracle::MatchingStream ms(k);
    while (auto m = ms.next()) {
      const auto d = build_updown(matching_to_word(*m));
      ASSERT_EQ(ud_from_slices(d), sundaram_stanley(diagram_to_word(d)));
      std::vector<Point> ends = d.crosses();
      const auto defect = find_coloring_defect(d.grid(), ends);
      ASSERT_FALSE(defect) << *defect;
    }
  }
}

TEST(BuildUpdown, BigWordSlices) {
  const auto d = build_updown(fixtures::big_word());
  EXPECT_EQ(ud_from_slices(d).shapes(), fixtures::big_movie());
  EXPECT_EQ(d.max_color(), 4);
}

TEST(IsCoexistent, Examples) {
  const auto w = fixtures::big_word();
  // 7 8 6 5 8̄ ...: 7,6,5 at times 1,3,4 end before 7̄ at time 7.
  EXPECT_TRUE(is_coexistent(w, {1, 3, 4}));
  EXPECT_TRUE(is_coexistent(w, {1, 3, 4, 6}));
  EXPECT_FALSE(is_coexistent(w, {2, 3, 4, 6}));
  EXPECT_FALSE(is_coexistent(w, {1, 3, 4, 9}));
  EXPECT_TRUE(is_coexistent(w, {}));
  EXPECT_THROW(is_coexistent(w, {1, 2}), Error);
  EXPECT_THROW(is_coexistent(w, {5}), Error);
}

TEST(LongestPattern, BigMatching) {
  const auto w = fixtures::big_word();
  const auto pw = longest_pattern(w);
  EXPECT_EQ(pw.length(), 4);
  EXPECT_EQ(pw.strands, (std::vector<int>{7, 6, 5, 3}));
  EXPECT_EQ(pw.times, (std::vector<int>{1, 3, 4, 6}));
  EXPECT_TRUE(is_coexistent(w, pw.times));
  const auto m = fixtures::big_matching();
  for (std::size_t i = 0; i < pw.strands.size(); ++i)
    for (std::size_t j = i + 1; j < pw.strands.size(); ++j) EXPECT_TRUE(strands_cross(m, pw.strands[i], pw.strands[j]));
  EXPECT_EQ(longest_pattern(m), pw);
}

TEST(LongestPattern, TrivialCases) {
  EXPECT_EQ(longest_pattern(signed_word({1, -1})).length(), 1);
  EXPECT_EQ(longest_pattern(signed_word({2, 1, -2, -1})).length(), 2);
  EXPECT_EQ(longest_pattern(Matching({{1, 2}, {3, 4}})).length(), 1);
  try {
    longest_pattern(MatchingWord{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyMatching);
  }
}

TEST(LongestPattern, EqualsMaxRowsAndBruteForce) {
  for (int k = 1; k <= 5; ++k) {
    oracle::MatchingStream ms(k);
    while (auto m = ms.next()) {
      const auto w = matching_to_word(*m);
      const auto pw = longest_pattern(w);
      ASSERT_EQ(pw.length(), sundaram_stanley(w).max_rows());
      ASSERT_EQ(pw.length(), oracle::longest_pattern_brute(*m));
      ASSERT_TRUE(is_coexistent(w, pw.times));
      for (std::size_t i = 0; i < pw.strands.size(); ++i)
        for (std::size_t j = i + 1; j < pw.strands.size(); ++j)
          ASSERT_TRUE(strands_cross(*m, pw.strands[i], pw.strands[j]));
    }
  }
}

}  // namespace
}  // namespace viennot

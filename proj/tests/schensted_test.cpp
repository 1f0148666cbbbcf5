#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "viennot/oracle.hpp"
#include "viennot/schensted.hpp"

namespace viennot {
namespace {

TEST(RowInsert, BumpsDownTheFirstColumn) {
  const auto r = row_insert(Tableau({{3, 4}, {5}}), 1);
  EXPECT_EQ(r.tableau, Tableau({{1, 4}, {3}, {5}}));
  EXPECT_EQ(r.added_box, (Cell{3, 1}));
}

TEST(RowInsert, AppendsWithoutBumping) {
  const auto r = row_insert(Tableau({{1, 3}}), 5);
  EXPECT_EQ(r.tableau, Tableau({{1, 3, 5}}));
  EXPECT_EQ(r.added_box, (Cell{1, 3}));
  EXPECT_EQ(row_insert(Tableau{}, 4).tableau, Tableau({{4}}));
}

TEST(RowInsert, RejectsDuplicates) {
  try {
    row_insert(Tableau({{2}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateEntry);
  }
}

TEST(ReverseInsert, UndoesRowInsert) {
  const auto [t, v] = reverse_insert(Tableau({{1, 4}, {3}, {5}}), {3, 1});
  EXPECT_EQ(t, Tableau({{3, 4}, {5}}));
  EXPECT_EQ(v, 1);
  try {
    reverse_insert(Tableau({{1, 4}, {3}}), {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACorner);
  }
}

TEST(ReverseInsert, InvertsEveryInsertionOnSmallTableaux) {
  for (int k = 0; k <= 6; ++k) {
    oracle::PermutationStream s(k);
    while (auto w = s.next()) {
      Tableau t = rs(*w).P;
      for (int v = 1; v <= k + 1; ++v) {
        if (t.find(v)) continue;
        const auto ins = row_insert(t, v);
        const auto [back, out] = reverse_insert(ins.tableau, ins.added_box);
        ASSERT_EQ(back, t);
        ASSERT_EQ(out, v);
      }
    }
  }
}

TEST(Rs, SmallExample) {
  const auto r = rs(Permutation({2, 4, 3, 1}));
  EXPECT_EQ(r.P, Tableau({{1, 3}, {2}, {4}}));
  EXPECT_EQ(r.Q, Tableau({{1, 2}, {3}, {4}}));
  EXPECT_EQ(r.shape, Partition({2, 1, 1}));
}

TEST(Rs, TrivialCases) {
  EXPECT_EQ(rs(Permutation({1})).P, Tableau({{1}}));
  EXPECT_EQ(rs(Permutation({1, 2, 3})).shape, Partition({3}));
  EXPECT_EQ(rs(Permutation({3, 2, 1})).shape, Partition({1, 1, 1}));
  EXPECT_TRUE(rs(Permutation{}).P.empty());
}

TEST(Rs, FirstWorkedExample) {
  const auto r = rs(fixtures::example_one());
  EXPECT_EQ(r.P, fixtures::example_one_P());
  EXPECT_EQ(r.Q, fixtures::example_one_Q());
  EXPECT_EQ(r.shape, Partition({6, 5, 4, 3, 1}));
}

TEST(Rs, SecondWorkedExample) {
  const auto r = rs(fixtures::example_two());
  EXPECT_EQ(r.P, fixtures::example_two_P());
  EXPECT_EQ(r.Q, fixtures::example_two_Q());
}

TEST(Rs, ShapeMatchesLongestSubsequences) {
  for (int k = 0; k <= 7; ++k) {
    oracle::PermutationStream s(k);
    while (auto w = s.next()) {
      const auto r = rs(*w);
      ASSERT_EQ(r.shape.rows(), lds_length_brute(*w));
      ASSERT_EQ(r.shape.columns(), lis_length_brute(*w));
    }
  }
}

TEST(Rs, InverseSwapsTableaux) {
  for (int k = 0; k <= 6; ++k) {
    oracle::PermutationStream s(k);
    while (auto w = s.next()) {
      const auto r = rs(*w);
      const auto ri = rs(w->inverse());
      ASSERT_EQ(ri.P, r.Q);
      ASSERT_EQ(ri.Q, r.P);
    }
  }
}

TEST(RsInverse, RoundTrips) {
  for (int k = 0; k <= 6; ++k) {
    oracle::PermutationStream s(k);
    while (auto w = s.next()) {
      const auto r = rs(*w);
      ASSERT_EQ(rs_inverse(r.P, r.Q), *w);
    }
  }
  EXPECT_EQ(rs_inverse(fixtures::example_one_P(), fixtures::example_one_Q()), fixtures::example_one());
}

TEST(RsInverse, RoundTripsRandomLargerWords) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> v(20);
    for (int j = 0; j < 20; ++j) v[j] = j + 1;
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation w(v);
    const auto r = rs(w);
    ASSERT_EQ(rs_inverse(r.P, r.Q), w);
  }
}

TEST(RsInverse, Errors) {
  try {
    rs_inverse(Tableau({{1, 2}}), Tableau({{1}, {2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
  try {
    rs_inverse(Tableau({{1, 3}}), Tableau({{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStandard);
  }
}

TEST(InsertionHistory, StepsAreSingleInsertions) {
  const auto h = insertion_history(Permutation({2, 4, 3, 1}));
  ASSERT_EQ(h.size(), 5u);
  EXPECT_EQ(h[3], Tableau({{2, 3}, {4}}));
  EXPECT_EQ(h[4], Tableau({{1, 3}, {2}, {4}}));
}

TEST(RecordingMovie, AddsOneBoxPerStep) {
  const auto movie = recording_movie(rs(fixtures::example_one()).Q);
  ASSERT_EQ(movie.size(), 20u);
  for (std::size_t t = 1; t < movie.size(); ++t) {
    ASSERT_TRUE(added_cell(movie[t - 1], movie[t]).has_value());
    ASSERT_EQ(movie[t], insertion_history(fixtures::example_one())[t].shape());
  }
}

TEST(BruteLengths, Examples) {
  EXPECT_EQ(lds_length_brute(fixtures::example_one()), 5);
  EXPECT_EQ(lis_length_brute(fixtures::example_one()), 6);
  EXPECT_EQ(lds_length_brute(fixtures::example_two()), 8);
  EXPECT_EQ(lis_length_brute(fixtures::example_two()), 7);
}

}  // namespace
}  // namespace viennot

#pragma once

// Worked examples with their known tableaux, movies and witnesses.

#include <vector>

#include "viennot/core.hpp"

namespace viennot::fixtures {

inline Permutation example_one() {
  return Permutation({2, 9, 1, 15, 4, 7, 13, 18, 11, 19, 5, 14, 3, 10, 6, 17, 8, 16, 12});
}
inline Tableau example_one_P() {
  return Tableau({{1, 3, 5, 6, 8, 12}, {2, 4, 10, 14, 16}, {7, 11, 17, 19}, {9, 13, 18}, {15}});
}
inline Tableau example_one_Q() {
  return Tableau({{1, 2, 4, 7, 8, 10}, {3, 5, 6, 12, 16}, {9, 14, 17, 18}, {11, 15, 19}, {13}});
}

inline Permutation example_two() {
  return Permutation({19, 10, 1, 8, 18, 12, 13, 11, 16, 14, 3, 9, 7, 4, 6, 2, 15, 17, 5});
}
inline Tableau example_two_P() {
  return Tableau({{1, 2, 4, 5, 14, 15, 17}, {3, 6, 13}, {7, 9, 16}, {8, 11}, {10}, {12}, {18}, {19}});
}
inline Tableau example_two_Q() {
  return Tableau({{1, 4, 5, 7, 9, 17, 18}, {2, 6, 10}, {3, 12, 15}, {8, 19}, {11}, {13}, {14}, {16}});
}

/// The 8-strand matching and its word.
inline Matching big_matching() {
  return Matching({{1, 7}, {2, 5}, {3, 10}, {4, 12}, {6, 14}, {8, 13}, {9, 16}, {11, 15}});
}
inline std::vector<int> big_word_signed() { return {7, 8, 6, 5, -8, 3, -7, 4, 1, -6, 2, -5, -4, -3, -2, -1}; }
inline MatchingWord big_word() { return MatchingWord::from_signed(big_word_signed()); }

inline std::vector<Partition> big_movie() {
  using P = Partition;
  return {P{},          P({1}),       P({2}),    P({2, 1}),    P({2, 1, 1}), P({1, 1, 1}),
          P({1, 1, 1, 1}), P({1, 1, 1}), P({2, 1, 1}), P({2, 1, 1, 1}), P({2, 1, 1}), P({2, 2, 1}),
          P({2, 2}),    P({2, 1}),    P({2}),    P({1}),       P{}};
}

/// Numbered tableaux behind that movie.
inline std::vector<Tableau> big_movie_frames() {
  using T = Tableau;
  return {T{},
          T({{7}}),
          T({{7, 8}}),
          T({{6, 8}, {7}}),
          T({{5, 8}, {6}, {7}}),
          T({{5}, {6}, {7}}),
          T({{3}, {5}, {6}, {7}}),
          T({{3}, {5}, {6}}),
          T({{3, 4}, {5}, {6}}),
          T({{1, 4}, {3}, {5}, {6}}),
          T({{1, 4}, {3}, {5}}),
          T({{1, 2}, {3, 4}, {5}}),
          T({{1, 2}, {3, 4}}),
          T({{1, 2}, {3}}),
          T({{1, 2}}),
          T({{1}}),
          T{}};
}

inline MatchingWord small_word() { return MatchingWord::from_signed(std::vector<int>{4, 2, 3, -4, -3, 1, -2, -1}); }

}  // namespace viennot::fixtures

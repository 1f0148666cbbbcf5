#pragma once

// Value types shared by every module: partitions, tableaux, permutations,
// matchings and matching words, up-down tableaux. All positions and values
// are 1-indexed; 0 means "none".

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "viennot/error.hpp"

namespace viennot {

/// A box of a Young diagram, 1-indexed (row 1 is the top row).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// ---------------------------------------------------------------------------
// Partition

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw Error(ErrorKind::MalformedValue,
                    "partition part " + std::to_string(i + 1) + " is not positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw Error(ErrorKind::MalformedValue,
                    "partition parts increase at row " + std::to_string(i + 1));
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int columns() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const noexcept { return parts_.empty(); }

  int size() const noexcept {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  /// Length of row `row` (1-indexed); 0 beyond the last row.
  int row_length(int row) const noexcept {
    return row >= 1 && row <= rows() ? parts_[row - 1] : 0;
  }

  bool is_addable(Cell c) const noexcept {
    if (c.row < 1 || c.row > rows() + 1) return false;
    if (c.col != row_length(c.row) + 1) return false;
    return c.row == 1 || row_length(c.row - 1) >= c.col;
  }

  bool is_removable(Cell c) const noexcept {
    if (c.row < 1 || c.row > rows()) return false;
    return c.col == row_length(c.row) && row_length(c.row + 1) < c.col;
  }

  std::vector<Cell> addable_cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows() + 1; ++r) {
      Cell c{r, row_length(r) + 1};
      if (is_addable(c)) out.push_back(c);
    }
    return out;
  }

  std::vector<Cell> removable_cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r) {
      Cell c{r, row_length(r)};
      if (is_removable(c)) out.push_back(c);
    }
    return out;
  }

  Partition with_added(Cell c) const {
    if (!is_addable(c))
      throw Error(ErrorKind::NotACorner, "cell is not addable to the partition");
    auto parts = parts_;
    if (c.row > rows()) parts.push_back(1);
    else ++parts[c.row - 1];
    return Partition(std::move(parts));
  }

  Partition with_removed(Cell c) const {
    if (!is_removable(c))
      throw Error(ErrorKind::NotACorner, "cell is not a removable corner of the partition");
    auto parts = parts_;
    if (--parts[c.row - 1] == 0) parts.pop_back();
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// If `larger` is `smaller` plus one box, that box.
inline std::optional<Cell> added_cell(const Partition& smaller, const Partition& larger) {
  if (larger.size() != smaller.size() + 1) return std::nullopt;
  for (const Cell c : smaller.addable_cells())
    if (smaller.with_added(c) == larger) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tableau

/// A filling of a Young diagram by distinct positive integers whose rows and
/// columns strictly increase. Insertion tableaux of partial words carry
/// arbitrary distinct entries; `is_standard()` checks for content {1..n}.
class Tableau {
 public:
  Tableau() = default;

  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) { validate(); }
  Tableau(std::initializer_list<std::vector<int>> rows) : Tableau(std::vector<std::vector<int>>(rows)) {}

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  int size() const noexcept {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
  }

  Partition shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
  }

  /// Entry at a 1-indexed cell; 0 when the cell is outside the shape.
  int at(Cell c) const noexcept {
    if (c.row < 1 || c.row > static_cast<int>(rows_.size())) return 0;
    const auto& r = rows_[c.row - 1];
    if (c.col < 1 || c.col > static_cast<int>(r.size())) return 0;
    return r[c.col - 1];
  }

  std::optional<Cell> find(int value) const noexcept {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      auto it = std::lower_bound(r.begin(), r.end(), value);
      if (it != r.end() && *it == value)
        return Cell{static_cast<int>(i) + 1, static_cast<int>(it - r.begin()) + 1};
    }
    return std::nullopt;
  }

  bool is_standard() const {
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  friend struct TableauAccess;

  void validate() const {
    std::vector<int> all;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& r = rows_[i];
      const std::string where = "row " + std::to_string(i + 1);
      if (r.empty()) throw Error(ErrorKind::MalformedValue, where + " is empty");
      if (i > 0 && r.size() > rows_[i - 1].size())
        throw Error(ErrorKind::MalformedValue, where + " is longer than the row above");
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] <= 0) throw Error(ErrorKind::MalformedValue, where + " has a non-positive entry");
        if (j > 0 && r[j] <= r[j - 1])
          throw Error(ErrorKind::MalformedValue, where + " is not strictly increasing");
        if (i > 0 && r[j] <= rows_[i - 1][j])
          throw Error(ErrorKind::MalformedValue,
                      "column " + std::to_string(j + 1) + " is not strictly increasing at " + where);
        all.push_back(r[j]);
      }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw Error(ErrorKind::DuplicateEntry, "tableau entries are not distinct");
  }

  std::vector<std::vector<int>> rows_;
};

/// Unchecked mutation for the bumping algorithms, which preserve the
/// tableau invariants themselves.
struct TableauAccess {
  static std::vector<std::vector<int>>& rows(Tableau& t) noexcept { return t.rows_; }
};

// ---------------------------------------------------------------------------
// Permutation

class Permutation {
 public:
  Permutation() = default;

  /// One-line notation a_1 ... a_k; must be a bijection of {1..k}.
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int k = size();
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int t = 1; t <= k; ++t) {
      const int a = word_[t - 1];
      if (a < 1 || a > k)
        throw Error(ErrorKind::MalformedValue,
                    "value " + std::to_string(a) + " at position " + std::to_string(t) +
                        " is outside 1.." + std::to_string(k));
      if (seen[a])
        throw Error(ErrorKind::DuplicateEntry,
                    "value " + std::to_string(a) + " repeats at position " + std::to_string(t));
      seen[a] = true;
    }
  }

  static Permutation identity(int k) {
    std::vector<int> w(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const noexcept { return word_; }
  /// Value at 1-indexed time t.
  int operator()(int t) const noexcept { return word_[t - 1]; }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (int t = 1; t <= size(); ++t) inv[word_[t - 1] - 1] = t;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// ---------------------------------------------------------------------------
// Matching

/// A perfect matching of {1..2k}. Pairs are normalized to (smaller, larger)
/// and sorted by their smaller element.
class Matching {
 public:
  using Pair = std::pair<int, int>;

  Matching() = default;

  explicit Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (auto& p : pairs_)
      if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(pairs_.begin(), pairs_.end());
    const int n = 2 * k();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& [a, b] : pairs_) {
      for (int x : {a, b}) {
        if (x < 1 || x > n)
          throw Error(ErrorKind::MalformedValue,
                      "point " + std::to_string(x) + " is outside 1.." + std::to_string(n));
        if (seen[x])
          throw Error(ErrorKind::DuplicateEntry, "point " + std::to_string(x) + " is matched twice");
        seen[x] = true;
      }
    }
  }

  int k() const noexcept { return static_cast<int>(pairs_.size()); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  /// Partner of each point, indexed 1..2k.
  std::vector<int> partners() const {
    std::vector<int> out(static_cast<std::size_t>(2 * k()) + 1, 0);
    for (const auto& [a, b] : pairs_) {
      out[a] = b;
      out[b] = a;
    }
    return out;
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Pair> pairs_;
};

// ---------------------------------------------------------------------------
// MatchingWord

struct Token {
  int value = 0;
  bool barred = false;

  /// External encoding: -i for the barred symbol.
  int signed_value() const noexcept { return barred ? -value : value; }
  static Token from_signed(int v) noexcept { return v < 0 ? Token{-v, true} : Token{v, false}; }

  friend auto operator<=>(const Token&, const Token&) = default;
};

class MatchingWord {
 public:
  MatchingWord() = default;

  explicit MatchingWord(std::vector<Token> symbols) : symbols_(std::move(symbols)) { validate(); }

  static MatchingWord from_signed(std::span<const int> values) {
    std::vector<Token> tokens;
    tokens.reserve(values.size());
    for (int v : values) tokens.push_back(Token::from_signed(v));
    return MatchingWord(std::move(tokens));
  }

  int k() const noexcept { return static_cast<int>(symbols_.size()) / 2; }
  int length() const noexcept { return static_cast<int>(symbols_.size()); }
  const std::vector<Token>& symbols() const noexcept { return symbols_; }
  /// Token at 1-indexed time t.
  const Token& operator()(int t) const noexcept { return symbols_[t - 1]; }

  std::vector<int> to_signed() const {
    std::vector<int> out;
    out.reserve(symbols_.size());
    for (const auto& s : symbols_) out.push_back(s.signed_value());
    return out;
  }

  /// Position of the unbarred (first) and barred (second) token of each value, indexed 1..k.
  std::vector<std::pair<int, int>> positions() const {
    std::vector<std::pair<int, int>> out(static_cast<std::size_t>(k()) + 1, {0, 0});
    for (int t = 1; t <= length(); ++t) {
      const auto& s = symbols_[t - 1];
      (s.barred ? out[s.value].second : out[s.value].first) = t;
    }
    return out;
  }

  friend bool operator==(const MatchingWord&, const MatchingWord&) = default;

 private:
  void validate() const {
    auto fail = [](int t, const std::string& what) {
      throw Error(ErrorKind::MalformedWord, what + " at position " + std::to_string(t));
    };
    if (symbols_.size() % 2 != 0)
      throw Error(ErrorKind::MalformedWord, "odd length " + std::to_string(symbols_.size()));
    const int k = this->k();
    std::vector<bool> seen_up(static_cast<std::size_t>(k) + 1, false);
    std::vector<bool> seen_bar(static_cast<std::size_t>(k) + 1, false);
    int last_bar = k + 1;
    for (int t = 1; t <= length(); ++t) {
      const auto& s = symbols_[t - 1];
      if (s.value < 1 || s.value > k)
        fail(t, "value " + std::to_string(s.value) + " outside 1.." + std::to_string(k));
      if (!s.barred) {
        if (seen_up[s.value]) fail(t, "repeated symbol " + std::to_string(s.value));
        seen_up[s.value] = true;
      } else {
        if (seen_bar[s.value]) fail(t, "repeated barred symbol " + std::to_string(s.value));
        if (!seen_up[s.value])
          fail(t, "barred symbol " + std::to_string(s.value) + " precedes its unbarred partner");
        if (s.value >= last_bar)
          fail(t, "barred symbols are not decreasing (" + std::to_string(s.value) + ")");
        seen_bar[s.value] = true;
        last_bar = s.value;
      }
    }
  }

  std::vector<Token> symbols_;
};

// ---------------------------------------------------------------------------
// UpDownTableau

class UpDownTableau {
 public:
  UpDownTableau() : shapes_{Partition{}} {}

  /// 2k+1 shapes from empty to empty, each one box away from the previous.
  explicit UpDownTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
    if (shapes_.empty() || shapes_.size() % 2 == 0)
      throw Error(ErrorKind::MalformedMovie,
                  "a movie needs an odd number of shapes, got " + std::to_string(shapes_.size()));
    if (!shapes_.front().empty() || !shapes_.back().empty())
      throw Error(ErrorKind::MalformedMovie, "movie must start and end with the empty shape");
    for (std::size_t t = 1; t < shapes_.size(); ++t) {
      const auto& a = shapes_[t - 1];
      const auto& b = shapes_[t];
      if (!added_cell(a, b) && !added_cell(b, a))
        throw Error(ErrorKind::MalformedMovie,
                    "shapes at steps " + std::to_string(t - 1) + " and " + std::to_string(t) +
                        " are not one box apart");
    }
  }

  int k() const noexcept { return static_cast<int>(shapes_.size()) / 2; }
  const std::vector<Partition>& shapes() const noexcept { return shapes_; }
  const Partition& operator[](int t) const noexcept { return shapes_[t]; }

  int max_rows() const noexcept {
    int m = 0;
    for (const auto& p : shapes_) m = std::max(m, p.rows());
    return m;
  }

  friend bool operator==(const UpDownTableau&, const UpDownTableau&) = default;

 private:
  std::vector<Partition> shapes_;
};

// ---------------------------------------------------------------------------
// Conversions

/// Bends a permutation into a matching word: a_1 ... a_k followed by the
/// barred symbols k, k-1, ..., 1.
inline MatchingWord permutation_to_matching_word(const Permutation& w) {
  std::vector<Token> tokens;
  tokens.reserve(2 * static_cast<std::size_t>(w.size()));
  for (int a : w.word()) tokens.push_back({a, false});
  for (int v = w.size(); v >= 1; --v) tokens.push_back({v, true});
  return MatchingWord(std::move(tokens));
}

/// Right endpoints, read left to right, are labelled k̄ down to 1̄; each left
/// endpoint takes the unbarred label of its partner.
inline MatchingWord matching_to_word(const Matching& m) {
  const int n = 2 * m.k();
  const auto partner = m.partners();
  std::vector<Token> tokens(static_cast<std::size_t>(n));
  int label = m.k();
  for (int p = 1; p <= n; ++p) {
    if (partner[p] < p) {
      tokens[p - 1] = {label, true};
      tokens[partner[p] - 1] = {label, false};
      --label;
    }
  }
  return MatchingWord(std::move(tokens));
}

inline Matching word_to_matching(const MatchingWord& w) {
  const auto pos = w.positions();
  std::vector<Matching::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(w.k()));
  for (int v = 1; v <= w.k(); ++v) pairs.emplace_back(pos[v].first, pos[v].second);
  return Matching(std::move(pairs));
}

/// Strands are named by their unbarred label in w(m). Two strands cross when
/// their endpoints interleave: a_i < a_j < b_i < b_j.
inline bool strands_cross(const Matching& m, int i, int j) {
  const int k = m.k();
  for (int s : {i, j})
    if (s < 1 || s > k)
      throw Error(ErrorKind::UnknownStrand, "strand " + std::to_string(s) + " not in 1.." + std::to_string(k));
  if (i == j) throw Error(ErrorKind::UnknownStrand, "a strand cannot be compared with itself");
  const auto pos = matching_to_word(m).positions();
  auto [ai, bi] = pos[i];
  auto [aj, bj] = pos[j];
  if (ai > aj) {
    std::swap(ai, aj);
    std::swap(bi, bj);
  }
  return aj < bi && bi < bj;
}

}  // namespace viennot

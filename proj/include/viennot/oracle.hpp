#pragma once

// Brute-force references and exhaustive enumerators. Nothing here calls the
// bumping, diagram, or bijection code: every count and maximum is obtained by
// direct search so that it can serve as an independent check.

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "viennot/core.hpp"

namespace viennot::oracle {

/// Enumeration bounds. Defaults: k <= 9 for permutations, 2k <= 14 for
/// matchings and up-down tableaux.
struct Limits {
  int max_permutation_k = 9;
  int max_matching_points = 14;
};

inline void check_limit(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::SizeLimit, what);
}

/// All permutations of {1..k} in lexicographic order.
class PermutationStream {
 public:
  explicit PermutationStream(int k, const Limits& limits = {}) : current_(static_cast<std::size_t>(std::max(k, 0))) {
    check_limit(k >= 0 && k <= limits.max_permutation_k,
                "permutations of " + std::to_string(k) + " exceed the limit " +
                    std::to_string(limits.max_permutation_k));
    for (int i = 0; i < k; ++i) current_[i] = i + 1;
  }

  std::optional<Permutation> next() {
    if (done_) return std::nullopt;
    Permutation out(current_);
    done_ = !std::next_permutation(current_.begin(), current_.end());
    return out;
  }

 private:
  std::vector<int> current_;
  bool done_ = false;
};

/// All perfect matchings of {1..2k}: the smallest free point is paired with
/// each larger free point in turn, recursively. The state is a mixed-radix
/// counter of those choices.
class MatchingStream {
 public:
  explicit MatchingStream(int k, const Limits& limits = {}) : k_(k), choice_(static_cast<std::size_t>(std::max(k, 0)), 0) {
    check_limit(k >= 0 && 2 * k <= limits.max_matching_points,
                "matchings of " + std::to_string(2 * k) + " points exceed the limit " +
                    std::to_string(limits.max_matching_points));
  }

  std::optional<Matching> next() {
    if (done_) return std::nullopt;
    Matching out = decode();
    int i = k_ - 1;
    for (; i >= 0; --i) {
      const int radix = 2 * (k_ - i) - 1;
      if (++choice_[i] < radix) break;
      choice_[i] = 0;
    }
    done_ = i < 0;
    return out;
  }

 private:
  Matching decode() const {
    std::vector<int> free;
    for (int p = 1; p <= 2 * k_; ++p) free.push_back(p);
    std::vector<Matching::Pair> pairs;
    for (int i = 0; i < k_; ++i) {
      const int a = free.front();
      const int b = free[1 + choice_[i]];
      pairs.emplace_back(a, b);
      free.erase(free.begin() + 1 + choice_[i]);
      free.erase(free.begin());
    }
    return Matching(std::move(pairs));
  }

  int k_;
  std::vector<int> choice_;
  bool done_ = false;
};

/// All movies of 2k steps from empty to empty, optionally keeping every shape
/// within `max_rows` rows. Depth-first; at each step additions (by row) come
/// before removals (by row). A shape is only entered if it can still shrink
/// back to empty in the remaining steps.
class UpDownStream {
 public:
  UpDownStream(int k, std::optional<int> max_rows = std::nullopt, const Limits& limits = {})
      : steps_(2 * k), max_rows_(max_rows) {
    check_limit(k >= 0 && 2 * k <= limits.max_matching_points,
                "up-down tableaux of " + std::to_string(2 * k) + " steps exceed the limit " +
                    std::to_string(limits.max_matching_points));
    path_.push_back({});
    if (steps_ > 0) {
      stack_.push_back(successors(path_.back(), 0));
      advance();
    }
  }

  std::optional<UpDownTableau> next() {
    if (done_) return std::nullopt;
    std::vector<Partition> shapes;
    for (const auto& parts : path_) shapes.emplace_back(parts);
    if (steps_ == 0) {
      done_ = true;
    } else {
      advance();
    }
    return UpDownTableau(std::move(shapes));
  }

 private:
  using Shape = std::vector<int>;
  struct Frame {
    std::vector<Shape> options;
    std::size_t next = 0;
  };

  Frame successors(const Shape& s, int step) const {
    const int remaining = steps_ - step - 1;
    int size = 0;
    for (int p : s) size += p;
    Frame f;
    const int rows = static_cast<int>(s.size());
    if (size + 1 <= remaining) {
      for (int r = 0; r <= rows; ++r) {
        const int len = r < rows ? s[r] : 0;
        if (r > 0 && s[r - 1] <= len) continue;
        if (r == rows && max_rows_ && rows + 1 > *max_rows_) continue;
        Shape n = s;
        if (r == rows) n.push_back(1);
        else ++n[r];
        f.options.push_back(std::move(n));
      }
    }
    if (size >= 1 && size - 1 <= remaining) {
      for (int r = 0; r < rows; ++r) {
        if (r + 1 < rows && s[r + 1] == s[r]) continue;
        Shape n = s;
        if (--n[r] == 0) n.pop_back();
        f.options.push_back(std::move(n));
      }
    }
    return f;
  }

  // Moves to the next complete path, or sets done_.
  void advance() {
    // path_ holds the previously emitted complete path (or just the root).
    if (static_cast<int>(path_.size()) == steps_ + 1) path_.pop_back();
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.next == top.options.size()) {
        stack_.pop_back();
        if (!stack_.empty()) path_.pop_back();
        continue;
      }
      path_.push_back(top.options[top.next++]);
      const int step = static_cast<int>(path_.size()) - 1;
      if (step == steps_) return;
      stack_.push_back(successors(path_.back(), step));
    }
    done_ = true;
  }

  int steps_;
  std::optional<int> max_rows_;
  std::vector<Shape> path_;
  std::vector<Frame> stack_;
  bool done_ = false;
};

template <class Stream>
std::uint64_t count(Stream stream) {
  std::uint64_t n = 0;
  while (stream.next()) ++n;
  return n;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::SizeLimit, "count overflow");
  return out;
}

// ---------------------------------------------------------------------------
// Longest pattern, two ways

/// Largest family of pairwise crossing strands, by subset search over arcs
/// (a,b), (c,d) with a < c < b < d.
inline int max_crossing_family(const Matching& m) {
  const int k = m.k();
  const auto& arcs = m.pairs();
  std::vector<std::uint32_t> crosses(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      auto [a, b] = arcs[i];
      auto [c, d] = arcs[j];
      if (a > c) {
        std::swap(a, c);
        std::swap(b, d);
      }
      if (a < c && c < b && b < d) crosses[i] |= 1u << j;
    }
  int best = 0;
  for (std::uint32_t subset = 1; subset < (1u << k); ++subset) {
    const int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      if ((subset >> i) & 1u) ok = (crosses[i] | (1u << i) | ~subset) == ~0u;
    if (ok) best = size;
  }
  return best;
}

/// Longest decreasing run of unbarred symbols that finishes before the bar of
/// any selected value, by subset search over the unbarred positions.
inline int max_coexistent_decreasing(const MatchingWord& w) {
  std::vector<int> up_times;
  for (int t = 1; t <= w.length(); ++t)
    if (!w(t).barred) up_times.push_back(t);
  std::vector<int> bar_time(static_cast<std::size_t>(w.k()) + 1, 0);
  for (int t = 1; t <= w.length(); ++t)
    if (w(t).barred) bar_time[w(t).value] = t;
  const int k = static_cast<int>(up_times.size());
  int best = 0;
  for (std::uint32_t subset = 1; subset < (1u << k); ++subset) {
    const int size = __builtin_popcount(subset);
    if (size <= best) continue;
    int prev = 0, last_time = 0;
    bool ok = true;
    std::vector<int> chosen;
    for (int i = 0; i < k && ok; ++i) {
      if (!((subset >> i) & 1u)) continue;
      const int v = w(up_times[i]).value;
      if (prev != 0 && v >= prev) ok = false;
      prev = v;
      last_time = up_times[i];
      chosen.push_back(v);
    }
    for (int v : chosen)
      if (bar_time[v] < last_time) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Both definitions of the longest pattern; they must agree.
inline int longest_pattern_brute(const Matching& m, const Limits& limits = {}) {
  check_limit(2 * m.k() <= limits.max_matching_points, "matching too large for brute-force search");
  const int by_crossing = max_crossing_family(m);
  const int by_word = max_coexistent_decreasing(matching_to_word(m));
  if (by_crossing != by_word)
    throw Error(ErrorKind::InternalInvariantViolation, "crossing family and coexistent subsequence disagree");
  return by_crossing;
}

// ---------------------------------------------------------------------------
// Census

struct CensusRow {
  int k = 0;
  int n = 0;
  std::uint64_t count_avoiding = 0;
  std::uint64_t count_ud_bounded = 0;
  bool agree() const noexcept { return count_avoiding == count_ud_bounded; }
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Counts matchings of 2k points without an (n+1)-pattern and movies of 2k
/// steps whose shapes all have at most n rows. The matching count is sharded
/// over `jobs` workers by stream index; shards are summed.
inline CensusRow census(int k, int n, int jobs = 1, const Limits& limits = {}) {
  if (n < 0) throw Error(ErrorKind::MalformedValue, "row bound must be non-negative");
  jobs = std::max(jobs, 1);
  CensusRow row{k, n, 0, 0};
  auto shard = [k, n, jobs, &limits](int id) {
    MatchingStream stream(k, limits);
    std::uint64_t hits = 0;
    std::uint64_t index = 0;
    while (auto m = stream.next()) {
      if (static_cast<int>(index++ % static_cast<std::uint64_t>(jobs)) != id) continue;
      if (longest_pattern_brute(*m, limits) <= n) hits = checked_add(hits, 1);
    }
    return hits;
  };
  if (jobs == 1) {
    row.count_avoiding = shard(0);
  } else {
    std::vector<std::future<std::uint64_t>> parts;
    for (int id = 0; id < jobs; ++id) parts.push_back(std::async(std::launch::async, shard, id));
    for (auto& p : parts) row.count_avoiding = checked_add(row.count_avoiding, p.get());
  }
  UpDownStream movies(k, n, limits);
  while (movies.next()) row.count_ud_bounded = checked_add(row.count_ud_bounded, 1);
  return row;
}

}  // namespace viennot::oracle

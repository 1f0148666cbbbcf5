#pragma once

// Matchings as up-down tableaux: the Sundaram–Stanley bijection (bumping on
// unbarred symbols, corner deletion on barred ones), its inverse, and the
// up-down Viennot diagram, whose time slices are that same movie and whose
// largest color is the length of the longest pattern.

#include <algorithm>
#include <vector>

#include "viennot/diagram.hpp"
#include "viennot/schensted.hpp"

namespace viennot {

enum class MarkKind { Dot, Cross };

struct Mark {
  MarkKind kind;
  int height;
  friend bool operator==(const Mark&, const Mark&) = default;
};

/// Diagram over [1,2k] x [1,k]. Column t carries a dot (value enters) or a
/// cross (value departs); a cross column draws no vertical ray and ends the
/// horizontal ray at its height.
class UpDownViennotDiagram {
 public:
  UpDownViennotDiagram() = default;

  int k() const noexcept { return static_cast<int>(marks_.size()) / 2; }
  int width() const noexcept { return static_cast<int>(marks_.size()); }
  const SegmentGrid& grid() const noexcept { return grid_; }
  const std::vector<Mark>& marks() const noexcept { return marks_; }

  std::vector<Point> dots() const { return points(MarkKind::Dot); }
  std::vector<Point> crosses() const { return points(MarkKind::Cross); }

  Color top_exit(int t) const noexcept { return grid_.vertical(t, k()); }
  Color max_color() const noexcept { return grid_.max_color(); }

  friend bool operator==(const UpDownViennotDiagram&, const UpDownViennotDiagram&) = default;

 private:
  UpDownViennotDiagram(std::vector<Mark> marks, SegmentGrid g) : marks_(std::move(marks)), grid_(std::move(g)) {}
  friend UpDownViennotDiagram build_updown(const MatchingWord& w);

  std::vector<Point> points(MarkKind kind) const {
    std::vector<Point> out;
    for (int t = 1; t <= width(); ++t)
      if (marks_[t - 1].kind == kind) out.push_back({t, marks_[t - 1].height});
    return out;
  }

  std::vector<Mark> marks_;
  SegmentGrid grid_;
};

inline UpDownViennotDiagram build_updown(const MatchingWord& w) {
  SegmentGrid g(w.length(), w.k());
  std::vector<Mark> marks;
  marks.reserve(static_cast<std::size_t>(w.length()));
  for (int t = 1; t <= w.length(); ++t) {
    const Token& a = w(t);
    if (a.barred) {
      detail::place_cross(g, t, a.value);
      marks.push_back({MarkKind::Cross, a.value});
    } else {
      detail::place_dot(g, t, a.value);
      marks.push_back({MarkKind::Dot, a.value});
    }
  }
  return UpDownViennotDiagram(std::move(marks), std::move(g));
}

/// Reads the word back from the markings alone.
inline MatchingWord diagram_to_word(const UpDownViennotDiagram& d) {
  std::vector<Token> tokens;
  tokens.reserve(d.marks().size());
  for (const Mark& m : d.marks()) tokens.push_back({m.height, m.kind == MarkKind::Cross});
  return MatchingWord(std::move(tokens));
}

/// Shape at step s: row j has as many boxes as there are c_j horizontal
/// segments crossing t = s + 1/2.
inline UpDownTableau ud_from_slices(const UpDownViennotDiagram& d) {
  std::vector<Partition> shapes;
  shapes.reserve(static_cast<std::size_t>(d.width()) + 1);
  for (int s = 0; s <= d.width(); ++s) shapes.push_back(detail::slice_shape(d.grid(), s));
  return UpDownTableau(std::move(shapes));
}

/// Numbered tableau after each step; entries are scratch data, not part of
/// the up-down tableau itself.
inline std::vector<Tableau> sundaram_stanley_frames(const MatchingWord& w) {
  std::vector<Tableau> frames{Tableau{}};
  frames.reserve(static_cast<std::size_t>(w.length()) + 1);
  for (int t = 1; t <= w.length(); ++t) {
    const Token& a = w(t);
    Tableau cur = frames.back();
    if (!a.barred) {
      cur = row_insert(std::move(cur), a.value).tableau;
    } else {
      const auto cell = cur.find(a.value);
      if (!cell || !cur.shape().is_removable(*cell))
        throw Error(ErrorKind::InternalInvariantViolation,
                    "box " + std::to_string(a.value) + " is not a removable corner at step " + std::to_string(t));
      auto& rows = TableauAccess::rows(cur);
      rows[cell->row - 1].pop_back();
      if (rows[cell->row - 1].empty()) rows.pop_back();
    }
    frames.push_back(std::move(cur));
  }
  return frames;
}

inline UpDownTableau sundaram_stanley(const MatchingWord& w) {
  std::vector<Partition> shapes;
  for (const Tableau& f : sundaram_stanley_frames(w)) shapes.push_back(f.shape());
  return UpDownTableau(std::move(shapes));
}

/// Runs the movie backwards from the empty final shape. Going back across a
/// removal re-adds the box holding the next value of a counter that starts
/// at 1 (removals happen to k, k-1, ..., 1 in forward time) and emits that
/// value barred. Going back across an addition reverse-bumps from the added
/// box and emits the ejected value unbarred.
inline MatchingWord ss_inverse(const UpDownTableau& ud) {
  const int n = 2 * ud.k();
  std::vector<Token> tokens(static_cast<std::size_t>(n));
  Tableau cur;
  int counter = 1;
  for (int t = n; t >= 1; --t) {
    const Partition& before = ud[t - 1];
    const Partition& after = ud[t];
    if (const auto removed = added_cell(after, before)) {
      auto& rows = TableauAccess::rows(cur);
      if (removed->row > static_cast<int>(rows.size())) rows.emplace_back();
      rows[removed->row - 1].push_back(counter);
      tokens[t - 1] = {counter, true};
      ++counter;
    } else if (const auto added = added_cell(before, after)) {
      auto [next, value] = reverse_insert(std::move(cur), *added);
      cur = std::move(next);
      tokens[t - 1] = {value, false};
    } else {
      throw Error(ErrorKind::MalformedMovie, "steps " + std::to_string(t - 1) + " and " + std::to_string(t) +
                                                 " are not one box apart");
    }
  }
  return MatchingWord(std::move(tokens));
}

// ---------------------------------------------------------------------------
// Patterns

/// An l-pattern: l pairwise crossing strands, named by their unbarred labels
/// (strictly decreasing) and the times t_1 < ... < t_l of those labels.
struct PatternWitness {
  std::vector<int> strands;
  std::vector<int> times;
  int length() const noexcept { return static_cast<int>(strands.size()); }
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// A decreasing run of unbarred symbols is coexistent when it ends before any
/// of the corresponding barred symbols; since bars descend, it is enough that
/// the bar of the largest selected value comes after the last selected time.
inline bool is_coexistent(const MatchingWord& w, const std::vector<int>& times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    const int t = times[i];
    if (t < 1 || t > w.length() || w(t).barred)
      throw Error(ErrorKind::NotDecreasing, "position " + std::to_string(t) + " is not an unbarred symbol");
    if (i > 0 && (t <= times[i - 1] || w(t).value >= w(times[i - 1]).value))
      throw Error(ErrorKind::NotDecreasing, "selection is not a decreasing subsequence at position " +
                                                std::to_string(t));
  }
  if (times.empty()) return true;
  const int largest = w(times.front()).value;
  return w.positions()[largest].second > times.back();
}

/// Longest pattern of the matching. The largest color l of the up-down diagram
/// is the pattern length; from the first outer corner (t,b) of that color the
/// cascade stays inside [1,t] x [1,b], which holds no crosses, so the marked
/// points it reaches form a coexistent decreasing subsequence.
inline PatternWitness longest_pattern(const MatchingWord& w) {
  if (w.k() == 0) throw Error(ErrorKind::EmptyMatching, "matching has no strands");
  const auto d = build_updown(w);
  const Color top = d.max_color();
  const auto start = first_outer_corner(d.grid(), top);
  if (!start) detail::broken("largest color has no outer corner");
  PatternWitness out;
  for (const Point p : corner_cascade(d.grid(), *start, top)) {
    if (p.t > start->t || p.b > start->b) detail::broken("cascade left its rectangle");
    const Token& a = w(p.t);
    if (a.barred || a.value != p.b) detail::broken("c_1 outer corner is not a marked point");
    out.strands.push_back(a.value);
    out.times.push_back(p.t);
  }
  return out;
}

inline PatternWitness longest_pattern(const Matching& m) { return longest_pattern(matching_to_word(m)); }

}  // namespace viennot

#pragma once

// Viennot's geometric construction, built column by column as a timeline of
// the bumping algorithm, and the algorithms that read tableaux and longest
// monotone subsequences off the finished diagram.
//
// Coordinates: t is time (horizontal), b is bumping height (vertical). The
// horizontal segment (t,b)->(t+1,b) is `horizontal(t, b)`; the vertical
// segment (t,b)->(t,b+1) is `vertical(t, b)`. Rays are stored up to the
// boundary lines t = width+1 and b = height+1, so `horizontal(width, b)` is
// the right exit at height b and `vertical(t, height)` the top exit at t.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "viennot/core.hpp"

namespace viennot {

/// Colors c_1 < c_2 < ... are the integers 1, 2, ...; 0 marks "no segment".
using Color = int;
inline constexpr Color kNoColor = 0;

struct Point {
  int t = 0;
  int b = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class SegmentGrid {
 public:
  SegmentGrid() = default;
  SegmentGrid(int width, int height)
      : width_(width),
        height_(height),
        h_(static_cast<std::size_t>(width) * height, kNoColor),
        v_(static_cast<std::size_t>(width) * height, kNoColor) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  Color horizontal(int t, int b) const noexcept { return inside(t, b) ? h_[index(t, b)] : kNoColor; }
  Color vertical(int t, int b) const noexcept { return inside(t, b) ? v_[index(t, b)] : kNoColor; }
  void set_horizontal(int t, int b, Color c) { h_[index(t, b)] = c; }
  void set_vertical(int t, int b, Color c) { v_[index(t, b)] = c; }

  Color max_color() const noexcept {
    Color m = kNoColor;
    for (Color c : h_) m = std::max(m, c);
    for (Color c : v_) m = std::max(m, c);
    return m;
  }

  /// Reflection across the diagonal: t and b swap, so do the segment kinds.
  SegmentGrid transposed() const {
    SegmentGrid out(height_, width_);
    for (int t = 1; t <= width_; ++t)
      for (int b = 1; b <= height_; ++b) {
        out.set_horizontal(b, t, vertical(t, b));
        out.set_vertical(b, t, horizontal(t, b));
      }
    return out;
  }

  /// True if any segment of color c touches the lattice point (t,b).
  bool touches(int t, int b, Color c) const noexcept {
    return horizontal(t - 1, b) == c || horizontal(t, b) == c || vertical(t, b - 1) == c ||
           vertical(t, b) == c;
  }

  friend bool operator==(const SegmentGrid&, const SegmentGrid&) = default;

 private:
  bool inside(int t, int b) const noexcept { return t >= 1 && t <= width_ && b >= 1 && b <= height_; }
  std::size_t index(int t, int b) const noexcept {
    return static_cast<std::size_t>(t - 1) * height_ + static_cast<std::size_t>(b - 1);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Color> h_;
  std::vector<Color> v_;
};

namespace detail {

/// Column step for an entering value v at time t. The new vertical ray starts
/// at c_1 and steps up one color each time it passes a horizontal ray of its
/// current color; that horizontal ray steps up one color as well.
inline void place_dot(SegmentGrid& g, int t, int v) {
  for (int b = 1; b < v; ++b) g.set_horizontal(t, b, g.horizontal(t - 1, b));
  g.set_horizontal(t, v, 1);
  Color cur = 1;
  g.set_vertical(t, v, cur);
  for (int b = v + 1; b <= g.height(); ++b) {
    const Color incoming = g.horizontal(t - 1, b);
    if (incoming != kNoColor && incoming == cur) {
      ++cur;
      g.set_horizontal(t, b, cur);
    } else {
      g.set_horizontal(t, b, incoming);
    }
    g.set_vertical(t, b, cur);
  }
}

/// Column step for a departing value v: every horizontal ray carries on
/// unchanged except the one at height v, which ends here.
inline void place_cross(SegmentGrid& g, int t, int v) {
  for (int b = 1; b <= g.height(); ++b)
    g.set_horizontal(t, b, b == v ? kNoColor : g.horizontal(t - 1, b));
}

/// Tableau whose row j holds the heights of c_j horizontal segments crossing
/// the line t = s + 1/2.
inline Tableau slice_tableau(const SegmentGrid& g, int s) {
  std::vector<std::vector<int>> rows;
  for (int b = 1; b <= g.height(); ++b) {
    const Color c = g.horizontal(s, b);
    if (c == kNoColor) continue;
    if (static_cast<int>(rows.size()) < c) rows.resize(static_cast<std::size_t>(c));
    rows[c - 1].push_back(b);
  }
  return Tableau(std::move(rows));
}

inline Partition slice_shape(const SegmentGrid& g, int s) {
  std::vector<int> parts;
  for (int b = 1; b <= g.height(); ++b) {
    const Color c = g.horizontal(s, b);
    if (c == kNoColor) continue;
    if (static_cast<int>(parts.size()) < c) parts.resize(static_cast<std::size_t>(c), 0);
    ++parts[c - 1];
  }
  return Partition(std::move(parts));
}

[[noreturn]] inline void broken(const std::string& what) {
  throw Error(ErrorKind::InternalInvariantViolation, what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Corners

enum class CornerKind { Outer, Inner };

/// Outer corner: the path arrives from above and leaves rightward.
/// Inner corner: the path arrives from the left and leaves downward.
struct Corner {
  CornerKind kind;
  Point at;
  Color color;
  friend bool operator==(const Corner&, const Corner&) = default;
};

inline bool is_outer_corner(const SegmentGrid& g, Point p, Color c) {
  return g.vertical(p.t, p.b) == c && g.horizontal(p.t, p.b) == c;
}

inline bool is_inner_corner(const SegmentGrid& g, Point p, Color c) {
  return g.horizontal(p.t - 1, p.b) == c && g.vertical(p.t, p.b - 1) == c;
}

/// All corners of the c-colored paths, ordered by (t, b).
inline std::vector<Corner> corners(const SegmentGrid& g, Color c) {
  std::vector<Corner> out;
  for (int t = 1; t <= g.width(); ++t)
    for (int b = 1; b <= g.height(); ++b) {
      if (is_outer_corner(g, {t, b}, c)) out.push_back({CornerKind::Outer, {t, b}, c});
      if (is_inner_corner(g, {t, b}, c)) out.push_back({CornerKind::Inner, {t, b}, c});
    }
  return out;
}

/// The outer corner reached by following the path of an inner corner leftward.
inline Point walk_left(const SegmentGrid& g, Point ic, Color c) {
  for (int t = ic.t - 1;; --t) {
    if (g.horizontal(t, ic.b) != c) detail::broken("leftward walk left its path");
    if (g.vertical(t, ic.b) == c) return {t, ic.b};
  }
}

/// The outer corner reached by following the path of an inner corner downward.
inline Point walk_down(const SegmentGrid& g, Point ic, Color c) {
  for (int b = ic.b - 1;; --b) {
    if (g.vertical(ic.t, b) != c) detail::broken("downward walk left its path");
    if (g.horizontal(ic.t, b) == c) return {ic.t, b};
  }
}

/// Turns a decreasing sequence of c-colored inner corners into a decreasing
/// sequence, one longer, of c-colored outer corners: one outer corner in each
/// gap box between consecutive inner corners plus one past either end. In a
/// gap box, the corner below the earlier inner corner is preferred over the
/// one left of the later inner corner; when the two walks collide they reach
/// the same outer corner.
inline std::vector<Point> expand_inner_to_outer(const SegmentGrid& g, const std::vector<Point>& inner,
                                                Color c) {
  std::vector<Point> outer;
  outer.reserve(inner.size() + 1);
  outer.push_back(walk_left(g, inner.front(), c));
  for (std::size_t j = 1; j < inner.size(); ++j) {
    const Point upper = inner[j - 1];
    const Point lower = inner[j];
    const auto in_box = [&](Point p) {
      return p.t >= upper.t && p.t < lower.t && p.b >= lower.b && p.b < upper.b;
    };
    const Point down = walk_down(g, upper, c);
    if (in_box(down)) {
      outer.push_back(down);
      continue;
    }
    const Point left = walk_left(g, lower, c);
    if (!in_box(left)) detail::broken("no outer corner in a gap box; same-colored paths crossed");
    outer.push_back(left);
  }
  outer.push_back(walk_down(g, inner.back(), c));
  return outer;
}

/// Descends from one outer corner of color `top` to a decreasing sequence of
/// `top` c_1 outer corners, i.e. marked points.
inline std::vector<Point> corner_cascade(const SegmentGrid& g, Point start, Color top) {
  if (!is_outer_corner(g, start, top)) detail::broken("cascade must start at an outer corner");
  std::vector<Point> seq{start};
  for (Color c = top; c > 1; --c) {
    seq = expand_inner_to_outer(g, seq, c - 1);
    for (const Point p : seq)
      if (!is_outer_corner(g, p, c - 1)) detail::broken("cascade produced a non-corner");
  }
  return seq;
}

/// Smallest t, then smallest b, among the outer corners of color c.
inline std::optional<Point> first_outer_corner(const SegmentGrid& g, Color c) {
  for (int t = 1; t <= g.width(); ++t)
    for (int b = 1; b <= g.height(); ++b)
      if (is_outer_corner(g, {t, b}, c)) return Point{t, b};
  return std::nullopt;
}

/// The c-colored lattice paths, each as its sequence of unit-step lattice
/// points from the top boundary (b = height+1) until it exits right
/// (t = width+1) or ends at a departure mark.
inline std::vector<std::vector<Point>> lattice_paths(const SegmentGrid& g, Color c) {
  std::vector<std::vector<Point>> paths;
  for (int t0 = 1; t0 <= g.width(); ++t0) {
    if (g.vertical(t0, g.height()) != c) continue;
    std::vector<Point> path{{t0, g.height() + 1}, {t0, g.height()}};
    Point p{t0, g.height()};
    while (true) {
      if (p.b > 1 && g.vertical(p.t, p.b - 1) == c) {
        --p.b;
      } else if (g.horizontal(p.t, p.b) == c) {
        ++p.t;
      } else {
        break;
      }
      path.push_back(p);
      if (p.t > g.width()) break;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

/// Describes the first violation of the local coloring rules, if any: at
/// every lattice point, each color present enters once (from above or the
/// left) and leaves once (downward or rightward), except at departure marks
/// where a single horizontal ray ends; colors never decrease along a ray.
inline std::optional<std::string> find_coloring_defect(const SegmentGrid& g,
                                                       const std::vector<Point>& ends = {}) {
  auto where = [](int t, int b) { return " at (" + std::to_string(t) + "," + std::to_string(b) + ")"; };
  for (int t = 1; t <= g.width(); ++t)
    for (int b = 1; b <= g.height(); ++b) {
      const Color left = g.horizontal(t - 1, b), right = g.horizontal(t, b);
      const Color below = g.vertical(t, b - 1), above = g.vertical(t, b);
      if (left && right && right < left) return "horizontal ray decreases" + where(t, b);
      if (below && above && above < below) return "vertical ray decreases" + where(t, b);
      const bool is_end = std::find(ends.begin(), ends.end(), Point{t, b}) != ends.end();
      for (Color c : {left, right, below, above}) {
        if (c == kNoColor) continue;
        const int in = (left == c) + (above == c);
        const int out = (right == c) + (below == c);
        if (is_end) {
          if (!(in == 1 && out == 0 && left == c)) return "path does not end cleanly" + where(t, b);
        } else if (in != 1 || out != 1) {
          return "color " + std::to_string(c) + " paths meet or branch" + where(t, b);
        }
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ordinary Viennot diagram

class ViennotDiagram {
 public:
  ViennotDiagram() = default;

  int k() const noexcept { return word_.size(); }
  const SegmentGrid& grid() const noexcept { return grid_; }
  /// The permutation whose points (t, a_t) are marked.
  const Permutation& marked_word() const noexcept { return word_; }

  std::vector<Point> dots() const {
    std::vector<Point> out;
    for (int t = 1; t <= k(); ++t) out.push_back({t, word_(t)});
    return out;
  }

  Color top_exit(int t) const noexcept { return grid_.vertical(t, k()); }
  Color right_exit(int b) const noexcept { return grid_.horizontal(k(), b); }
  Color max_color() const noexcept { return grid_.max_color(); }

  ViennotDiagram transposed() const { return ViennotDiagram(word_.inverse(), grid_.transposed()); }

  friend bool operator==(const ViennotDiagram&, const ViennotDiagram&) = default;

 private:
  ViennotDiagram(Permutation w, SegmentGrid g) : word_(std::move(w)), grid_(std::move(g)) {}
  friend ViennotDiagram build_viennot(const Permutation& w);

  Permutation word_;
  SegmentGrid grid_;
};

inline ViennotDiagram build_viennot(const Permutation& w) {
  const int k = w.size();
  SegmentGrid g(k, k);
  for (int t = 1; t <= k; ++t) detail::place_dot(g, t, w(t));
  return ViennotDiagram(w, std::move(g));
}

/// Row j: heights of the c_j rays leaving through the right wall.
inline Tableau read_P(const ViennotDiagram& d) { return detail::slice_tableau(d.grid(), d.k()); }

/// Row j: times of the c_j rays leaving through the top wall.
inline Tableau read_Q(const ViennotDiagram& d) {
  std::vector<std::vector<int>> rows;
  for (int t = 1; t <= d.k(); ++t) {
    const Color c = d.top_exit(t);
    if (static_cast<int>(rows.size()) < c) rows.resize(static_cast<std::size_t>(c));
    rows[c - 1].push_back(t);
  }
  return Tableau(std::move(rows));
}

struct TimeSlice {
  Tableau P;
  Partition shape;
};

/// The insertion tableau after s steps, read from the line t = s + 1/2.
inline TimeSlice time_slice(const ViennotDiagram& d, int s) {
  if (s < 0 || s > d.k())
    throw Error(ErrorKind::StepOutOfRange,
                "step " + std::to_string(s) + " outside 0.." + std::to_string(d.k()));
  Tableau P = detail::slice_tableau(d.grid(), s);
  Partition shape = P.shape();
  return {std::move(P), std::move(shape)};
}

inline std::vector<Corner> corners(const ViennotDiagram& d, Color c) { return corners(d.grid(), c); }

/// Times t_1 < ... < t_l of a longest decreasing subsequence, l being the
/// largest color present. Starts from the first outer corner of that color
/// and cascades down to c_1, whose outer corners are the marked points.
inline std::vector<int> lds_extract(const ViennotDiagram& d) {
  if (d.k() == 0) throw Error(ErrorKind::EmptyDiagram, "diagram has no points");
  const Color top = d.max_color();
  const auto start = first_outer_corner(d.grid(), top);
  if (!start) detail::broken("largest color has no outer corner");
  std::vector<int> times;
  for (const Point p : corner_cascade(d.grid(), *start, top)) {
    if (d.marked_word()(p.t) != p.b) detail::broken("c_1 outer corner is not a marked point");
    times.push_back(p.t);
  }
  return times;
}

/// Times of a longest increasing subsequence: one marked point on each c_1
/// path. Begins at the marked point of the innermost c_1 path (the one whose
/// top exit has the largest t), drops straight down to the next c_1 path,
/// and follows it leftward to its outer corner; repeats until no c_1 path
/// remains below.
inline std::vector<int> lis_extract(const ViennotDiagram& d) {
  if (d.k() == 0) throw Error(ErrorKind::EmptyDiagram, "diagram has no points");
  const SegmentGrid& g = d.grid();
  int t = 0;
  for (int x = 1; x <= d.k(); ++x)
    if (d.top_exit(x) == 1) t = x;
  Point p{t, d.marked_word()(t)};
  std::vector<int> times{p.t};
  while (true) {
    int hit = 0;
    for (int b = p.b - 1; b >= 1 && hit == 0; --b)
      if (g.touches(p.t, b, 1)) hit = b;
    if (hit == 0) break;
    Point q{p.t, hit};
    if (g.horizontal(q.t - 1, q.b) != 1) detail::broken("next c_1 path not entered from the left");
    q = walk_left(g, q, 1);
    if (d.marked_word()(q.t) != q.b) detail::broken("c_1 outer corner is not a marked point");
    times.push_back(q.t);
    p = q;
  }
  std::reverse(times.begin(), times.end());
  return times;
}

}  // namespace viennot

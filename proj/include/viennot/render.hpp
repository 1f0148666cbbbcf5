#pragma once

// ASCII, SVG and JSON renderings of (up-down) Viennot diagrams. Output is a
// pure function of the diagram, so identical inputs give identical bytes.
//
// ASCII glyphs, one 4-character block per time column, top row first:
//   •      marked point (value enters)
//   x      cross (value departs)
//   +      lattice point touched by both a horizontal and a vertical segment
//   |  -   lattice point touched by vertical / horizontal segments only
//   .      empty lattice point
//   -c-    horizontal segment of color c to the next column
//   c      (between point rows) vertical segment of color c
// Colors print as 1-9 then a-z; '#' beyond 35. The first line is a format
// header, the second the top exits, the last the time axis.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "viennot/diagram.hpp"
#include "viennot/io.hpp"
#include "viennot/updown.hpp"

namespace viennot::render {

enum class Format { Ascii, Svg, Json };

inline Format parse_format(std::string_view name) {
  if (name == "ascii") return Format::Ascii;
  if (name == "svg") return Format::Svg;
  if (name == "json") return Format::Json;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(name) + "' (ascii, svg, json)");
}

inline constexpr int kFormatVersion = 1;

/// Stroke color for c_1, c_2, ...: red, orange, green, blue, black, then
/// hues rotating in steps of 47 degrees.
inline std::string stroke_color(Color c) {
  static const char* const base[] = {"red", "orange", "green", "blue", "black"};
  if (c >= 1 && c <= 5) return base[c - 1];
  return "hsl(" + std::to_string(((c - 6) * 47) % 360) + ",65%,40%)";
}

namespace detail {

struct View {
  std::string_view kind;
  int k;
  const SegmentGrid& grid;
  std::vector<Point> dots;
  std::vector<Point> crosses;
  std::vector<int> word;
};

inline char color_glyph(Color c) {
  if (c >= 1 && c <= 9) return static_cast<char>('0' + c);
  if (c >= 10 && c <= 35) return static_cast<char>('a' + (c - 10));
  return '#';
}

inline bool contains(const std::vector<Point>& pts, Point p) {
  for (const Point q : pts)
    if (q == p) return true;
  return false;
}

inline std::string ascii(const View& v) {
  const SegmentGrid& g = v.grid;
  const int w = g.width(), h = g.height();
  std::ostringstream out;
  out << "# viennot-ascii v" << kFormatVersion << " kind=" << v.kind << " k=" << v.k << " width=" << w << '\n';
  auto vertical_row = [&](int b) {
    std::string line = "    ";
    for (int t = 1; t <= w; ++t) {
      const Color c = g.vertical(t, b);
      line += c ? color_glyph(c) : ' ';
      line += "   ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  vertical_row(h);
  for (int b = h; b >= 1; --b) {
    std::string line;
    std::string label = std::to_string(b);
    line += std::string(label.size() < 3 ? 3 - label.size() : 0, ' ') + label + ' ';
    for (int t = 1; t <= w; ++t) {
      const bool vert = g.vertical(t, b) || g.vertical(t, b - 1);
      const bool horiz = g.horizontal(t, b) || g.horizontal(t - 1, b);
      if (contains(v.dots, {t, b})) line += "•";
      else if (contains(v.crosses, {t, b})) line += 'x';
      else if (vert && horiz) line += '+';
      else if (vert) line += '|';
      else if (horiz) line += '-';
      else line += '.';
      const Color c = g.horizontal(t, b);
      if (c) {
        line += '-';
        line += color_glyph(c);
        line += '-';
      } else {
        line += "   ";
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    if (b > 1) vertical_row(b - 1);
  }
  std::string axis = "    ";
  for (int t = 1; t <= w; ++t) {
    std::string n = std::to_string(t);
    axis += n + std::string(n.size() < 4 ? 4 - n.size() : 1, ' ');
  }
  while (!axis.empty() && axis.back() == ' ') axis.pop_back();
  out << axis << '\n';
  return out.str();
}

inline std::string svg(const View& v) {
  const SegmentGrid& g = v.grid;
  const int w = g.width(), h = g.height();
  constexpr int cell = 30, margin = 30;
  const int px_w = 2 * margin + (w + 1) * cell;
  const int px_h = 2 * margin + (h + 1) * cell;
  auto X = [&](int t) { return margin + t * cell; };
  auto Y = [&](int b) { return margin + (h + 1 - b) * cell; };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_w << "\" height=\"" << px_h
      << "\" viewBox=\"0 0 " << px_w << ' ' << px_h << "\" data-format=\"viennot-svg\" data-version=\""
      << kFormatVersion << "\" data-kind=\"" << v.kind << "\" data-k=\"" << v.k << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int t = 1; t <= w; ++t)
    out << "<line x1=\"" << X(t) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(t) << "\" y2=\"" << Y(h + 1) << "\"/>\n";
  for (int b = 1; b <= h; ++b)
    out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(b) << "\" x2=\"" << X(w + 1) << "\" y2=\"" << Y(b) << "\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\" text-anchor=\"middle\">\n";
  for (int t = 1; t <= w; ++t) out << "<text x=\"" << X(t) << "\" y=\"" << Y(0) + 12 << "\">" << t << "</text>\n";
  for (int b = 1; b <= h; ++b) out << "<text x=\"" << X(0) - 12 << "\" y=\"" << Y(b) + 4 << "\">" << b << "</text>\n";
  out << "</g>\n";
  out << "<g fill=\"none\" stroke-width=\"3\" stroke-linejoin=\"round\">\n";
  for (Color c = 1; c <= g.max_color(); ++c) {
    for (const auto& path : lattice_paths(g, c)) {
      // keep only endpoints and turning points
      std::vector<Point> pts;
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0 && i + 1 < path.size()) {
          const Point a = path[i - 1], b = path[i], n = path[i + 1];
          if ((a.t == b.t && b.t == n.t) || (a.b == b.b && b.b == n.b)) continue;
        }
        pts.push_back(path[i]);
      }
      out << "<polyline data-color=\"" << c << "\" stroke=\"" << stroke_color(c) << "\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << X(pts[i].t) << ',' << Y(pts[i].b);
      out << "\"/>\n";
    }
  }
  out << "</g>\n";
  out << "<g fill=\"black\">\n";
  for (const Point p : v.dots) out << "<circle cx=\"" << X(p.t) << "\" cy=\"" << Y(p.b) << "\" r=\"5\"/>\n";
  out << "</g>\n";
  out << "<g stroke=\"black\" stroke-width=\"2\">\n";
  for (const Point p : v.crosses) {
    out << "<line x1=\"" << X(p.t) - 5 << "\" y1=\"" << Y(p.b) - 5 << "\" x2=\"" << X(p.t) + 5 << "\" y2=\""
        << Y(p.b) + 5 << "\"/>\n";
    out << "<line x1=\"" << X(p.t) - 5 << "\" y1=\"" << Y(p.b) + 5 << "\" x2=\"" << X(p.t) + 5 << "\" y2=\""
        << Y(p.b) - 5 << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

inline io::json as_json(const View& v) {
  const SegmentGrid& g = v.grid;
  io::json j;
  j["format"] = "viennot-diagram";
  j["version"] = kFormatVersion;
  j["kind"] = v.kind;
  j["k"] = v.k;
  j["width"] = g.width();
  j["word"] = v.word;
  auto points = [](const std::vector<Point>& pts) {
    io::json a = io::json::array();
    for (const Point p : pts) a.push_back({p.t, p.b});
    return a;
  };
  j["dots"] = points(v.dots);
  j["crosses"] = points(v.crosses);
  io::json hs = io::json::array(), vs = io::json::array();
  for (int t = 1; t <= g.width(); ++t)
    for (int b = 1; b <= g.height(); ++b) {
      if (const Color c = g.horizontal(t, b)) hs.push_back({t, b, c});
      if (const Color c = g.vertical(t, b)) vs.push_back({t, b, c});
    }
  j["horizontal"] = hs;
  j["vertical"] = vs;
  io::json top = io::json::array(), right = io::json::array();
  for (int t = 1; t <= g.width(); ++t) top.push_back(g.vertical(t, g.height()));
  for (int b = 1; b <= g.height(); ++b) right.push_back(g.horizontal(g.width(), b));
  j["top_exit"] = top;
  j["right_exit"] = right;
  return j;
}

inline std::string emit(const View& v, Format f) {
  switch (f) {
    case Format::Ascii: return ascii(v);
    case Format::Svg: return svg(v);
    case Format::Json: return as_json(v).dump(2) + "\n";
  }
  return {};
}

}  // namespace detail

inline std::string render(const ViennotDiagram& d, Format f) {
  return detail::emit({"permutation", d.k(), d.grid(), d.dots(), {}, d.marked_word().word()}, f);
}

inline std::string render(const UpDownViennotDiagram& d, Format f) {
  return detail::emit({"matching", d.k(), d.grid(), d.dots(), d.crosses(), diagram_to_word(d).to_signed()}, f);
}

}  // namespace viennot::render

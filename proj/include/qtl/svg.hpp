#pragma once

/**
 * @file svg.hpp
 * @brief SVG path diagrams for l = 2 and l = 3.
 *
 * l = 2 is drawn as a descending triangular lattice: level k holds the points
 * with coordinate sum k, so walks look like walks on Pascal's triangle. l = 3
 * is drawn in the plane of constant coordinate sum with e_2 at 0 degrees,
 * e_1 at 120 degrees and e_3 at 240 degrees.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "paths.hpp"

namespace qtl {

namespace svg_detail {

struct Vec2 {
  double x;
  double y;
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

constexpr double kScale = 24.0;

/// Projection and root functionals for one rank.
struct Frame {
  int l;
  Vec2 project(const Point& p) const {
    if (l == 2) return {kScale * 0.5 * (p[1] - p[0]), kScale * 0.8660254037844386 * (p[0] + p[1])};
    static const std::array<Vec2, 3> u{{{-0.5, -0.8660254037844386}, {1.0, 0.0}, {-0.5, 0.8660254037844386}}};
    Vec2 out{0, 0};
    for (int k = 0; k < 3; ++k) {
      out.x += kScale * p[k] * u[static_cast<std::size_t>(k)].x;
      out.y += kScale * p[k] * u[static_cast<std::size_t>(k)].y;
    }
    return out;
  }
  /// w with <project(x), w> = x_i - x_j on the drawing plane.
  Vec2 functional(int i, int j) const {
    if (l == 2) return {-1.0 / (0.5 * kScale), 0.0};
    const Vec2 a = project(unit(i));
    const Vec2 b = project(unit(j));
    const double s = 2.0 / (3.0 * kScale * kScale);
    return {s * (a.x - b.x), s * (a.y - b.y)};
  }
  Point unit(int i) const {
    Point p = Point::zero(l);
    p[i] = 1;
    return p;
  }
};

/// Segment of {P : <P, w> = c} inside the box, if any.
inline std::optional<std::pair<Vec2, Vec2>> clip(Vec2 w, double c, double x0, double y0, double x1, double y1) {
  std::vector<Vec2> hits;
  const auto add = [&](Vec2 p) {
    for (const auto& q : hits)
      if (std::abs(q.x - p.x) < 1e-9 && std::abs(q.y - p.y) < 1e-9) return;
    hits.push_back(p);
  };
  if (std::abs(w.y) > 1e-12) {
    for (double x : {x0, x1}) {
      const double y = (c - w.x * x) / w.y;
      if (y >= y0 - 1e-9 && y <= y1 + 1e-9) add({x, y});
    }
  }
  if (std::abs(w.x) > 1e-12) {
    for (double y : {y0, y1}) {
      const double x = (c - w.y * y) / w.x;
      if (x >= x0 - 1e-9 && x <= x1 + 1e-9) add({x, y});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(hits[0], hits[1]);
}

}  // namespace svg_detail

/// Deterministic SVG of the arrangement around the given paths. Walls that
/// some path point lies on get class "wall crossed"; degree contributions are
/// annotated where nonzero.
inline std::string render_svg(const Geometry& g, const std::vector<PathWord>& paths, int n) {
  using namespace svg_detail;
  const int l = g.rank();
  if (l > 3) throw RankTooHigh("SVG output supports l <= 3, got l = " + std::to_string(l));
  if (l < 2) throw RankTooHigh("SVG output needs l >= 2");
  const Frame frame{l};

  std::vector<Point> region;
  region.push_back(Point::zero(l));
  for (const auto& w : paths)
    for (const Point& p : w.prefix_points(l)) region.push_back(p);
  const int reach = std::max(n, g.e());
  for (int i = 0; i < l; ++i) {
    Point p = Point::zero(l);
    p[i] = reach;
    region.push_back(p);
  }
  double x0 = 1e18, y0 = 1e18, x1 = -1e18, y1 = -1e18;
  for (const Point& p : region) {
    const Vec2 v = frame.project(p);
    x0 = std::min(x0, v.x);
    y0 = std::min(y0, v.y);
    x1 = std::max(x1, v.x);
    y1 = std::max(y1, v.y);
  }
  const double pad = kScale;
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;

  std::set<Hyperplane> touched;
  for (const auto& w : paths)
    for (const Point& p : w.prefix_points(l))
      for (const Hyperplane& h : g.classify(p)) touched.insert(h);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(x1 - x0) + " " +
         num(y1 - y0) + "\" width=\"" + num(x1 - x0) + "\" height=\"" + num(y1 - y0) + "\">\n";
  out += "<style>.wall{stroke:#999;stroke-width:1}.crossed{stroke:#000;stroke-width:3}"
         ".path{fill:none;stroke:#c00;stroke-width:2}.deg{font:10px sans-serif}</style>\n";

  // lattice points of the levels 0..reach (l = 2) or of the plane sum = n (l = 3)
  out += "<g class=\"lattice\">\n";
  std::vector<Point> lattice;
  if (l == 2) {
    for (int k = 0; k <= reach; ++k)
      for (int a = 0; a <= k; ++a) lattice.push_back(Point{a, k - a});
  } else {
    for (int a = 0; a <= reach; ++a)
      for (int b = 0; a + b <= reach; ++b) lattice.push_back(Point{a, b, reach - a - b});
  }
  for (const Point& p : lattice) {
    const Vec2 v = frame.project(p);
    out += "<circle cx=\"" + num(v.x) + "\" cy=\"" + num(v.y) + "\" r=\"1.5\"/>\n";
  }
  out += "</g>\n";

  const Point origin = Point::zero(l);
  out += "<g class=\"walls\">\n";
  for (const Root& r : g.roots()) {
    const Vec2 w = frame.functional(r.i, r.j);
    const long long shift = g.pairing(origin, r);
    double lo = 1e18, hi = -1e18;
    for (Vec2 c : {Vec2{x0, y0}, Vec2{x0, y1}, Vec2{x1, y0}, Vec2{x1, y1}}) {
      const double v = c.x * w.x + c.y * w.y + static_cast<double>(shift);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (long long m = static_cast<long long>(std::ceil(lo / g.e())); m * g.e() <= hi; ++m) {
      const Hyperplane h{r.i, r.j, m};
      auto seg = clip(w, static_cast<double>(m * g.e() - shift), x0, y0, x1, y1);
      if (!seg) continue;
      const bool hit = touched.count(h) > 0;
      out += "<line class=\"" + std::string(hit ? "wall crossed" : "wall") + "\" data-hyperplane=\"" + h.to_string() +
             "\" x1=\"" + num(seg->first.x) + "\" y1=\"" + num(seg->first.y) + "\" x2=\"" + num(seg->second.x) +
             "\" y2=\"" + num(seg->second.y) + "\"/>\n";
    }
  }
  out += "</g>\n";

  for (const auto& w : paths) {
    if (w.size() == 0) continue;
    const auto pts = w.prefix_points(l);
    out += "<polyline class=\"path\" data-steps=\"" + w.to_string() + "\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const Vec2 v = frame.project(pts[k]);
      out += (k ? " " : "") + num(v.x) + "," + num(v.y);
    }
    out += "\"/>\n";
    const DegreeTrace t = degree_trace(g, w);
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      if (t.steps[k] == 0) continue;
      const Vec2 v = frame.project(pts[k + 1]);
      out += "<text class=\"deg\" x=\"" + num(v.x + 4) + "\" y=\"" + num(v.y - 4) + "\">" +
             (t.steps[k] > 0 ? "+" : "") + std::to_string(t.steps[k]) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace qtl

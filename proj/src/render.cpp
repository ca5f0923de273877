#include "ccg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "ccg/tolerances.hpp"

namespace ccg {

namespace {

constexpr int kCurveSegments = 64;
constexpr double kCurveSpan = 8.0;
constexpr double kViewHalf = 500.0;
constexpr double kOrthogonalityTol = 1e-6;

double svg_x(double u) { return kViewHalf + kViewHalf * u; }
double svg_y(double w) { return kViewHalf - kViewHalf * w; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string move_to(const DiskPoint& p) { return "M " + fmt(svg_x(p.u)) + " " + fmt(svg_y(p.w)); }

// Path continuation along the arc, without the initial move.
std::string arc_to(const SceneArc& a) {
  const std::string end = fmt(svg_x(a.to.u)) + " " + fmt(svg_y(a.to.w));
  if (a.support.straight) return " L " + end;
  const double r = kViewHalf * a.support.radius;
  const double cx = svg_x(a.support.cx), cy = svg_y(a.support.cy);
  const double fx = svg_x(a.from.u) - cx, fy = svg_y(a.from.w) - cy;
  const double tx = svg_x(a.to.u) - cx, ty = svg_y(a.to.w) - cy;
  // Arcs inside the disk are minor arcs; the sweep follows the shorter turn.
  const int sweep = fx * ty - fy * tx > 0.0 ? 1 : 0;
  return " A " + fmt(r) + " " + fmt(r) + " 0 0 " + std::to_string(sweep) + " " + end;
}

// |angle - pi/2| where the circle crosses the unit circle.
double boundary_tilt(const ChartCircle& c) {
  if (c.straight) return 0.0;
  const double d2 = c.cx * c.cx + c.cy * c.cy;
  const double cosine = (d2 - 1.0 - c.radius * c.radius) / (2.0 * c.radius);
  return std::abs(std::asin(std::clamp(cosine, -1.0, 1.0)));
}

SceneArc make_arc(const DiskPoint& from, const DiskPoint& to, const ChartCircle& support,
                  std::string css_class) {
  return SceneArc{from, to, support, std::move(css_class)};
}

}  // namespace

ChartCircle chart_circle(const Geodesic& g) {
  const Vec3& n = g.normal();
  if (std::abs(n.x0) <= 1e-12 * norm(n)) return ChartCircle{true, 0.0, 0.0, 0.0};
  return ChartCircle{false, n.x1 / n.x0, n.x2 / n.x0, 1.0 / std::abs(n.x0)};
}

std::pair<DiskPoint, DiskPoint> ideal_endpoints(const Geodesic& g) {
  const Hypercycle h = make_hypercycle(g, 0.0);
  const Vec3 minus = h.anchor.vec() - h.direction;
  const Vec3 plus = h.anchor.vec() + h.direction;
  return {DiskPoint{minus.x1 / minus.x0, minus.x2 / minus.x0},
          DiskPoint{plus.x1 / plus.x0, plus.x2 / plus.x0}};
}

void RenderScene::add_point(const HPoint& p, std::string label) {
  points.push_back({hpoint_to_disk(p), std::move(label)});
}

void RenderScene::add_segment(const HPoint& p, const HPoint& q, std::string css_class) {
  arcs.push_back(make_arc(hpoint_to_disk(p), hpoint_to_disk(q), chart_circle(geodesic_through(p, q)),
                          std::move(css_class)));
}

void RenderScene::add_geodesic(const Geodesic& g, std::string css_class) {
  const auto [from, to] = ideal_endpoints(g);
  arcs.push_back(make_arc(from, to, chart_circle(g), std::move(css_class)));
}

void RenderScene::add_hypercycle(const Hypercycle& h, std::string css_class) {
  SceneCurve curve;
  curve.offset = h.offset;
  curve.css_class = std::move(css_class);
  for (int k = 0; k <= kCurveSegments; ++k) {
    const double s = -kCurveSpan + 2.0 * kCurveSpan * k / kCurveSegments;
    curve.polyline.push_back(hpoint_to_disk(h.point_at(s)));
  }
  curves.push_back(std::move(curve));
}

void RenderScene::add_triangle(const HPoint& a, const HPoint& b, const HPoint& c, std::string css_class) {
  SceneTriangle tri;
  tri.css_class = std::move(css_class);
  const HPoint v[3] = {a, b, c};
  for (int k = 0; k < 3; ++k) {
    const HPoint& p = v[k];
    const HPoint& q = v[(k + 1) % 3];
    tri.edges.push_back(make_arc(hpoint_to_disk(p), hpoint_to_disk(q), chart_circle(geodesic_through(p, q)), ""));
  }
  triangles.push_back(std::move(tri));
}

SceneCheck validate_scene(const RenderScene& scene) {
  SceneCheck out;
  out.min_hypercycle_tilt = kPi / 2;
  const auto track = [&](const DiskPoint& p) { out.max_radius = std::max(out.max_radius, p.radius()); };
  const auto track_arc = [&](const SceneArc& a) {
    track(a.from);
    track(a.to);
    out.max_orthogonality = std::max(out.max_orthogonality, boundary_tilt(a.support));
  };
  for (const auto& p : scene.points) track(p.at);
  for (const auto& a : scene.arcs) track_arc(a);
  for (const auto& t : scene.triangles) {
    for (const auto& e : t.edges) track_arc(e);
  }
  for (const auto& c : scene.curves) {
    for (const auto& p : c.polyline) track(p);
    // A curve at distance d meets the boundary at angle pi/2 - atan(sinh d).
    out.min_hypercycle_tilt = std::min(out.min_hypercycle_tilt, std::atan(std::sinh(std::abs(c.offset))));
  }

  if (out.max_radius > 1.0 + 1e-12) {
    out.ok = false;
    out.message = "coordinate outside the closed unit disk";
  } else if (out.max_orthogonality > kOrthogonalityTol) {
    out.ok = false;
    out.message = "geodesic arc not orthogonal to the boundary";
  } else if (!scene.curves.empty() && !(out.min_hypercycle_tilt > kOrthogonalityTol)) {
    out.ok = false;
    out.message = "hypercycle meets the boundary at a right angle";
  }
  return out;
}

std::string to_svg(const RenderScene& scene) {
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
       "viewBox=\"0 0 1000 1000\">\n";
  if (!scene.title.empty()) s += "  <title>" + scene.title + "</title>\n";
  s += "  <style>\n"
       "    .boundary { fill: none; stroke: #000; stroke-width: 2; }\n"
       "    .area { fill: #9ecae1; fill-opacity: 0.5; stroke: #3182bd; stroke-width: 1.5; }\n"
       "    .base { fill: none; stroke: #444; stroke-width: 1.5; }\n"
       "    .axis { fill: none; stroke: #d62728; stroke-width: 1.5; stroke-dasharray: 8 5; }\n"
       "    .carrier { fill: none; stroke: #2ca02c; stroke-width: 2; }\n"
       "    .mirror { fill: none; stroke: #9467bd; stroke-width: 2; }\n"
       "    .cevian { fill: none; stroke: #ff7f0e; stroke-width: 1.5; }\n"
       "    .point { fill: #000; }\n"
       "    .label { font: 22px sans-serif; }\n"
       "  </style>\n";
  s += "  <circle class=\"boundary\" cx=\"500\" cy=\"500\" r=\"500\"/>\n";

  for (const auto& t : scene.triangles) {
    std::string d = move_to(t.edges.front().from);
    for (const auto& e : t.edges) d += arc_to(e);
    s += "  <path class=\"" + t.css_class + "\" d=\"" + d + " Z\"/>\n";
  }
  for (const auto& a : scene.arcs) {
    s += "  <path class=\"" + a.css_class + "\" d=\"" + move_to(a.from) + arc_to(a) + "\"/>\n";
  }
  for (const auto& c : scene.curves) {
    std::string pts;
    for (const auto& p : c.polyline) {
      if (!pts.empty()) pts += ' ';
      pts += fmt(svg_x(p.u)) + "," + fmt(svg_y(p.w));
    }
    s += "  <polyline class=\"" + c.css_class + "\" points=\"" + pts + "\"/>\n";
  }
  for (const auto& p : scene.points) {
    const std::string x = fmt(svg_x(p.at.u)), y = fmt(svg_y(p.at.w));
    s += "  <circle class=\"point\" cx=\"" + x + "\" cy=\"" + y + "\" r=\"5\"/>\n";
    if (!p.label.empty()) {
      s += "  <text class=\"label\" x=\"" + fmt(svg_x(p.at.u) + 8.0) + "\" y=\"" + fmt(svg_y(p.at.w) - 8.0) +
           "\">" + p.label + "</text>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

RenderScene lexell_scene(const AreaLocus& locus) {
  RenderScene scene;
  scene.title = "Constant-area locus";
  scene.add_triangle(locus.apex, locus.A, locus.B, "area");
  scene.add_geodesic(geodesic_through(locus.A, locus.B), "base");
  scene.add_geodesic(locus.axis, "axis");
  scene.add_hypercycle(locus.carrier, "carrier");
  scene.add_hypercycle(locus.mirror, "mirror");
  scene.add_point(locus.A, "A");
  scene.add_point(locus.B, "B");
  scene.add_point(locus.apex, "P");
  if (hdist(locus.apex, locus.apex_mirror) > kTolPoint) scene.add_point(locus.apex_mirror, "P'");
  scene.add_point(locus.mid_apex_a, "");
  scene.add_point(locus.mid_mirror_b, "");
  return scene;
}

RenderScene foliation_scene(const BaseConfig& base, const std::vector<AreaLocus>& leaves) {
  RenderScene scene;
  scene.title = "Constant-area foliation";
  scene.add_geodesic(geodesic_through(base.A, base.B), "base");
  for (const auto& leaf : leaves) {
    scene.add_hypercycle(leaf.carrier, "carrier");
    scene.add_hypercycle(leaf.mirror, "mirror");
  }
  scene.add_point(base.A, "A");
  scene.add_point(base.B, "B");
  return scene;
}

RenderScene cevian_scene(const Triangle<HyperbolicPlane>& tri, const HPoint& O, const HPoint& D,
                         const HPoint& E, const HPoint& F) {
  RenderScene scene;
  scene.title = "Concurrent cevians";
  scene.add_triangle(tri.A, tri.B, tri.C, "area");
  scene.add_segment(tri.A, D, "cevian");
  scene.add_segment(tri.B, E, "cevian");
  scene.add_segment(tri.C, F, "cevian");
  const std::pair<const HPoint*, const char*> labelled[] = {{&tri.A, "A"}, {&tri.B, "B"}, {&tri.C, "C"},
                                                            {&O, "O"},     {&D, "D"},     {&E, "E"},
                                                            {&F, "F"}};
  for (const auto& [p, name] : labelled) scene.add_point(*p, name);
  return scene;
}

}  // namespace ccg

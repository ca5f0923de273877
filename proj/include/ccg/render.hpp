#pragma once

// Poincare-disk figures as SVG 1.1. The unit disk maps to a 1000x1000 view
// box with y pointing up. Geodesics are circular arcs orthogonal to the
// boundary (or diameters); hypercycles are 64-segment polylines of their
// parameterization.

#include <string>
#include <utility>
#include <vector>

#include "ccg/cevians.hpp"
#include "ccg/hyperbolic.hpp"
#include "ccg/lexell.hpp"

namespace ccg {

/// Euclidean circle of the disk chart; a straight line when `straight`.
struct ChartCircle {
  bool straight = false;
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
};

/// The circle carrying a geodesic in the disk chart.
ChartCircle chart_circle(const Geodesic& g);

/// Ideal endpoints of a geodesic, as unit vectors in the disk chart.
std::pair<DiskPoint, DiskPoint> ideal_endpoints(const Geodesic& g);

struct ScenePoint {
  DiskPoint at;
  std::string label;
};

struct SceneArc {
  DiskPoint from;
  DiskPoint to;
  ChartCircle support;
  std::string css_class;
};

struct SceneCurve {
  std::vector<DiskPoint> polyline;
  double offset = 0.0;  // distance from the axis
  std::string css_class;
};

struct SceneTriangle {
  std::vector<SceneArc> edges;  // A->B, B->C, C->A
  std::string css_class;
};

struct RenderScene {
  std::string title;
  std::vector<ScenePoint> points;
  std::vector<SceneArc> arcs;
  std::vector<SceneCurve> curves;
  std::vector<SceneTriangle> triangles;

  void add_point(const HPoint& p, std::string label);
  void add_segment(const HPoint& p, const HPoint& q, std::string css_class);
  void add_geodesic(const Geodesic& g, std::string css_class);
  void add_hypercycle(const Hypercycle& h, std::string css_class);
  void add_triangle(const HPoint& a, const HPoint& b, const HPoint& c, std::string css_class);
};

struct SceneCheck {
  bool ok = true;
  double max_radius = 0.0;           // largest chart radius of any coordinate
  double max_orthogonality = 0.0;    // largest |angle - pi/2| at the boundary, geodesics
  double min_hypercycle_tilt = 0.0;  // smallest |angle - pi/2| at the boundary, hypercycles
  std::string message;
};

/// Coordinates inside the closed disk, geodesic supports orthogonal to the
/// boundary within 1e-6 rad, hypercycles not orthogonal to it.
SceneCheck validate_scene(const RenderScene& scene);

std::string to_svg(const RenderScene& scene);

/// Base, apex, the locus pair and its axis.
RenderScene lexell_scene(const AreaLocus& locus);
/// Base line and the carrier and mirror of every leaf.
RenderScene foliation_scene(const BaseConfig& base, const std::vector<AreaLocus>& leaves);
/// Triangle, cevians through O, and the labelled feet.
RenderScene cevian_scene(const Triangle<HyperbolicPlane>& tri, const HPoint& O, const HPoint& D,
                         const HPoint& E, const HPoint& F);

}  // namespace ccg

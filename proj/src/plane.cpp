#include "ccg/plane.hpp"

#include <string>

namespace ccg {

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Hyperbolic: return "hyperbolic";
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
  }
  return "unknown";
}

Geometry parse_geometry(std::string_view name) {
  if (name == "hyperbolic") return Geometry::Hyperbolic;
  if (name == "spherical") return Geometry::Spherical;
  if (name == "euclidean") return Geometry::Euclidean;
  fail(ErrorKind::Domain, "unknown geometry '" + std::string(name) + "'");
}

}  // namespace ccg

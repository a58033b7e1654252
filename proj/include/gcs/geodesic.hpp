#pragma once

#include <complex>
#include <optional>
#include <string>

#include "gcs/boundary.hpp"
#include "gcs/moebius.hpp"

namespace gcs {

enum class CrossKind { cross, disjoint, share_endpoint };

// Unoriented complete geodesic of the upper half-plane, stored by its two
// distinct boundary endpoints in normalized order (smaller first, inf last).
struct Geodesic {
  BoundaryPoint e1, e2;

  Geodesic() = default;
  Geodesic(BoundaryPoint x, BoundaryPoint y);

  bool vertical() const { return e2.inf; }
  bool operator==(const Geodesic& o) const { return e1 == o.e1 && e2 == o.e2; }
  bool operator!=(const Geodesic& o) const { return !(*this == o); }
  std::string key() const { return e1.str() + "|" + e2.str(); }

  // Euclidean data: vertical line x = x0, or semicircle (center, radius)
  struct Shape {
    bool is_vertical;
    double x0;
    double center, radius;
  };
  Shape shape() const;
};

Geodesic apply(const IntMat& m, const Geodesic& g);

CrossKind geodesics_cross(const Geodesic& g1, const Geodesic& g2);

// unique intersection point; requires geodesics_cross == cross
std::complex<double> crossing_point(const Geodesic& g1, const Geodesic& g2);

// Exact sign of the wall function at the crossing point z* of g1 and g2:
//   vertical wall {w, inf}:        sign(Re z* - w)
//   circular wall {w1, w2}:        sign(|z* - center|^2 - radius^2)
// Wall endpoints must be rational.  Used to decide edge-ownership when the
// floating point crossing lands within tolerance of a wall.
int crossing_side_of_wall_exact(const Geodesic& g1, const Geodesic& g2, const Geodesic& wall);

}  // namespace gcs

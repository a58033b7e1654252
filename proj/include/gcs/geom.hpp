#pragma once

#include <complex>
#include <vector>

#include "gcs/geodesic.hpp"

namespace gcs {

// hyperbolic distance in the upper half-plane; throws on Im <= 0
double hyp_distance(std::complex<double> z1, std::complex<double> z2);

// distance from an interior point to a complete geodesic
double dist_point_to_geodesic(std::complex<double> z, const Geodesic& g);

// Euclidean distance of Cayley-transform images on the unit circle, in [0,2]
double chordal_dist(const BoundaryPoint& x, const BoundaryPoint& y);

// angle of the Cayley image C(x) = (x-i)/(x+i) on the unit circle, in (-pi, pi]
double cayley_angle(const BoundaryPoint& x);
double cayley_angle_of_double(double x, bool inf);

// Hausdorff distance between two-point boundary sets under chordal_dist
double pair_hausdorff(const Geodesic& s1, const Geodesic& s2);

// closed boundary arc swept counterclockwise from `from` to `to`
struct Arc {
  BoundaryPoint from, to;

  Arc() = default;
  Arc(BoundaryPoint f, BoundaryPoint t);
  bool contains(const BoundaryPoint& x) const;
  bool intersects(const Arc& o) const;
  double angular_length() const;
};

Arc apply(const IntMat& m, const Arc& a);

// compact test set Box(I,J) = { {x,y} : x in I, y in J }, arcs with disjoint closures
struct PairBox {
  Arc I, J;
  std::string name;

  PairBox() = default;
  PairBox(Arc i, Arc j, double theta_floor = 0.05, std::string name = "");
  double theta_min() const;  // minimal angular gap between the two arcs
};

PairBox apply(const IntMat& m, const PairBox& b, double theta_floor = 0.05);

// catch radius: every geodesic with one endpoint in I and the other in J
// passes within this distance of the basepoint
double box_window_radius(const PairBox& box,
                         std::complex<double> basepoint = {0.0, 1.0});

// horoball: base = inf gives {Im z > height}; finite rational base p/q gives
// the tangent disk of Euclidean diameter height/q^2
struct Horoball {
  BoundaryPoint base;
  double height;

  Horoball(BoundaryPoint b, double h);
  bool contains(std::complex<double> z) const;       // open horoball
  double boundary_residual(std::complex<double> z) const;  // 0 on the horocycle
};

// intersection points of the horocycle with a line/circle shape (floats)
std::vector<std::complex<double>> horocycle_meet(const Horoball& hb, const Geodesic::Shape& s);

}  // namespace gcs

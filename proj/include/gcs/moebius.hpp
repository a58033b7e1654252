#pragma once

#include <complex>

#include "gcs/boundary.hpp"
#include "gcs/numeric.hpp"

namespace gcs {

// integer 2x2 matrix with determinant 1; the working representation for
// group elements (all preset generators are integral)
struct IntMat {
  Int a = 1, b = 0, c = 0, d = 1;

  static IntMat identity() { return {}; }
  IntMat mul(const IntMat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  IntMat inverse() const { return {d, -b, -c, a}; }
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  bool operator==(const IntMat& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool is_plus_minus_identity() const {
    return b == 0 && c == 0 && a == d && (a == 1 || a == -1);
  }

  BoundaryPoint apply(const BoundaryPoint& x) const;
  std::complex<double> apply(const std::complex<double>& z) const;
};

// Moebius map with exact rational entries, determinant exactly 1
struct MoebiusMap {
  Rat a = 1, b = 0, c = 0, d = 1;

  MoebiusMap() = default;
  MoebiusMap(Rat a_, Rat b_, Rat c_, Rat d_);
  static MoebiusMap identity() { return {}; }
  static MoebiusMap from_int(const IntMat& m);

  MoebiusMap mul(const MoebiusMap& o) const;
  MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }
  Rat det() const { return a * d - b * c; }
  Rat trace() const { return a + d; }
  bool is_plus_minus_identity() const;
  bool operator==(const MoebiusMap& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

  // clears denominators (projectively equal integer matrix)
  IntMat scaled_int() const;
  BoundaryPoint apply(const BoundaryPoint& x) const { return scaled_int().apply(x); }
  std::complex<double> apply(const std::complex<double>& z) const;
};

// exact Moebius action on the boundary
inline BoundaryPoint mob_apply(const MoebiusMap& m, const BoundaryPoint& x) { return m.apply(x); }

}  // namespace gcs

#pragma once

#include <string>

#include "gcs/numeric.hpp"

namespace gcs {

// Exact point of the boundary circle R u {inf}: rational p/q, infinity, or a
// real quadratic surd (a + b*sqrt(d)) / c in canonical form.
//
// Canonical form: d squarefree; d == 1 and b == 0 for rationals; c > 0;
// gcd(a, b, c) == 1.  Equality is then field-by-field.
struct BoundaryPoint {
  bool inf = false;
  Int a = 0, b = 0, c = 1;
  Int d = 1;

  BoundaryPoint() = default;

  static BoundaryPoint infinity();
  static BoundaryPoint rational(Int p, Int q);
  static BoundaryPoint integer(long v) { return rational(Int(v), Int(1)); }
  // (a + b*sqrt(d)) / c, canonicalized
  static BoundaryPoint surd(Int a, Int b, Int c, Int d);

  bool is_rational() const { return !inf && b == 0; }
  bool is_surd() const { return !inf && b != 0; }

  bool operator==(const BoundaryPoint& o) const {
    return inf == o.inf && a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const BoundaryPoint& o) const { return !(*this == o); }

  double to_double() const;  // inf -> +infinity
  std::string str() const;   // "p/q", "inf", "(a+b*sqrt(d))/c"

  void canonicalize();
};

BoundaryPoint parse_boundary_point(const std::string& s);

// strict order on R with inf greatest; equality exact
int compare(const BoundaryPoint& x, const BoundaryPoint& y);
inline bool operator<(const BoundaryPoint& x, const BoundaryPoint& y) { return compare(x, y) < 0; }

// true iff (p, q, r) are pairwise distinct and occur in counterclockwise
// (increasing) cyclic order on R u {inf}
bool ccw(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r);

// parity class of a parabolic orbit point of the standard presets:
// 0 for the inf-cusp class (odd/even), 1 for the 0-class (even/odd),
// 2 for the +-1-class (odd/odd).  Throws for surds.
int cusp_class(const BoundaryPoint& p);

std::size_t hash_value(const BoundaryPoint& p);

}  // namespace gcs

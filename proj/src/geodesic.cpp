#include "gcs/geodesic.hpp"

#include <cmath>

#include "gcs/errors.hpp"

namespace gcs {

Geodesic::Geodesic(BoundaryPoint x, BoundaryPoint y) {
  if (x == y) throw precondition_error("geodesic needs two distinct endpoints");
  if (compare(x, y) < 0) {
    e1 = std::move(x);
    e2 = std::move(y);
  } else {
    e1 = std::move(y);
    e2 = std::move(x);
  }
}

Geodesic::Shape Geodesic::shape() const {
  Shape s{};
  if (vertical()) {
    s.is_vertical = true;
    s.x0 = e1.to_double();
    return s;
  }
  s.is_vertical = false;
  const double u = e1.to_double(), v = e2.to_double();
  s.center = 0.5 * (u + v);
  s.radius = 0.5 * std::abs(v - u);
  return s;
}

Geodesic apply(const IntMat& m, const Geodesic& g) {
  return Geodesic(m.apply(g.e1), m.apply(g.e2));
}

CrossKind geodesics_cross(const Geodesic& g1, const Geodesic& g2) {
  if (g1.e1 == g2.e1 || g1.e1 == g2.e2 || g1.e2 == g2.e1 || g1.e2 == g2.e2)
    return CrossKind::share_endpoint;
  const bool s1 = ccw(g1.e1, g2.e1, g1.e2);
  const bool s2 = ccw(g1.e1, g2.e2, g1.e2);
  return s1 != s2 ? CrossKind::cross : CrossKind::disjoint;
}

std::complex<double> crossing_point(const Geodesic& g1, const Geodesic& g2) {
  if (geodesics_cross(g1, g2) != CrossKind::cross)
    throw precondition_error("crossing_point on non-crossing geodesics");
  const auto a = g1.shape();
  const auto b = g2.shape();
  if (a.is_vertical && b.is_vertical)
    throw precondition_error("parallel vertical geodesics do not cross");
  if (a.is_vertical) {
    const double y2 = b.radius * b.radius - (a.x0 - b.center) * (a.x0 - b.center);
    return {a.x0, std::sqrt(std::max(y2, 0.0))};
  }
  if (b.is_vertical) {
    const double y2 = a.radius * a.radius - (b.x0 - a.center) * (b.x0 - a.center);
    return {b.x0, std::sqrt(std::max(y2, 0.0))};
  }
  const double x = (a.radius * a.radius - b.radius * b.radius + b.center * b.center -
                    a.center * a.center) /
                   (2.0 * (b.center - a.center));
  const double y2 = a.radius * a.radius - (x - a.center) * (x - a.center);
  return {x, std::sqrt(std::max(y2, 0.0))};
}

namespace {

// element of Q(sqrt(d1), sqrt(d2)) as QuadInt / positive integer denominator
struct QV {
  QuadInt n;
  Int den;

  QV() : den(1) {}
  int sign() const { return n.sign(); }
};

QV qv_add(const QV& x, const QV& y) {
  QV r;
  QuadInt xs = x.n, ys = y.n;
  const QuadInt dy(y.den, xs.d1, xs.d2), dx(x.den, xs.d1, xs.d2);
  r.n = xs * dy + ys * dx;
  r.den = x.den * y.den;
  return r;
}

QV qv_sub(const QV& x, QV y) {
  y.n.x0 = -y.n.x0;
  y.n.x1 = -y.n.x1;
  y.n.x2 = -y.n.x2;
  y.n.x3 = -y.n.x3;
  return qv_add(x, y);
}

QV qv_mul(const QV& x, const QV& y) {
  QV r;
  r.n = x.n * y.n;
  r.den = x.den * y.den;
  return r;
}

// slot 1 places the surd part on sqrt(d1), slot 2 on sqrt(d2)
QV lift(const BoundaryPoint& p, int slot, const Int& d1, const Int& d2) {
  if (p.inf) throw precondition_error("cannot lift infinity");
  QV r;
  r.n.d1 = d1;
  r.n.d2 = d2;
  r.n.x0 = p.a;
  if (slot == 1)
    r.n.x1 = p.b;
  else
    r.n.x2 = p.b;
  r.den = p.c;
  return r;
}

QV lift_rat(const Rat& q, const Int& d1, const Int& d2) {
  QV r;
  r.n = QuadInt(numerator(q), d1, d2);
  r.den = denominator(q);
  return r;
}

Int field_of(const Geodesic& g) {
  Int d = 1;
  if (g.e1.is_surd()) d = g.e1.d;
  if (g.e2.is_surd()) {
    if (d != 1 && g.e2.d != d)
      throw numerical_error("geodesic endpoints in different quadratic fields");
    d = g.e2.d;
  }
  return d;
}

}  // namespace

int crossing_side_of_wall_exact(const Geodesic& g1, const Geodesic& g2, const Geodesic& wall) {
  if (!wall.e1.is_rational() || (!wall.e2.inf && !wall.e2.is_rational()))
    throw precondition_error("wall endpoints must be rational");
  const Int d1 = field_of(g1);
  const Int d2 = field_of(g2);

  const bool v1 = g1.vertical(), v2 = g2.vertical();
  if (v1 && v2) throw precondition_error("vertical geodesics do not cross");

  // sum s and product p of circle endpoints; x* from the pencil of the two circles
  auto circle_sp = [&](const Geodesic& g, int slot, QV& s, QV& p) {
    const QV u = lift(g.e1, slot, d1, d2);
    const QV v = lift(g.e2, slot, d1, d2);
    s = qv_add(u, v);
    p = qv_mul(u, v);
  };

  QV xnum, xden;    // x* = xnum / xden (xden sign tracked separately)
  QV cs, cp;        // a circle through z*: x^2+y^2 = cs*x - cp
  if (v1 || v2) {
    const Geodesic& vert = v1 ? g1 : g2;
    const Geodesic& circ = v1 ? g2 : g1;
    xnum = lift(vert.e1, v1 ? 1 : 2, d1, d2);
    xden = lift_rat(Rat(1), d1, d2);
    circle_sp(circ, v1 ? 2 : 1, cs, cp);
  } else {
    QV s1, p1, s2, p2;
    circle_sp(g1, 1, s1, p1);
    circle_sp(g2, 2, s2, p2);
    xnum = qv_sub(p2, p1);
    xden = qv_sub(s2, s1);
    cs = s1;
    cp = p1;
  }
  const int den_sign = xden.sign();
  if (den_sign == 0) throw numerical_error("degenerate crossing (concentric circles)");

  if (wall.vertical()) {
    const Rat w(wall.e1.a, wall.e1.c);
    // sign(x* - w)
    const QV expr = qv_sub(xnum, qv_mul(lift_rat(w, d1, d2), xden));
    return expr.sign() * den_sign;
  }
  const Rat omega2 = Rat(wall.e1.a, wall.e1.c) + Rat(wall.e2.a, wall.e2.c);  // 2*omega
  const Rat mw = Rat(wall.e1.a, wall.e1.c) * Rat(wall.e2.a, wall.e2.c);
  // |z*-omega|^2 - rho^2 = (cs - 2 omega) x* + (mw - cp)
  const QV coeff = qv_sub(cs, lift_rat(omega2, d1, d2));
  const QV expr = qv_add(qv_mul(coeff, xnum), qv_mul(qv_sub(lift_rat(mw, d1, d2), cp), xden));
  return expr.sign() * den_sign;
}

}  // namespace gcs

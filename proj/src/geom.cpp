#include "gcs/geom.hpp"

#include <cmath>

#include "gcs/errors.hpp"

namespace gcs {

double hyp_distance(std::complex<double> z1, std::complex<double> z2) {
  if (z1.imag() <= 0 || z2.imag() <= 0)
    throw precondition_error("hyp_distance needs points in the open upper half-plane");
  return 2.0 * std::asinh(std::abs(z1 - z2) / (2.0 * std::sqrt(z1.imag() * z2.imag())));
}

double dist_point_to_geodesic(std::complex<double> z, const Geodesic& g) {
  if (z.imag() <= 0) throw precondition_error("point must be in the upper half-plane");
  const auto s = g.shape();
  if (s.is_vertical) return std::asinh(std::abs(z.real() - s.x0) / z.imag());
  const double q = std::norm(z - std::complex<double>(s.center, 0.0)) - s.radius * s.radius;
  return std::asinh(std::abs(q) / (2.0 * s.radius * z.imag()));
}

double cayley_angle_of_double(double x, bool inf) {
  if (inf || std::isinf(x)) return 0.0;
  const std::complex<double> num(x, -1.0), den(x, 1.0);
  return std::arg(num / den);
}

double cayley_angle(const BoundaryPoint& x) {
  return cayley_angle_of_double(x.inf ? 0.0 : x.to_double(), x.inf);
}

double chordal_dist(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x == y) return 0.0;
  const double t = 0.5 * (cayley_angle(x) - cayley_angle(y));
  return 2.0 * std::abs(std::sin(t));
}

double pair_hausdorff(const Geodesic& s1, const Geodesic& s2) {
  const double d11 = chordal_dist(s1.e1, s2.e1);
  const double d12 = chordal_dist(s1.e1, s2.e2);
  const double d21 = chordal_dist(s1.e2, s2.e1);
  const double d22 = chordal_dist(s1.e2, s2.e2);
  const double a = std::min(d11, d12);
  const double b = std::min(d21, d22);
  const double c = std::min(d11, d21);
  const double d = std::min(d12, d22);
  return std::max(std::max(a, b), std::max(c, d));
}

Arc::Arc(BoundaryPoint f, BoundaryPoint t) : from(std::move(f)), to(std::move(t)) {
  if (from == to) throw precondition_error("arc endpoints must be distinct");
}

bool Arc::contains(const BoundaryPoint& x) const {
  if (x == from || x == to) return true;
  return ccw(from, x, to);
}

bool Arc::intersects(const Arc& o) const {
  return contains(o.from) || contains(o.to) || o.contains(from) || o.contains(to);
}

namespace {
double mod_two_pi(double t) {
  const double tau = 2.0 * M_PI;
  t = std::fmod(t, tau);
  if (t < 0) t += tau;
  return t;
}
}  // namespace

// increasing x runs counterclockwise through the Cayley image
double Arc::angular_length() const {
  return mod_two_pi(cayley_angle(to) - cayley_angle(from));
}

Arc apply(const IntMat& m, const Arc& a) { return Arc(m.apply(a.from), m.apply(a.to)); }

PairBox::PairBox(Arc i, Arc j, double theta_floor, std::string name_)
    : I(std::move(i)), J(std::move(j)), name(std::move(name_)) {
  if (I.intersects(J)) throw precondition_error("box arcs must have disjoint closures");
  const double t = theta_min();
  if (t < theta_floor) throw precondition_error("box arcs too close: theta_min below floor");
}

double PairBox::theta_min() const {
  const double gap1 = mod_two_pi(cayley_angle(J.from) - cayley_angle(I.to));
  const double gap2 = mod_two_pi(cayley_angle(I.from) - cayley_angle(J.to));
  return std::min(gap1, gap2);
}

PairBox apply(const IntMat& m, const PairBox& b, double theta_floor) {
  return PairBox(apply(m, b.I), apply(m, b.J), theta_floor, b.name);
}

double box_window_radius(const PairBox& box, std::complex<double> basepoint) {
  const double t = box.theta_min();
  const double c = std::cos(0.5 * t);
  if (c >= 1.0) throw precondition_error("degenerate box: zero angular gap");
  double r = std::atanh(c);
  const std::complex<double> center(0.0, 1.0);
  if (std::abs(basepoint - center) > 1e-15) r += hyp_distance(basepoint, center);
  return r;
}

Horoball::Horoball(BoundaryPoint b, double h) : base(std::move(b)), height(h) {
  if (h <= 0) throw precondition_error("horoball height must be positive");
  if (base.is_surd()) throw precondition_error("horoball base must be parabolic (rational or inf)");
}

bool Horoball::contains(std::complex<double> z) const { return boundary_residual(z) > 0; }

double Horoball::boundary_residual(std::complex<double> z) const {
  if (base.inf) return z.imag() - height;
  const double q = to_double(Rat(base.c));
  const double x0 = to_double(Rat(base.a, base.c));
  const double r = 0.5 * height / (q * q);
  return r - std::abs(z - std::complex<double>(x0, r));
}

std::vector<std::complex<double>> horocycle_meet(const Horoball& hb, const Geodesic::Shape& s) {
  std::vector<std::complex<double>> out;
  if (hb.base.inf) {
    const double y = hb.height;
    if (s.is_vertical) {
      out.push_back({s.x0, y});
    } else if (s.radius > y) {
      const double dx = std::sqrt(s.radius * s.radius - y * y);
      out.push_back({s.center - dx, y});
      out.push_back({s.center + dx, y});
    }
    return out;
  }
  const double q = to_double(Rat(hb.base.c));
  const double rho = 0.5 * hb.height / (q * q);
  const double cx = to_double(Rat(hb.base.a, hb.base.c));
  if (s.is_vertical) {
    const double disc = rho * rho - (s.x0 - cx) * (s.x0 - cx);
    if (disc <= 0) return out;
    out.push_back({s.x0, rho - std::sqrt(disc)});
    out.push_back({s.x0, rho + std::sqrt(disc)});
    return out;
  }
  // horocycle: x^2+y^2 - 2 cx x - 2 rho y + cx^2 = 0; shape: x^2+y^2 = 2 c x + r^2 - c^2
  const double alpha = (s.center - cx) / rho;
  const double beta = (s.radius * s.radius - s.center * s.center + cx * cx) / (2 * rho);
  const double A = 1 + alpha * alpha;
  const double B = -2 * s.center + 2 * alpha * beta;
  const double C = beta * beta + s.center * s.center - s.radius * s.radius;
  const double disc = B * B - 4 * A * C;
  if (disc <= 0) return out;
  const double sq = std::sqrt(disc);
  for (double x : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
    const double y = alpha * x + beta;
    if (y > 0) out.push_back({x, y});
  }
  return out;
}

}  // namespace gcs

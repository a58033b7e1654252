#include "gcs/moebius.hpp"

#include "gcs/errors.hpp"

namespace gcs {

BoundaryPoint IntMat::apply(const BoundaryPoint& x) const {
  if (x.inf) {
    if (c == 0) return BoundaryPoint::infinity();
    return BoundaryPoint::rational(a, c);
  }
  // x = (u + v*sqrt(D)) / q with u=x.a, v=x.b, q=x.c
  const Int nu = a * x.a + b * x.c;
  const Int nv = a * x.b;
  const Int ds = c * x.a + d * x.c;
  const Int dt = c * x.b;
  if (x.b == 0) {
    if (ds == 0) return BoundaryPoint::infinity();
    return BoundaryPoint::rational(nu, ds);
  }
  const Int denom = ds * ds - dt * dt * x.d;
  if (denom == 0)
    // (c*x + d) == 0 would make x rational; impossible for a surd
    throw numerical_error("surd annihilated by matrix denominator");
  return BoundaryPoint::surd(nu * ds - nv * dt * x.d, nv * ds - nu * dt, denom, x.d);
}

std::complex<double> IntMat::apply(const std::complex<double>& z) const {
  const std::complex<double> num = to_double(a) * z + to_double(b);
  const std::complex<double> den = to_double(c) * z + to_double(d);
  return num / den;
}

MoebiusMap::MoebiusMap(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det() != 1) throw precondition_error("Moebius map must have determinant 1");
}

MoebiusMap MoebiusMap::from_int(const IntMat& m) {
  if (m.det() != 1) throw precondition_error("integer matrix must have determinant 1");
  return MoebiusMap(Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d));
}

MoebiusMap MoebiusMap::mul(const MoebiusMap& o) const {
  return MoebiusMap(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

bool MoebiusMap::is_plus_minus_identity() const {
  return b == 0 && c == 0 && a == d && (a == 1 || a == -1);
}

IntMat MoebiusMap::scaled_int() const {
  Int l = lcm(lcm(denominator(a), denominator(b)), lcm(denominator(c), denominator(d)));
  auto scale = [&](const Rat& r) { return numerator(r) * (l / denominator(r)); };
  IntMat m{scale(a), scale(b), scale(c), scale(d)};
  return m;
}

std::complex<double> MoebiusMap::apply(const std::complex<double>& z) const {
  const std::complex<double> num = to_double(a) * z + to_double(b);
  const std::complex<double> den = to_double(c) * z + to_double(d);
  return num / den;
}

}  // namespace gcs

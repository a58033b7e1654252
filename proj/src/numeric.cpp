#include "gcs/numeric.hpp"

#include <stdexcept>

namespace gcs {

SquarefreeSplit squarefree_split(Int d) {
  if (d <= 0) throw std::invalid_argument("squarefree_split: d must be positive");
  Int root = 1;
  Int out = 1;
  for (Int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    int mult = 0;
    while (d % p == 0) {
      d /= p;
      ++mult;
    }
    for (int i = 0; i < mult / 2; ++i) root *= p;
    if (mult % 2) out *= p;
  }
  out *= d;  // leftover prime
  return {out, root};
}

int surd_sign(const Int& a, const Int& b, const Int& d) {
  const int sa = a.sign();
  if (d == 0 || b == 0) return sa;
  const int sb = b.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const Int diff = a * a - b * b * d;
  const int s = diff.sign();
  if (s == 0) return 0;
  return s > 0 ? sa : sb;
}

int quad_sign(Int a, Int b, Int c, Int e, Int d1, Int d2) {
  if (d1 == 0) { b = 0; e = 0; }
  if (d2 == 0) { c = 0; e = 0; }
  if (d1 == 1) { a += b; b = 0; c += e; e = 0; }
  if (d2 == 1) { a += c; c = 0; b += e; e = 0; }
  if (d1 == d2 && d1 > 1) {
    // sqrt(d1*d2) = d1
    a += e * d1;
    e = 0;
    b += c;
    c = 0;
  }
  if (c == 0 && e == 0) return surd_sign(a, b, d1);
  if (b == 0 && e == 0 && a == 0) return c.sign();
  // expr = L + R*sqrt(d2), with L = a + b*sqrt(d1), R = c + e*sqrt(d1)
  const int sl = surd_sign(a, b, d1);
  const int sr = surd_sign(c, e, d1);
  if (sr == 0) return sl;
  if (sl == 0) return sr;
  if (sl == sr) return sl;
  // opposite signs: compare L^2 with R^2 * d2 (both single-surd over d1)
  const Int la = a * a + b * b * d1;
  const Int lb = 2 * a * b;
  const Int ra = (c * c + e * e * d1) * d2;
  const Int rb = 2 * c * e * d2;
  const int s2 = surd_sign(la - ra, lb - rb, d1);
  if (s2 == 0) return 0;
  return s2 > 0 ? sl : sr;
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
  QuadInt r = *this;
  r.x0 += o.x0;
  r.x1 += o.x1;
  r.x2 += o.x2;
  r.x3 += o.x3;
  return r;
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
  QuadInt r = *this;
  r.x0 -= o.x0;
  r.x1 -= o.x1;
  r.x2 -= o.x2;
  r.x3 -= o.x3;
  return r;
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
  QuadInt r;
  r.d1 = d1;
  r.d2 = d2;
  // basis products: 1, s1, s2, s1*s2 with s1^2=d1, s2^2=d2
  r.x0 = x0 * o.x0 + x1 * o.x1 * d1 + x2 * o.x2 * d2 + x3 * o.x3 * d1 * d2;
  r.x1 = x0 * o.x1 + x1 * o.x0 + x2 * o.x3 * d2 + x3 * o.x2 * d2;
  r.x2 = x0 * o.x2 + x2 * o.x0 + x1 * o.x3 * d1 + x3 * o.x1 * d1;
  r.x3 = x0 * o.x3 + x3 * o.x0 + x1 * o.x2 + x2 * o.x1;
  return r;
}

double to_double(const Int& x) { return x.convert_to<double>(); }
double to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace gcs

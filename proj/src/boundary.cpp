#include "gcs/boundary.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "gcs/errors.hpp"

namespace gcs {

BoundaryPoint BoundaryPoint::infinity() {
  BoundaryPoint p;
  p.inf = true;
  p.a = 0;
  p.b = 0;
  p.c = 1;
  p.d = 1;
  return p;
}

BoundaryPoint BoundaryPoint::rational(Int p, Int q) {
  if (q == 0) return infinity();
  BoundaryPoint r;
  r.a = std::move(p);
  r.c = std::move(q);
  r.canonicalize();
  return r;
}

BoundaryPoint BoundaryPoint::surd(Int a, Int b, Int c, Int d) {
  if (c == 0) throw precondition_error("surd with zero denominator");
  BoundaryPoint r;
  r.a = std::move(a);
  r.b = std::move(b);
  r.c = std::move(c);
  r.d = std::move(d);
  r.canonicalize();
  return r;
}

void BoundaryPoint::canonicalize() {
  if (inf) {
    a = 0;
    b = 0;
    c = 1;
    d = 1;
    return;
  }
  if (c == 0) throw precondition_error("boundary point with zero denominator");
  if (b != 0) {
    if (d <= 0) throw precondition_error("surd with non-positive discriminant");
    auto split = squarefree_split(d);
    b *= split.root;
    d = split.squarefree;
    if (d == 1) {
      a += b;
      b = 0;
    }
  }
  if (b == 0) d = 1;
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  Int g = gcd(gcd(abs(a), abs(b)), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
}

double BoundaryPoint::to_double() const {
  if (inf) return std::numeric_limits<double>::infinity();
  double v = gcs::to_double(Rat(a, c));
  if (b != 0) v += gcs::to_double(Rat(b, c)) * std::sqrt(gcs::to_double(d));
  return v;
}

std::string BoundaryPoint::str() const {
  if (inf) return "inf";
  std::ostringstream os;
  if (b == 0) {
    os << a << "/" << c;
  } else {
    os << "(" << a << (b < 0 ? "-" : "+") << abs(b) << "*sqrt(" << d << "))/" << c;
  }
  return os.str();
}

BoundaryPoint parse_boundary_point(const std::string& s) {
  if (s == "inf" || s == "oo") return BoundaryPoint::infinity();
  auto lp = s.find('(');
  if (lp == std::string::npos) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BoundaryPoint::rational(Int(s), 1);
    return BoundaryPoint::rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }
  // (a+b*sqrt(D))/c
  auto sq = s.find("*sqrt(");
  auto rp = s.find(')', sq + 6);
  auto last = s.rfind('/');
  if (sq == std::string::npos || rp == std::string::npos || last == std::string::npos)
    throw precondition_error("unparsable boundary point: " + s);
  std::string body = s.substr(lp + 1, sq - lp - 1);
  // split body at last +/- that is not a leading sign
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i)
    if (body[i] == '+' || body[i] == '-') split = i;
  if (split == std::string::npos) throw precondition_error("unparsable boundary point: " + s);
  Int a(body.substr(0, split));
  Int b(body.substr(split));  // includes sign
  Int d(s.substr(sq + 6, rp - sq - 6));
  Int c(s.substr(last + 1));
  return BoundaryPoint::surd(a, b, c, d);
}

int compare(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x.inf && y.inf) return 0;
  if (x.inf) return 1;
  if (y.inf) return -1;
  // sign of x - y, denominators positive
  return quad_sign(x.a * y.c - y.a * x.c, x.b * y.c, -y.b * x.c, Int(0), x.d, y.d);
}

bool ccw(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r) {
  if (p == q || q == r || p == r) throw precondition_error("ccw on non-distinct points");
  if (p.inf) return compare(q, r) < 0;
  if (q.inf) return compare(r, p) < 0;
  if (r.inf) return compare(p, q) < 0;
  const bool pq = compare(p, q) < 0;
  const bool qr = compare(q, r) < 0;
  const bool rp = compare(r, p) < 0;
  return (pq && qr) || (qr && rp) || (rp && pq);
}

int cusp_class(const BoundaryPoint& p) {
  if (p.is_surd()) throw precondition_error("cusp_class of a surd");
  // inf = 1/0
  const Int num = p.inf ? 1 : p.a;
  const Int den = p.inf ? 0 : p.c;
  const bool no = (num % 2) != 0;
  const bool de = (den % 2) != 0;
  if (no && !de) return 0;
  if (!no && de) return 1;
  if (no && de) return 2;
  throw precondition_error("rational with even numerator and denominator");
}

std::size_t hash_value(const BoundaryPoint& p) {
  std::hash<std::string> h;
  return h(p.str());
}

}  // namespace gcs

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gcs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }

// D = square * squarefree; returns {squarefree, square_root_factor}
struct SquarefreeSplit {
  Int squarefree;
  Int root;  // D == squarefree * root^2
};
SquarefreeSplit squarefree_split(Int d);

// sign of A + B*sqrt(D), D >= 0
int surd_sign(const Int& a, const Int& b, const Int& d);

// sign of A + B*sqrt(D1) + C*sqrt(D2) + E*sqrt(D1*D2), D1,D2 >= 0
int quad_sign(Int a, Int b, Int c, Int e, Int d1, Int d2);

// Element of Z[sqrt(D1), sqrt(D2)] as x0 + x1*sqrt(D1) + x2*sqrt(D2) + x3*sqrt(D1*D2).
// Used for exact side-of-wall tests at crossing points of two geodesics.
struct QuadInt {
  Int x0, x1, x2, x3;
  Int d1, d2;  // both fields share the same (d1, d2)

  QuadInt() : x0(0), x1(0), x2(0), x3(0), d1(1), d2(1) {}
  QuadInt(Int v, Int d1_, Int d2_) : x0(std::move(v)), x1(0), x2(0), x3(0), d1(std::move(d1_)), d2(std::move(d2_)) {}

  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator*(const QuadInt& o) const;
  int sign() const { return quad_sign(x0, x1, x2, x3, d1, d2); }
  bool is_zero() const { return x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0; }
};

double to_double(const Int& x);
double to_double(const Rat& x);

}  // namespace gcs

#pragma once

#include <complex>
#include <string>
#include <variant>

namespace marf {

using Complex = std::complex<double>;

inline constexpr double kTraceEps = 1e-9;

// A point of R u {inf}.
struct BoundaryPoint {
  double x = 0.0;
  bool infinite = false;

  static BoundaryPoint at(double v);
  static BoundaryPoint inf() { return {0.0, true}; }
  std::string to_string() const;
};

// Element of PSL(2,R): unimodular, sign fixed so the first nonzero of (a,b,c) is positive.
struct Moebius {
  double a = 1, b = 0, c = 0, d = 1;

  // rescales by sqrt(det); throws Degenerate for det <= 0
  static Moebius make(double a, double b, double c, double d);
  static Moebius identity() { return {}; }
  static Moebius diag(double lambda) { return make(lambda, 0, 0, 1 / lambda); }

  Moebius operator*(const Moebius& o) const;
  Moebius inverse() const { return {d, -b, -c, a}; }
  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }

  Complex apply(Complex z) const;
  BoundaryPoint apply(BoundaryPoint p) const;
};

Moebius canonical_sign(Moebius m);
Moebius conjugate(const Moebius& by, const Moebius& m);  // by * m * by^-1
Moebius commutator(const Moebius& x, const Moebius& y);  // x y x^-1 y^-1
// min over both signs of the max entry difference
double distance(const Moebius& x, const Moebius& y);
bool approx_equal(const Moebius& x, const Moebius& y, double tol = 1e-7);
bool is_identity(const Moebius& m, double tol = kTraceEps);

struct Identity {};
struct Hyperbolic {
  BoundaryPoint attracting;
  BoundaryPoint repelling;
  double shift = 0;
};
struct Parabolic {
  BoundaryPoint fixed;
  bool positive = false;
};
struct Elliptic {
  Complex fixed;
  double angle = 0;  // counterclockwise, in (0, 2pi)
};

using ElementClass = std::variant<Identity, Hyperbolic, Parabolic, Elliptic>;

ElementClass classify(const Moebius& m);
bool is_hyperbolic(const Moebius& m);
bool is_elliptic(const Moebius& m);
const char* kind_name(const ElementClass& e);

Moebius rotation_about(Complex x, double phi);

// strict interleaving of the fixed points; throws NotHyperbolic, SharedAxis
bool axes_intersect(const Moebius& m1, const Moebius& m2);

// hyperbolic: attracting < repelling; parabolic: g(x) > x. Throws Infinite.
bool is_positive(const Moebius& m);

// N with N m N^-1 in standard position: elliptic fixed point -> i;
// hyperbolic repelling -> 0, attracting -> inf; parabolic fixed point -> inf.
Moebius standard_conjugator(const Moebius& m);

// point on the unit circle for a boundary point, via z -> (z - i)/(z + i)
Complex to_disk(BoundaryPoint p);
Complex to_disk(Complex z);

}  // namespace marf

#pragma once

#include "marf/moebius.hpp"

namespace marf {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Image angle in [0, 2pi) of the boundary circle action of m, the circle
// parametrized by theta = arg((x - i)/(x + i)).
double circle_image(const Moebius& m, double theta);
double boundary_angle(BoundaryPoint p);

// Element of the universal cover (modulus 0) or of G_m (modulus m >= 1).
// anchor = phi(0) for the increasing lift phi of the circle action of base.
struct LiftedElement {
  Moebius base;
  double anchor = 0;
  int modulus = 0;

  // phi(theta) by monotone unwrapping from the anchor
  double eval(double theta) const;
};

LiftedElement make_lift(const Moebius& base, double anchor, int modulus = 0);
LiftedElement canonical_lift(const Moebius& m, int modulus = 0);
LiftedElement central(long long k, int modulus = 0);  // u^k

LiftedElement multiply(const LiftedElement& x, const LiftedElement& y);
LiftedElement operator*(const LiftedElement& x, const LiftedElement& y);
LiftedElement invert(const LiftedElement& e);
LiftedElement pow(const LiftedElement& e, long long n);
LiftedElement shift_level(const LiftedElement& e, long long k);

// integer level for modulus 0, residue in [0, m) otherwise.
// Throws NumericallyAmbiguous when the rounding residual reaches 0.1.
long long level(const LiftedElement& e);

// identity tolerance used when deciding that a product has identity base
inline constexpr double kIdentityTol = 1e-6;

}  // namespace marf

#include "marf/covering.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "marf/error.hpp"

namespace marf {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double t) {
  double r = std::fmod(t, kTwoPi);
  return r < 0 ? r + kTwoPi : r;
}

double reduce_anchor(double anchor, int modulus) {
  if (modulus <= 0) return anchor;
  const double period = kTwoPi * modulus;
  double r = std::fmod(anchor, period);
  return r < 0 ? r + period : r;
}

long long checked_round(double turns) {
  const double k = std::round(turns);
  if (std::abs(turns - k) >= 0.1) {
    throw Error(ErrorCode::NumericallyAmbiguous, "level residual " + std::to_string(turns - k));
  }
  return static_cast<long long>(k);
}

long long integer_level(const LiftedElement& e) {
  const auto cls = classify(e.base);
  if (std::holds_alternative<Identity>(cls) || is_identity(e.base, kIdentityTol)) {
    return checked_round(e.anchor / kTwoPi);
  }
  if (auto* el = std::get_if<Elliptic>(&cls)) {
    // conjugate the fixed point to i by T (T fixes inf, so its lift fixes 0);
    // there the element rotates the circle rigidly by xi
    const double x = el->fixed.real(), sy = std::sqrt(el->fixed.imag());
    const Moebius t_inv = Moebius{sy, x / sy, 0, 1 / sy}.inverse();
    const double v = e.anchor;
    const double q = std::floor(v / kTwoPi);
    const double r = v - q * kTwoPi;
    const double xi = q * kTwoPi + circle_image(t_inv, r);
    const double s = (xi - kPi) / kTwoPi;
    const double near = std::round(s);
    if (std::abs(s - near) < 1e-6 / kTwoPi) return static_cast<long long>(near);
    return static_cast<long long>(std::ceil(s));
  }
  BoundaryPoint fp;
  if (auto* h = std::get_if<Hyperbolic>(&cls)) {
    fp = h->attracting;
  } else {
    fp = std::get<Parabolic>(cls).fixed;
  }
  const double th = boundary_angle(fp);
  return checked_round((e.eval(th) - th) / kTwoPi);
}

}  // namespace

double boundary_angle(BoundaryPoint p) {
  if (p.infinite) return 0.0;
  return wrap(std::arg(to_disk(p)));
}

namespace {

// disk matrix W = C M C^-1 with C = [[1, -i], [1, i]]; W = [[alpha, beta], [conj beta, conj alpha]]
std::pair<Complex, Complex> disk_entries(const Moebius& m) {
  return {0.5 * Complex(m.a + m.d, m.b - m.c), 0.5 * Complex(m.a - m.d, -(m.b + m.c))};
}

// continuous lift of the circle action: theta + 2 arg(alpha) + 2 Arg(1 + (beta/alpha) e^{-i theta}),
// the last term stays in (-pi, pi) because |beta| < |alpha|
double base_lift(const Moebius& m, double theta) {
  const auto [alpha, beta] = disk_entries(m);
  const Complex q = beta / alpha;
  return theta + 2.0 * std::arg(alpha) + 2.0 * std::arg(1.0 + q * std::polar(1.0, -theta));
}

}  // namespace

double circle_image(const Moebius& m, double theta) { return wrap(base_lift(m, theta)); }

double LiftedElement::eval(double theta) const {
  const double k = std::round((anchor - base_lift(base, 0.0)) / kTwoPi);
  return base_lift(base, theta) + k * kTwoPi;
}

LiftedElement make_lift(const Moebius& base, double anchor, int modulus) {
  if (modulus < 0) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 0");
  return {base, reduce_anchor(anchor, modulus), modulus};
}

LiftedElement canonical_lift(const Moebius& m, int modulus) {
  LiftedElement e{m, circle_image(m, 0.0), 0};
  const long long k = integer_level(e);
  return make_lift(m, e.anchor - kTwoPi * static_cast<double>(k), modulus);
}

LiftedElement central(long long k, int modulus) {
  return make_lift(Moebius::identity(), kTwoPi * static_cast<double>(k), modulus);
}

LiftedElement multiply(const LiftedElement& x, const LiftedElement& y) {
  if (x.modulus != y.modulus) throw Error(ErrorCode::ModulusMismatch, "lifts live in different covers");
  return make_lift(x.base * y.base, x.eval(y.eval(0.0)), x.modulus);
}

LiftedElement operator*(const LiftedElement& x, const LiftedElement& y) { return multiply(x, y); }

LiftedElement invert(const LiftedElement& e) {
  const Moebius inv = e.base.inverse();
  const double t0 = circle_image(inv, 0.0);
  const double k = std::round(e.eval(t0) / kTwoPi);
  return make_lift(inv, t0 - kTwoPi * k, e.modulus);
}

LiftedElement pow(const LiftedElement& e, long long n) {
  if (n < 0) return pow(invert(e), -n);
  LiftedElement out = central(0, e.modulus);
  LiftedElement sq = e;
  // square-and-multiply; the cover group is associative
  while (n > 0) {
    if (n & 1) out = multiply(out, sq);
    n >>= 1;
    if (n > 0) sq = multiply(sq, sq);
  }
  return out;
}

LiftedElement shift_level(const LiftedElement& e, long long k) {
  return make_lift(e.base, e.anchor + kTwoPi * static_cast<double>(k), e.modulus);
}

long long level(const LiftedElement& e) {
  const long long k = integer_level(e);
  if (e.modulus == 0) return k;
  const long long r = k % e.modulus;
  return r < 0 ? r + e.modulus : r;
}

}  // namespace marf

#include "marf/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "marf/error.hpp"

namespace marf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHuge = 1e15;
constexpr double kZero = 1e-300;

// roots of c x^2 + (d - a) x - b = 0 for |tr| > 2, numerically stable
std::pair<BoundaryPoint, BoundaryPoint> hyperbolic_roots(const Moebius& m) {
  const double B = m.d - m.a;
  const double disc = std::max(0.0, m.trace() * m.trace() - 4.0);
  const double s = std::sqrt(disc);
  if (std::abs(m.c) < kZero) return {BoundaryPoint::inf(), BoundaryPoint::at(m.b / B)};
  const double q = -0.5 * (B + (B >= 0 ? s : -s));
  BoundaryPoint x1 = BoundaryPoint::at(q / m.c);
  BoundaryPoint x2 = std::abs(q) < kZero ? BoundaryPoint::inf() : BoundaryPoint::at(-m.b / q);
  return {x1, x2};
}

// |M'(x)| < 1 at a finite fixed point
bool attracting_at(const Moebius& m, double x) { return std::abs(m.c * x + m.d) > 1.0; }

}  // namespace

BoundaryPoint BoundaryPoint::at(double v) {
  if (!std::isfinite(v) || std::abs(v) > kHuge) return inf();
  return {v, false};
}

std::string BoundaryPoint::to_string() const { return infinite ? "inf" : std::to_string(x); }

Moebius canonical_sign(Moebius m) {
  constexpr double tiny = 1e-12;
  double lead = std::abs(m.a) > tiny ? m.a : (std::abs(m.b) > tiny ? m.b : m.c);
  if (lead < 0) m = {-m.a, -m.b, -m.c, -m.d};
  return m;
}

Moebius Moebius::make(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0) || !std::isfinite(det)) throw Error(ErrorCode::Degenerate, "determinant must be positive");
  const double s = 1.0 / std::sqrt(det);
  return canonical_sign({a * s, b * s, c * s, d * s});
}

Moebius Moebius::operator*(const Moebius& o) const {
  Moebius r{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  // renormalize only where ad - bc can be evaluated accurately
  const double det = r.det();
  const double mag = std::abs(r.a * r.d) + std::abs(r.b * r.c);
  if (mag < 1e6 && std::abs(det - 1.0) > 1e-12 && det > 0) {
    const double s = 1.0 / std::sqrt(det);
    r = {r.a * s, r.b * s, r.c * s, r.d * s};
  }
  return canonical_sign(r);
}

Complex Moebius::apply(Complex z) const { return (a * z + b) / (c * z + d); }

BoundaryPoint Moebius::apply(BoundaryPoint p) const {
  if (p.infinite) return std::abs(c) < kZero ? BoundaryPoint::inf() : BoundaryPoint::at(a / c);
  const double den = c * p.x + d;
  if (std::abs(den) < kZero) return BoundaryPoint::inf();
  return BoundaryPoint::at((a * p.x + b) / den);
}

Moebius conjugate(const Moebius& by, const Moebius& m) { return by * m * by.inverse(); }

Moebius commutator(const Moebius& x, const Moebius& y) { return x * y * x.inverse() * y.inverse(); }

double distance(const Moebius& x, const Moebius& y) {
  auto diff = [&](double s) {
    return std::max({std::abs(x.a - s * y.a), std::abs(x.b - s * y.b), std::abs(x.c - s * y.c),
                     std::abs(x.d - s * y.d)});
  };
  return std::min(diff(1.0), diff(-1.0));
}

bool approx_equal(const Moebius& x, const Moebius& y, double tol) { return distance(x, y) < tol; }

bool is_identity(const Moebius& m, double tol) { return distance(m, Moebius::identity()) < tol; }

ElementClass classify(const Moebius& m) {
  // unimodular up to the rounding of ad - bc
  const double det = m.det();
  const double mag = std::abs(m.a * m.d) + std::abs(m.b * m.c);
  if (!std::isfinite(mag) || std::abs(det - 1.0) > 1e-6 + 1e-8 * mag) {
    throw Error(ErrorCode::Degenerate, "non-invertible matrix");
  }
  const double t = std::abs(m.trace());
  if (t > 2.0 + kTraceEps) {
    auto [x1, x2] = hyperbolic_roots(m);
    bool first_attracts;
    if (!x1.infinite) {
      first_attracts = attracting_at(m, x1.x);
    } else {
      first_attracts = !attracting_at(m, x2.x);
    }
    Hyperbolic h;
    h.attracting = first_attracts ? x1 : x2;
    h.repelling = first_attracts ? x2 : x1;
    h.shift = 2.0 * std::acosh(t / 2.0);
    return h;
  }
  if (t >= 2.0 - kTraceEps) {
    if (is_identity(m)) return Identity{};
    Parabolic p;
    const double tr = m.trace();
    if (std::abs(m.c) < kZero) {
      p.fixed = BoundaryPoint::inf();
      p.positive = m.b * tr > 0;
    } else {
      p.fixed = BoundaryPoint::at((m.a - m.d) / (2.0 * m.c));
      p.positive = m.c * tr < 0;
    }
    return p;
  }
  Elliptic e;
  const double s = std::sqrt(4.0 - m.trace() * m.trace());
  const Complex num(m.a - m.d, m.c > 0 ? s : -s);
  e.fixed = num / (2.0 * m.c);
  const Complex k = m.c * e.fixed + m.d;
  double ang = std::arg(1.0 / (k * k));
  if (ang <= 0) ang += 2 * kPi;
  e.angle = ang;
  return e;
}

bool is_hyperbolic(const Moebius& m) { return std::holds_alternative<Hyperbolic>(classify(m)); }
bool is_elliptic(const Moebius& m) { return std::holds_alternative<Elliptic>(classify(m)); }

const char* kind_name(const ElementClass& e) {
  switch (e.index()) {
    case 0: return "identity";
    case 1: return "hyperbolic";
    case 2: return "parabolic";
    default: return "elliptic";
  }
}

Moebius rotation_about(Complex x, double phi) {
  if (!(x.imag() > 0)) throw Error(ErrorCode::InvalidArgument, "rotation centre must lie in the upper half-plane");
  const double y = x.imag(), sy = std::sqrt(y);
  const Moebius T{sy, x.real() / sy, 0, 1 / sy};
  const Moebius R{std::cos(phi / 2), std::sin(phi / 2), -std::sin(phi / 2), std::cos(phi / 2)};
  return T * R * T.inverse();
}

bool axes_intersect(const Moebius& m1, const Moebius& m2) {
  auto e1 = classify(m1), e2 = classify(m2);
  auto* h1 = std::get_if<Hyperbolic>(&e1);
  auto* h2 = std::get_if<Hyperbolic>(&e2);
  if (!h1 || !h2) throw Error(ErrorCode::NotHyperbolicElement, "axes_intersect needs hyperbolic elements");
  auto ang = [](BoundaryPoint p) { return p.infinite ? kPi : 2.0 * std::atan(p.x); };
  double u1 = ang(h1->attracting), u2 = ang(h1->repelling);
  double v1 = ang(h2->attracting), v2 = ang(h2->repelling);
  if (u1 > u2) std::swap(u1, u2);
  if (v1 > v2) std::swap(v1, v2);
  constexpr double tol = 1e-9;
  if (std::abs(u1 - v1) < tol && std::abs(u2 - v2) < tol) throw Error(ErrorCode::SharedAxis, "identical axes");
  auto inside = [&](double v) { return v > u1 + tol && v < u2 - tol; };
  auto outside = [&](double v) { return v < u1 - tol || v > u2 + tol; };
  return (inside(v1) && outside(v2)) || (outside(v1) && inside(v2));
}

bool is_positive(const Moebius& m) {
  auto e = classify(m);
  if (auto* h = std::get_if<Hyperbolic>(&e)) {
    if (h->attracting.infinite || h->repelling.infinite) {
      throw Error(ErrorCode::Infinite, "fixed point at infinity; conjugate first");
    }
    return h->attracting.x < h->repelling.x;
  }
  if (auto* p = std::get_if<Parabolic>(&e)) return p->positive;
  throw Error(ErrorCode::NotApplicable, "positivity is defined for hyperbolic and parabolic elements");
}

Moebius standard_conjugator(const Moebius& m) {
  auto e = classify(m);
  if (auto* el = std::get_if<Elliptic>(&e)) {
    const double x = el->fixed.real(), sy = std::sqrt(el->fixed.imag());
    return Moebius{sy, x / sy, 0, 1 / sy}.inverse();
  }
  if (auto* p = std::get_if<Parabolic>(&e)) {
    if (p->fixed.infinite) return Moebius::identity();
    return Moebius::make(0, -1, 1, -p->fixed.x);
  }
  if (auto* h = std::get_if<Hyperbolic>(&e)) {
    const auto att = h->attracting, rep = h->repelling;
    if (att.infinite) return Moebius::make(1, -rep.x, 0, 1);
    if (rep.infinite) return Moebius::make(0, -1, 1, -att.x);
    if (rep.x > att.x) return Moebius::make(1, -rep.x, 1, -att.x);
    return Moebius::make(-1, rep.x, 1, -att.x);
  }
  return Moebius::identity();
}

Complex to_disk(BoundaryPoint p) {
  if (p.infinite) return {1.0, 0.0};
  const Complex z(p.x, 0.0);
  return (z - Complex(0, 1)) / (z + Complex(0, 1));
}

Complex to_disk(Complex z) { return (z - Complex(0, 1)) / (z + Complex(0, 1)); }

}  // namespace marf

#include "marf/fuchsian.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/tools/minima.hpp>

#include "marf/error.hpp"

namespace marf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRelationTol = 1e-6;
constexpr double kAngleTol = 1e-6;
constexpr double kMidLength = 2.0;   // translation length of interior prefix products
constexpr double kHoleLength = 2.0;  // boundary length of the handle holes

// ---- sites and orientation -------------------------------------------------

struct Site {
  bool ideal = false;
  Complex z;
  BoundaryPoint b;
};

std::vector<Site> sites_of(const Moebius& m) {
  auto cls = classify(m);
  if (auto* e = std::get_if<Elliptic>(&cls)) return {Site{false, e->fixed, {}}};
  if (auto* h = std::get_if<Hyperbolic>(&cls)) return {Site{true, {}, h->attracting}, Site{true, {}, h->repelling}};
  if (auto* p = std::get_if<Parabolic>(&cls)) return {Site{true, {}, p->fixed}};
  return {};
}

// disk coordinate centred at c
Complex disk_point(const Site& s, Complex c) {
  if (s.ideal) {
    if (s.b.infinite) return {1.0, 0.0};
    const Complex x(s.b.x, 0.0);
    return (x - c) / (x - std::conj(c));
  }
  return (s.z - c) / (s.z - std::conj(c));
}

// sign of the geodesic triangle (p1, p2, p3); vertices may be ideal
int orient3(const Site& a, const Site& b, const Site& c) {
  std::array<Site, 3> p{a, b, c};
  for (int k = 0; k < 3 && p[0].ideal; ++k) std::rotate(p.begin(), p.begin() + 1, p.end());
  double v;
  if (!p[0].ideal) {
    // geodesics through the centre are diameters
    const Complex w2 = disk_point(p[1], p[0].z), w3 = disk_point(p[2], p[0].z);
    v = std::imag(std::conj(w2) * w3);
  } else {
    const Complex i(0, 1);
    const Complex w1 = disk_point(p[0], i), w2 = disk_point(p[1], i), w3 = disk_point(p[2], i);
    v = std::imag(std::conj(w2 - w1) * (w3 - w1));
  }
  if (std::abs(v) < 1e-12) return 0;
  return v > 0 ? 1 : -1;
}

double frobenius(const Moebius& m) { return std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d); }

// trace slack for a product x*y: floating point error grows with the entry sizes
double trace_tol(double base, const Moebius& x, const Moebius& y) { return base + 1e-12 * frobenius(x) * frobenius(y); }

bool is_order_two(const Moebius& m) { return std::abs(m.trace()) < 1e-6; }

bool looks_elliptic(const Moebius& m) { return std::abs(m.trace()) < 2.0 - kTraceEps; }

double rotation_angle(const Moebius& m) {
  auto cls = classify(m);
  if (auto* e = std::get_if<Elliptic>(&cls)) return e->angle;
  return -1.0;
}

// ---- constructions ----------------------------------------------------------

struct Item {
  bool hole = false;
  int p = 0;
  double length = 0;
};

Moebius push(double d) {
  return {std::cosh(d / 2), std::sinh(d / 2), std::sinh(d / 2), std::cosh(d / 2)};
}

Moebius model(const Item& it, int sgn) {
  if (!it.hole) return rotation_about({0, 1}, 2 * kPi / it.p);
  const Moebius x = Moebius::diag(std::exp(it.length / 2));
  return sgn > 0 ? x : x.inverse();
}

// plain SL(2) product, no sign normalization, so traces vary continuously
Moebius raw_mul(const Moebius& x, const Moebius& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Moebius place(const Item& it, int sgn, double d) {
  const Moebius k = push(d);
  return raw_mul(raw_mul(k, model(it, sgn)), k.inverse());
}

// Slides a copy of the model element along the geodesic through the standard
// site of h, bisecting each sign change of |tr(h x)| - target, and returns the
// first root accepted by the predicate.
Moebius attach(const Moebius& h, const Item& it, double target, const std::function<bool(const Moebius&)>& accept) {
  const Moebius n = standard_conjugator(h);
  const Moebius hn = n * h * n.inverse();
  const Moebius n_inv = n.inverse();
  constexpr int kGrid = 600;
  constexpr double kLo = 1e-6, kHi = 12.0;
  double f_first = 0, f_last = 0;
  for (int sgn : {1, -1}) {
    if (!it.hole && sgn < 0) continue;
    for (int side : {1, -1}) {
      // a zero target (half-turn) is a double root of |tr|, so track the signed trace there
      auto f = [&](double d) {
        const double t = raw_mul(hn, place(it, sgn, side * d)).trace();
        return target < 1e-12 ? t : std::abs(t) - target;
      };
      std::vector<double> grid(kGrid), vals(kGrid);
      for (int i = 0; i < kGrid; ++i) {
        grid[i] = kLo + (kHi - kLo) * i / (kGrid - 1);
        vals[i] = f(grid[i]);
      }
      f_first = vals.front();
      f_last = vals.back();
      for (int i = 0; i + 1 < kGrid; ++i) {
        if (!(vals[i] == 0 || vals[i] * vals[i + 1] < 0)) continue;
        double lo = grid[i], hi = grid[i + 1], flo = vals[i];
        for (int k = 0; k < 100; ++k) {
          const double mid = 0.5 * (lo + hi);
          const double fm = f(mid);
          if (fm * flo > 0) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        const Moebius x = n_inv * canonical_sign(place(it, sgn, side * lo)) * n;
        if (accept(x)) return x;
      }
    }
  }
  throw Error(ErrorCode::SearchFailed, "no admissible root; trace curve runs from " + std::to_string(f_first) +
                                           " to " + std::to_string(f_last) + " (offset from target)");
}

// Genus-0 tuple with the given cone/hole items and product 1, built one
// generator at a time by triple searches on the running prefix product.
std::vector<Moebius> chain(const std::vector<Item>& items) {
  const int n = static_cast<int>(items.size());
  std::vector<Moebius> gens{model(items[0], 1)};
  Moebius h = gens[0];
  for (int i = 1; i < n - 1; ++i) {
    const Item& it = items[i];
    double target;
    std::function<bool(const Moebius&)> accept;
    if (i < n - 2) {
      target = 2 * std::cosh(kMidLength / 2);
      accept = [&, target](const Moebius& x) {
        const Moebius prod = h * x;
        if (looks_elliptic(prod) || std::abs(std::abs(prod.trace()) - target) > trace_tol(1e-8, h, x)) return false;
        if (it.hole && std::abs(std::abs(x.trace()) - 2 * std::cosh(it.length / 2)) > trace_tol(1e-9, x, x)) {
          return false;
        }
        return triple_orientation(h, x, prod.inverse()) == 1;
      };
    } else {
      const Item& last = items[n - 1];
      if (!last.hole) {
        target = 2 * std::cos(kPi / last.p);
        accept = [&](const Moebius& x) {
          const Moebius c = (h * x).inverse();
          if (!looks_elliptic(c) || std::abs(rotation_angle(c) - 2 * kPi / last.p) > kAngleTol) return false;
          return triple_orientation(h, x, c) == 1;
        };
      } else {
        target = 2 * std::cosh(last.length / 2);
        accept = [&](const Moebius& x) {
          const Moebius c = (h * x).inverse();
          if (looks_elliptic(c) || std::abs(std::abs(c.trace()) - target) > trace_tol(1e-8, h, x)) return false;
          return triple_orientation(h, x, c) == 1;
        };
      }
    }
    const Moebius x = attach(h, it, target, accept);
    gens.push_back(x);
    h = h * x;
  }
  gens.push_back(h.inverse());
  return gens;
}

// tr[A,B] from traces; invariant under the sign of either matrix
double commutator_trace(const Moebius& a, const Moebius& b) {
  const double ta = a.trace(), tb = b.trace();
  const double tab = a.a * b.a + a.b * b.c + a.c * b.b + a.d * b.d;
  return ta * ta + tb * tb + tab * tab - ta * tb * tab - 2;
}

std::pair<Moebius, Moebius> handle_pair(double l) {
  return {Moebius::diag(std::exp(l / 2)), push(l)};
}

// handle pair whose commutator has trace `target` (< 2)
std::pair<Moebius, Moebius> solve_handle(double target, double hi) {
  double lo = 1e-9;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    auto [a, b] = handle_pair(mid);
    if (commutator_trace(a, b) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return handle_pair(lo);
}

// handle pair whose commutator equals the hyperbolic element d; solved
// against the actual trace of d so that conjugation matches it exactly
std::pair<Moebius, Moebius> glue(const Moebius& d) {
  auto [a0, b0] = solve_handle(-std::abs(d.trace()), 30.0);
  const Moebius d0 = commutator(a0, b0);
  const Moebius k = standard_conjugator(d).inverse() * standard_conjugator(d0);
  Moebius a = conjugate(k, a0), b = conjugate(k, b0);
  if (!approx_equal(commutator(a, b), d, kRelationTol)) {
    throw Error(ErrorCode::SearchFailed, "handle gluing residual " + std::to_string(distance(commutator(a, b), d)));
  }
  return {a, b};
}

// sum over generators of cosh d(z, Mz) = |T^-1 M T|_F^2 / 2 for T(i) = z
double spread(const std::vector<Moebius>& gens, double x, double s) {
  const Complex z(x, std::exp(s));
  double total = 0;
  for (const auto& m : gens) {
    const Complex w = m.apply(z);
    total += 1 + std::norm(z - w) / (2 * z.imag() * w.imag());
  }
  return total;
}

// Conjugates the set so that its generators have the smallest entries.
// The spread is convex along geodesics, so alternating line searches settle.
SequentialSet centred(const SequentialSet& v) {
  const auto gens = v.generators();
  double x = 0, s = 0;
  const int bits = std::numeric_limits<double>::digits / 2;
  for (int round = 0; round < 40; ++round) {
    const double before = spread(gens, x, s);
    x = boost::math::tools::brent_find_minima([&](double t) { return spread(gens, t, s); }, x - 20, x + 20, bits).first;
    s = boost::math::tools::brent_find_minima([&](double t) { return spread(gens, x, t); }, s - 20, s + 20, bits).first;
    if (before - spread(gens, x, s) < 1e-12 * before) break;
  }
  const double sy = std::exp(s / 2);
  const Moebius t{sy, x / sy, 0, 1 / sy};
  const Moebius t_inv = t.inverse();
  SequentialSet out{v.signature, {}, {}, {}};
  for (const auto& a : v.A) out.A.push_back(t_inv * a * t);
  for (const auto& b : v.B) out.B.push_back(t_inv * b * t);
  for (const auto& c : v.C) out.C.push_back(t_inv * c * t);
  return out;
}

SequentialSet verified(SequentialSet v) {
  auto check = is_sequential(v);
  if (!check.ok) {
    throw Error(ErrorCode::SearchFailed, v.signature.to_string() + " construction failed check: " + check.diagnostic);
  }
  auto c = centred(v);
  return is_sequential(c).ok ? c : v;
}

}  // namespace

// ---- sequential sets --------------------------------------------------------

std::vector<Moebius> SequentialSet::generators() const {
  std::vector<Moebius> out;
  for (std::size_t i = 0; i < A.size(); ++i) {
    out.push_back(A[i]);
    out.push_back(B[i]);
  }
  out.insert(out.end(), C.begin(), C.end());
  return out;
}

std::vector<Moebius> SequentialSet::reduction() const {
  std::vector<Moebius> out;
  for (std::size_t i = 0; i < A.size(); ++i) {
    out.push_back(A[i]);
    out.push_back(B[i] * A[i].inverse() * B[i].inverse());
  }
  out.insert(out.end(), C.begin(), C.end());
  return out;
}

SequentialSet from_generators(const Signature& sig, const std::vector<Moebius>& gens) {
  const auto g = static_cast<std::size_t>(sig.genus);
  if (gens.size() != 2 * g + sig.orders.size()) throw Error(ErrorCode::LengthMismatch, "generator count");
  SequentialSet v{sig, {}, {}, {}};
  for (std::size_t i = 0; i < g; ++i) {
    v.A.push_back(gens[2 * i]);
    v.B.push_back(gens[2 * i + 1]);
  }
  v.C.assign(gens.begin() + static_cast<std::ptrdiff_t>(2 * g), gens.end());
  return v;
}

int triple_orientation(const Moebius& x, const Moebius& y, const Moebius& z) {
  const std::array<const Moebius*, 3> els{&x, &y, &z};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (is_hyperbolic(*els[i]) && is_hyperbolic(*els[j])) {
        try {
          if (axes_intersect(*els[i], *els[j])) return 0;
        } catch (const Error&) {
          return 0;
        }
      }
    }
  }
  const auto sx = sites_of(x), sy = sites_of(y), sz = sites_of(z);
  if (sx.empty() || sy.empty() || sz.empty()) return 0;
  int seen = 0;
  for (const auto& a : sx) {
    for (const auto& b : sy) {
      for (const auto& c : sz) {
        const int o = orient3(a, b, c);
        if (o == 0 || (seen != 0 && o != seen)) return 0;
        seen = o;
      }
    }
  }
  return seen;
}

SequentialCheck is_sequential(const std::vector<Moebius>& gens, const Signature& sig) {
  const auto g = static_cast<std::size_t>(sig.genus);
  if (gens.size() != 2 * g + sig.orders.size()) return {false, "length"};
  const SequentialSet v = from_generators(sig, gens);

  Moebius prod = Moebius::identity();
  for (std::size_t i = 0; i < g; ++i) prod = prod * commutator(v.A[i], v.B[i]);
  for (const auto& c : v.C) prod = prod * c;
  if (!is_identity(prod, kRelationTol)) return {false, "product"};

  for (std::size_t i = 0; i < g; ++i) {
    if (!is_hyperbolic(v.A[i]) || !is_hyperbolic(v.B[i])) return {false, "type"};
  }
  for (const auto& c : v.C) {
    if (!is_elliptic(c)) return {false, "type"};
  }

  const auto red = v.reduction();
  const std::size_t n = red.size();
  if (n < 3) return {false, "length"};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    Moebius pre = Moebius::identity(), suf = Moebius::identity();
    for (std::size_t k = 0; k < i; ++k) pre = pre * red[k];
    for (std::size_t k = i + 1; k < n; ++k) suf = suf * red[k];
    const int o = triple_orientation(pre, red[i], suf);
    if (o < 0) return {false, "ordering"};
    if (o == 0) return {false, "configuration"};
  }

  for (std::size_t j = 0; j < v.C.size(); ++j) {
    if (std::abs(rotation_angle(v.C[j]) - 2 * kPi / sig.orders[j]) > kAngleTol) return {false, "angle"};
  }
  return {true, ""};
}

SequentialCheck is_sequential(const SequentialSet& v) { return is_sequential(v.generators(), v.signature); }

SequentialSet make_triple(int p, int q, int s) {
  const Signature sig{0, {p, q, s}};
  if (!is_hyperbolic(sig)) throw Error(ErrorCode::NotHyperbolic, sig.to_string());
  auto gens = chain({{false, p, 0}, {false, q, 0}, {false, s, 0}});
  return verified(SequentialSet{sig, {}, {}, gens});
}

SequentialSet make_genus1(int p) {
  const Signature sig{1, {p}};
  validate(sig);
  auto [a, b] = solve_handle(-2 * std::cos(kPi / p), 20.0);
  for (bool swap : {false, true}) {
    const Moebius x = swap ? b : a, y = swap ? a : b;
    const Moebius c = commutator(x, y).inverse();
    SequentialSet v{sig, {x}, {y}, {c}};
    if (is_sequential(v).ok) return v;
  }
  throw Error(ErrorCode::SearchFailed, "no orientation of the handle pair is sequential for " + sig.to_string());
}

SequentialSet make_signature(const Signature& sig) {
  validate(sig);
  if (!is_hyperbolic(sig)) throw Error(ErrorCode::NotHyperbolic, sig.to_string());
  const int g = sig.genus, r = sig.r();
  const auto& p = sig.orders;
  if (g == 0 && r == 3) return make_triple(p[0], p[1], p[2]);
  if (g == 1 && r == 1) return make_genus1(p[0]);

  if (g == 0 && p[0] == 2 && p[1] == 2) {
    throw Error(ErrorCode::Unsupported, sig.to_string() + ": leading pair of order-2 cone points");
  }
  if (r >= 2 && p[r - 1] == 2 && p[r - 2] == 2) {
    throw Error(ErrorCode::Unsupported, sig.to_string() + ": trailing pair of order-2 cone points");
  }

  std::vector<Moebius> skeleton;
  if (g == 2 && r == 0) {
    auto [a0, b0] = solve_handle(-2 * std::cosh(kHoleLength / 2), 30.0);
    const Moebius d = commutator(a0, b0);
    skeleton = {d, d.inverse()};
  } else {
    std::vector<Item> items(g, Item{true, 0, kHoleLength});
    for (int q : p) items.push_back({false, q, 0});
    skeleton = chain(items);
  }

  SequentialSet v{sig, {}, {}, {}};
  for (int k = 0; k < g; ++k) {
    auto [a, b] = glue(skeleton[k]);
    v.A.push_back(a);
    v.B.push_back(b);
  }
  v.C.assign(skeleton.begin() + g, skeleton.end());
  return verified(std::move(v));
}

long long canonical_lift_product_check(const SequentialSet& v) {
  const auto red = v.reduction();
  if (red.size() < 3) throw Error(ErrorCode::NotApplicable, "need at least three generators");
  LiftedElement prod = central(0);
  for (const auto& x : red) prod = prod * canonical_lift(x);
  if (!is_identity(prod.base, kRelationTol)) {
    throw Error(ErrorCode::RelationFailed, "product residual " + std::to_string(distance(prod.base, Moebius::identity())));
  }
  return level(prod);
}

// ---- lifts ------------------------------------------------------------------

std::vector<LiftedElement> LiftedSequentialSet::generators() const {
  std::vector<LiftedElement> out;
  for (std::size_t i = 0; i < A.size(); ++i) {
    out.push_back(A[i]);
    out.push_back(B[i]);
  }
  out.insert(out.end(), C.begin(), C.end());
  return out;
}

LiftedSequentialSet lift_with_levels(const SequentialSet& v, int m, const std::vector<int>& levA,
                                     const std::vector<int>& levB, const std::optional<std::vector<int>>& levC) {
  const auto& sig = v.signature;
  auto check = check_liftable(sig, m);
  if (!check.liftable) throw Error(ErrorCode::NotLiftable, sig.to_string() + " at m=" + std::to_string(m));
  const auto g = static_cast<std::size_t>(sig.genus);
  if (levA.size() != g || levB.size() != g) throw Error(ErrorCode::LengthMismatch, "handle level lists need g entries");
  if (levC && levC->size() != sig.orders.size()) throw Error(ErrorCode::LengthMismatch, "cone level list needs r entries");

  LiftedSequentialSet out;
  out.signature = sig;
  out.m = m;
  for (std::size_t i = 0; i < g; ++i) {
    out.levA.push_back(residue(levA[i], m));
    out.levB.push_back(residue(levB[i], m));
    out.A.push_back(shift_level(canonical_lift(v.A[i], m), out.levA.back()));
    out.B.push_back(shift_level(canonical_lift(v.B[i], m), out.levB.back()));
  }
  for (std::size_t j = 0; j < sig.orders.size(); ++j) {
    const int lv = levC ? residue((*levC)[j], m) : elliptic_level(sig.orders[j], m);
    out.levC.push_back(lv);
    out.C.push_back(shift_level(canonical_lift(v.C[j], m), lv));
  }

  LiftedElement prod = central(0, m);
  for (std::size_t i = 0; i < g; ++i) prod = prod * out.A[i] * out.B[i] * invert(out.A[i]) * invert(out.B[i]);
  for (const auto& c : out.C) prod = prod * c;
  out.relation_residual = distance(prod.base, Moebius::identity());
  if (out.relation_residual >= kRelationTol) {
    throw Error(ErrorCode::RelationFailed, "relation residual " + std::to_string(out.relation_residual));
  }
  if (const auto k = level(prod); k != 0) {
    throw Error(ErrorCode::RelationFailed, "relation lifts to u^" + std::to_string(k) + " in G_" + std::to_string(m));
  }
  for (std::size_t j = 0; j < out.C.size(); ++j) {
    // the base has order p when its angle is 2 pi / p; the matrix power would
    // amplify rounding by the square of the entries
    const bool order_p = is_elliptic(out.C[j].base) &&
                         std::abs(rotation_angle(out.C[j].base) - 2 * kPi / sig.orders[j]) <= kAngleTol;
    const auto cp = pow(out.C[j], sig.orders[j]);
    if (!order_p || level(cp) != 0) {
      throw Error(ErrorCode::RelationFailed, "C_" + std::to_string(j + 1) + "^" + std::to_string(sig.orders[j]) +
                                                 " lifts to u^" + std::to_string(level(cp)));
    }
  }
  return out;
}

// ---- Arf rules on measured levels --------------------------------------------

bool ArfReport::all_passed() const {
  for (const auto& c : checks) {
    if (c.failures > 0) return false;
    // no samples and no draws means the rule has nothing to apply to
    if (c.samples == 0 && c.skipped > 0) return false;
  }
  return true;
}

ArfReport verify_arf_axioms(const LiftedSequentialSet& lift, int samples, std::uint64_t seed) {
  if (samples <= 0) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  const int m = lift.m;
  const auto gens = lift.generators();
  const auto g = lift.A.size();
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  auto random_word = [&](int min_len, int max_len) {
    const int len = std::uniform_int_distribution<int>(min_len, max_len)(rng);
    LiftedElement w = central(0, m);
    for (int k = 0; k < len; ++k) {
      const auto& x = gens[pick(gens.size())];
      w = w * (pick(2) == 0 ? x : invert(x));
    }
    return w;
  };
  // levels are only read off matrices small enough for double precision;
  // trials touching larger ones count as skipped
  constexpr double kNormCap = 1e3;
  auto in_range = [&](std::initializer_list<const LiftedElement*> xs) {
    for (const auto* x : xs) {
      if (frobenius(x->base) > kNormCap) return false;
    }
    return true;
  };
  auto conj = [&](const LiftedElement& w, const LiftedElement& x) { return w * x * invert(w); };
  auto lev = [&](const LiftedElement& x) { return static_cast<int>(level(x)); };
  auto add = [&](long long a, long long b) { return residue(a + b, m); };

  ArfReport report;
  report.relation_residual = lift.relation_residual;
  auto run = [&](RuleCheck& rc, const std::function<int()>& trial) {
    // trial: 1 pass, 0 fail, -1 skipped
    const int max_attempts = 200 * samples;
    for (int attempt = 0; attempt < max_attempts && rc.samples < samples; ++attempt) {
      int res;
      try {
        res = trial();
      } catch (const Error& e) {
        res = 0;
        if (rc.first_failure.empty()) rc.first_failure = e.what();
      }
      if (res < 0) {
        ++rc.skipped;
        continue;
      }
      ++rc.samples;
      if (res == 0) {
        ++rc.failures;
        if (rc.first_failure.empty()) rc.first_failure = "sample " + std::to_string(rc.samples);
      }
    }
  };

  RuleCheck r1{1, "conjugation invariance", 0, 0, 0, {}};
  run(r1, [&] {
    const auto& a = gens[pick(gens.size())];
    const auto b = random_word(1, 3);
    const auto c = conj(b, a);
    if (!in_range({&c})) return -1;
    return lev(c) == lev(a) ? 1 : 0;
  });

  RuleCheck r2{2, "inverse", 0, 0, 0, {}};
  run(r2, [&] {
    const auto a = conj(random_word(0, 2), gens[pick(gens.size())]);
    if (is_order_two(a.base) || !in_range({&a})) return -1;
    return lev(invert(a)) == residue(-lev(a), m) ? 1 : 0;
  });

  RuleCheck r3{3, "crossing pair additivity", 0, 0, 0, {}};
  run(r3, [&] {
    LiftedElement a, b;
    if (g > 0 && pick(4) != 0) {
      const auto i = pick(g);
      const auto w = random_word(0, 2);
      a = conj(w, lift.A[i]);
      b = conj(w, lift.B[i]);
    } else {
      a = random_word(2, 3);
      b = random_word(2, 3);
    }
    const auto ab = a * b;
    if (!in_range({&a, &b, &ab})) return -1;
    if (!is_hyperbolic(a.base) || !is_hyperbolic(b.base)) return -1;
    try {
      if (!axes_intersect(a.base, b.base)) return -1;
    } catch (const Error&) {
      return -1;  // shared axis
    }
    return lev(ab) == add(lev(a), lev(b)) ? 1 : 0;
  });

  // sequential triples (prefix, R_i, suffix) of the lifted reduction tuple
  std::vector<LiftedElement> red;
  for (std::size_t i = 0; i < g; ++i) {
    red.push_back(lift.A[i]);
    red.push_back(lift.B[i] * invert(lift.A[i]) * invert(lift.B[i]));
  }
  red.insert(red.end(), lift.C.begin(), lift.C.end());
  // being a half-turn is conjugation invariant, so the triples a rule part can
  // use are known up front
  std::vector<LiftedElement> prefix, suffix;
  std::vector<std::size_t> usable;
  for (std::size_t i = 1; i + 1 < red.size(); ++i) {
    LiftedElement x = central(0, m), z = central(0, m);
    for (std::size_t k = 0; k < i; ++k) x = x * red[k];
    for (std::size_t k = i + 1; k < red.size(); ++k) z = z * red[k];
    prefix.push_back(x);
    suffix.push_back(z);
    if (!is_order_two(z.base)) usable.push_back(i);
  }
  RuleCheck r4{4, "sequential pair", 0, 0, 0, {}};
  if (!usable.empty()) run(r4, [&] {
    const auto i = usable[pick(usable.size())];
    const auto w = random_word(0, 2);
    const auto x = conj(w, prefix[i - 1]);
    const auto y = conj(w, red[i]);
    const auto z = conj(w, suffix[i - 1]);
    const auto xy = x * y;
    if (!in_range({&x, &y, &z, &xy})) return -1;
    bool ok = lev(xy) == add(add(lev(x), lev(y)), 1);
    if (!is_order_two(x.base) && !is_order_two(y.base)) {
      const auto xi = invert(x), yi = invert(y);
      ok = ok && lev(yi * xi) == add(add(lev(yi), lev(xi)), -1);
    }
    return ok ? 1 : 0;
  });

  RuleCheck r5{5, "elliptic generator", 0, 0, 0, {}};
  if (!lift.C.empty()) run(r5, [&] {
    const auto j = pick(lift.C.size());
    const auto c = conj(random_word(0, 2), lift.C[j]);
    if (!in_range({&c})) return -1;
    return residue(static_cast<long long>(lift.signature.orders[j]) * lev(c) + 1, m) == 0 ? 1 : 0;
  });

  report.checks = {r1, r2, r3, r4, r5};
  return report;
}

}  // namespace marf

#include "marf/signature.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "marf/error.hpp"

namespace marf {

Signature Signature::canonical() const {
  Signature s = *this;
  std::sort(s.orders.begin(), s.orders.end());
  return s;
}

std::string Signature::to_string() const {
  std::string out = "(" + std::to_string(genus) + ":";
  if (orders.empty()) return out + " -)";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    out += (i == 0 ? " " : ",") + std::to_string(orders[i]);
  }
  return out + ")";
}

void validate(const Signature& sig) {
  if (sig.genus < 0) throw Error(ErrorCode::InvalidArgument, "negative genus");
  for (int p : sig.orders) {
    if (p < 2) throw Error(ErrorCode::InvalidArgument, "cone order " + std::to_string(p) + " < 2");
  }
}

void validate_level(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "level m must be >= 1");
}

Rational euler_characteristic(const Signature& sig) {
  validate(sig);
  Rational chi(2 - 2 * static_cast<long long>(sig.genus));
  for (int p : sig.orders) chi -= Rational(1) - Rational(1, p);
  return chi;
}

bool is_hyperbolic(const Signature& sig) { return euler_characteristic(sig) < Rational(0); }

int elliptic_level(int p, int m) {
  validate_level(m);
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "order must be >= 2");
  if (std::gcd(p, m) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(m) + ") != 1");
  }
  if (m == 1) return 0;
  // extended Euclid for p^{-1} mod m, then n = -p^{-1}
  long long old_r = residue(p, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return residue(-old_s, m);
}

Liftability check_liftable(const Signature& sig, int m) {
  validate_level(m);
  if (!is_hyperbolic(sig)) throw Error(ErrorCode::NotHyperbolic, sig.to_string());
  for (int p : sig.orders) {
    if (std::gcd(p, m) != 1) return {false, LiftFailure::Gcd};
  }
  // (p1...pr)(sum 1/pi - (2g-2) - r) = sum_i prod_{j!=i} pj - (2g-2+r) prod pj
  const int r = sig.r();
  long long total = 0;
  for (int i = 0; i < r; ++i) {
    long long prod = 1;
    for (int j = 0; j < r; ++j) {
      if (j != i) prod = (prod * sig.orders[j]) % m;
    }
    total = (total + prod) % m;
  }
  long long all = 1;
  for (int p : sig.orders) all = (all * p) % m;
  long long k = residue(2LL * sig.genus - 2 + r, m);
  total = residue(total - k * all, m);
  if (total != 0) return {false, LiftFailure::Congruence};
  return {true, LiftFailure::None};
}

bool liftable(const Signature& sig, int m) { return check_liftable(sig, m).liftable; }

int genus_one_gcd(const Signature& sig, int m) {
  int d = m;
  for (int p : sig.orders) d = std::gcd(d, p - 1);
  return d;
}

std::vector<ArfType> admissible_types(const Signature& sig, int m) {
  std::vector<ArfType> out;
  if (!liftable(sig, m)) return out;
  if (sig.genus == 0) {
    out.push_back({sig, 0});
  } else if (sig.genus == 1) {
    int d = genus_one_gcd(sig, m);
    for (int k = d; k >= 1; --k) {
      if (d % k == 0) out.push_back({sig, k});
    }
  } else {
    out.push_back({sig, 0});
    if (m % 2 == 0) out.push_back({sig, 1});
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::Overflow, "power does not fit in 64 bits");
    }
    out *= base;
  }
  return out;
}

std::uint64_t count_arf_functions(const Signature& sig, int m) {
  if (!liftable(sig, m)) return 0;
  return checked_pow(static_cast<std::uint64_t>(m), 2 * sig.genus);
}

}  // namespace marf

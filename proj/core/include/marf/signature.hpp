#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace marf {

using Rational = boost::rational<long long>;

// Orbifold datum (g: p1,...,pr). Order of the cone points is significant.
struct Signature {
  int genus = 0;
  std::vector<int> orders;

  int r() const { return static_cast<int>(orders.size()); }
  // sorted copy, for hashing and dedup
  Signature canonical() const;
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct ArfType {
  Signature signature;
  int delta = 0;

  friend bool operator==(const ArfType&, const ArfType&) = default;
};

// canonical representative in [0, m)
inline int residue(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void validate(const Signature& sig);
void validate_level(int m);

Rational euler_characteristic(const Signature& sig);
bool is_hyperbolic(const Signature& sig);

// n with p*n + 1 = 0 mod m; throws NotCoprime
int elliptic_level(int p, int m);

enum class LiftFailure { None, Gcd, Congruence };

struct Liftability {
  bool liftable = false;
  LiftFailure reason = LiftFailure::None;
};

Liftability check_liftable(const Signature& sig, int m);
bool liftable(const Signature& sig, int m);

// g=1 lists divisors largest first; g>1 lists 0 then 1
std::vector<ArfType> admissible_types(const Signature& sig, int m);

std::uint64_t count_arf_functions(const Signature& sig, int m);

// gcd(m, p1-1, ..., pr-1)
int genus_one_gcd(const Signature& sig, int m);

std::uint64_t checked_pow(std::uint64_t base, int exp);

}  // namespace marf

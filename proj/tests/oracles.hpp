#pragma once

// Brute-force reference computations, written independently of the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// scan n = 0..m-1 for p n + 1 = 0 mod m; -1 if none
inline int elliptic_level(int p, int m) {
  for (int n = 0; n < m; ++n) {
    if (mod(static_cast<long long>(p) * n + 1, m) == 0) return n;
  }
  return -1;
}

// (p1...pr)(sum 1/pi - (2g-2) - r) as an exact integer
inline __int128 lift_numerator(int g, const std::vector<int>& ps) {
  __int128 prod = 1;
  for (int p : ps) prod *= p;
  __int128 sum = 0;
  for (int p : ps) sum += prod / p;
  return sum - static_cast<__int128>(2 * g - 2 + static_cast<int>(ps.size())) * prod;
}

inline bool liftable(int g, const std::vector<int>& ps, int m) {
  for (int p : ps) {
    if (std::gcd(p, m) != 1) return false;
  }
  return lift_numerator(g, ps) % m == 0;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) d.push_back(k);
  }
  return d;
}

// twist formulas on interleaved (a1,b1,...) tuples, straight from the list
inline std::vector<std::vector<int>> neighbours(const std::vector<int>& s, int g, const std::vector<int>& gamma,
                                                 const std::vector<int>& orders, int m) {
  std::vector<std::vector<int>> out;
  auto a = [&](const std::vector<int>& t, int i) { return t[2 * (i - 1)]; };
  auto b = [&](const std::vector<int>& t, int i) { return t[2 * (i - 1) + 1]; };
  auto set = [&](std::vector<int>& t, int i, int av, int bv) {
    t[2 * (i - 1)] = mod(av, m);
    t[2 * (i - 1) + 1] = mod(bv, m);
  };
  {
    auto t = s;
    set(t, 1, a(s, 1) + b(s, 1), b(s, 1));
    out.push_back(t);
    t = s;
    set(t, 1, a(s, 1) - b(s, 1), b(s, 1));
    out.push_back(t);
  }
  if (g >= 2) {
    for (int sign : {1, -1}) {
      auto t = s;
      const int c = a(s, 1) + a(s, 2) + 1;
      set(t, 1, a(s, 1), b(s, 1) - sign * c);
      set(t, 2, a(s, 2), b(s, 2) - sign * c);
      out.push_back(t);
    }
  }
  {
    const int c = gamma.empty() ? -1 : gamma[0];
    auto t = s;
    set(t, g, -b(s, g), a(s, g) - c - 1);
    out.push_back(t);
    t = s;
    set(t, g, b(s, g) + c + 1, -a(s, g));
    out.push_back(t);
  }
  for (int k = 1; k < g; ++k) {
    auto t = s;
    set(t, k, a(s, k + 1), b(s, k + 1));
    set(t, k + 1, a(s, k), b(s, k));
    out.push_back(t);
  }
  (void)orders;
  return out;
}

inline std::vector<std::set<std::vector<int>>> orbits(int g, const std::vector<int>& gamma,
                                                      const std::vector<int>& orders, int m) {
  std::set<std::vector<int>> all;
  std::vector<int> t(2 * g, 0);
  while (true) {
    all.insert(t);
    int pos = 2 * g - 1;
    while (pos >= 0 && ++t[pos] == m) t[pos--] = 0;
    if (pos < 0) break;
  }
  std::vector<std::set<std::vector<int>>> out;
  std::set<std::vector<int>> seen;
  for (const auto& s : all) {
    if (seen.count(s)) continue;
    std::set<std::vector<int>> orb{s};
    std::vector<std::vector<int>> stack{s};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto& y : neighbours(x, g, gamma, orders, m)) {
        if (orb.insert(y).second) stack.push_back(y);
      }
    }
    seen.insert(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

// hyperbolic distance in the upper half-plane
inline double hdist(std::complex<double> z, std::complex<double> w) {
  return std::acosh(1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag()));
}

}  // namespace oracle

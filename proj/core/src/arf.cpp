#include "marf/arf.hpp"

#include <numeric>

#include "marf/error.hpp"

namespace marf {

namespace {

std::vector<int> forced_gamma(const Signature& sig, int m) {
  std::vector<int> gamma;
  gamma.reserve(sig.orders.size());
  for (int p : sig.orders) gamma.push_back(elliptic_level(p, m));
  return gamma;
}

void require_liftable(const Signature& sig, int m) {
  auto check = check_liftable(sig, m);
  if (!check.liftable) {
    throw Error(ErrorCode::NotLiftable,
                sig.to_string() + " at m=" + std::to_string(m) +
                    (check.reason == LiftFailure::Gcd ? " (gcd)" : " (congruence)"));
  }
}

}  // namespace

std::vector<int> ArfFunction::tuple() const {
  std::vector<int> t;
  t.reserve(2 * alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    t.push_back(alpha[i]);
    t.push_back(beta[i]);
  }
  return t;
}

ArfFunction new_arf(const Signature& sig, int m, const std::vector<int>& alphas,
                    const std::vector<int>& betas) {
  validate(sig);
  validate_level(m);
  const auto g = static_cast<std::size_t>(sig.genus);
  if (alphas.size() != g || betas.size() != g) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(g) + " alpha and beta values");
  }
  require_liftable(sig, m);

  ArfFunction f{sig, m, {}, {}, forced_gamma(sig, m)};
  for (std::size_t i = 0; i < g; ++i) {
    f.alpha.push_back(residue(alphas[i], m));
    f.beta.push_back(residue(betas[i], m));
  }
  long long sum = std::accumulate(f.gamma.begin(), f.gamma.end(), 0LL);
  if (residue(sum, m) != residue(2 - 2LL * sig.genus - sig.r(), m)) {
    throw Error(ErrorCode::NotLiftable, "cone residues violate the sum rule");
  }
  return f;
}

ArfFunction from_tuple(const Signature& sig, int m, const std::vector<int>& tuple) {
  if (tuple.size() != 2 * static_cast<std::size_t>(sig.genus)) {
    throw Error(ErrorCode::LengthMismatch, "tuple must have 2g entries");
  }
  std::vector<int> a, b;
  for (std::size_t i = 0; i < tuple.size(); i += 2) {
    a.push_back(tuple[i]);
    b.push_back(tuple[i + 1]);
  }
  return new_arf(sig, m, a, b);
}

int arf_invariant(const Signature& sig, int m, std::span<const int> tuple) {
  const int g = sig.genus;
  if (g == 0) return 0;
  if (g == 1) {
    int d = genus_one_gcd(sig, m);
    d = std::gcd(d, residue(tuple[0], m));
    return std::gcd(d, residue(tuple[1], m));
  }
  if (m % 2 != 0) return 0;
  long long s = 0;
  for (int i = 0; i < g; ++i) s += (1LL - residue(tuple[2 * i], m)) * (1LL - residue(tuple[2 * i + 1], m));
  return residue(s, 2);
}

int arf_invariant(const ArfFunction& f) {
  const auto t = f.tuple();
  return arf_invariant(f.signature, f.m, t);
}

ArfType type_of(const ArfFunction& f) { return {f.signature, arf_invariant(f)}; }

ArfRange::ArfRange(Signature sig, int m) : sig_(std::move(sig)), m_(m) {
  require_liftable(sig_, m_);
  size_ = checked_pow(static_cast<std::uint64_t>(m_), 2 * sig_.genus);
  gamma_ = forced_gamma(sig_, m_);
}

ArfRange::iterator ArfRange::begin() const {
  iterator it;
  it.done_ = size_ == 0;
  it.current_ = ArfFunction{sig_, m_, std::vector<int>(sig_.genus, 0), std::vector<int>(sig_.genus, 0), gamma_};
  return it;
}

ArfRange::iterator& ArfRange::iterator::operator++() {
  // odometer over the interleaved tuple, last position fastest
  const int g = current_.signature.genus;
  const int m = current_.m;
  ++index_;
  for (int pos = 2 * g - 1; pos >= 0; --pos) {
    int& v = (pos % 2 == 0) ? current_.alpha[pos / 2] : current_.beta[pos / 2];
    if (++v < m) return *this;
    v = 0;
  }
  done_ = true;
  return *this;
}

ArfRange enumerate_all(const Signature& sig, int m) { return ArfRange(sig, m); }

}  // namespace marf

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "marf/arf.hpp"

namespace marf {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class MoveKind { T1, T2, T3, T4, T5 };

// Generalised Dehn twist. k is the handle index for T4 (1..g-1) and the
// basis index for T5 (g+1..n-1, both cone orders equal).
// For r = 0, T3 uses the trivial contour in place of c_{g+1}.
struct TwistMove {
  MoveKind kind = MoveKind::T1;
  int k = 0;
  bool inverse = false;

  std::string to_string() const;
  friend bool operator==(const TwistMove&, const TwistMove&) = default;
};

TwistMove inverse(const TwistMove& t);
bool is_applicable(const Signature& sig, const TwistMove& t);

// every applicable move, with explicit inverses for T1..T3
std::vector<TwistMove> applicable_moves(const Signature& sig);

// In-place action on an interleaved tuple; gamma holds the cone residues.
void apply_to_tuple(std::span<int> tuple, const TwistMove& t, const std::vector<int>& gamma, int m);

ArfFunction apply_twist(const ArfFunction& f, const TwistMove& t);
ArfFunction apply_word(const ArfFunction& f, const std::vector<TwistMove>& word);

// full orbit as interleaved tuples, sorted lexicographically
std::vector<std::vector<int>> orbit(const ArfFunction& f, std::uint64_t budget = kDefaultBudget);

struct OrbitInfo {
  ArfType type;
  std::uint64_t size = 0;
  std::vector<int> representative;  // lexicographic minimum of the orbit
};

// one entry per orbit, in admissible_types order
std::vector<OrbitInfo> classify_orbits(const Signature& sig, int m, std::uint64_t budget = kDefaultBudget);

// (0, xi, 1, ..., 1) for g > 1, (delta, 0) for g = 1
std::vector<int> normal_form_tuple(const Signature& sig, int m, int delta);

struct NormalForm {
  ArfFunction form;
  std::vector<TwistMove> word;
};

NormalForm normal_form(const ArfFunction& f, std::uint64_t budget = kDefaultBudget);

std::string word_to_string(const std::vector<TwistMove>& word);

}  // namespace marf

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "marf/covering.hpp"
#include "marf/moebius.hpp"
#include "marf/signature.hpp"

namespace marf {

// Generators A_i, B_i (hyperbolic) and C_j (elliptic, angle 2pi/p_j) with
// prod [A_i, B_i] prod C_j = 1.
struct SequentialSet {
  Signature signature;
  std::vector<Moebius> A, B, C;

  // (A_1, B_1, ..., A_g, B_g, C_1, ..., C_r)
  std::vector<Moebius> generators() const;
  // (A_1, B_1 A_1^-1 B_1^-1, ..., C_1, ..., C_r), a genus-0 tuple
  std::vector<Moebius> reduction() const;
};

SequentialSet from_generators(const Signature& sig, const std::vector<Moebius>& gens);

struct SequentialCheck {
  bool ok = false;
  std::string diagnostic;  // empty when ok
};

// Orientation of three sites: fixed point for elliptic elements, the axis
// endpoints for hyperbolic ones. +1 / -1 when every choice of site points
// agrees, 0 for a degenerate or crossing configuration.
int triple_orientation(const Moebius& x, const Moebius& y, const Moebius& z);

// diagnostics: "length", "product", "type", "ordering", "configuration", "angle"
SequentialCheck is_sequential(const std::vector<Moebius>& gens, const Signature& sig);
SequentialCheck is_sequential(const SequentialSet& v);

SequentialSet make_triple(int p, int q, int s);
SequentialSet make_genus1(int p);
// throws Unsupported outside the implemented family, SearchFailed on a failed search
SequentialSet make_signature(const Signature& sig);

// level of the product of canonical lifts over the reduction tuple; n - 2 for n entries
long long canonical_lift_product_check(const SequentialSet& v);

struct LiftedSequentialSet {
  Signature signature;
  int m = 1;
  std::vector<LiftedElement> A, B, C;
  std::vector<int> levA, levB, levC;
  double relation_residual = 0;

  std::vector<LiftedElement> generators() const;
};

// C levels are forced to elliptic_level(p_j, m) unless overridden.
// Throws NotLiftable, LengthMismatch, RelationFailed.
LiftedSequentialSet lift_with_levels(const SequentialSet& v, int m, const std::vector<int>& levA,
                                     const std::vector<int>& levB,
                                     const std::optional<std::vector<int>>& levC = std::nullopt);

struct RuleCheck {
  int rule = 0;
  std::string name;
  int samples = 0;
  int failures = 0;
  int skipped = 0;
  std::string first_failure;

  bool passed() const { return samples > 0 && failures == 0; }
};

struct ArfReport {
  double relation_residual = 0;
  std::vector<RuleCheck> checks;

  bool all_passed() const;
};

ArfReport verify_arf_axioms(const LiftedSequentialSet& lift, int samples = 100, std::uint64_t seed = 0);

}  // namespace marf

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "marf/mcg.hpp"

namespace marf {

struct Component {
  int delta = 0;
  std::optional<std::uint64_t> orbit_size;  // present when brute-forced
  int teich_dimension = 0;
  std::vector<int> representative;  // orbit minimum if brute-forced, else the normal form
  std::vector<int> normal_form;
};

struct ComponentReport {
  int m = 1;
  Signature signature;
  std::vector<Component> components;
};

int teich_dimension(const Signature& sig);  // 6g - 6 + 2r

// components in admissible_types order; throws NotHyperbolic, BudgetExceeded
ComponentReport components(const Signature& sig, int m, bool brute_force, std::uint64_t budget = kDefaultBudget);

}  // namespace marf

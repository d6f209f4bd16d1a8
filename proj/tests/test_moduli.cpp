#include "doctest.h"

#include <marf/error.hpp>
#include <marf/moduli.hpp>

using namespace marf;

TEST_CASE("component examples") {
  auto g2 = components(Signature{2, {}}, 2, true);
  REQUIRE(g2.components.size() == 2);
  CHECK(g2.components[0].delta == 0);
  CHECK(*g2.components[0].orbit_size == 10);
  CHECK(*g2.components[1].orbit_size == 6);
  CHECK(g2.components[0].teich_dimension == 6);

  auto g1 = components(Signature{1, {5}}, 4, true);
  REQUIRE(g1.components.size() == 3);
  std::vector<std::uint64_t> sizes;
  for (const auto& c : g1.components) {
    sizes.push_back(*c.orbit_size);
    CHECK(c.teich_dimension == 2);
  }
  CHECK(sizes == std::vector<std::uint64_t>{1, 3, 12});

  auto g0 = components(Signature{0, {5, 5, 5}}, 2, false);
  REQUIRE(g0.components.size() == 1);
  CHECK(g0.components[0].teich_dimension == 0);
  CHECK_FALSE(g0.components[0].orbit_size.has_value());

  CHECK(components(Signature{0, {2, 3, 7}}, 2, false).components.empty());
}

TEST_CASE("dimension formula") {
  CHECK(teich_dimension(Signature{2, {}}) == 6);
  CHECK(teich_dimension(Signature{1, {5}}) == 2);
  CHECK(teich_dimension(Signature{0, {5, 5, 5}}) == 0);
  CHECK(teich_dimension(Signature{2, {5, 5}}) == 10);
  CHECK(teich_dimension(Signature{4, {}}) == 18);
}

TEST_CASE("representatives and normal forms") {
  for (bool brute : {false, true}) {
    auto rep = components(Signature{1, {5}}, 4, brute);
    for (const auto& c : rep.components) {
      auto f = from_tuple(rep.signature, rep.m, c.representative);
      CHECK(arf_invariant(f) == c.delta);
      CHECK(arf_invariant(from_tuple(rep.signature, rep.m, c.normal_form)) == c.delta);
      if (!brute) CHECK(c.representative == c.normal_form);
    }
  }
}

TEST_CASE("errors") {
  try {
    components(Signature{0, {2, 3, 5}}, 2, false);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHyperbolic);
  }
  try {
    components(Signature{4, {}}, 3, true, 100);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

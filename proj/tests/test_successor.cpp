#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qarith/json_io.hpp"
#include "qarith/successor.hpp"

using namespace qarith;

namespace {

Index modular_add_oracle(Index value, std::uint32_t j, const RegisterShape& shape) {
  Index K = shape.register_dimension();
  return (value + *checked_pow(shape.k(), j - 1)) % K;
}

}  // namespace

TEST_CASE("single-digit cyclic shift") {
  RegisterShape b2(2, 3);
  auto u1 = cyclic_shift(b2, 1);
  CHECK(u1.apply_index(DigitString(b2, {0, 0, 0}).value()) == 1);
  CHECK(u1.apply_index(DigitString(b2, {1, 0, 0}).value()) == 0);  // wrap mod k
  RegisterShape b3(3, 3);
  auto u2 = cyclic_shift(b3, 2);
  CHECK(u2.apply_index(DigitString(b3, {0, 2, 1}).value()) ==
        DigitString(b3, {0, 0, 1}).value());
  CHECK_THROWS_AS(cyclic_shift(b2, 4), std::out_of_range);
}

TEST_CASE("u_j has period k") {
  for (std::uint32_t k : {2u, 3u}) {
    RegisterShape shape(k, 3);
    for (std::uint32_t pos = 1; pos <= 3; ++pos)
      CHECK(cyclic_shift(shape, pos)
                .pow(k)
                .same_action_as(PermutationOperator::identity(shape)));
  }
}

TEST_CASE("commutation u_j P_{m,j} = P_{m+1,j} u_j") {
  for (std::uint32_t k : {2u, 3u}) {
    RegisterShape shape(k, 2);
    for (std::uint32_t pos = 1; pos <= 2; ++pos) {
      auto u = cyclic_shift(shape, pos);
      for (std::uint8_t m = 0; m < k; ++m) {
        ProjectorSpec before{pos, m};
        ProjectorSpec after{pos, static_cast<std::uint8_t>((m + 1) % k)};
        for (Index i = 0; i < shape.dimension(); ++i)
          CHECK(before.matches(i, shape) == after.matches(u.apply_index(i), shape));
      }
    }
  }
}

TEST_CASE("successor spot checks") {
  RegisterShape b2(2, 3);
  CHECK(successor_implicit(b2, 1).apply_index(7) == 0);
  CHECK(successor_implicit(b2, 2).apply_index(0) == 2);
  CHECK(successor_explicit(b2, 1).apply_index(3) == 4);
  RegisterShape b3(3, 2);
  CHECK(successor_implicit(b3, 1).apply_index(5) == 6);
}

TEST_CASE("successor equals the modular-addition oracle, exhaustive") {
  for (std::uint32_t k : {2u, 3u})
    for (std::uint32_t L = 1; L <= 4; ++L) {
      RegisterShape shape(k, L);
      for (std::uint32_t j = 1; j <= L; ++j) {
        auto implicit = successor_implicit(shape, j);
        auto explicit_form = successor_explicit(shape, j);
        for (Index b = 0; b < shape.dimension(); ++b) {
          Index expected = modular_add_oracle(b, j, shape);
          CHECK(implicit.apply_index(b) == expected);
          CHECK(explicit_form.apply_index(b) == expected);
        }
      }
    }
}

TEST_CASE("explicit form reduces to u_L at j = L") {
  for (std::uint32_t k : {2u, 3u}) {
    RegisterShape shape(k, 3);
    CHECK(successor_explicit(shape, 3).same_action_as(cyclic_shift(shape, 3)));
  }
}

TEST_CASE("successor moves every basis state") {
  RegisterShape shape(2, 3);
  for (std::uint32_t j = 1; j <= 3; ++j) {
    auto succ = successor_implicit(shape, j);
    CHECK(succ.is_bijection());
    for (Index b = 0; b < shape.dimension(); ++b)
      CHECK(succ.apply_index(b) != b);
  }
}

TEST_CASE("adjoint inverts the successor") {
  RegisterShape b2(2, 3);
  for (std::uint32_t j = 1; j <= 3; ++j) {
    auto fwd = successor_implicit(b2, j);
    auto adj = successor_adjoint(b2, j);
    CHECK(compose(adj, fwd).same_action_as(PermutationOperator::identity(b2)));
    CHECK(adj.same_action_as(fwd.inverse()));
  }
  CHECK(successor_adjoint(b2, 1).apply_index(0) == 7);
  RegisterShape b3(3, 2);
  CHECK(successor_adjoint(b3, 2).apply_index(1) == 7);  // (1-3) mod 9
}

TEST_CASE("power chain (V_j)^k = V_{j+1}") {
  for (std::uint32_t k : {2u, 3u})
    for (std::uint32_t L = 1; L <= 4; ++L) {
      RegisterShape shape(k, L);
      for (std::uint32_t j = 1; j < L; ++j)
        CHECK(successor_implicit(shape, j)
                  .pow(k)
                  .same_action_as(successor_implicit(shape, j + 1)));
      CHECK(successor_implicit(shape, L)
                .pow(k)
                .same_action_as(PermutationOperator::identity(shape)));
    }
}

TEST_CASE("(V_j)^(k^(L-j+1)) is the identity") {
  RegisterShape shape(2, 3);
  for (std::uint32_t j = 1; j <= 3; ++j)
    CHECK(successor_implicit(shape, j)
              .pow(*checked_pow(2, 3 - j + 1))
              .same_action_as(PermutationOperator::identity(shape)));
}

TEST_CASE("power of zero is the identity") {
  RegisterShape shape(2, 2);
  CHECK(successor_implicit(shape, 1).pow(0).same_action_as(
      PermutationOperator::identity(shape)));
}

TEST_CASE("family commutativity, exhaustive small shapes") {
  for (std::uint32_t k : {2u, 3u})
    for (std::uint32_t L = 2; L <= 4; ++L) {
      RegisterShape shape(k, L);
      for (std::uint32_t j1 = 1; j1 <= L; ++j1)
        for (std::uint32_t j2 = j1 + 1; j2 <= L; ++j2) {
          auto a = successor_implicit(shape, j1);
          auto b = successor_implicit(shape, j2);
          CHECK(compose(a, b).same_action_as(compose(b, a)));
        }
    }
}

TEST_CASE("orbit periods") {
  RegisterShape shape(2, 3);
  auto v1 = successor_implicit(shape, 1);
  auto v3 = successor_implicit(shape, 3);
  for (Index b = 0; b < shape.dimension(); ++b) {
    CHECK(v1.orbit_period(b) == 8);
    CHECK(v3.orbit_period(b) == 2);
    CHECK(PermutationOperator::identity(shape).orbit_period(b) == 1);
  }
}

TEST_CASE("successor on a designated register of a multi-register shape") {
  RegisterShape two(2, 2, 2);
  auto on_second = successor_implicit(two, 1, 2);
  // |s=1, w=2> -> |s=1, w=3>
  CHECK(on_second.apply_index(1 + 2 * 4) == 1 + 3 * 4);
  CHECK(index_register_value(on_second.apply_index(1 + 2 * 4), 1, two) == 1);
}

TEST_CASE("permutation application preserves statevector norm") {
  RegisterShape shape(2, 2);
  double a = 0.5;
  StateVector v(shape, {{0, {a, 0}}, {1, {0, a}}, {2, {-a, 0}}, {3, {0, -a}}});
  StateVector mapped = successor_implicit(shape, 1).apply(v);
  CHECK(mapped.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("permutation JSON table emission") {
  RegisterShape shape(2, 2);
  auto succ = successor_implicit(shape, 1);
  auto j = permutation_to_json(succ);
  CHECK(j["dimension"] == 4);
  CHECK(j["map"] == std::vector<Index>{1, 2, 3, 0});
}

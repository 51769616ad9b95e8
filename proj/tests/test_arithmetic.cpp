#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qarith/arithmetic.hpp"

using namespace qarith;

namespace {

Index plus_result(const RegisterShape& two, Index s, Index w) {
  Index K = two.register_dimension();
  return plus_op(two).apply_index(s + w * K) / K;
}

struct TimesResult {
  Index s, w, work, product;
};

TimesResult times_result(const RegisterShape& four, Index s, Index w) {
  Index K = four.register_dimension();
  Index out = times_op(four).apply_index(s + w * K);
  return {out % K, (out / K) % K, (out / (K * K)) % K, out / (K * K * K)};
}

}  // namespace

TEST_CASE("plus spot checks") {
  RegisterShape b2(2, 3, 2);
  CHECK(plus_result(b2, 3, 6) == 1);
  RegisterShape b3(3, 2, 2);
  CHECK(plus_result(b3, 5, 7) == 3);
}

TEST_CASE("plus matches the modular-addition oracle, exhaustive") {
  for (auto [k, L] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    RegisterShape two(k, L, 2);
    Index K = two.register_dimension();
    auto plus = plus_op(two);
    for (Index s = 0; s < K; ++s)
      for (Index w = 0; w < K; ++w) {
        Index out = plus.apply_index(s + w * K);
        CHECK(out % K == s);            // control register unchanged
        CHECK(out / K == (s + w) % K);  // target holds the sum
      }
    CHECK(plus.is_bijection());
  }
}

TEST_CASE("zero register is the additive identity") {
  RegisterShape two(2, 3, 2);
  Index K = two.register_dimension();
  for (Index w = 0; w < K; ++w) CHECK(plus_result(two, 0, w) == w);
}

TEST_CASE("plus adjoint inverts plus") {
  RegisterShape two(2, 3, 2);
  auto round_trip = compose(plus_adjoint(two), plus_op(two));
  CHECK(round_trip.same_action_as(PermutationOperator::identity(two)));
  // s=5, target 2 -> (2-5) mod 8 = 5
  CHECK(plus_adjoint(two).apply_index(5 + 2 * 8) == 5 + 5 * 8);
  // s=0 is the identity on the target
  for (Index w = 0; w < 8; ++w)
    CHECK(plus_adjoint(two).apply_index(0 + w * 8) == w * 8);
}

TEST_CASE("Q_j examples") {
  RegisterShape four(2, 3, 4);
  Index K = four.register_dimension();

  // k=2, L=3, w=(1,1,0) value 3, y=w: Q_1 gives y' = (0,1,1) value 6 = w*k
  Index idx = 0 + 3 * K + 3 * K * K + 0;
  Index out = q_shift(four, 1).apply_index(idx);
  CHECK((out / (K * K)) % K == 6);
  CHECK(out % K == 0);
  CHECK((out / K) % K == 3);

  // Q_L on y = w*k^(L-1) clears the third register (w*k^L = 0 mod k^L)
  for (Index w = 0; w < K; ++w) {
    Index y = (w << 2) % K;  // w * k^(L-1) mod k^L keeps only w's low digit
    Index in = 1 + w * K + y * K * K;
    CHECK((q_shift(four, 3).apply_index(in) / (K * K)) % K == 0);
  }
}

TEST_CASE("Q_j is a bijection, exhaustive k=2 L=2") {
  RegisterShape four(2, 2, 4);
  for (std::uint32_t j = 1; j <= 2; ++j) CHECK(q_shift(four, j).is_bijection());
}

TEST_CASE("repeated Q builds multiply-by-k powers") {
  // Starting from y = w, applying Q_1..Q_(j) in order yields w * k^j mod k^L.
  RegisterShape four(2, 3, 4);
  Index K = four.register_dimension();
  for (Index w = 0; w < K; ++w) {
    Index idx = 0 + w * K + w * K * K;
    Index expect = w;
    for (std::uint32_t j = 1; j <= 3; ++j) {
      idx = q_shift(four, j).apply_index(idx);
      expect = expect * 2 % K;
      CHECK((idx / (K * K)) % K == expect);
    }
  }
}

TEST_CASE("times spot checks") {
  RegisterShape four(2, 3, 4);
  auto r = times_result(four, 3, 5);
  CHECK(r.product == 7);  // 15 mod 8
  CHECK(r.work == 0);

  // multiplicative identity s=1 and annihilator s=0
  for (Index w = 0; w < 8; ++w) {
    CHECK(times_result(four, 1, w).product == w);
    CHECK(times_result(four, 0, w).product == 0);
  }
}

TEST_CASE("times matches the modular-multiplication oracle, exhaustive") {
  for (auto [k, L] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    RegisterShape four(k, L, 4);
    Index K = four.register_dimension();
    for (Index s = 0; s < K; ++s)
      for (Index w = 0; w < K; ++w) {
        auto r = times_result(four, s, w);
        CHECK(r.s == s);
        CHECK(r.w == w);
        CHECK(r.work == 0);
        CHECK(r.product == s * w % K);
      }
  }
}

TEST_CASE("times is a bijection on the full basis, k=2 L=2") {
  RegisterShape four(2, 2, 4);
  CHECK(times_op(four).is_bijection());
}

TEST_CASE("targeted plus follows the worked trace") {
  RegisterShape four(2, 3, 4);
  Index K = four.register_dimension();
  Index s = 3, w = 5;
  Index state = s + w * K;
  state = targeted_plus(four, {2, 3}).apply_index(state);
  CHECK(state == s + w * K + w * K * K);  // |s,w,w,0>
  // (+_{3,4})^(s_1) with s_1 = 1 gives |s,w,w,s_1 w>
  state = targeted_plus(four, {3, 4}).apply_index(state);
  CHECK(state == s + w * K + w * K * K + w * K * K * K);

  // zero source register is the identity
  for (Index z = 0; z < K; ++z)
    CHECK(targeted_plus(four, {1, 2}).apply_index(0 + z * K) == z * K);

  CHECK_THROWS_AS(targeted_plus(four, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(targeted_plus(four, {1, 5}), std::out_of_range);
}

TEST_CASE("successor commutes with plus") {
  RegisterShape two(2, 3, 2);
  auto plus = plus_op(two);
  for (std::uint32_t j = 1; j <= 3; ++j) {
    auto lifted = successor_implicit(two, j, 2);
    CHECK(compose(plus, lifted).same_action_as(compose(lifted, plus)));
  }
}

TEST_CASE("x*S(y) = x*y + x at the value level") {
  RegisterShape four(2, 3, 4);
  RegisterShape two(2, 3, 2);
  Index K = four.register_dimension();
  for (Index x = 0; x < K; ++x)
    for (Index y = 0; y < K; ++y) {
      Index lhs = times_result(four, x, (y + 1) % K).product;
      Index rhs = plus_result(two, times_result(four, x, y).product, x);
      CHECK(lhs == rhs);
    }
}

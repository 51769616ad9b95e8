#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qarith/json_io.hpp"
#include "qarith/statevector.hpp"

using namespace qarith;

TEST_CASE("shape construction guards") {
  CHECK_THROWS_AS(RegisterShape(1, 3), std::invalid_argument);  // unary excluded
  CHECK_THROWS_AS(RegisterShape(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(RegisterShape(2, 30), std::invalid_argument);  // over default cap
  CHECK(RegisterShape(2, 30, 1, Index{1} << 40).dimension() == Index{1} << 30);
  CHECK(RegisterShape(2, 3, 2).dimension() == 64);
  CHECK(RegisterShape(3, 2, 4).dimension() == 6561);
}

TEST_CASE("encode examples") {
  RegisterShape shape(2, 3);
  CHECK(DigitString::encode(0, shape).digits() == std::vector<std::uint8_t>{0, 0, 0});
  CHECK(DigitString::encode(1, shape).digits() == std::vector<std::uint8_t>{1, 0, 0});
  CHECK(DigitString::encode(6, shape).digits() == std::vector<std::uint8_t>{0, 1, 1});
  CHECK_THROWS_AS(DigitString::encode(8, shape), std::out_of_range);
}

TEST_CASE("value examples") {
  RegisterShape b2(2, 3);
  CHECK(DigitString(b2, {0, 0, 0}).value() == 0);
  CHECK(DigitString(b2, {1, 1, 0}).value() == 3);
  RegisterShape b3(3, 2);
  CHECK(DigitString(b3, {2, 1}).value() == 5);
}

TEST_CASE("value/encode round trip, exhaustive small shapes") {
  for (std::uint32_t k : {2u, 3u})
    for (std::uint32_t L = 1; L <= 4; ++L) {
      RegisterShape shape(k, L);
      for (Index n = 0; n < shape.register_dimension(); ++n)
        CHECK(DigitString::encode(n, shape).value() == n);
    }
}

TEST_CASE("display order is most significant first") {
  RegisterShape shape(2, 3);
  CHECK(DigitString::encode(6, shape).display() == "110");
  CHECK(DigitString::parse_display("110", shape).value() == 6);
  CHECK_THROWS_AS(DigitString::parse_display("120", shape), std::invalid_argument);
}

TEST_CASE("concat follows s*w positions") {
  RegisterShape shape(2, 2);
  BasisState sw = concat(DigitString(shape, {1, 0}), DigitString(shape, {0, 1}));
  CHECK(sw.part(1).digits() == std::vector<std::uint8_t>{1, 0});
  CHECK(sw.part(2).digits() == std::vector<std::uint8_t>{0, 1});
  // global positions: h <= L reads s(h), h > L reads w(h-L)
  CHECK(index_digit(sw.index(), 1, sw.shape()) == 1);
  CHECK(index_digit(sw.index(), 2, sw.shape()) == 0);
  CHECK(index_digit(sw.index(), 3, sw.shape()) == 0);
  CHECK(index_digit(sw.index(), 4, sw.shape()) == 1);

  BasisState zeros = concat(DigitString::zero(shape), DigitString::zero(shape));
  CHECK(zeros.index() == 0);

  RegisterShape s3(2, 3);
  BasisState ones = concat(DigitString(s3, {1, 1, 1}), DigitString(s3, {1, 1, 1}));
  CHECK(ones.index() == 63);

  RegisterShape other(3, 2);
  CHECK_THROWS_AS(concat(DigitString::zero(shape), DigitString::zero(other)),
                  std::invalid_argument);
}

TEST_CASE("basis index is a bijection over all shapes tested") {
  for (std::uint32_t k : {2u, 3u})
    for (std::uint32_t m : {1u, 2u}) {
      RegisterShape shape(k, 2, m);
      std::vector<bool> seen(shape.dimension(), false);
      for (Index i = 0; i < shape.dimension(); ++i) {
        BasisState b = BasisState::from_index(i, shape);
        CHECK(b.index() == i);
        CHECK(!seen[i]);
        seen[i] = true;
      }
    }
}

TEST_CASE("basis statevectors have unit norm and a single amplitude") {
  RegisterShape shape(2, 3);
  StateVector v = StateVector::basis(5, shape);
  CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v.amplitudes().size() == 1);
  CHECK(v.amplitude(5) == Amplitude{1.0, 0.0});
  CHECK(StateVector::basis(0, shape).amplitude(0) == Amplitude{1.0, 0.0});
}

TEST_CASE("statevector validation") {
  RegisterShape shape(2, 2);
  CHECK_THROWS_AS(StateVector(shape, {{0, {0.5, 0.0}}}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(shape, {{7, {1.0, 0.0}}}), std::out_of_range);
}

TEST_CASE("statevector JSON round trip drops sub-floor amplitudes") {
  RegisterShape shape(2, 2);
  double a = std::sqrt(0.5);
  StateVector v(shape, {{0, {a, 0.0}}, {3, {0.0, -a}}});
  Json j = statevector_to_json(v);
  CHECK(j["amplitudes"].size() == 2);
  CHECK(j["amplitudes"][0]["index"] < j["amplitudes"][1]["index"]);
  StateVector back = statevector_from_json(j);
  CHECK(back.approx_equal(v));

  Json bad = j;
  std::swap(bad["amplitudes"][0], bad["amplitudes"][1]);
  CHECK_THROWS_AS(statevector_from_json(bad), std::invalid_argument);
}

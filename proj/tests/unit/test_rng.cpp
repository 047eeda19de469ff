#include <doctest.h>

#include "levelset_lab/rng.hpp"

using namespace lsl;

TEST_CASE("philox4x32-10 known-answer vectors") {
  // Reference vectors from the Random123 test suite.
  auto zero = philox::block({0, 0, 0, 0}, {0, 0});
  CHECK(zero[0] == 0x6627e8d5u);
  CHECK(zero[1] == 0xe169c58du);
  CHECK(zero[2] == 0xbc57ac4cu);
  CHECK(zero[3] == 0x9b00dbd8u);

  auto ones = philox::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                            {0xffffffffu, 0xffffffffu});
  CHECK(ones[0] == 0x408f276du);
  CHECK(ones[1] == 0x41c83b0eu);
  CHECK(ones[2] == 0xa20bc7c6u);
  CHECK(ones[3] == 0x6d5451fdu);

  auto pi = philox::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u});
  CHECK(pi[0] == 0xd16cfe09u);
  CHECK(pi[1] == 0x94fdccebu);
  CHECK(pi[2] == 0x5001e420u);
  CHECK(pi[3] == 0x24126ea1u);
}

TEST_CASE("streams are reproducible and forks are independent") {
  RandomStream a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RandomStream c(42, 7);
  RandomStream f1 = c.fork(1), f2 = c.fork(2);
  CHECK(f1.next_u64() != f2.next_u64());
  CHECK(c.fork(1).next_u64() == RandomStream(42, 7).fork(1).next_u64());
}

TEST_CASE("uniform draws respect their ranges") {
  RandomStream rs(1);
  for (int i = 0; i < 1000; ++i) {
    const double d = rs.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    const int64_t v = rs.uniform_int(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
  }
}

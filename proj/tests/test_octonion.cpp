#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6wb/octonion.hpp"

using namespace e6wb;

namespace {
Octonion sample(int seed) {
  RatRng rng(1000 + seed);
  Octonion o;
  for (std::size_t i = 0; i < kOctDim; ++i) o[i] = rng.next_rat();
  return o;
}
}  // namespace

TEST_CASE("unit products follow the xor index rule") {
  for (std::size_t a = 0; a < kOctDim; ++a) {
    for (std::size_t b = 0; b < kOctDim; ++b) {
      auto [sign, idx] = unit_product(a, b);
      CHECK(idx == (a ^ b));
      CHECK((sign == 1 || sign == -1));
      CHECK(Octonion::unit(a) * Octonion::unit(b) == Octonion::unit(idx) * Rat(sign));
    }
  }
}

TEST_CASE("quaternion subalgebra and doubling conventions") {
  Octonion i = Octonion::unit(1), j = Octonion::unit(2), k = Octonion::unit(3);
  Octonion l = Octonion::unit(7), kl = Octonion::unit(4), jl = Octonion::unit(5);
  CHECK(i * j == k);
  CHECK(k * l == kl);
  CHECK(j * l == jl);
  // Nonassociativity witness: i(jl) = -kl while (ij)l = kl.
  CHECK(i * jl == -kl);
  CHECK((i * j) * l == kl);
  CHECK_FALSE(associator(i, j, l).is_zero());
  // <1, k, kl, l> closes: associators inside a quaternion subalgebra vanish.
  for (std::size_t a : {0, 3, 4, 7})
    for (std::size_t b : {0, 3, 4, 7})
      for (std::size_t c : {0, 3, 4, 7})
        CHECK(associator(Octonion::unit(a), Octonion::unit(b), Octonion::unit(c)).is_zero());
}

TEST_CASE("alternativity and norm composition") {
  for (int s = 0; s < 4; ++s) {
    Octonion x = sample(s), y = sample(s + 5);
    CHECK(x * (x * y) == (x * x) * y);
    CHECK((y * x) * x == y * (x * x));
    CHECK((x * y).norm_sq() == x.norm_sq() * y.norm_sq());
    CHECK((x * y).conj() == y.conj() * x.conj());
  }
}

TEST_CASE("derivation algebra has dimension 14") {
  std::vector<OctonionMap> g2 = derivation_space();
  CHECK(g2.size() == 14);
  for (const OctonionMap& d : g2) {
    CHECK(d.is_derivation());
    CHECK(d.apply(Octonion::real(1)).is_zero());
  }
}

TEST_CASE("derivations fixing the quaternion subalgebra form a 3-dim space") {
  std::vector<Octonion> H = {Octonion::unit(0), Octonion::unit(3), Octonion::unit(4),
                             Octonion::unit(7)};
  std::vector<OctonionMap> fix = derivations_vanishing_on(H);
  CHECK(fix.size() == 3);
  for (const OctonionMap& d : fix)
    for (const Octonion& h : H) CHECK(d.apply(h).is_zero());
}

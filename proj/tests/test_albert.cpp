#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6wb/albert.hpp"
#include "e6wb/operator_rep.hpp"

using namespace e6wb;

namespace {
AlbertElement sample(int seed) {
  RatRng rng(2000 + seed);
  Vec v(kAlbertDim);
  for (std::size_t i = 0; i < kAlbertDim; ++i) v[i] = rng.next_rat();
  return AlbertElement::from_coords(v);
}
}  // namespace

TEST_CASE("determinant on diagonal elements") {
  CHECK(determinant(AlbertElement::identity()) == 1);
  CHECK(determinant(AlbertElement::diag(Rat(2), Rat(3), Rat(5))) == 30);
  AlbertElement x = AlbertElement::diag(Rat(1), Rat(1), Rat(0));
  x.set_x12(Octonion::unit(1) * Rat(2));
  // p1 p2 p3 - p3 n(x12) with p3 = 0 and the x12 norm term absent.
  CHECK(determinant(x) == 0);
}

TEST_CASE("directional derivative matches cubic interpolation") {
  for (int s = 0; s < 6; ++s) {
    AlbertElement x = sample(s), y = sample(s + 9);
    // det(x + t y) = det x + t D + t^2 E + t^3 det y; D from t = 1, -1.
    Rat d = (determinant(x + y) - determinant(x - y)) / 2 - determinant(y);
    CHECK(det_directional_derivative(x, y) == d);
  }
}

TEST_CASE("jordan product is commutative and satisfies the jordan identity") {
  for (int s = 0; s < 4; ++s) {
    AlbertElement x = sample(s), y = sample(s + 3);
    CHECK(jordan_product(x, y) == jordan_product(y, x));
    AlbertElement x2 = jordan_product(x, x);
    CHECK(jordan_product(jordan_product(x2, y), x) == jordan_product(x2, jordan_product(y, x)));
  }
}

TEST_CASE("trace form gram is diagonal with entries 1,1,1 then 2") {
  const Mat& g = trace_form_gram();
  REQUIRE(g.rows() == kAlbertDim);
  for (std::size_t i = 0; i < kAlbertDim; ++i) {
    for (std::size_t j = 0; j < kAlbertDim; ++j) {
      if (i != j)
        CHECK(g.at(i, j) == 0);
      else
        CHECK(g.at(i, i) == (i < 3 ? Rat(1) : Rat(2)));
    }
  }
}

TEST_CASE("trace form is symmetric and matches the gram") {
  for (int s = 0; s < 3; ++s) {
    AlbertElement x = sample(s), y = sample(s + 7);
    CHECK(trace_form(x, y) == trace_form(y, x));
    Rat via_gram = 0;
    Vec xv = x.coord_vec(), yv = y.coord_vec();
    for (std::size_t i = 0; i < kAlbertDim; ++i)
      via_gram += trace_form_gram().at(i, i) * xv[i] * yv[i];
    CHECK(trace_form(x, y) == via_gram);
  }
}

TEST_CASE("quaternionic subspace has dimension 15") {
  std::vector<AlbertElement> jh = quaternionic_subspace();
  CHECK(jh.size() == 15);
  for (const AlbertElement& e : jh) {
    Vec v = e.coord_vec();
    for (std::size_t i = 3; i < kAlbertDim; ++i)
      if (v[i] != 0) CHECK(oct_index_in_H((i - 3) % kOctDim));
  }
}

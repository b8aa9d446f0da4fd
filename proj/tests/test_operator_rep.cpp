#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6wb/operator_rep.hpp"

using namespace e6wb;

TEST_CASE("full basis has 78 members split 52 rotations / 26 boosts") {
  std::vector<BasisMember> basis = full_basis();
  REQUIRE(basis.size() == kAlgebraDim);
  std::size_t boosts = 0, rotations = 0;
  for (const BasisMember& m : basis) {
    if (m.is_boost) {
      ++boosts;
      CHECK(is_trace_form_symmetric(m.op));
    } else {
      ++rotations;
      CHECK(is_trace_form_antisymmetric(m.op));
    }
  }
  CHECK(boosts == 26);
  CHECK(rotations == 52);
}

TEST_CASE("the three tz boosts are dependent: B1 + B2 + B3 = 0") {
  Operator sum = boost_gen(1, Direction::Z()) + boost_gen(2, Direction::Z());
  CHECK((sum + boost_gen(3, Direction::Z())).is_zero());
}

TEST_CASE("block generators have the advertised symmetry type") {
  for (int t = 1; t <= 3; ++t) {
    CHECK(is_trace_form_symmetric(boost_gen(t, Direction::Z())));
    CHECK(is_trace_form_symmetric(boost_gen(t, Direction::X())));
    CHECK(is_trace_form_symmetric(boost_gen(t, Direction::Q(7))));
    CHECK(is_trace_form_antisymmetric(rotation_gen(t, {RotPairKind::XZ, 0})));
    CHECK(is_trace_form_antisymmetric(rotation_gen(t, {RotPairKind::XQ, 3})));
    CHECK(is_trace_form_antisymmetric(rotation_gen(t, {RotPairKind::ZQ, 5})));
  }
}

TEST_CASE("derivation lifts kill the diagonal and are rotations") {
  for (const OctonionMap& d : derivation_space()) {
    Operator op = derivation_lift(d);
    CHECK(is_trace_form_antisymmetric(op));
    CHECK(op.apply(AlbertElement::identity()).is_zero());
    CHECK(op.apply(AlbertElement::diag(Rat(1), Rat(-2), Rat(5))).is_zero());
  }
}

TEST_CASE("basis operators preserve the determinant to first order") {
  AlbertElement x = AlbertElement::identity();
  x.set_x23(Octonion::unit(2) + Octonion::unit(7) * Rat(1, 2));
  x.set_x13(Octonion::unit(4) * Rat(-3));
  x.p(0) = Rat(5, 3);
  for (const BasisMember& m : full_basis())
    CHECK(det_directional_derivative(x, m.op.apply(x)) == 0);
}

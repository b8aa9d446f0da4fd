#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6wb/gradings.hpp"

using namespace e6wb;

namespace {
const StructureContext& ctx() {
  static const StructureContext c = StructureContext::build();
  return c;
}
const Involution& s() {
  static const Involution i = phi_s(ctx());
  return i;
}
const Involution& t() {
  static const Involution i = phi_t(ctx());
  return i;
}
const Involution& h() {
  static const Involution i = phi_h(ctx());
  return i;
}
}  // namespace

TEST_CASE("phi_s splits 52 rotations against 26 boosts") {
  CHECK(s().plus.dim() == 52);
  CHECK(s().minus.dim() == 26);
  CHECK_NOTHROW(check_grading(ctx(), s()));
  CHECK(signature(ctx(), s().plus) == std::pair<std::size_t, std::size_t>{52, 0});
}

TEST_CASE("phi_t fixes the 46-dim t1") {
  CHECK(t().plus.dim() == 46);
  CHECK(t().minus.dim() == 32);
  CHECK_NOTHROW(check_grading(ctx(), t()));
  CHECK(signature(ctx(), t().plus) == std::pair<std::size_t, std::size_t>{36, 10});
}

TEST_CASE("phi_h fixes the 38-dim quaternionic stabilizer") {
  CHECK(h().plus.dim() == 38);
  CHECK(h().minus.dim() == 40);
  CHECK_NOTHROW(check_grading(ctx(), h()));
  CHECK(signature(ctx(), h().plus) == std::pair<std::size_t, std::size_t>{24, 14});
}

TEST_CASE("refinement yields the 8 atoms with the expected dimensions") {
  AtomDecomposition atoms = refine(ctx(), s(), t(), h());
  const std::size_t expected[8] = {16, 6, 8, 8, 20, 4, 8, 8};
  std::size_t total = 0;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    CHECK(atoms.atoms[mask].dim() == expected[mask]);
    total += atoms.atoms[mask].dim();
  }
  CHECK(total == 78);
}

TEST_CASE("atom names encode the three eigenvalue bits") {
  CHECK(AtomDecomposition::atom_name(0) == "r1H");
  CHECK(AtomDecomposition::atom_name(1) == "b1H");
  CHECK(AtomDecomposition::atom_name(6) == "r23p");
  CHECK(AtomDecomposition::atom_name(7) == "b23p");
  CHECK(AtomDecomposition::mask_of(true, true, true) == 7);
}

TEST_CASE("comm table of the (phi_s, phi_t) refinement is xor-structured") {
  std::vector<Subspace> parts = refine_parts(ctx(), {s(), t()});
  REQUIRE(parts.size() == 4);
  auto table = comm_table(ctx(), parts);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(table[i][j] == (i ^ j));
}

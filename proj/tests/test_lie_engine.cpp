#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6wb/lie_engine.hpp"

using namespace e6wb;

namespace {
const StructureContext& ctx() {
  static const StructureContext c = StructureContext::build();
  return c;
}
}  // namespace

TEST_CASE("structure constants satisfy the jacobi identity") {
  auto [i, j] = jacobi_violation(ctx().ad());
  CHECK(i == ctx().dim());
  CHECK(j == ctx().dim());
}

TEST_CASE("fault injection is detected by the jacobi check") {
  std::vector<Mat> ads = ctx().ad();
  ads[5].at(17, 40) += 1;
  auto [i, j] = jacobi_violation(ads);
  CHECK(i < ads.size());
}

TEST_CASE("killing form is ad-invariant and has signature (52,26)") {
  CHECK(killing_invariance_violation(ctx().ad(), ctx().killing_gram()) == ctx().dim());
  CHECK(signature(ctx(), ctx().whole()) == std::pair<std::size_t, std::size_t>{52, 26});
}

TEST_CASE("coords and from_coords round-trip") {
  RatRng rng(3000);
  Vec c(ctx().dim());
  for (Rat& x : c) x = rng.next_rat();
  CHECK(ctx().coords(ctx().from_coords(c)) == c);
}

TEST_CASE("bracket agrees with the operator commutator") {
  Vec u(ctx().dim()), v(ctx().dim());
  u[3] = 1;
  u[40] = Rat(2, 3);
  v[11] = -1;
  v[70] = Rat(5);
  Operator ou = ctx().from_coords(u), ov = ctx().from_coords(v);
  CHECK(ctx().from_coords(ctx().bracket(u, v)) == ou.bracket(ov));
}

TEST_CASE("the whole algebra has trivial center and rank 6") {
  CHECK(centralizer(ctx(), ctx().whole(), ctx().whole()).dim() == 0);
  CHECK(rank(ctx(), ctx().whole()) == 6);
}

TEST_CASE("rank of a 1-dim subalgebra is 1") {
  Mat row(0, ctx().dim());
  Vec v(ctx().dim());
  v[0] = 1;
  row.append_row(v);
  CHECK(rank(ctx(), Subspace::from_rows(row)) == 1);
}

TEST_CASE("closure of a basis rotation and boost reaches a subalgebra") {
  Mat seed(0, ctx().dim());
  Vec v(ctx().dim());
  v[0] = 1;
  seed.append_row(v);
  Subspace s = closure(ctx(), seed);
  CHECK(is_bracket_closed(ctx(), s));
}

TEST_CASE("subspace set operations") {
  Subspace r = ctx().rotations(), b = ctx().boosts();
  CHECK(intersect(r, b).dim() == 0);
  CHECK(subspace_sum(r, b) == ctx().whole());
  CHECK(orthogonal_complement(ctx(), r, ctx().whole()) == b);
}

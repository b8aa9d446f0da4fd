#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "e6wb/cartan_maps.hpp"

using namespace e6wb;

namespace {
struct Fixture {
  StructureContext ctx = StructureContext::build();
  Involution s = phi_s(ctx), t = phi_t(ctx), h = phi_h(ctx);
  AtomDecomposition atoms = refine(ctx, s, t, h);
};
const Fixture& fx() {
  static const Fixture f;
  return f;
}
}  // namespace

TEST_CASE("star group is (Z2)^3") {
  std::vector<CartanMap> g = group_elements();
  REQUIRE(g.size() == 8);
  for (const CartanMap& a : g) {
    CHECK(star(a, a).flags == 0);
    for (const CartanMap& b : g) {
      CHECK(star(a, b) == star(b, a));
      CHECK(star(a, b).flags == (a.flags ^ b.flags));
    }
  }
}

TEST_CASE("map names follow the fixed composition order") {
  CHECK(CartanMap{0}.name() == "1");
  CHECK(CartanMap{1}.name() == "phi_s");
  CHECK(CartanMap{6}.name() == "phi_t*phi_h");
  CHECK(CartanMap{7}.name() == "phi_t*phi_h*phi_s");
}

TEST_CASE("image signatures of the generators") {
  CHECK(image_signature(fx().atoms, CartanMap{0}) ==
        std::pair<std::size_t, std::size_t>{52, 26});
  CHECK(image_signature(fx().atoms, CartanMap{1}) == std::pair<std::size_t, std::size_t>{78, 0});
  CHECK(image_signature(fx().atoms, CartanMap{4}) == std::pair<std::size_t, std::size_t>{36, 42});
  CHECK(image_signature(fx().atoms, CartanMap{7}) == std::pair<std::size_t, std::size_t>{38, 40});
}

TEST_CASE("fixed subalgebra and preimage of phi_t") {
  Subspace fixed = fixed_subalgebra(fx().ctx, fx().atoms, CartanMap{2});
  CHECK(fixed.dim() == 46);
  CHECK(signature(fx().ctx, fixed) == std::pair<std::size_t, std::size_t>{36, 10});
  Subspace pre = max_compact_preimage(fx().ctx, fx().atoms, CartanMap{2});
  CHECK(pre.dim() == 52);
  CHECK(signature(fx().ctx, pre) == std::pair<std::size_t, std::size_t>{36, 16});
}

TEST_CASE("orbit realizes 5 real forms with the expected compact dims") {
  std::vector<OrbitRow> rows = orbit_report(fx().ctx, fx().atoms);
  REQUIRE(rows.size() == 8);
  std::vector<std::pair<std::size_t, std::size_t>> sigs;
  std::vector<std::size_t> dims;
  for (const OrbitRow& r : rows) {
    sigs.push_back(r.image_sig);
    dims.push_back(r.compact_dim);
  }
  std::sort(sigs.begin(), sigs.end());
  CHECK(std::unique(sigs.begin(), sigs.end()) - sigs.begin() == 5);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{36, 36, 38, 38, 46, 52, 52, 78});
}

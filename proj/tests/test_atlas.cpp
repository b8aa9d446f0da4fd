#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "e6wb/atlas.hpp"

using namespace e6wb;

namespace {
struct Fixture {
  StructureContext ctx = StructureContext::build();
  Involution s = phi_s(ctx), t = phi_t(ctx), h = phi_h(ctx);
  AtomDecomposition atoms = refine(ctx, s, t, h);
  Catalog cat = build_catalog(ctx, atoms);
};
const Fixture& fx() {
  static const Fixture f;
  return f;
}
}  // namespace

TEST_CASE("all 15 records match their expected signature and class") {
  REQUIRE(fx().cat.records.size() == 15);
  for (const SubalgebraRecord& rec : fx().cat.records) {
    CAPTURE(rec.name);
    CHECK(is_bracket_closed(fx().ctx, rec.span));
    CHECK(rec.dim == rec.expected_sig.first + rec.expected_sig.second);
    CHECK(rec.sig == rec.expected_sig);
    CHECK(rec.classification == rec.expected_class);
  }
}

TEST_CASE("record census mirrors the fano structure: 1 + 7 + 7") {
  std::size_t ones = 0, twos = 0, fours = 0;
  for (const SubalgebraRecord& rec : fx().cat.records) {
    if (rec.atom_masks.size() == 1) ++ones;
    if (rec.atom_masks.size() == 2) ++twos;
    if (rec.atom_masks.size() == 4) ++fours;
  }
  CHECK(ones == 1);
  CHECK(twos == 7);
  CHECK(fours == 7);
}

TEST_CASE("classification is stable under basis change") {
  const SubalgebraRecord& rec = fx().cat.records[1];
  Mat rows(0, fx().ctx.dim());
  for (std::size_t i = 0; i < rec.span.dim(); ++i) {
    Vec v = rec.span.basis_vector(i);
    if (i + 1 < rec.span.dim()) vec_axpy(v, Rat(3), rec.span.basis_vector(i + 1));
    rows.append_row(v);
  }
  std::vector<Subspace> c4 = {fx().cat.records[11].span, fx().cat.records[12].span};
  auto ideals = classify(fx().ctx, Subspace::from_rows(rows), c4);
  CHECK(classification_string(ideals) == rec.classification);
}

TEST_CASE("distinguished pieces") {
  const DistinguishedPieces& p = fx().cat.pieces;
  CHECK(p.g2.dim() == 14);
  CHECK(p.su2_h.dim() == 3);
  CHECK(p.su2_2.dim() == 3);
  CHECK(p.u_neg1.dim() == 1);
  CHECK(p.g2.contains(p.su2_h));
  CHECK_FALSE(p.g2.contains(p.su2_2));
  CHECK(signature(fx().ctx, p.su2_h) == std::pair<std::size_t, std::size_t>{3, 0});
  CHECK(signature(fx().ctx, p.su2_2) == std::pair<std::size_t, std::size_t>{3, 0});
  CHECK(signature(fx().ctx, p.u_neg1) == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("cartan basis completion") {
  Subspace c = cartan_basis(fx().ctx);
  CHECK(c.dim() == 6);
  CHECK(signature(fx().ctx, c) == std::pair<std::size_t, std::size_t>{4, 2});
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Mat ad = fx().ctx.ad_of(c.basis_vector(i));
    for (std::size_t j = 0; j < c.dim(); ++j) CHECK(vec_is_zero(ad.apply(c.basis_vector(j))));
  }
  CHECK(centralizer(fx().ctx, c, fx().ctx.whole()) == c);
}

TEST_CASE("inclusion graph contains the su(2,H) chain into four c3 forms") {
  InclusionGraph g = inclusion_graph(fx().ctx, fx().cat);
  std::size_t su2h = g.nodes.size();
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].name == "su(2,H)") su2h = i;
  REQUIRE(su2h < g.nodes.size());
  std::size_t c3_parents = 0;
  for (auto [child, parent] : g.edges) {
    CHECK(g.nodes[parent].span.contains(g.nodes[child].span));
    CHECK(g.nodes[child].dim < g.nodes[parent].dim);
    if (child == su2h && g.nodes[parent].dim == 21) ++c3_parents;
  }
  CHECK(c3_parents == 4);
}

TEST_CASE("dot export is well formed") {
  InclusionGraph g = inclusion_graph(fx().ctx, fx().cat);
  std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("su(2,H)") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
}

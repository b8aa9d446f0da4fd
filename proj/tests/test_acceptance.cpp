// Acceptance gate: one line per criterion, exact arithmetic throughout.
#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "e6wb/report.hpp"

using namespace e6wb;

namespace {

int failures = 0;

void line(int number, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << " " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++failures;
}

std::string sig_str(std::pair<std::size_t, std::size_t> s) {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

}  // namespace

int main() {
  const Workspace& w = Workspace::get();
  const StructureContext& ctx = w.ctx();

  // 1. Construction: 78 operators, 52 rotations, 26 boosts.
  line(1, "construction 78 = 52 + 26",
       ctx.dim() == 78 && ctx.rotations().dim() == 52 && ctx.boosts().dim() == 26,
       std::to_string(ctx.dim()) + " = " + std::to_string(ctx.rotations().dim()) + " + " +
           std::to_string(ctx.boosts().dim()));

  // 2. Determinant invariance at 50 pseudo-random rational points.
  {
    RatRng rng(20260823u);
    std::size_t zeros = 0, total = 0;
    for (int p = 0; p < 50; ++p) {
      Vec v(kAlbertDim);
      for (Rat& c : v) c = rng.next_rat();
      AlbertElement x = AlbertElement::from_coords(v);
      for (const BasisMember& m : ctx.basis()) {
        ++total;
        if (det_directional_derivative(x, m.op.apply(x)) == 0) ++zeros;
      }
    }
    line(2, "determinant invariance", zeros == total,
         std::to_string(zeros) + "/" + std::to_string(total) + " exact zeros");
  }

  // 3. Killing signatures of the whole algebra, r, t1 and h.
  {
    auto whole = signature(ctx, ctx.whole());
    auto r = signature(ctx, w.s().plus);
    auto t1 = signature(ctx, w.t().plus);
    auto h = signature(ctx, w.h().plus);
    bool ok = whole == std::pair<std::size_t, std::size_t>{52, 26} &&
              r == std::pair<std::size_t, std::size_t>{52, 0} &&
              t1 == std::pair<std::size_t, std::size_t>{36, 10} &&
              h == std::pair<std::size_t, std::size_t>{24, 14};
    line(3, "killing signatures", ok,
         sig_str(whole) + " " + sig_str(r) + " " + sig_str(t1) + " " + sig_str(h));
  }

  // 4. Grading laws for all three involutions, exhaustive on basis pairs.
  {
    bool ok = true;
    std::string detail = "laws hold for phi_s, phi_t, phi_h";
    for (const Involution* inv : {&w.s(), &w.t(), &w.h()}) {
      try {
        check_grading(ctx, *inv);
      } catch (const std::exception& e) {
        ok = false;
        detail = inv->name + ": " + e.what();
      }
    }
    line(4, "grading laws", ok, detail);
  }

  // 5. Table of (h, h-perp) x (t1, t23) signatures.
  {
    const Subspace* hp[2] = {&w.h().plus, &w.h().minus};
    const Subspace* tp[2] = {&w.t().plus, &w.t().minus};
    const std::pair<std::size_t, std::size_t> expect[4] = {{16, 6}, {8, 8}, {20, 4}, {8, 8}};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
      auto sig = signature(ctx, intersect(*hp[i / 2], *tp[i % 2]));
      ok = ok && sig == expect[i];
      detail += (i ? " " : "") + sig_str(sig);
    }
    line(5, "intersection signatures", ok, detail);
  }

  // 6. Dimension splits under phi_h, phi_t and their refinement.
  {
    const Subspace* rb[2] = {&ctx.rotations(), &ctx.boosts()};
    const Subspace* hp[2] = {&w.h().plus, &w.h().minus};
    const Subspace* tp[2] = {&w.t().plus, &w.t().minus};
    const std::size_t ht[4] = {24, 28, 14, 12};
    const std::size_t tt[4] = {36, 16, 10, 16};
    const std::size_t atoms[8] = {16, 6, 8, 8, 20, 4, 8, 8};
    bool ok = true;
    for (int i = 0; i < 4; ++i) ok = ok && intersect(*rb[i / 2], *hp[i % 2]).dim() == ht[i];
    for (int i = 0; i < 4; ++i) ok = ok && intersect(*rb[i / 2], *tp[i % 2]).dim() == tt[i];
    for (std::size_t m = 0; m < 8; ++m) ok = ok && w.atoms().atoms[m].dim() == atoms[m];
    line(6, "splitting dimensions", ok, "24/28/14/12, 36/16/10/16, atoms 16/6/8/8/20/4/8/8");
  }

  // 7. Commutator tables are xor-structured and isomorphic to the unsigned
  //    octonion unit table; every atom squares into r1H.
  {
    std::vector<Subspace> four = refine_parts(ctx, {w.s(), w.t()});
    std::vector<Subspace> eight(w.atoms().atoms.begin(), w.atoms().atoms.end());
    auto t4 = comm_table(ctx, four);
    auto t8 = comm_table(ctx, eight);
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) ok = ok && t4[i][j] == (i ^ j);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) ok = ok && t8[i][j] == (i ^ j);
    for (std::size_t a = 0; a < kOctDim; ++a)
      for (std::size_t b = 0; b < kOctDim; ++b) ok = ok && unit_product(a, b).second == (a ^ b);
    line(7, "comm tables match the fano structure", ok, "both tables and units are xor-indexed");
  }

  // 8. All 8 rows of the map table: image, fixed and preimage signatures.
  {
    struct Row {
      std::pair<std::size_t, std::size_t> image, fixed, preimage;
    };
    const Row rows[8] = {
        {{52, 26}, {52, 26}, {52, 0}},  {{78, 0}, {52, 0}, {52, 26}},
        {{52, 26}, {36, 10}, {36, 16}}, {{36, 42}, {24, 14}, {24, 12}},
        {{46, 32}, {36, 16}, {36, 10}}, {{38, 40}, {24, 12}, {24, 14}},
        {{36, 42}, {24, 14}, {24, 12}}, {{38, 40}, {24, 12}, {24, 14}},
    };
    std::vector<CartanMap> g = group_elements();
    bool ok = true;
    for (std::size_t i = 0; i < 8; ++i) {
      ok = ok && image_signature(w.atoms(), g[i]) == rows[i].image;
      ok = ok && signature(ctx, fixed_subalgebra(ctx, w.atoms(), g[i])) == rows[i].fixed;
      ok = ok && signature(ctx, max_compact_preimage(ctx, w.atoms(), g[i])) == rows[i].preimage;
    }
    line(8, "map table all 8 rows", ok, "image, fixed and preimage signatures");
  }

  // 9. Orbit: 5 distinct image signatures, compact dims {78,52,46,38,52,36,38,36}.
  {
    std::vector<OrbitRow> rows = orbit_report(ctx, w.atoms());
    std::set<std::pair<std::size_t, std::size_t>> sigs;
    std::multiset<std::size_t> dims;
    for (const OrbitRow& r : rows) {
      sigs.insert(r.image_sig);
      dims.insert(r.compact_dim);
    }
    bool ok = sigs.size() == 5 && dims == std::multiset<std::size_t>{36, 36, 38, 38, 46, 52, 52, 78};
    line(9, "orbit of real forms", ok,
         std::to_string(sigs.size()) + " distinct signatures over 8 elements");
  }

  // 10. The 15-record catalog closes under bracket and matches dim/signature.
  {
    const Catalog& cat = w.catalog();
    bool ok = cat.records.size() == 15;
    std::map<std::pair<std::size_t, std::size_t>, int> at2412;
    for (const SubalgebraRecord& rec : cat.records) {
      ok = ok && is_bracket_closed(ctx, rec.span) && rec.sig == rec.expected_sig &&
           rec.dim == rec.expected_sig.first + rec.expected_sig.second;
      if (rec.sig == std::pair<std::size_t, std::size_t>{24, 12}) ++at2412[rec.sig];
    }
    ok = ok && at2412[{24, 12}] == 2;
    line(10, "catalog 15 records", ok, "all recipes closed, signatures exact, two at (24,12)");
  }

  // 11. Classification: rank 6; c3 not b3 in r_H; h = 35 + 3; t1 = 45 + center.
  {
    const Catalog& cat = w.catalog();
    bool ok = rank(ctx, ctx.whole()) == 6;
    for (const SubalgebraRecord& rec : cat.records) ok = ok && rec.classification == rec.expected_class;
    bool rh_c3 = false;
    for (const IdealInfo& ideal : cat.records[5].ideals)
      if (ideal.space.dim() == 21) rh_c3 = ideal.complex_type == "c3";
    ok = ok && rh_c3;
    std::multiset<std::size_t> hdims, tdims;
    bool t_center = false;
    for (const IdealPart& p : ideal_decomposition(ctx, w.h().plus)) hdims.insert(p.space.dim());
    for (const IdealPart& p : ideal_decomposition(ctx, w.t().plus)) {
      tdims.insert(p.space.dim());
      if (p.is_center && p.space.dim() == 1) t_center = true;
    }
    ok = ok && hdims == std::multiset<std::size_t>{3, 35} &&
         tdims == std::multiset<std::size_t>{1, 45} && t_center;
    line(11, "classification", ok, "rank 6, c3 in r_H, h = 35+3, t1 = 45+center");
  }

  // 12. Cartan basis: 6-dim abelian self-centralizing, contains the seeds,
  //     signature (4,2).
  {
    bool ok = false;
    std::string detail;
    try {
      Subspace c = cartan_basis(ctx);
      Mat rows(0, ctx.dim());
      rows.append_row(ctx.coords(boost_gen(1, Direction::Z())));
      rows.append_row(ctx.coords(boost_gen(2, Direction::Z()) - boost_gen(3, Direction::Z())));
      rows.append_row(ctx.coords(rotation_gen(1, {RotPairKind::ZQ, 7})));
      bool abelian = true;
      for (std::size_t i = 0; i < c.dim(); ++i) {
        Mat ad = ctx.ad_of(c.basis_vector(i));
        for (std::size_t j = 0; j < c.dim(); ++j)
          abelian = abelian && vec_is_zero(ad.apply(c.basis_vector(j)));
      }
      ok = c.dim() == 6 && c.contains(Subspace::from_rows(rows)) && abelian &&
           centralizer(ctx, c, ctx.whole()) == c &&
           signature(ctx, c) == std::pair<std::size_t, std::size_t>{4, 2};
      detail = "dim 6, abelian, self-centralizing, signature (4,2)";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    line(12, "cartan basis", ok, detail);
  }

  // 13. Star group laws: commutative, self-inverse, order 8.
  {
    std::vector<CartanMap> g = group_elements();
    std::set<unsigned> seen;
    bool ok = g.size() == 8;
    for (const CartanMap& a : g) {
      seen.insert(a.flags);
      ok = ok && star(a, a).flags == 0;
      for (const CartanMap& b : g) ok = ok && star(a, b) == star(b, a) && star(a, b).flags < 8;
    }
    ok = ok && seen.size() == 8;
    line(13, "star group is (Z2)^3", ok, "commutative, self-inverse, order 8");
  }

  // 14. Determinism: two full verify runs produce byte-identical reports.
  {
    std::string a = render_text(run_verify({}));
    std::string b = render_text(run_verify({}));
    bool ok = a == b && a.find(" 0 failures") != std::string::npos;
    line(14, "verify output is deterministic", ok,
         std::to_string(a.size()) + " bytes, identical across runs");
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << failures
            << " failing criteria)\n";
  return failures == 0 ? 0 : 1;
}

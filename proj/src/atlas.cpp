#include "e6wb/atlas.hpp"

#include <algorithm>
#include <sstream>

namespace e6wb {

namespace {

struct FormRow {
  std::size_t dim;
  Signature sig;
  std::size_t rank;
  const char* complex_type;
  const char* real_name;
};

// Real forms the catalog can produce, keyed by (dim, signature).
// The (21, (21,0)) row is ambiguous between b3 and c3 and handled apart.
const FormRow kForms[] = {
    {3, {3, 0}, 1, "a1", "su(2)"},
    {3, {1, 2}, 1, "a1", "sl(2,R)"},
    {8, {8, 0}, 2, "a2", "su(3)"},
    {10, {10, 0}, 2, "b2", "so(5)=su(2,H)"},
    {10, {6, 4}, 2, "b2", "so(4,1)"},
    {14, {14, 0}, 2, "g2", "g2"},
    {15, {15, 0}, 3, "a3", "su(4)"},
    {15, {10, 5}, 3, "a3", "sl(2,H)"},
    {21, {13, 8}, 3, "c3", "su(2,1,H)"},
    {28, {28, 0}, 4, "d4", "so(8)"},
    {35, {35, 0}, 5, "a5", "su(6)"},
    {35, {21, 14}, 5, "a5", "sl(3,H)"},
    {36, {36, 0}, 4, "b4", "so(9)"},
    {36, {24, 12}, 4, "c4", "su(3,1,H)"},
    {45, {36, 9}, 5, "d5", "so(9,1)"},
    {52, {52, 0}, 4, "f4", "su(3,O)"},
    {52, {36, 16}, 4, "f4", "su(2,1,O)"},
    {78, {52, 26}, 6, "e6", "sl(3,O)"},
    {78, {78, 0}, 6, "e6", "e6 compact"},
};

std::string sig_str(const Signature& s) {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

std::string center_label(const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < sig.first; ++i) out += out.empty() ? "u(1)" : "+u(1)";
  for (std::size_t i = 0; i < sig.second; ++i) out += out.empty() ? "u(-1)" : "+u(-1)";
  return out;
}

}  // namespace

std::vector<IdealInfo> classify(const StructureContext& ctx, const Subspace& s,
                                const std::vector<Subspace>& c4_spans) {
  std::vector<IdealInfo> out;
  for (const IdealPart& part : ideal_decomposition(ctx, s)) {
    IdealInfo info;
    info.space = part.space;
    info.is_center = part.is_center;
    info.sig = signature(ctx, part.space);
    if (part.is_center) {
      info.rank = part.space.dim();
      info.complex_type = center_label(info.sig);
      info.real_name = info.complex_type;
      out.push_back(std::move(info));
      continue;
    }
    info.rank = rank(ctx, part.space);
    std::size_t dim = part.space.dim();
    if (dim == 21 && info.sig == Signature{21, 0}) {
      if (info.rank != 3) throw Unclassified("21-dim compact ideal of rank != 3");
      bool in_c4 = false;
      for (const Subspace& c4 : c4_spans) {
        if (c4.contains(part.space)) in_c4 = true;
      }
      info.complex_type = in_c4 ? "c3" : "b3";
      info.real_name = in_c4 ? "su(3,H)" : "so(7)";
      out.push_back(std::move(info));
      continue;
    }
    const FormRow* hit = nullptr;
    for (const FormRow& row : kForms) {
      if (row.dim == dim && row.sig == info.sig) hit = &row;
    }
    if (hit == nullptr || hit->rank != info.rank)
      throw Unclassified("no real form with dim " + std::to_string(dim) + ", signature " +
                         sig_str(info.sig) + ", rank " + std::to_string(info.rank));
    info.complex_type = hit->complex_type;
    info.real_name = hit->real_name;
    out.push_back(std::move(info));
  }
  return out;
}

std::string classification_string(const std::vector<IdealInfo>& ideals) {
  std::vector<const IdealInfo*> simple, center;
  for (const auto& i : ideals) (i.is_center ? center : simple).push_back(&i);
  std::stable_sort(simple.begin(), simple.end(), [](const IdealInfo* a, const IdealInfo* b) {
    if (a->space.dim() != b->space.dim()) return a->space.dim() > b->space.dim();
    return a->sig.second > b->sig.second;
  });
  std::string out;
  for (const auto* i : simple) out += out.empty() ? i->complex_type : "+" + i->complex_type;
  for (const auto* i : center) out += out.empty() ? i->complex_type : "+" + i->complex_type;
  return out;
}

namespace {

struct RecipeRow {
  const char* name;
  std::vector<std::size_t> masks;
  Signature expected_sig;
  const char* expected_class;
};

// Atom masks: bit0 boost, bit1 t23, bit2 h-perp. r1H=0, b1H=1, r23H=2,
// b23H=3, r1p=4, b1p=5, r23p=6, b23p=7.
const std::vector<RecipeRow>& recipe_rows() {
  static const std::vector<RecipeRow> rows = {
      {"su(2,H)+su(2)_H+su(2)", {0}, {16, 0}, "b2+a1+a1"},
      {"su(3,H)_2+su(2)_H", {0, 6}, {24, 0}, "c3+a1"},
      {"sl(2,H)+su(2)_H+su(2)+u(-1)", {0, 1}, {16, 6}, "a3+a1+a1+u(-1)"},
      {"su(2,1,H)_1+su(2)_H", {0, 7}, {16, 8}, "c3+a1"},
      {"su(2,1,H)_2+su(2)_H", {0, 3}, {16, 8}, "c3+a1"},
      {"su(3,H)_1+su(2)_H", {0, 2}, {24, 0}, "c3+a1"},
      {"so(5)+so(4,1)", {0, 5}, {16, 4}, "b2+b2"},
      {"so(9)", {0, 4}, {36, 0}, "b4"},
      {"sl(3,H)+su(2)_H", {0, 1, 3, 2}, {24, 14}, "a5+a1"},
      {"sl(2,1,H)+su(2)_2", {0, 1, 6, 7}, {24, 14}, "a5+a1"},
      {"sl(2,O)+u(-1)", {0, 1, 5, 4}, {36, 10}, "d5+u(-1)"},
      {"su(3,1,H)_1", {0, 7, 2, 5}, {24, 12}, "c4"},
      {"su(3,1,H)_2", {0, 6, 3, 5}, {24, 12}, "c4"},
      {"su(3,O)", {0, 6, 2, 4}, {52, 0}, "f4"},
      {"su(2,1,O)", {0, 7, 3, 4}, {36, 16}, "f4"},
  };
  return rows;
}

Subspace recipe_span(const StructureContext& ctx, const AtomDecomposition& atoms,
                     const std::vector<std::size_t>& masks) {
  Subspace acc = Subspace::zero();
  for (std::size_t mask : masks) acc = subspace_sum(acc, atoms.atoms[mask]);
  if (!is_bracket_closed(ctx, acc)) throw NotGraded("recipe span is not bracket-closed");
  return acc;
}

std::string recipe_string(const std::vector<std::size_t>& masks) {
  std::string out;
  for (std::size_t mask : masks) {
    if (!out.empty()) out += "+";
    out += AtomDecomposition::atom_name(mask);
  }
  return out;
}

Subspace lift_span(const StructureContext& ctx, const std::vector<OctonionMap>& ders) {
  Mat rows(0, ctx.dim());
  for (const auto& d : ders) rows.append_row(ctx.coords(derivation_lift(d)));
  return Subspace::from_rows(rows);
}

}  // namespace

Catalog build_catalog(const StructureContext& ctx, const AtomDecomposition& atoms) {
  Catalog cat;
  cat.pieces.g2 = lift_span(ctx, derivation_space());
  std::vector<Octonion> hbasis = {Octonion::unit(0), Octonion::unit(3), Octonion::unit(4),
                                  Octonion::unit(7)};
  cat.pieces.su2_h = lift_span(ctx, derivations_vanishing_on(hbasis));
  {
    Operator u = boost_gen(2, Direction::Z()) - boost_gen(3, Direction::Z());
    Mat row(0, ctx.dim());
    row.append_row(ctx.coords(u));
    cat.pieces.u_neg1 = Subspace::from_rows(row);
  }

  for (const RecipeRow& row : recipe_rows()) {
    SubalgebraRecord rec;
    rec.name = row.name;
    rec.atom_masks = row.masks;
    rec.recipe = recipe_string(row.masks);
    rec.span = recipe_span(ctx, atoms, row.masks);
    rec.dim = rec.span.dim();
    rec.sig = signature(ctx, rec.span);
    rec.expected_sig = row.expected_sig;
    rec.expected_class = row.expected_class;
    cat.records.push_back(std::move(rec));
  }

  std::vector<Subspace> c4_spans = {cat.records[11].span, cat.records[12].span};
  for (SubalgebraRecord& rec : cat.records) {
    rec.rank = rank(ctx, rec.span);
    rec.ideals = classify(ctx, rec.span, c4_spans);
    rec.classification = classification_string(rec.ideals);
  }

  // su(2)_2: the 3-dim ideal of the sl(2,1,H) record, not inside g2.
  for (IdealInfo& ideal : cat.records[9].ideals) {
    if (!ideal.is_center && ideal.space.dim() == 3) cat.pieces.su2_2 = ideal.space;
  }

  // Annotate the distinguished su(2) copies across all records.
  for (SubalgebraRecord& rec : cat.records) {
    for (IdealInfo& ideal : rec.ideals) {
      if (ideal.space == cat.pieces.su2_h) ideal.real_name = "su(2)_H";
      if (ideal.space == cat.pieces.su2_2) ideal.real_name = "su(2)_2";
    }
  }
  return cat;
}

Subspace cartan_basis(const StructureContext& ctx) {
  Mat rows(0, ctx.dim());
  rows.append_row(ctx.coords(boost_gen(1, Direction::Z())));
  rows.append_row(ctx.coords(boost_gen(2, Direction::Z()) - boost_gen(3, Direction::Z())));
  rows.append_row(ctx.coords(rotation_gen(1, {RotPairKind::ZQ, 7})));
  Subspace seeds = Subspace::from_rows(rows);
  // The seeds are commuting semisimple elements, so every Cartan subalgebra
  // containing them is the centralizer of a regular element of their common
  // centralizer. A generic rotation keeps the completion compact, matching
  // the compact completion preferred by the seed choice.
  Subspace cz = centralizer(ctx, seeds, ctx.whole());
  Subspace pool = intersect(cz, ctx.rotations());
  std::vector<unsigned> primes;
  for (unsigned c = 2; primes.size() < 6 * pool.dim(); ++c) {
    bool ok = true;
    for (unsigned p : primes) {
      if (c % p == 0) ok = false;
    }
    if (ok) primes.push_back(c);
  }
  for (std::size_t attempt = 0; attempt < 5; ++attempt) {
    Vec u(ctx.dim());
    for (std::size_t i = 0; i < pool.dim(); ++i)
      vec_axpy(u, Rat(primes[attempt * pool.dim() + i]), pool.basis_vector(i));
    Mat urow(0, ctx.dim());
    urow.append_row(u);
    Subspace span = centralizer(ctx, Subspace::from_rows(urow), cz);
    if (span.dim() != 6 || !span.contains(seeds)) continue;
    bool abelian = true;
    for (std::size_t i = 0; i < span.dim() && abelian; ++i) {
      Mat ad = ctx.ad_of(span.basis_vector(i));
      for (std::size_t j = i + 1; j < span.dim(); ++j) {
        if (!vec_is_zero(ad.apply(span.basis_vector(j)))) abelian = false;
      }
    }
    if (!abelian) continue;
    if (!(centralizer(ctx, span, ctx.whole()) == span)) continue;
    return span;
  }
  throw CompletionFailed("no abelian self-centralizing completion found");
}

InclusionGraph inclusion_graph(const StructureContext& ctx, const Catalog& catalog) {
  InclusionGraph g;
  auto add = [&g](std::string name, Subspace span, Signature sig) {
    GraphNode node{std::move(name), std::move(span), 0, sig};
    node.dim = node.span.dim();
    g.nodes.push_back(std::move(node));
  };
  add("sl(3,O)", ctx.whole(), signature(ctx, ctx.whole()));
  for (const SubalgebraRecord& rec : catalog.records) add(rec.name, rec.span, rec.sig);
  // Pure simple ideals that appear as separate chain nodes.
  struct PureNode {
    std::size_t record;
    std::size_t ideal_dim;
    const char* name;
  };
  const PureNode pure[] = {
      {0, 10, "su(2,H)"},    {1, 21, "su(3,H)_2"},  {3, 21, "su(2,1,H)_1"},
      {4, 21, "su(2,1,H)_2"}, {5, 21, "su(3,H)_1"}, {2, 15, "sl(2,H)"},
      {8, 35, "sl(3,H)"},    {9, 35, "sl(2,1,H)"}, {10, 45, "sl(2,O)"},
  };
  for (const PureNode& p : pure) {
    for (const IdealInfo& ideal : catalog.records[p.record].ideals) {
      if (!ideal.is_center && ideal.space.dim() == p.ideal_dim)
        add(p.name, ideal.space, ideal.sig);
    }
  }
  add("g2", catalog.pieces.g2, signature(ctx, catalog.pieces.g2));
  add("su(2)_H", catalog.pieces.su2_h, signature(ctx, catalog.pieces.su2_h));
  add("su(2)_2", catalog.pieces.su2_2, signature(ctx, catalog.pieces.su2_2));

  std::size_t n = g.nodes.size();
  std::vector<std::vector<bool>> within(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || g.nodes[a].dim >= g.nodes[b].dim) continue;
      within[a][b] = g.nodes[b].span.contains(g.nodes[a].span);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!within[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c) {
        if (within[a][c] && within[c][b]) direct = false;
      }
      if (direct) g.edges.push_back({a, b});
    }
  }
  g.notes.push_back(
      "chain nodes without an atom or generator recipe are omitted: "
      "u(1), su(1,H), so(4,R), so(7), so(8), su(2,C)_s, sl(2,C)_s, su(3,C)_s");
  return g;
}

std::string to_dot(const InclusionGraph& g) {
  std::ostringstream out;
  out << "digraph chains {\n  rankdir=BT;\n";
  for (const GraphNode& node : g.nodes) {
    out << "  \"" << node.name << "\" [label=\"" << node.name << "\\n" << node.dim << ", "
        << sig_str(node.sig) << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) {
    out << "  \"" << g.nodes[a].name << "\" -> \"" << g.nodes[b].name << "\";\n";
  }
  for (const std::string& note : g.notes) out << "  // " << note << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace e6wb

#include "e6wb/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace e6wb {
namespace {

std::string sig_str(const Signature& s) {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

CheckResult ck(std::string name, std::string expected, std::string computed) {
  bool pass = expected == computed;
  return {std::move(name), std::move(expected), std::move(computed), pass};
}

CheckResult ck(std::string name, std::size_t expected, std::size_t computed) {
  return ck(std::move(name), std::to_string(expected), std::to_string(computed));
}

CheckResult ck_sig(std::string name, const Signature& expected, const Signature& computed) {
  return ck(std::move(name), sig_str(expected), sig_str(computed));
}

CheckResult ck_bool(std::string name, bool computed) {
  return ck(std::move(name), "yes", computed ? "yes" : "no");
}

// Expected values embedded as data, never recomputed.

// Map-table rows in group-element order: image, fixed-part and
// maximal-compact-preimage signatures.
struct MapRow {
  Signature image, fixed, preimage;
};
const std::array<MapRow, 8> kMapRows = {{
    {{52, 26}, {52, 26}, {52, 0}},   // 1
    {{78, 0}, {52, 0}, {52, 26}},    // phi_s
    {{52, 26}, {36, 10}, {36, 16}},  // phi_t
    {{36, 42}, {24, 14}, {24, 12}},  // phi_h
    {{46, 32}, {36, 16}, {36, 10}},  // phi_t*phi_s
    {{38, 40}, {24, 12}, {24, 14}},  // phi_h*phi_s
    {{36, 42}, {24, 14}, {24, 12}},  // phi_t*phi_h
    {{38, 40}, {24, 12}, {24, 14}},  // phi_t*phi_h*phi_s
}};

// Dim and signature of the four (h, h-perp) x (t1, t23) pieces.
struct IntersectionRow {
  const char* name;
  Signature sig;
};
const std::array<IntersectionRow, 4> kIntersections = {{
    {"h^t1", {16, 6}},
    {"h^t23", {8, 8}},
    {"hp^t1", {20, 4}},
    {"hp^t23", {8, 8}},
}};

// Dimension splits under phi_h, phi_t, and their refinement.
const std::array<std::pair<const char*, std::size_t>, 4> kSubHT = {{
    {"r_H", 24}, {"r_p", 28}, {"b_H", 14}, {"b_p", 12}}};
const std::array<std::pair<const char*, std::size_t>, 4> kSubT = {{
    {"r1", 36}, {"r23", 16}, {"b1", 10}, {"b23", 16}}};
// Atom dims indexed by mask (bit0 boost, bit1 t23, bit2 h-perp).
const std::array<std::size_t, 8> kAtomDims = {16, 6, 8, 8, 20, 4, 8, 8};

Subspace seed_span(const StructureContext& ctx) {
  Mat rows(0, ctx.dim());
  rows.append_row(ctx.coords(boost_gen(1, Direction::Z())));
  rows.append_row(ctx.coords(boost_gen(2, Direction::Z()) - boost_gen(3, Direction::Z())));
  rows.append_row(ctx.coords(rotation_gen(1, {RotPairKind::ZQ, 7})));
  return Subspace::from_rows(rows);
}

Section section_basis(const Workspace& w) {
  Section sec{"basis", {}, {}};
  const StructureContext& ctx = w.ctx();
  sec.checks.push_back(ck("dimension", std::size_t{78}, ctx.dim()));
  sec.checks.push_back(ck("rotations", std::size_t{52}, ctx.rotations().dim()));
  sec.checks.push_back(ck("boosts", std::size_t{26}, ctx.boosts().dim()));
  sec.checks.push_back(ck_sig("killing signature", {52, 26}, signature(ctx, ctx.whole())));
  sec.checks.push_back(ck("rank", std::size_t{6}, rank(ctx, ctx.whole())));
  return sec;
}

Section section_jacobi(const Workspace& w) {
  Section sec{"jacobi", {}, {}};
  const StructureContext& ctx = w.ctx();
  auto [i, j] = jacobi_violation(ctx.ad());
  std::string jac = i == ctx.dim() ? "none" : "pair " + std::to_string(i) + "," + std::to_string(j);
  sec.checks.push_back(ck("jacobi violations", "none", jac));
  std::size_t k = killing_invariance_violation(ctx.ad(), ctx.killing_gram());
  sec.checks.push_back(ck("killing invariance violations", "none",
                          k == ctx.dim() ? "none" : "index " + std::to_string(k)));
  return sec;
}

Section section_determinant(const Workspace& w) {
  Section sec{"determinant", {}, {}};
  const StructureContext& ctx = w.ctx();
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
  sec.checks.push_back(ck("first-order invariance", std::to_string(total) + "/" + std::to_string(total),
                          std::to_string(zeros) + "/" + std::to_string(total)));
  return sec;
}

Section section_grading(const Workspace& w) {
  Section sec{"grading", {}, {}};
  const StructureContext& ctx = w.ctx();
  for (const Involution* inv : {&w.s(), &w.t(), &w.h()}) {
    std::string laws = "hold";
    try {
      check_grading(ctx, *inv);
    } catch (const std::exception& e) {
      laws = e.what();
    }
    sec.checks.push_back(ck(inv->name + " laws", "hold", laws));
  }
  sec.checks.push_back(ck("t1 dimension", std::size_t{46}, w.t().plus.dim()));
  sec.checks.push_back(ck("h dimension", std::size_t{38}, w.h().plus.dim()));
  sec.checks.push_back(ck_sig("r signature", {52, 0}, signature(ctx, w.s().plus)));
  sec.checks.push_back(ck_sig("t1 signature", {36, 10}, signature(ctx, w.t().plus)));
  sec.checks.push_back(ck_sig("h signature", {24, 14}, signature(ctx, w.h().plus)));
  return sec;
}

Section section_splitting(const Workspace& w) {
  Section sec{"splitting", {}, {}};
  const StructureContext& ctx = w.ctx();
  const Subspace* rb[2] = {&ctx.rotations(), &ctx.boosts()};
  const Subspace* hparts[2] = {&w.h().plus, &w.h().minus};
  const Subspace* tparts[2] = {&w.t().plus, &w.t().minus};
  for (int i = 0; i < 4; ++i)
    sec.checks.push_back(ck(kSubHT[i].first, kSubHT[i].second,
                            intersect(*rb[i / 2], *hparts[i % 2]).dim()));
  for (int i = 0; i < 4; ++i)
    sec.checks.push_back(ck(kSubT[i].first, kSubT[i].second,
                            intersect(*rb[i / 2], *tparts[i % 2]).dim()));
  for (std::size_t mask = 0; mask < 8; ++mask)
    sec.checks.push_back(ck(AtomDecomposition::atom_name(mask), kAtomDims[mask],
                            w.atoms().atoms[mask].dim()));
  return sec;
}

Section section_intersections(const Workspace& w) {
  Section sec{"intersections", {}, {}};
  const StructureContext& ctx = w.ctx();
  const Subspace* hparts[2] = {&w.h().plus, &w.h().minus};
  const Subspace* tparts[2] = {&w.t().plus, &w.t().minus};
  for (int i = 0; i < 4; ++i) {
    Subspace piece = intersect(*hparts[i / 2], *tparts[i % 2]);
    const IntersectionRow& row = kIntersections[i];
    std::size_t dim = row.sig.first + row.sig.second;
    sec.checks.push_back(ck(std::string(row.name) + " dim", dim, piece.dim()));
    sec.checks.push_back(ck_sig(std::string(row.name) + " sig", row.sig, signature(ctx, piece)));
  }
  return sec;
}

bool table_is_xor(const std::vector<std::vector<std::size_t>>& table) {
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      if (table[i][j] != (i ^ j)) return false;
  return true;
}

Section section_comm(const Workspace& w) {
  Section sec{"comm", {}, {}};
  const StructureContext& ctx = w.ctx();
  std::vector<Subspace> st_parts = refine_parts(ctx, {w.s(), w.t()});
  sec.checks.push_back(ck_bool("4-part table is xor", table_is_xor(comm_table(ctx, st_parts))));
  std::vector<Subspace> atoms(w.atoms().atoms.begin(), w.atoms().atoms.end());
  auto fano = comm_table(ctx, atoms);
  sec.checks.push_back(ck_bool("8-atom table is xor", table_is_xor(fano)));
  bool squares = true;
  for (std::size_t i = 0; i < 8; ++i) squares = squares && fano[i][i] == 0;
  sec.checks.push_back(ck_bool("atoms square into r1H", squares));
  bool unit_xor = true;
  for (std::size_t a = 0; a < kOctDim; ++a)
    for (std::size_t b = 0; b < kOctDim; ++b)
      unit_xor = unit_xor && unit_product(a, b).second == (a ^ b);
  sec.checks.push_back(ck_bool("octonion unit table is xor", unit_xor));
  return sec;
}

Section section_star(const Workspace& w) {
  (void)w;
  Section sec{"star", {}, {}};
  std::vector<CartanMap> g = group_elements();
  sec.checks.push_back(ck("order", std::size_t{8}, g.size()));
  bool commutative = true, self_inverse = true, closed = true;
  for (const CartanMap& a : g) {
    self_inverse = self_inverse && star(a, a).flags == 0;
    for (const CartanMap& b : g) {
      commutative = commutative && star(a, b) == star(b, a);
      closed = closed && star(a, b).flags < 8;
    }
  }
  sec.checks.push_back(ck_bool("commutative", commutative));
  sec.checks.push_back(ck_bool("self-inverse", self_inverse));
  sec.checks.push_back(ck_bool("closed", closed));
  bool is_xor = true;
  for (const CartanMap& a : g)
    for (const CartanMap& b : g) is_xor = is_xor && star(a, b).flags == (a.flags ^ b.flags);
  sec.checks.push_back(ck_bool("table is (Z2)^3", is_xor));
  return sec;
}

Section section_maps(const Workspace& w) {
  Section sec{"maps", {}, {}};
  const StructureContext& ctx = w.ctx();
  std::vector<CartanMap> g = group_elements();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const MapRow& row = kMapRows[i];
    std::string n = g[i].name();
    sec.checks.push_back(ck_sig(n + " image", row.image, image_signature(w.atoms(), g[i])));
    sec.checks.push_back(
        ck_sig(n + " fixed", row.fixed, signature(ctx, fixed_subalgebra(ctx, w.atoms(), g[i]))));
    sec.checks.push_back(ck_sig(n + " preimage", row.preimage,
                                signature(ctx, max_compact_preimage(ctx, w.atoms(), g[i]))));
  }
  return sec;
}

Section section_orbit(const Workspace& w) {
  Section sec{"orbit", {}, {}};
  std::vector<OrbitRow> rows = orbit_report(w.ctx(), w.atoms());
  std::vector<Signature> sigs;
  std::vector<std::size_t> dims;
  for (const OrbitRow& r : rows) {
    sigs.push_back(r.image_sig);
    dims.push_back(r.compact_dim);
  }
  std::sort(sigs.begin(), sigs.end());
  sec.checks.push_back(
      ck("distinct signatures", std::size_t{5},
         static_cast<std::size_t>(std::unique(sigs.begin(), sigs.end()) - sigs.begin())));
  std::sort(dims.begin(), dims.end());
  std::string ms;
  for (std::size_t d : dims) ms += (ms.empty() ? "" : ",") + std::to_string(d);
  sec.checks.push_back(ck("compact dim multiset", "36,36,38,38,46,52,52,78", ms));
  sigs.clear();
  for (const OrbitRow& r : rows) sigs.push_back(r.image_sig);
  std::sort(sigs.begin(), sigs.end());
  std::string sm;
  for (const Signature& s : sigs) sm += (sm.empty() ? "" : " ") + sig_str(s);
  sec.checks.push_back(
      ck("image sig multiset", "(36,42) (36,42) (38,40) (38,40) (46,32) (52,26) (52,26) (78,0)", sm));
  return sec;
}

Section section_catalog(const Workspace& w) {
  Section sec{"catalog", {}, {}};
  const Catalog& cat = w.catalog();
  sec.checks.push_back(ck("record count", std::size_t{15}, cat.records.size()));
  std::map<std::size_t, std::size_t> census;
  for (const SubalgebraRecord& rec : cat.records) {
    std::size_t dim = rec.expected_sig.first + rec.expected_sig.second;
    sec.checks.push_back(ck(rec.name + " dim", dim, rec.dim));
    sec.checks.push_back(ck_sig(rec.name + " sig", rec.expected_sig, rec.sig));
    ++census[rec.atom_masks.size()];
  }
  sec.checks.push_back(ck("one-atom records", std::size_t{1}, census[1]));
  sec.checks.push_back(ck("two-atom records", std::size_t{7}, census[2]));
  sec.checks.push_back(ck("four-atom records", std::size_t{7}, census[4]));
  return sec;
}

Section section_classification(const Workspace& w) {
  Section sec{"classification", {}, {}};
  const StructureContext& ctx = w.ctx();
  const Catalog& cat = w.catalog();
  for (const SubalgebraRecord& rec : cat.records)
    sec.checks.push_back(ck(rec.name, rec.expected_class, rec.classification));
  bool rh_c3 = false;
  for (const IdealInfo& ideal : cat.records[5].ideals)
    if (ideal.space.dim() == 21) rh_c3 = ideal.complex_type == "c3";
  sec.checks.push_back(ck_bool("r_H 21-dim ideal is c3", rh_c3));
  auto dims_of = [&](const Subspace& s) {
    std::vector<std::string> parts;
    for (const IdealPart& p : ideal_decomposition(ctx, s))
      parts.push_back(std::to_string(p.space.dim()) + (p.is_center ? "c" : ""));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const std::string& p : parts) out += (out.empty() ? "" : "+") + p;
    return out;
  };
  sec.checks.push_back(ck("h ideal dims", "3+35", dims_of(w.h().plus)));
  sec.checks.push_back(ck("t1 ideal dims", "1c+45", dims_of(w.t().plus)));
  sec.checks.push_back(ck_bool("su(2)_H in g2", cat.pieces.g2.contains(cat.pieces.su2_h)));
  sec.checks.push_back(ck("su(2)_2 in g2", "no",
                          cat.pieces.g2.contains(cat.pieces.su2_2) ? "yes" : "no"));
  sec.checks.push_back(ck_sig("u(-1) signature", {0, 1}, signature(ctx, cat.pieces.u_neg1)));
  return sec;
}

Section section_cartan(const Workspace& w) {
  Section sec{"cartan", {}, {}};
  const StructureContext& ctx = w.ctx();
  try {
    Subspace c = cartan_basis(ctx);
    sec.checks.push_back(ck("dimension", std::size_t{6}, c.dim()));
    sec.checks.push_back(ck_bool("contains seeds", c.contains(seed_span(ctx))));
    bool abelian = true;
    for (std::size_t i = 0; i < c.dim(); ++i) {
      Mat ad = ctx.ad_of(c.basis_vector(i));
      for (std::size_t j = i + 1; j < c.dim(); ++j)
        abelian = abelian && vec_is_zero(ad.apply(c.basis_vector(j)));
    }
    sec.checks.push_back(ck_bool("abelian", abelian));
    sec.checks.push_back(ck_bool("self-centralizing", centralizer(ctx, c, ctx.whole()) == c));
    sec.checks.push_back(ck_sig("signature", {4, 2}, signature(ctx, c)));
  } catch (const std::exception& e) {
    sec.checks.push_back(ck("completion", "found", e.what()));
  }
  return sec;
}

Section section_chains(const Workspace& w) {
  Section sec{"chains", {}, {}};
  const InclusionGraph& g = w.graph();
  bool edges_ok = true;
  std::vector<std::size_t> indegree(g.nodes.size(), 0);
  for (auto [child, parent] : g.edges) {
    edges_ok = edges_ok && g.nodes[parent].span.contains(g.nodes[child].span) &&
               g.nodes[child].dim < g.nodes[parent].dim;
    ++indegree[parent];
  }
  sec.checks.push_back(ck_bool("edges are strict containments", edges_ok));
  // Strict dimension increase along every edge already rules out cycles.
  sec.checks.push_back(ck_bool("acyclic", edges_ok));
  std::size_t su2h_node = g.nodes.size(), c3_targets = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].name == "su(2,H)") su2h_node = i;
  sec.checks.push_back(ck_bool("has su(2,H) node", su2h_node < g.nodes.size()));
  if (su2h_node < g.nodes.size()) {
    for (auto [child, parent] : g.edges)
      if (child == su2h_node && g.nodes[parent].dim == 21) ++c3_targets;
  }
  sec.checks.push_back(ck("su(2,H) to c3 edges", std::size_t{4}, c3_targets));
  for (const std::string& note : g.notes) sec.notes.push_back(note);
  return sec;
}

using SectionFn = Section (*)(const Workspace&);
const std::vector<std::pair<std::string, SectionFn>>& section_table() {
  static const std::vector<std::pair<std::string, SectionFn>> table = {
      {"basis", section_basis},
      {"jacobi", section_jacobi},
      {"determinant", section_determinant},
      {"grading", section_grading},
      {"splitting", section_splitting},
      {"intersections", section_intersections},
      {"comm", section_comm},
      {"star", section_star},
      {"maps", section_maps},
      {"orbit", section_orbit},
      {"catalog", section_catalog},
      {"classification", section_classification},
      {"cartan", section_cartan},
      {"chains", section_chains},
  };
  return table;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::max<unsigned>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("E6WB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<std::size_t>(v);
  }
  return std::min(n, std::max<std::size_t>(1, jobs));
}

}  // namespace

Workspace::Workspace()
    : ctx_(StructureContext::build()),
      s_(phi_s(ctx_)),
      t_(phi_t(ctx_)),
      h_(phi_h(ctx_)),
      atoms_(refine(ctx_, s_, t_, h_)) {}

const Workspace& Workspace::get() {
  static const Workspace w;
  return w;
}

const Catalog& Workspace::catalog() const {
  static const Catalog cat = build_catalog(ctx_, atoms_);
  return cat;
}

const InclusionGraph& Workspace::graph() const {
  static const InclusionGraph g = inclusion_graph(ctx_, catalog());
  return g;
}

const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : section_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Section> run_verify(const std::vector<std::string>& only) {
  std::vector<std::pair<std::string, SectionFn>> jobs;
  for (const auto& entry : section_table()) {
    if (only.empty() || std::find(only.begin(), only.end(), entry.first) != only.end())
      jobs.push_back(entry);
  }
  if (jobs.empty()) throw std::invalid_argument("unknown section");

  const Workspace& w = Workspace::get();
  // The lazy members are built up front so workers only read shared state.
  bool needs_catalog = false;
  for (const auto& [name, fn] : jobs)
    needs_catalog = needs_catalog || name == "catalog" || name == "classification" || name == "chains";
  if (needs_catalog) w.graph();

  std::vector<Section> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
      try {
        out[i] = jobs[i].second(w);
      } catch (const std::exception& e) {
        out[i] = Section{jobs[i].first, {ck("section", "completed", e.what())}, {}};
      }
    }
  };
  std::size_t workers = worker_count(jobs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  return out;
}

bool all_passed(const std::vector<Section>& sections) {
  for (const Section& sec : sections)
    for (const CheckResult& c : sec.checks)
      if (!c.pass) return false;
  return true;
}

std::string render_text(const std::vector<Section>& sections) {
  std::ostringstream os;
  std::size_t checks = 0, failures = 0;
  for (const Section& sec : sections) {
    os << "== " << sec.name << " ==\n";
    for (const CheckResult& c : sec.checks) {
      ++checks;
      if (!c.pass) ++failures;
      os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected
         << ", computed " << c.computed << "\n";
    }
    for (const std::string& note : sec.notes) os << "note: " << note << "\n";
  }
  os << "SUMMARY: " << sections.size() << " sections, " << checks << " checks, " << failures
     << " failures\n";
  return os.str();
}

std::string render_json(const std::vector<Section>& sections) {
  nlohmann::ordered_json root;
  root["sections"] = nlohmann::ordered_json::array();
  for (const Section& sec : sections) {
    nlohmann::ordered_json js;
    js["name"] = sec.name;
    js["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : sec.checks)
      js["checks"].push_back({{"name", c.name},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"pass", c.pass}});
    js["notes"] = sec.notes;
    root["sections"].push_back(std::move(js));
  }
  root["all_passed"] = all_passed(sections);
  return root.dump(2) + "\n";
}

namespace {

struct TableRow {
  std::string key, expected, computed;
};

std::vector<TableRow> table_rows(const std::string& which) {
  const Workspace& w = Workspace::get();
  const StructureContext& ctx = w.ctx();
  std::vector<TableRow> rows;
  auto add = [&](std::string key, std::string expected, std::string computed) {
    rows.push_back({std::move(key), std::move(expected), std::move(computed)});
  };
  auto add_dim = [&](std::string key, std::size_t expected, std::size_t computed) {
    add(std::move(key), std::to_string(expected), std::to_string(computed));
  };

  if (which == "basis") {
    add_dim("dimension", 78, ctx.dim());
    add_dim("rotations", 52, ctx.rotations().dim());
    add_dim("boosts", 26, ctx.boosts().dim());
    add("signature", "(52,26)", sig_str(signature(ctx, ctx.whole())));
  } else if (which == "intersections") {
    const Subspace* hparts[2] = {&w.h().plus, &w.h().minus};
    const Subspace* tparts[2] = {&w.t().plus, &w.t().minus};
    for (int i = 0; i < 4; ++i) {
      Subspace piece = intersect(*hparts[i / 2], *tparts[i % 2]);
      add(kIntersections[i].name, sig_str(kIntersections[i].sig), sig_str(signature(ctx, piece)));
    }
  } else if (which == "maximal") {
    std::vector<CartanMap> g = group_elements();
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::string n = g[i].name();
      add(n + " image", sig_str(kMapRows[i].image), sig_str(image_signature(w.atoms(), g[i])));
      add(n + " fixed", sig_str(kMapRows[i].fixed),
          sig_str(signature(ctx, fixed_subalgebra(ctx, w.atoms(), g[i]))));
      add(n + " preimage", sig_str(kMapRows[i].preimage),
          sig_str(signature(ctx, max_compact_preimage(ctx, w.atoms(), g[i]))));
    }
  } else if (which == "subht") {
    const Subspace* rb[2] = {&ctx.rotations(), &ctx.boosts()};
    const Subspace* hparts[2] = {&w.h().plus, &w.h().minus};
    for (int i = 0; i < 4; ++i)
      add_dim(kSubHT[i].first, kSubHT[i].second, intersect(*rb[i / 2], *hparts[i % 2]).dim());
  } else if (which == "subt") {
    const Subspace* rb[2] = {&ctx.rotations(), &ctx.boosts()};
    const Subspace* tparts[2] = {&w.t().plus, &w.t().minus};
    for (int i = 0; i < 4; ++i)
      add_dim(kSubT[i].first, kSubT[i].second, intersect(*rb[i / 2], *tparts[i % 2]).dim());
  } else if (which == "subh" || which == "refine") {
    for (std::size_t mask = 0; mask < 8; ++mask)
      add_dim(AtomDecomposition::atom_name(mask), kAtomDims[mask], w.atoms().atoms[mask].dim());
  } else if (which == "comm") {
    std::vector<Subspace> parts = refine_parts(ctx, {w.s(), w.t()});
    auto table = comm_table(ctx, parts);
    const char* names[4] = {"r1", "b1", "r23", "b23"};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        add(std::string("[") + names[i] + "," + names[j] + "]", names[i ^ j], names[table[i][j]]);
  } else if (which == "fano") {
    std::vector<Subspace> atoms(w.atoms().atoms.begin(), w.atoms().atoms.end());
    auto table = comm_table(ctx, atoms);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        add("[" + AtomDecomposition::atom_name(i) + "," + AtomDecomposition::atom_name(j) + "]",
            AtomDecomposition::atom_name(i ^ j), AtomDecomposition::atom_name(table[i][j]));
  } else if (which == "orbit") {
    std::vector<OrbitRow> orbit = orbit_report(ctx, w.atoms());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      add(orbit[i].map.name() + " image", sig_str(kMapRows[i].image), sig_str(orbit[i].image_sig));
      add_dim(orbit[i].map.name() + " compact dim",
              kMapRows[i].preimage.first + kMapRows[i].preimage.second, orbit[i].compact_dim);
    }
  } else {
    throw std::invalid_argument("unknown table: " + which);
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {
      "basis", "intersections", "maximal", "subht", "subt",
      "subh",  "refine",        "comm",    "fano",  "orbit"};
  return names;
}

std::string render_table(const std::string& which, bool json) {
  std::vector<TableRow> rows = table_rows(which);
  if (json) {
    nlohmann::ordered_json root;
    root["table"] = which;
    root["rows"] = nlohmann::ordered_json::array();
    for (const TableRow& r : rows)
      root["rows"].push_back({{"key", r.key}, {"expected", r.expected}, {"computed", r.computed}});
    return root.dump(2) + "\n";
  }
  std::size_t width = 0;
  for (const TableRow& r : rows) width = std::max(width, r.key.size());
  std::ostringstream os;
  os << "table " << which << "\n";
  for (const TableRow& r : rows) {
    os << "  " << r.key << std::string(width - r.key.size(), ' ') << "  expected " << r.expected
       << "  computed " << r.computed << "\n";
  }
  return os.str();
}

}  // namespace e6wb

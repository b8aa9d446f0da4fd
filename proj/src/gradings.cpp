#include "e6wb/gradings.hpp"

namespace e6wb {

namespace {

Subspace killing_complement(const StructureContext& ctx, const Subspace& s) {
  return orthogonal_complement(ctx, s, ctx.whole());
}

}  // namespace

Involution phi_s(const StructureContext& ctx) {
  return {"phi_s", ctx.rotations(), ctx.boosts()};
}

Involution phi_t(const StructureContext& ctx) {
  Mat seeds(0, ctx.dim());
  for (const auto& member : generator_candidates()) {
    if (member.label.type_index != 1) continue;
    if (member.label.kind != GenKind::Boost && member.label.kind != GenKind::SimpleRotation)
      continue;
    seeds.append_row(ctx.coords(member.op));
  }
  Operator extra = boost_gen(2, Direction::Z()) - boost_gen(3, Direction::Z());
  seeds.append_row(ctx.coords(extra));
  Subspace plus = closure(ctx, seeds);
  return {"phi_t", plus, killing_complement(ctx, plus)};
}

Involution phi_h(const StructureContext& ctx) {
  // Stabilizer solve: sum_i u_i Op_i must map each J_H coordinate unit to
  // a vector supported on J_H coordinates.
  std::vector<std::size_t> h_cols, non_h_rows;
  for (std::size_t i = 0; i < 3; ++i) h_cols.push_back(i);
  for (std::size_t block = 0; block < 3; ++block) {
    for (std::size_t u = 0; u < kOctDim; ++u) {
      std::size_t idx = 3 + block * kOctDim + u;
      if (oct_index_in_H(u))
        h_cols.push_back(idx);
      else
        non_h_rows.push_back(idx);
    }
  }
  Mat constraint(h_cols.size() * non_h_rows.size(), ctx.dim());
  std::size_t row = 0;
  for (std::size_t c : h_cols) {
    for (std::size_t r : non_h_rows) {
      for (std::size_t i = 0; i < ctx.dim(); ++i)
        constraint.at(row, i) = ctx.basis()[i].op.matrix().at(r, c);
      ++row;
    }
  }
  Subspace plus = Subspace::from_rows(kernel(constraint));
  return {"phi_h", plus, killing_complement(ctx, plus)};
}

void check_grading(const StructureContext& ctx, const Involution& inv) {
  if (inv.plus.dim() + inv.minus.dim() != ctx.dim() ||
      intersect(inv.plus, inv.minus).dim() != 0)
    throw NotGraded(inv.name + ": plus and minus do not split the algebra");
  auto law = [&ctx](const Subspace& a, const Subspace& b, const Subspace& target) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Mat ad = ctx.ad_of(a.basis_vector(i));
      for (std::size_t j = 0; j < b.dim(); ++j) {
        if (!target.contains(ad.apply(b.basis_vector(j)))) return false;
      }
    }
    return true;
  };
  if (!law(inv.plus, inv.plus, inv.plus)) throw NotGraded(inv.name + ": [p,p] escapes p");
  if (!law(inv.minus, inv.minus, inv.plus)) throw NotGraded(inv.name + ": [m,m] escapes p");
  if (!law(inv.plus, inv.minus, inv.minus)) throw NotGraded(inv.name + ": [p,m] escapes m");
  for (const Subspace* part : {&inv.plus, &inv.minus}) {
    Inertia in = inertia(restricted_gram(ctx.killing_gram(), *part));
    if (in.zero != 0) throw NotGraded(inv.name + ": Killing degenerate on a part");
  }
}

std::vector<Subspace> refine_parts(const StructureContext& ctx,
                                   const std::vector<Involution>& invs) {
  std::size_t count = std::size_t(1) << invs.size();
  std::vector<Subspace> parts(count);
  std::size_t total = 0;
  for (std::size_t mask = 0; mask < count; ++mask) {
    Subspace acc = ctx.whole();
    for (std::size_t i = 0; i < invs.size(); ++i) {
      acc = intersect(acc, (mask >> i) & 1 ? invs[i].minus : invs[i].plus);
    }
    total += acc.dim();
    parts[mask] = std::move(acc);
  }
  if (total != ctx.dim())
    throw InconsistentRefinement("part dimensions sum to " + std::to_string(total));
  return parts;
}

std::string AtomDecomposition::atom_name(std::size_t mask) {
  std::string name = (mask & 1) ? "b" : "r";
  name += (mask & 2) ? "23" : "1";
  name += (mask & 4) ? "p" : "H";
  return name;
}

AtomDecomposition refine(const StructureContext& ctx, const Involution& s,
                         const Involution& t, const Involution& h) {
  std::vector<Subspace> parts = refine_parts(ctx, {s, t, h});
  AtomDecomposition out;
  for (std::size_t mask = 0; mask < 8; ++mask) out.atoms[mask] = std::move(parts[mask]);
  return out;
}

std::vector<std::vector<std::size_t>> comm_table(const StructureContext& ctx,
                                                 const std::vector<Subspace>& parts) {
  std::size_t n = parts.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, n));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Mat> ads;
    for (std::size_t i = 0; i < parts[a].dim(); ++i)
      ads.push_back(ctx.ad_of(parts[a].basis_vector(i)));
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t target = n;
      for (const auto& ad : ads) {
        for (std::size_t j = 0; j < parts[b].dim(); ++j) {
          Vec w = ad.apply(parts[b].basis_vector(j));
          if (vec_is_zero(w)) continue;
          std::size_t home = n;
          for (std::size_t p = 0; p < n; ++p) {
            if (parts[p].contains(w)) {
              home = p;
              break;
            }
          }
          if (home == n)
            throw NotGraded("bracket of parts " + std::to_string(a) + "," +
                            std::to_string(b) + " straddles parts");
          if (target == n) target = home;
          if (target != home)
            throw NotGraded("brackets of parts " + std::to_string(a) + "," +
                            std::to_string(b) + " land in multiple parts");
        }
      }
      if (target == n)
        throw NotGraded("all brackets of parts " + std::to_string(a) + "," +
                        std::to_string(b) + " vanish; no unique target");
      table[a][b] = target;
    }
  }
  return table;
}

}  // namespace e6wb

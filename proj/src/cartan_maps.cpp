#include "e6wb/cartan_maps.hpp"

namespace e6wb {

std::string CartanMap::name() const {
  if (flags == 0) return "1";
  std::string out;
  // Fixed print order: phi_t, then phi_h, then phi_s.
  if (flags & 2) out += "phi_t";
  if (flags & 4) out += out.empty() ? "phi_h" : "*phi_h";
  if (flags & 1) out += out.empty() ? "phi_s" : "*phi_s";
  return out;
}

std::vector<CartanMap> group_elements() {
  return {{0}, {1}, {2}, {4}, {3}, {5}, {6}, {7}};
}

std::pair<std::size_t, std::size_t> image_signature(const AtomDecomposition& atoms,
                                                    const CartanMap& m) {
  // compact = unflipped rotations + flipped boosts.
  std::size_t compact = 0, total = 0;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    total += atoms.atoms[mask].dim();
    bool rotation = (mask & 1) == 0;
    if (rotation != m.flips_atom(mask)) compact += atoms.atoms[mask].dim();
  }
  return {compact, total - compact};
}

namespace {

Subspace atom_sum(const StructureContext& ctx, const AtomDecomposition& atoms,
                  const std::vector<std::size_t>& masks) {
  Subspace acc = Subspace::zero();
  for (std::size_t mask : masks) acc = subspace_sum(acc, atoms.atoms[mask]);
  if (!is_bracket_closed(ctx, acc)) throw NotGraded("atom sum is not bracket-closed");
  return acc;
}

}  // namespace

Subspace fixed_subalgebra(const StructureContext& ctx, const AtomDecomposition& atoms,
                          const CartanMap& m) {
  std::vector<std::size_t> masks;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    if (!m.flips_atom(mask)) masks.push_back(mask);
  }
  return atom_sum(ctx, atoms, masks);
}

Subspace max_compact_preimage(const StructureContext& ctx, const AtomDecomposition& atoms,
                              const CartanMap& m) {
  std::vector<std::size_t> masks;
  for (std::size_t mask = 0; mask < 8; ++mask) {
    bool rotation = (mask & 1) == 0;
    if (rotation == !m.flips_atom(mask)) masks.push_back(mask);
  }
  return atom_sum(ctx, atoms, masks);
}

std::vector<OrbitRow> orbit_report(const StructureContext& ctx,
                                   const AtomDecomposition& atoms) {
  std::vector<OrbitRow> rows;
  for (const CartanMap& m : group_elements()) {
    rows.push_back({m, image_signature(atoms, m), max_compact_preimage(ctx, atoms, m).dim()});
  }
  return rows;
}

}  // namespace e6wb

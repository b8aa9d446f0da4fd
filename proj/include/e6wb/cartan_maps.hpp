#pragma once

#include <array>
#include <string>
#include <vector>

#include "e6wb/gradings.hpp"

namespace e6wb {

// An associated Cartan map as pure sign bookkeeping over the three
// generating involutions (s, t, h). The map never materializes xi: an atom
// flips compactness iff it lies in the minus part of an odd number of
// flagged involutions.
struct CartanMap {
  // bit0 = phi_s flagged, bit1 = phi_t, bit2 = phi_h.
  unsigned flags = 0;

  bool flips_atom(std::size_t atom_mask) const {
    unsigned overlap = flags & static_cast<unsigned>(atom_mask);
    return __builtin_popcount(overlap) % 2 == 1;
  }
  std::string name() const;
  bool operator==(const CartanMap& o) const { return flags == o.flags; }
};

inline CartanMap star(const CartanMap& a, const CartanMap& b) {
  return {a.flags ^ b.flags};
}

// All 8 group elements in report row order:
// 1, phi_s, phi_t, phi_h, phi_t*phi_s, phi_h*phi_s, phi_t*phi_h,
// phi_t*phi_h*phi_s.
std::vector<CartanMap> group_elements();

// Signature of the image real form: rotations count compact and boosts
// noncompact, with flipped atoms swapping their contribution.
std::pair<std::size_t, std::size_t> image_signature(const AtomDecomposition& atoms,
                                                    const CartanMap& m);

// Direct sum of the unflipped atoms; checked bracket-closed.
Subspace fixed_subalgebra(const StructureContext& ctx, const AtomDecomposition& atoms,
                          const CartanMap& m);

// Preimage of the image's maximal compact part: unflipped rotation atoms
// plus flipped boost atoms; checked bracket-closed.
Subspace max_compact_preimage(const StructureContext& ctx, const AtomDecomposition& atoms,
                              const CartanMap& m);

struct OrbitRow {
  CartanMap map;
  std::pair<std::size_t, std::size_t> image_sig;
  std::size_t compact_dim;  // dimension of max_compact_preimage
};

std::vector<OrbitRow> orbit_report(const StructureContext& ctx,
                                   const AtomDecomposition& atoms);

}  // namespace e6wb

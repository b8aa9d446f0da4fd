#pragma once

#include <array>
#include <string>
#include <vector>

#include "e6wb/lie_engine.hpp"

namespace e6wb {

struct InconsistentRefinement : std::runtime_error {
  explicit InconsistentRefinement(const std::string& what) : std::runtime_error(what) {}
};

// A Z2-grading g = plus + minus given by an involution: [p,p] in p,
// [m,m] in p, [p,m] in m.
struct Involution {
  std::string name;
  Subspace plus;
  Subspace minus;
};

// plus = rotations (trace-form antisymmetric), minus = boosts.
Involution phi_s(const StructureContext& ctx);

// plus = t1: closure of the type-1 block generators plus B2_tz - B3_tz
// (dimension 46); minus = Killing orthogonal complement.
Involution phi_t(const StructureContext& ctx);

// plus = stabilizer {T : T(J_H) in J_H} of the quaternionic subspace
// (dimension 38); minus = Killing orthogonal complement.
Involution phi_h(const StructureContext& ctx);

// Verifies the grading laws exhaustively on basis pairs, the direct-sum
// property, and Killing nondegeneracy on each part. Throws NotGraded.
void check_grading(const StructureContext& ctx, const Involution& inv);

// Common refinement: 2^k intersections indexed by a bitmask with bit i set
// when the part lies in invs[i].minus. Throws InconsistentRefinement when
// the part dimensions fail to sum to the whole.
std::vector<Subspace> refine_parts(const StructureContext& ctx,
                                   const std::vector<Involution>& invs);

// The 8 joint eigenspaces of (phi_s, phi_t, phi_h). Mask bits:
// bit0 = boost (s-minus), bit1 = t23 (t-minus), bit2 = h-perp (h-minus).
struct AtomDecomposition {
  std::array<Subspace, 8> atoms;

  static std::string atom_name(std::size_t mask);
  static std::size_t mask_of(bool boost, bool t23, bool perp) {
    return (boost ? 1u : 0u) | (t23 ? 2u : 0u) | (perp ? 4u : 0u);
  }
};

AtomDecomposition refine(const StructureContext& ctx, const Involution& s,
                         const Involution& t, const Involution& h);

// For each ordered pair of parts, the index of the unique part containing
// all brackets [a_i, b_j]. Throws NotGraded when a bracket straddles parts
// or all brackets of a pair vanish (no unique target).
std::vector<std::vector<std::size_t>> comm_table(const StructureContext& ctx,
                                                 const std::vector<Subspace>& parts);

}  // namespace e6wb

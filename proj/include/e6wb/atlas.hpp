#pragma once

#include <string>
#include <vector>

#include "e6wb/cartan_maps.hpp"

namespace e6wb {

struct Unclassified : std::runtime_error {
  explicit Unclassified(const std::string& what) : std::runtime_error(what) {}
};
struct CompletionFailed : std::runtime_error {
  explicit CompletionFailed(const std::string& what) : std::runtime_error(what) {}
};

using Signature = std::pair<std::size_t, std::size_t>;

struct IdealInfo {
  Subspace space;
  bool is_center = false;
  std::size_t rank = 0;
  Signature sig{0, 0};
  std::string complex_type;  // "a1", "c3", "u(-1)", ...
  std::string real_name;     // "su(2)", "su(3,H)", ...
};

struct SubalgebraRecord {
  std::string name;    // display label, metadata only
  std::string recipe;  // e.g. "r1H+b23p"
  std::vector<std::size_t> atom_masks;
  Subspace span;
  std::size_t dim = 0;
  std::size_t rank = 0;
  Signature sig{0, 0};
  Signature expected_sig{0, 0};
  std::string expected_class;
  std::vector<IdealInfo> ideals;
  std::string classification;  // computed, joined complex types
};

struct DistinguishedPieces {
  Subspace g2;      // lift of der(O), dim 14
  Subspace su2_h;   // derivations vanishing on the quaternionic subalgebra
  Subspace su2_2;   // 3-dim ideal of the h1+h23perp record outside g2
  Subspace u_neg1;  // span of B2_tz - B3_tz
};

struct Catalog {
  std::vector<SubalgebraRecord> records;  // the 15 Table rows, in order
  DistinguishedPieces pieces;
};

// Classify a reductive subalgebra: ideal decomposition plus the
// (dim, rank, signature) real-form lookup. A compact 21-dim rank-3 ideal is
// ambiguous between b3 and c3 and resolved by containment in a c4 span.
// Throws Unclassified when an ideal matches no lookup row.
std::vector<IdealInfo> classify(const StructureContext& ctx, const Subspace& s,
                                const std::vector<Subspace>& c4_spans);

std::string classification_string(const std::vector<IdealInfo>& ideals);

// Builds all 15 atom-recipe records, classifies each, and extracts the
// distinguished pieces.
Catalog build_catalog(const StructureContext& ctx, const AtomDecomposition& atoms);

// A 6-dim abelian self-centralizing subalgebra containing the spans of
// B1_tz, B2_tz - B3_tz and R1_xl, completed through iterated centralizers
// preferring rotations. Throws CompletionFailed.
Subspace cartan_basis(const StructureContext& ctx);

struct GraphNode {
  std::string name;
  Subspace span;
  std::size_t dim = 0;
  Signature sig{0, 0};
};

struct InclusionGraph {
  std::vector<GraphNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // child -> parent
  std::vector<std::string> notes;                          // omitted chain nodes
};

// Containment graph over the catalog records, the whole algebra, the pure
// simple ideals of the records, g2 and the distinguished su(2) pieces.
// Edges are transitively reduced; acyclic by strict containment.
InclusionGraph inclusion_graph(const StructureContext& ctx, const Catalog& catalog);

std::string to_dot(const InclusionGraph& g);

}  // namespace e6wb

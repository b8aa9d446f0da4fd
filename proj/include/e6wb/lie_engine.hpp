#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "e6wb/operator_rep.hpp"

namespace e6wb {

struct NotInAlgebra : std::runtime_error {
  NotInAlgebra() : std::runtime_error("operator is not in the 78-dimensional span") {}
};
struct DegenerateRestriction : std::runtime_error {
  DegenerateRestriction() : std::runtime_error("Killing form degenerate on restriction") {}
};
struct NonReductive : std::runtime_error {
  explicit NonReductive(const std::string& what) : std::runtime_error(what) {}
};
struct NotGraded : std::runtime_error {
  explicit NotGraded(const std::string& what) : std::runtime_error(what) {}
};

// An exact reduced basis of a linear subspace of the algebra, in ambient
// 78-basis coordinates. The RREF rows are canonical, so two subspaces are
// equal iff their rows are.
class Subspace {
 public:
  Subspace() = default;
  static Subspace from_rows(Mat rows);
  static Subspace zero();

  std::size_t dim() const { return rows_.rows(); }
  const Mat& rows() const { return rows_; }
  Vec basis_vector(std::size_t i) const { return rows_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Vec reduce(const Vec& v) const;
  bool operator==(const Subspace& o) const { return rows_ == o.rows_; }

 private:
  Mat rows_{0, kAlgebraDim};
  RowSpace rs_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// Immutable context over the deterministic 78-element basis: adjoint
// matrices (the structure constants), Killing Gram, and the boost/rotation
// split. Construction is a one-time pure computation.
class StructureContext {
 public:
  static StructureContext build();
  static StructureContext build_from(std::vector<BasisMember> basis);

  const std::vector<BasisMember>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  // ad matrices: ad(i).at(k, j) = c_{ij}^k, i.e. column j holds [b_i, b_j].
  const std::vector<Mat>& ad() const { return ad_; }
  const Mat& killing_gram() const { return killing_; }

  // Exact coordinates of an operator in the basis; throws NotInAlgebra.
  Vec coords(const Operator& op) const;
  Operator from_coords(const Vec& c) const;

  Vec bracket(const Vec& u, const Vec& v) const;
  Mat ad_of(const Vec& u) const;  // sum_i u_i ad_i
  Rat killing(const Vec& u, const Vec& v) const;

  const Subspace& rotations() const { return r_; }  // trace-form antisymmetric
  const Subspace& boosts() const { return b_; }     // trace-form symmetric
  const Subspace& whole() const { return whole_; }

 private:
  std::vector<BasisMember> basis_;
  RowSpace op_space_;
  std::vector<Mat> ad_;
  Mat killing_;
  Subspace r_, b_, whole_;
};

// Signature of the Killing form restricted to S, reported as
// (compact, noncompact) = (negative count, positive count).
// Throws DegenerateRestriction when the restricted Gram is singular.
std::pair<std::size_t, std::size_t> signature(const StructureContext& ctx, const Subspace& s);

Mat restricted_gram(const Mat& gram, const Subspace& s);

// Smallest bracket-closed subspace containing the seed rows.
Subspace closure(const StructureContext& ctx, const Mat& seed_rows);
Subspace closure(const StructureContext& ctx, const Subspace& seed);

bool is_bracket_closed(const StructureContext& ctx, const Subspace& s);

// {w in `within` : [w, s] = 0 for all s in S}.
Subspace centralizer(const StructureContext& ctx, const Subspace& s, const Subspace& within);

// Killing-orthogonal complement of S inside `within`; throws
// DegenerateRestriction when Killing is degenerate on S.
Subspace orthogonal_complement(const StructureContext& ctx, const Subspace& s,
                               const Subspace& within);

// (rotation count, boost count) of a subspace: dims of S cap r and S cap b.
// Meaningful for subspaces spanned by pure members (checked by sum = dim).
std::pair<std::size_t, std::size_t> boost_rotation_split(const StructureContext& ctx,
                                                         const Subspace& s);

// Rank via the centralizer of a deterministic prime-weighted generic
// element; reseeds with the next prime block if the centralizer is not
// abelian. Throws NonReductive after the retry budget.
std::size_t rank(const StructureContext& ctx, const Subspace& s);

struct IdealPart {
  Subspace space;
  bool is_center = false;
};

// Center plus minimal ideals of a reductive subalgebra.
std::vector<IdealPart> ideal_decomposition(const StructureContext& ctx, const Subspace& s);

// Exhaustive Jacobi check: ad([b_i,b_j]) == [ad_i, ad_j] for all pairs,
// which covers every basis triple. Takes the ad table explicitly so tests
// can inject faults. Returns the first failing pair or (n,n) on success.
std::pair<std::size_t, std::size_t> jacobi_violation(const std::vector<Mat>& ad);

// Ad-invariance of the Killing form on all basis triples:
// ad_i^T G + G ad_i = 0 for every i. Returns first failing index or n.
std::size_t killing_invariance_violation(const std::vector<Mat>& ad, const Mat& gram);

}  // namespace e6wb

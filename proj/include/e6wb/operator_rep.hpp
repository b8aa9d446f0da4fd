#pragma once

#include <string>
#include <vector>

#include "e6wb/albert.hpp"
#include "e6wb/octonion.hpp"

namespace e6wb {

inline constexpr std::size_t kAlgebraDim = 78;

// Rational-entried linear endomorphism of the 27-dimensional Albert space.
class Operator {
 public:
  Operator() : m_(kAlbertDim, kAlbertDim) {}
  explicit Operator(Mat m) : m_(std::move(m)) {}

  const Mat& matrix() const { return m_; }
  AlbertElement apply(const AlbertElement& x) const {
    return AlbertElement::from_coords(m_.apply(x.coord_vec()));
  }

  Vec vectorized() const;  // row-major 27*27 = 729 coefficients
  Operator bracket(const Operator& o) const { return Operator(commutator(m_, o.m_)); }
  Operator operator+(const Operator& o) const { return Operator(m_ + o.m_); }
  Operator operator-(const Operator& o) const { return Operator(m_ - o.m_); }
  bool operator==(const Operator& o) const { return m_ == o.m_; }
  bool is_zero() const { return m_.is_zero(); }

 private:
  Mat m_;
};

// Directions for block generators: z, x, or one of the 7 imaginary units.
struct Direction {
  bool is_z = false, is_x = false;
  std::size_t unit = 0;  // octonion unit index 1..7 when imaginary

  static Direction Z() { return {true, false, 0}; }
  static Direction X() { return {false, true, 0}; }
  static Direction Q(std::size_t u) { return {false, false, u}; }
  std::string str() const;
};

enum class GenKind { Boost, SimpleRotation, DerivationLift, SynthBracket };

struct GeneratorLabel {
  GenKind kind;
  int type_index = 0;  // 1|2|3 for block generators, 0 otherwise
  std::string name;    // unique display name, e.g. "B1_tz", "R2_zk", "D07"
};

// Derivative at the identity of X -> M X Mdagger with M = exp(sA):
// X -> AX + XA, A Hermitian, A = (1/2) sigma in the type-t 2x2 block.
// sigma = diag(1,-1) for z, [[0,1],[1,0]] for x, [[0,q],[-q,0]] for q.
Operator boost_gen(int type_index, const Direction& d);

enum class RotPairKind { XZ, XQ, ZQ };
struct RotPair {
  RotPairKind kind;
  std::size_t unit = 0;  // for XQ / ZQ
  std::string str() const;
};

// X -> AX - XA with anti-Hermitian A = (1/2) sigma in the type-t block:
// sigma = [[0,1],[-1,0]] for (x,z), [[0,q],[q,0]] for (x,q),
// diag(q,-q) for (z,q).
Operator rotation_gen(int type_index, const RotPair& pair);

// Applies D entrywise to x23, x13, x12 and zero on the diagonal.
// Throws std::invalid_argument if D is not a derivation.
Operator derivation_lift(const OctonionMap& D);

// Gram matrix of trace_form over the 27 coordinate basis (diagonal).
const Mat& trace_form_gram();
// Self-adjointness of an operator with respect to trace_form.
bool is_trace_form_symmetric(const Operator& op);
bool is_trace_form_antisymmetric(const Operator& op);

struct BasisMember {
  GeneratorLabel label;
  Operator op;
  bool is_boost = false;  // trace-form symmetric
};

// Deterministic 78-element basis of sl(3,O): greedy rank selection in label
// order over all block boosts, all simple rotations, the 14 derivation
// lifts, and type-1 transverse-rotation brackets. Throws std::logic_error
// if the span is not exactly 78 (signals a convention bug).
std::vector<BasisMember> full_basis();

// The full candidate list in selection order, before rank filtering.
std::vector<BasisMember> generator_candidates();

}  // namespace e6wb

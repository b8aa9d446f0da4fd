#pragma once

#include <array>
#include <vector>

#include "e6wb/octonion.hpp"

namespace e6wb {

inline constexpr std::size_t kAlbertDim = 27;

// Element of the Albert algebra H3(O): a 3x3 octonionic Hermitian matrix
//   [ p1        x12       x13      ]
//   [ conj(x12) p2        x23      ]
//   [ conj(x13) conj(x23) p3       ]
// stored as 27 exact-rational coordinates in the fixed order
// (p1, p2, p3, x23, x13, x12), each octonion in global unit order.
// Hermiticity is structural: only the independent entries are stored.
class AlbertElement {
 public:
  AlbertElement() = default;
  static AlbertElement identity();
  static AlbertElement diag(const Rat& p1, const Rat& p2, const Rat& p3);
  static AlbertElement coordinate_unit(std::size_t idx);
  static AlbertElement from_coords(const Vec& v);

  Rat& p(std::size_t i) { return coords_[i]; }  // i in 0..2
  const Rat& p(std::size_t i) const { return coords_[i]; }

  Octonion x23() const { return oct_at(3); }
  Octonion x13() const { return oct_at(11); }
  Octonion x12() const { return oct_at(19); }
  void set_x23(const Octonion& o) { set_oct(3, o); }
  void set_x13(const Octonion& o) { set_oct(11, o); }
  void set_x12(const Octonion& o) { set_oct(19, o); }

  const std::array<Rat, kAlbertDim>& coords() const { return coords_; }
  Vec coord_vec() const { return Vec(coords_.begin(), coords_.end()); }

  AlbertElement operator+(const AlbertElement& o) const;
  AlbertElement operator-(const AlbertElement& o) const;
  AlbertElement operator*(const Rat& s) const;
  bool operator==(const AlbertElement& o) const { return coords_ == o.coords_; }
  bool is_zero() const;

 private:
  Octonion oct_at(std::size_t base) const;
  void set_oct(std::size_t base, const Octonion& o);

  std::array<Rat, kAlbertDim> coords_{};
};

// General 3x3 octonionic matrix, used internally for entrywise products.
using OctMatrix3 = std::array<std::array<Octonion, 3>, 3>;

OctMatrix3 to_matrix(const AlbertElement& x);
// Requires m Hermitian (checked); throws std::invalid_argument otherwise.
AlbertElement from_matrix(const OctMatrix3& m);
OctMatrix3 matmul(const OctMatrix3& a, const OctMatrix3& b);
OctMatrix3 matadd(const OctMatrix3& a, const OctMatrix3& b);
OctMatrix3 matsub(const OctMatrix3& a, const OctMatrix3& b);

// Symmetrized product (XY + YX)/2; commutative, Hermitian-valued.
AlbertElement jordan_product(const AlbertElement& x, const AlbertElement& y);

// tr(jordan_product(x, y)); symmetric, bilinear, positive definite.
Rat trace_form(const AlbertElement& x, const AlbertElement& y);

// Cubic Freudenthal determinant
//   det X = p1 p2 p3 - p1 n(x23) - p2 n(x13) - p3 n(x12)
//           + 2 Re((x12 x23) conj(x13)).
Rat determinant(const AlbertElement& x);

// First-order directional derivative d/dt det(X + tY) at t = 0, exact.
Rat det_directional_derivative(const AlbertElement& x, const AlbertElement& y);

// The 15 coordinate basis elements of J_H = {X : all entries in <1,k,kl,l>}.
std::vector<AlbertElement> quaternionic_subspace();

// Octonion coefficient indices allowed in J_H entries.
bool oct_index_in_H(std::size_t i);

}  // namespace e6wb

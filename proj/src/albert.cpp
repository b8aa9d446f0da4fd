#include "e6wb/albert.hpp"

#include <stdexcept>

namespace e6wb {

AlbertElement AlbertElement::identity() { return diag(1, 1, 1); }

AlbertElement AlbertElement::diag(const Rat& p1, const Rat& p2, const Rat& p3) {
  AlbertElement x;
  x.coords_[0] = p1;
  x.coords_[1] = p2;
  x.coords_[2] = p3;
  return x;
}

AlbertElement AlbertElement::coordinate_unit(std::size_t idx) {
  AlbertElement x;
  x.coords_[idx] = 1;
  return x;
}

AlbertElement AlbertElement::from_coords(const Vec& v) {
  AlbertElement x;
  for (std::size_t i = 0; i < kAlbertDim; ++i) x.coords_[i] = v[i];
  return x;
}

Octonion AlbertElement::oct_at(std::size_t base) const {
  Octonion o;
  for (std::size_t i = 0; i < kOctDim; ++i) o[i] = coords_[base + i];
  return o;
}

void AlbertElement::set_oct(std::size_t base, const Octonion& o) {
  for (std::size_t i = 0; i < kOctDim; ++i) coords_[base + i] = o[i];
}

AlbertElement AlbertElement::operator+(const AlbertElement& o) const {
  AlbertElement r;
  for (std::size_t i = 0; i < kAlbertDim; ++i) r.coords_[i] = coords_[i] + o.coords_[i];
  return r;
}

AlbertElement AlbertElement::operator-(const AlbertElement& o) const {
  AlbertElement r;
  for (std::size_t i = 0; i < kAlbertDim; ++i) r.coords_[i] = coords_[i] - o.coords_[i];
  return r;
}

AlbertElement AlbertElement::operator*(const Rat& s) const {
  AlbertElement r;
  for (std::size_t i = 0; i < kAlbertDim; ++i) r.coords_[i] = coords_[i] * s;
  return r;
}

bool AlbertElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!e6wb::is_zero(c)) return false;
  }
  return true;
}

OctMatrix3 to_matrix(const AlbertElement& x) {
  OctMatrix3 m;
  m[0][0] = Octonion::real(x.p(0));
  m[1][1] = Octonion::real(x.p(1));
  m[2][2] = Octonion::real(x.p(2));
  m[0][1] = x.x12();
  m[1][0] = x.x12().conj();
  m[0][2] = x.x13();
  m[2][0] = x.x13().conj();
  m[1][2] = x.x23();
  m[2][1] = x.x23().conj();
  return m;
}

AlbertElement from_matrix(const OctMatrix3& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    Octonion d = m[i][i];
    for (std::size_t c = 1; c < kOctDim; ++c) {
      if (!is_zero(d[c])) throw std::invalid_argument("from_matrix: non-real diagonal");
    }
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!(m[j][i] == m[i][j].conj()))
        throw std::invalid_argument("from_matrix: not Hermitian");
    }
  }
  AlbertElement x;
  x.p(0) = m[0][0].real_part();
  x.p(1) = m[1][1].real_part();
  x.p(2) = m[2][2].real_part();
  x.set_x12(m[0][1]);
  x.set_x13(m[0][2]);
  x.set_x23(m[1][2]);
  return x;
}

OctMatrix3 matmul(const OctMatrix3& a, const OctMatrix3& b) {
  OctMatrix3 p;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) p[i][j] = p[i][j] + a[i][k] * b[k][j];
  return p;
}

OctMatrix3 matadd(const OctMatrix3& a, const OctMatrix3& b) {
  OctMatrix3 s;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s[i][j] = a[i][j] + b[i][j];
  return s;
}

OctMatrix3 matsub(const OctMatrix3& a, const OctMatrix3& b) {
  OctMatrix3 s;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s[i][j] = a[i][j] - b[i][j];
  return s;
}

AlbertElement jordan_product(const AlbertElement& x, const AlbertElement& y) {
  OctMatrix3 mx = to_matrix(x), my = to_matrix(y);
  OctMatrix3 s = matadd(matmul(mx, my), matmul(my, mx));
  AlbertElement r = from_matrix(s);
  return r * Rat(1, 2);
}

Rat trace_form(const AlbertElement& x, const AlbertElement& y) {
  AlbertElement j = jordan_product(x, y);
  return j.p(0) + j.p(1) + j.p(2);
}

Rat determinant(const AlbertElement& x) {
  Octonion a12 = x.x12(), a23 = x.x23(), a13 = x.x13();
  Rat cubic = ((a12 * a23) * a13.conj()).real_part();
  return x.p(0) * x.p(1) * x.p(2) - x.p(0) * a23.norm_sq() - x.p(1) * a13.norm_sq() -
         x.p(2) * a12.norm_sq() + 2 * cubic;
}

Rat det_directional_derivative(const AlbertElement& x, const AlbertElement& y) {
  // det(X + tY) is cubic in t; recover the linear coefficient from four
  // exact evaluations at t = 1, -1, 2, -2.
  Rat d1 = determinant(x + y) - determinant(x - y);          // 2a1 + 2a3
  Rat d2 = determinant(x + y * Rat(2)) - determinant(x - y * Rat(2));  // 4a1 + 16a3
  return (d1 * 8 - d2) / 12;
}

bool oct_index_in_H(std::size_t i) { return i == 0 || i == 3 || i == 4 || i == 7; }

std::vector<AlbertElement> quaternionic_subspace() {
  std::vector<AlbertElement> out;
  for (std::size_t i = 0; i < 3; ++i) out.push_back(AlbertElement::coordinate_unit(i));
  for (std::size_t block = 0; block < 3; ++block) {
    for (std::size_t u = 0; u < kOctDim; ++u) {
      if (!oct_index_in_H(u)) continue;
      out.push_back(AlbertElement::coordinate_unit(3 + block * kOctDim + u));
    }
  }
  return out;
}

}  // namespace e6wb

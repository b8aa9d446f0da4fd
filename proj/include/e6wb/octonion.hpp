#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "e6wb/linalg.hpp"
#include "e6wb/rational.hpp"

namespace e6wb {

// Fixed global unit order: (1, i, j, k, kl, jl, il, l).
inline constexpr std::size_t kOctDim = 8;
extern const std::array<const char*, kOctDim> kOctUnitNames;

// Octonion with exact rational coefficients, built by Cayley-Dickson
// doubling of the quaternions <1,i,j,k> with doubling unit l:
//   (a + b l)(c + d l) = (ac - conj(d) b) + (d a + b conj(c)) l
// so that <1,k,kl,l> is a quaternion subalgebra.
class Octonion {
 public:
  Octonion() = default;
  static Octonion unit(std::size_t idx);
  static Octonion real(const Rat& r);

  Rat& operator[](std::size_t i) { return c_[i]; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator-() const;
  Octonion operator*(const Octonion& o) const;
  Octonion operator*(const Rat& s) const;
  bool operator==(const Octonion& o) const { return c_ == o.c_; }

  bool is_zero() const;
  Octonion conj() const;
  Rat real_part() const { return c_[0]; }
  Rat norm_sq() const;

  Vec coeffs() const { return Vec(c_.begin(), c_.end()); }
  std::string str() const;

 private:
  std::array<Rat, kOctDim> c_{};
};

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

// Product of two basis units as (sign, unit index); the unit table is
// XOR-structured in the fixed order above.
std::pair<int, std::size_t> unit_product(std::size_t a, std::size_t b);

// Linear map on octonion coefficient tuples (8x8 exact-rational matrix).
class OctonionMap {
 public:
  OctonionMap() : m_(kOctDim, kOctDim) {}
  explicit OctonionMap(Mat m) : m_(std::move(m)) {}

  Octonion apply(const Octonion& x) const;
  const Mat& matrix() const { return m_; }

  bool is_derivation() const;  // Leibniz rule on all basis pairs

 private:
  Mat m_;
};

// Exact basis of der(O) = g2, dimension 14, found by solving the Leibniz
// linear system over all basis pairs. Deterministic order (kernel RREF).
std::vector<OctonionMap> derivation_space();

// Basis of {D in der(O) : D(h) = 0 for all h in span(H)}.
// Throws std::invalid_argument if span(H) does not close under multiplication.
std::vector<OctonionMap> derivations_vanishing_on(const std::vector<Octonion>& H);

}  // namespace e6wb

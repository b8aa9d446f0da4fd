#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "e6wb/rational.hpp"

namespace e6wb {

using Vec = std::vector<Rat>;

// Dense exact-rational matrix, row major. Sized for this project's needs
// (up to a few hundred rows/columns); all elimination is fraction-exact.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Vec& v);
  void append_row(const Vec& v);

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat& operator*=(const Rat& s);
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool is_zero() const;

  // Matrix-vector product, skipping zero entries of v.
  Vec apply(const Vec& v) const;

  friend Mat commutator(const Mat& a, const Mat& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

Mat commutator(const Mat& a, const Mat& b);  // ab - ba

// In-place reduction to reduced row echelon form. Returns pivot columns.
// Zero rows are dropped.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Basis of {x : m x = 0}, as rows of the returned matrix.
Mat kernel(const Mat& m);

// Vector helpers.
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rat& s);
void vec_axpy(Vec& y, const Rat& s, const Vec& x);  // y += s*x
bool vec_is_zero(const Vec& v);

// A row space held in reduced echelon form, supporting exact membership
// tests and coordinate extraction relative to the original spanning rows.
class RowSpace {
 public:
  RowSpace() = default;
  // Rows of `basis` must be linearly independent.
  explicit RowSpace(const Mat& basis);

  std::size_t dim() const { return rref_.rows(); }
  std::size_t ambient() const { return rref_.cols(); }

  bool contains(const Vec& v) const;
  // Coordinates of v relative to the original basis rows.
  // Returns false (and leaves out untouched) when v is outside the span.
  bool coords(const Vec& v, Vec& out) const;
  // Residual of v after reduction against the echelon rows (zero iff member).
  Vec reduce(const Vec& v) const;

 private:
  Mat rref_;                      // reduced echelon rows
  Mat transform_;                 // rref_ = transform_ * basis
  std::vector<std::size_t> pivots_;
};

// Incremental independent-set selector: feed candidate vectors in order,
// keep the ones that enlarge the span (greedy rank selection).
class GreedySpan {
 public:
  explicit GreedySpan(std::size_t ambient) : ambient_(ambient) {}

  // Returns true iff v was independent of the rows seen so far.
  bool offer(const Vec& v);
  std::size_t dim() const { return rows_.rows(); }

 private:
  std::size_t ambient_;
  Mat rows_;  // kept in echelon form (not fully reduced; pivots normalized)
  std::vector<std::size_t> pivots_;
};

// Signature of a symmetric matrix by exact congruence diagonalization
// (Sylvester inertia): returns (negative count, positive count, zero count).
struct Inertia {
  std::size_t neg = 0, pos = 0, zero = 0;
};
Inertia inertia(Mat g);

}  // namespace e6wb

#include "e6wb/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace e6wb {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Mat::set_row(std::size_t r, const Vec& v) {
  assert(v.size() == cols_);
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = v[c];
}

void Mat::append_row(const Vec& v) {
  if (cols_ == 0) cols_ = v.size();
  assert(v.size() == cols_);
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(r, k);
      if (e6wb::is_zero(a)) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Rat& b = o.at(k, c);
        if (e6wb::is_zero(b)) continue;
        p.at(r, c) += a * b;
      }
    }
  }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
  return s;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool Mat::is_zero() const {
  for (const auto& x : data_) {
    if (!e6wb::is_zero(x)) return false;
  }
  return true;
}

Vec Mat::apply(const Vec& v) const {
  assert(v.size() == cols_);
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (e6wb::is_zero(v[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rat& a = at(r, c);
      if (!e6wb::is_zero(a)) out[r] += a * v[c];
    }
  }
  return out;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.rows() && lead < m.cols(); ++r) {
    std::size_t p = r;
    while (lead < m.cols()) {
      p = r;
      while (p < m.rows() && is_zero(m.at(p, lead))) ++p;
      if (p < m.rows()) break;
      ++lead;
    }
    if (lead == m.cols()) break;
    if (p != r) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(r, c));
    }
    Rat inv = 1 / m.at(r, lead);
    for (std::size_t c = lead; c < m.cols(); ++c) m.at(r, c) *= inv;
    for (std::size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == r || is_zero(m.at(rr, lead))) continue;
      Rat f = m.at(rr, lead);
      for (std::size_t c = lead; c < m.cols(); ++c) m.at(rr, c) -= f * m.at(r, c);
    }
    pivots.push_back(lead);
    ++lead;
  }
  // Drop zero rows.
  Mat out(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.set_row(r, m.row(r));
  m = std::move(out);
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat kernel(const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Mat k(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    k.append_row(v);
  }
  return k;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scaled(const Vec& a, const Rat& s) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

void vec_axpy(Vec& y, const Rat& s, const Vec& x) {
  if (is_zero(s)) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!is_zero(x[i])) y[i] += s * x[i];
  }
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

RowSpace::RowSpace(const Mat& basis) {
  // Row-reduce [basis | I] so that rref_ = transform_ * basis.
  std::size_t n = basis.rows(), w = basis.cols();
  Mat aug(n, w + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < w; ++c) aug.at(r, c) = basis.at(r, c);
    aug.at(r, w + r) = 1;
  }
  // Eliminate on the left block only.
  std::size_t lead = 0;
  for (std::size_t r = 0; r < n && lead < w; ++r) {
    std::size_t p = r;
    while (lead < w) {
      p = r;
      while (p < n && is_zero(aug.at(p, lead))) ++p;
      if (p < n) break;
      ++lead;
    }
    if (lead == w) break;
    if (p != r)
      for (std::size_t c = 0; c < w + n; ++c) std::swap(aug.at(p, c), aug.at(r, c));
    Rat inv = 1 / aug.at(r, lead);
    for (std::size_t c = 0; c < w + n; ++c) aug.at(r, c) *= inv;
    for (std::size_t rr = 0; rr < n; ++rr) {
      if (rr == r || is_zero(aug.at(rr, lead))) continue;
      Rat f = aug.at(rr, lead);
      for (std::size_t c = 0; c < w + n; ++c) aug.at(rr, c) -= f * aug.at(r, c);
    }
    pivots_.push_back(lead);
    ++lead;
  }
  if (pivots_.size() != n) throw std::invalid_argument("RowSpace: dependent rows");
  rref_ = Mat(n, w);
  transform_ = Mat(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < w; ++c) rref_.at(r, c) = aug.at(r, c);
    for (std::size_t c = 0; c < n; ++c) transform_.at(r, c) = aug.at(r, w + c);
  }
}

Vec RowSpace::reduce(const Vec& v) const {
  Vec res = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rat& c = res[pivots_[r]];
    if (is_zero(c)) continue;
    Rat f = c;  // pivot entries of rref_ are 1
    for (std::size_t j = 0; j < res.size(); ++j) {
      const Rat& x = rref_.at(r, j);
      if (!is_zero(x)) res[j] -= f * x;
    }
  }
  return res;
}

bool RowSpace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool RowSpace::coords(const Vec& v, Vec& out) const {
  std::size_t n = dim();
  Vec cr(n);  // coefficients relative to rref_ rows
  Vec res = v;
  for (std::size_t r = 0; r < n; ++r) {
    const Rat& c = res[pivots_[r]];
    if (is_zero(c)) continue;
    cr[r] = c;
    for (std::size_t j = 0; j < res.size(); ++j) {
      const Rat& x = rref_.at(r, j);
      if (!is_zero(x)) res[j] -= cr[r] * x;
    }
  }
  if (!vec_is_zero(res)) return false;
  // v = cr * rref_ = cr * transform_ * basis.
  out.assign(n, Rat(0));
  for (std::size_t r = 0; r < n; ++r) {
    if (is_zero(cr[r])) continue;
    for (std::size_t c = 0; c < n; ++c) {
      const Rat& t = transform_.at(r, c);
      if (!is_zero(t)) out[c] += cr[r] * t;
    }
  }
  return true;
}

bool GreedySpan::offer(const Vec& v) {
  assert(v.size() == ambient_);
  Vec res = v;
  for (std::size_t r = 0; r < rows_.rows(); ++r) {
    const Rat& c = res[pivots_[r]];
    if (is_zero(c)) continue;
    Rat f = c;
    for (std::size_t j = 0; j < ambient_; ++j) {
      const Rat& x = rows_.at(r, j);
      if (!is_zero(x)) res[j] -= f * x;
    }
  }
  std::size_t lead = 0;
  while (lead < ambient_ && is_zero(res[lead])) ++lead;
  if (lead == ambient_) return false;
  Rat inv = 1 / res[lead];
  for (auto& x : res) x *= inv;
  // Keep rows sorted by pivot for cheap reduction.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  Mat next(rows_.rows() + 1, ambient_);
  for (std::size_t r = 0; r < pos; ++r) next.set_row(r, rows_.row(r));
  next.set_row(pos, res);
  for (std::size_t r = pos; r < rows_.rows(); ++r) next.set_row(r + 1, rows_.row(r));
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_ = std::move(next);
  return true;
}

Inertia inertia(Mat g) {
  assert(g.rows() == g.cols());
  std::size_t n = g.rows();
  Inertia out;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pick a remaining index with nonzero diagonal.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && !is_zero(g.at(i, i))) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      // Zero diagonal: find a nonzero off-diagonal pair and fold it in
      // with the symmetric two-row trick.
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!done[j] && !is_zero(g.at(i, j))) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a == n) {
        for (std::size_t i = 0; i < n; ++i)
          if (!done[i]) ++out.zero;
        return out;
      }
      // row/col a += row/col b makes g(a,a) = 2 g(a,b) != 0.
      for (std::size_t c = 0; c < n; ++c) g.at(a, c) += g.at(b, c);
      for (std::size_t r = 0; r < n; ++r) g.at(r, a) += g.at(r, b);
      piv = a;
    }
    Rat d = g.at(piv, piv);
    if (sign(d) < 0)
      ++out.neg;
    else
      ++out.pos;
    done[piv] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || is_zero(g.at(r, piv))) continue;
      Rat f = g.at(r, piv) / d;
      for (std::size_t c = 0; c < n; ++c) g.at(r, c) -= f * g.at(piv, c);
      for (std::size_t c = 0; c < n; ++c) g.at(c, r) = g.at(r, c);
    }
    for (std::size_t c = 0; c < n; ++c) {
      g.at(piv, c) = 0;
      g.at(c, piv) = 0;
    }
    g.at(piv, piv) = d;
  }
  return out;
}

}  // namespace e6wb

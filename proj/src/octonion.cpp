#include "e6wb/octonion.hpp"

#include <sstream>
#include <stdexcept>

namespace e6wb {

const std::array<const char*, kOctDim> kOctUnitNames = {"1",  "i",  "j",  "k",
                                                        "kl", "jl", "il", "l"};

namespace {

using Quat = std::array<Rat, 4>;

// Quaternion product over the basis (1, i, j, k).
Quat qmul(const Quat& a, const Quat& b) {
  Quat r;
  r[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  r[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  r[2] = a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3];
  r[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1];
  return r;
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

// Split x = a + b l; the b coefficients sit at indices 7..4 = (l, il, jl, kl),
// i.e. b over (1, i, j, k) is (x7, x6, x5, x4).
Quat apart(const Octonion& x) { return {x[0], x[1], x[2], x[3]}; }
Quat bpart(const Octonion& x) { return {x[7], x[6], x[5], x[4]}; }

}  // namespace

Octonion Octonion::unit(std::size_t idx) {
  Octonion o;
  o.c_[idx] = 1;
  return o;
}

Octonion Octonion::real(const Rat& r) {
  Octonion o;
  o.c_[0] = r;
  return o;
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (std::size_t i = 0; i < kOctDim; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (std::size_t i = 0; i < kOctDim; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (std::size_t i = 0; i < kOctDim; ++i) r.c_[i] = -c_[i];
  return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
  Quat a = apart(*this), b = bpart(*this);
  Quat c = apart(o), d = bpart(o);
  Quat z1 = qmul(a, c), t1 = qmul(qconj(d), b);
  Quat z2 = qmul(d, a), t2 = qmul(b, qconj(c));
  Octonion r;
  for (std::size_t i = 0; i < 4; ++i) {
    r.c_[i] = z1[i] - t1[i];
    r.c_[7 - i] = z2[i] + t2[i];
  }
  return r;
}

Octonion Octonion::operator*(const Rat& s) const {
  Octonion r;
  for (std::size_t i = 0; i < kOctDim; ++i) r.c_[i] = c_[i] * s;
  return r;
}

bool Octonion::is_zero() const {
  for (const auto& x : c_) {
    if (!e6wb::is_zero(x)) return false;
  }
  return true;
}

Octonion Octonion::conj() const {
  Octonion r;
  r.c_[0] = c_[0];
  for (std::size_t i = 1; i < kOctDim; ++i) r.c_[i] = -c_[i];
  return r;
}

Rat Octonion::norm_sq() const {
  Rat n = 0;
  for (const auto& x : c_) n += x * x;
  return n;
}

std::string Octonion::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < kOctDim; ++i) {
    if (e6wb::is_zero(c_[i])) continue;
    if (any) os << " + ";
    os << to_string(c_[i]) << "*" << kOctUnitNames[i];
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return (x * y) * z - x * (y * z);
}

std::pair<int, std::size_t> unit_product(std::size_t a, std::size_t b) {
  Octonion p = Octonion::unit(a) * Octonion::unit(b);
  for (std::size_t i = 0; i < kOctDim; ++i) {
    if (!is_zero(p[i])) return {sign(p[i]), i};
  }
  throw std::logic_error("unit product vanished");
}

Octonion OctonionMap::apply(const Octonion& x) const {
  Vec v = m_.apply(x.coeffs());
  Octonion r;
  for (std::size_t i = 0; i < kOctDim; ++i) r[i] = v[i];
  return r;
}

bool OctonionMap::is_derivation() const {
  for (std::size_t a = 0; a < kOctDim; ++a) {
    for (std::size_t b = 0; b < kOctDim; ++b) {
      Octonion ea = Octonion::unit(a), eb = Octonion::unit(b);
      Octonion lhs = apply(ea * eb);
      Octonion rhs = apply(ea) * eb + ea * apply(eb);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

std::vector<OctonionMap> derivation_space() {
  // Unknowns: the 64 entries of D, row-major. Leibniz on each basis pair
  // gives 8 component equations: D(ea eb) - D(ea) eb - ea D(eb) = 0.
  Mat sys(0, kOctDim * kOctDim);
  for (std::size_t a = 0; a < kOctDim; ++a) {
    for (std::size_t b = a; b < kOctDim; ++b) {
      auto [s, c] = unit_product(a, b);
      // Coefficient of D[t][u] in component r of the constraint.
      std::array<Vec, kOctDim> rows;
      rows.fill(Vec(kOctDim * kOctDim));
      for (std::size_t t = 0; t < kOctDim; ++t) {
        rows[t][t * kOctDim + c] += s;  // D(ea eb) component t
        Octonion tb = Octonion::unit(t) * Octonion::unit(b);  // D(ea) eb
        Octonion at = Octonion::unit(a) * Octonion::unit(t);  // ea D(eb)
        for (std::size_t r = 0; r < kOctDim; ++r) {
          if (!is_zero(tb[r])) rows[r][t * kOctDim + a] -= tb[r];
          if (!is_zero(at[r])) rows[r][t * kOctDim + b] -= at[r];
        }
      }
      for (auto& row : rows) {
        if (!vec_is_zero(row)) sys.append_row(row);
      }
    }
  }
  Mat ker = kernel(sys);
  std::vector<OctonionMap> out;
  out.reserve(ker.rows());
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Mat d(kOctDim, kOctDim);
    for (std::size_t t = 0; t < kOctDim; ++t)
      for (std::size_t u = 0; u < kOctDim; ++u) d.at(t, u) = ker.at(r, t * kOctDim + u);
    out.emplace_back(std::move(d));
  }
  return out;
}

std::vector<OctonionMap> derivations_vanishing_on(const std::vector<Octonion>& H) {
  Mat span(0, kOctDim);
  GreedySpan g(kOctDim);
  for (const auto& h : H) {
    if (g.offer(h.coeffs())) span.append_row(h.coeffs());
  }
  RowSpace hs(span);
  for (std::size_t a = 0; a < span.rows(); ++a) {
    for (std::size_t b = 0; b < span.rows(); ++b) {
      Octonion pa, pb;
      for (std::size_t i = 0; i < kOctDim; ++i) {
        pa[i] = span.at(a, i);
        pb[i] = span.at(b, i);
      }
      if (!hs.contains((pa * pb).coeffs()))
        throw std::invalid_argument("derivations_vanishing_on: H is not a subalgebra");
    }
  }
  std::vector<OctonionMap> ders = derivation_space();
  // Constraints on the 14 coordinates: sum_m alpha_m D_m(h) = 0.
  Mat sys(0, ders.size());
  for (std::size_t r = 0; r < span.rows(); ++r) {
    Octonion h;
    for (std::size_t i = 0; i < kOctDim; ++i) h[i] = span.at(r, i);
    std::vector<Octonion> images;
    images.reserve(ders.size());
    for (const auto& d : ders) images.push_back(d.apply(h));
    for (std::size_t comp = 0; comp < kOctDim; ++comp) {
      Vec row(ders.size());
      for (std::size_t m = 0; m < ders.size(); ++m) row[m] = images[m][comp];
      if (!vec_is_zero(row)) sys.append_row(row);
    }
  }
  Mat ker = sys.rows() ? kernel(sys) : Mat::identity(ders.size());
  std::vector<OctonionMap> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Mat d(kOctDim, kOctDim);
    for (std::size_t m = 0; m < ders.size(); ++m) {
      if (is_zero(ker.at(r, m))) continue;
      for (std::size_t t = 0; t < kOctDim; ++t)
        for (std::size_t u = 0; u < kOctDim; ++u)
          d.at(t, u) += ker.at(r, m) * ders[m].matrix().at(t, u);
    }
    out.emplace_back(std::move(d));
  }
  return out;
}

}  // namespace e6wb

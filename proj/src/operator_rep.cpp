#include "e6wb/operator_rep.hpp"

#include <sstream>
#include <stdexcept>

namespace e6wb {

namespace {

// Block row/column indices for each type: 1 -> {0,1}, 2 -> {1,2},
// 3 -> {2,0}; the cyclic assignment makes B1_tz + B2_tz + B3_tz = 0.
std::pair<std::size_t, std::size_t> block_rows(int type_index) {
  switch (type_index) {
    case 1: return {0, 1};
    case 2: return {1, 2};
    case 3: return {2, 0};
    default: throw std::invalid_argument("type_index must be 1, 2 or 3");
  }
}

OctMatrix3 place_block(int type_index, const Octonion& s11, const Octonion& s12,
                       const Octonion& s21, const Octonion& s22) {
  auto [a, b] = block_rows(type_index);
  OctMatrix3 m;
  Rat half(1, 2);
  m[a][a] = s11 * half;
  m[a][b] = s12 * half;
  m[b][a] = s21 * half;
  m[b][b] = s22 * half;
  return m;
}

Operator operator_from_action(const OctMatrix3& a, bool boost) {
  Mat m(kAlbertDim, kAlbertDim);
  for (std::size_t c = 0; c < kAlbertDim; ++c) {
    OctMatrix3 x = to_matrix(AlbertElement::coordinate_unit(c));
    OctMatrix3 y = boost ? matadd(matmul(a, x), matmul(x, a))
                         : matsub(matmul(a, x), matmul(x, a));
    AlbertElement img = from_matrix(y);  // throws if not Hermitian
    for (std::size_t r = 0; r < kAlbertDim; ++r) m.at(r, c) = img.coords()[r];
  }
  return Operator(m);
}

const Octonion kOne = Octonion::unit(0);
const Octonion kZero;

}  // namespace

Vec Operator::vectorized() const {
  Vec v;
  v.reserve(kAlbertDim * kAlbertDim);
  for (std::size_t r = 0; r < kAlbertDim; ++r)
    for (std::size_t c = 0; c < kAlbertDim; ++c) v.push_back(m_.at(r, c));
  return v;
}

std::string Direction::str() const {
  if (is_z) return "z";
  if (is_x) return "x";
  return kOctUnitNames[unit];
}

std::string RotPair::str() const {
  switch (kind) {
    case RotPairKind::XZ: return "xz";
    case RotPairKind::XQ: return std::string("x") + kOctUnitNames[unit];
    case RotPairKind::ZQ: return std::string("z") + kOctUnitNames[unit];
  }
  return "?";
}

Operator boost_gen(int type_index, const Direction& d) {
  OctMatrix3 a;
  if (d.is_z) {
    a = place_block(type_index, kOne, kZero, kZero, -kOne);
  } else if (d.is_x) {
    a = place_block(type_index, kZero, kOne, kOne, kZero);
  } else if (d.unit >= 1 && d.unit < kOctDim) {
    Octonion q = Octonion::unit(d.unit);
    a = place_block(type_index, kZero, q, -q, kZero);
  } else {
    throw std::invalid_argument("boost_gen: invalid direction");
  }
  return operator_from_action(a, /*boost=*/true);
}

Operator rotation_gen(int type_index, const RotPair& pair) {
  OctMatrix3 a;
  switch (pair.kind) {
    case RotPairKind::XZ:
      a = place_block(type_index, kZero, kOne, -kOne, kZero);
      break;
    case RotPairKind::XQ: {
      if (pair.unit < 1 || pair.unit >= kOctDim)
        throw std::invalid_argument("rotation_gen: invalid unit");
      Octonion q = Octonion::unit(pair.unit);
      a = place_block(type_index, kZero, q, q, kZero);
      break;
    }
    case RotPairKind::ZQ: {
      if (pair.unit < 1 || pair.unit >= kOctDim)
        throw std::invalid_argument("rotation_gen: invalid unit");
      Octonion q = Octonion::unit(pair.unit);
      a = place_block(type_index, q, kZero, kZero, -q);
      break;
    }
  }
  return operator_from_action(a, /*boost=*/false);
}

Operator derivation_lift(const OctonionMap& D) {
  if (!D.is_derivation()) throw std::invalid_argument("derivation_lift: not a derivation");
  Mat m(kAlbertDim, kAlbertDim);
  // Zero on the 3 diagonal coordinates; D on each off-diagonal octonion.
  for (std::size_t block = 0; block < 3; ++block) {
    std::size_t base = 3 + block * kOctDim;
    for (std::size_t c = 0; c < kOctDim; ++c)
      for (std::size_t r = 0; r < kOctDim; ++r) m.at(base + r, base + c) = D.matrix().at(r, c);
  }
  return Operator(m);
}

const Mat& trace_form_gram() {
  static const Mat gram = [] {
    Mat g(kAlbertDim, kAlbertDim);
    for (std::size_t i = 0; i < kAlbertDim; ++i) {
      AlbertElement ei = AlbertElement::coordinate_unit(i);
      for (std::size_t j = i; j < kAlbertDim; ++j) {
        Rat v = trace_form(ei, AlbertElement::coordinate_unit(j));
        g.at(i, j) = v;
        g.at(j, i) = v;
      }
    }
    return g;
  }();
  return gram;
}

bool is_trace_form_symmetric(const Operator& op) {
  const Mat& g = trace_form_gram();
  return (g * op.matrix() - op.matrix().transpose() * g).is_zero();
}

bool is_trace_form_antisymmetric(const Operator& op) {
  const Mat& g = trace_form_gram();
  return (g * op.matrix() + op.matrix().transpose() * g).is_zero();
}

std::vector<BasisMember> generator_candidates() {
  std::vector<BasisMember> out;
  auto add = [&out](GenKind kind, int type_index, std::string name, Operator op,
                    bool boost) {
    out.push_back({{kind, type_index, std::move(name)}, std::move(op), boost});
  };

  std::vector<Direction> dirs = {Direction::Z(), Direction::X()};
  for (std::size_t u = 1; u < kOctDim; ++u) dirs.push_back(Direction::Q(u));

  for (int t = 1; t <= 3; ++t) {
    for (const auto& d : dirs) {
      std::ostringstream name;
      name << "B" << t << "_t" << d.str();
      add(GenKind::Boost, t, name.str(), boost_gen(t, d), true);
    }
  }

  std::vector<RotPair> pairs = {{RotPairKind::XZ, 0}};
  for (std::size_t u = 1; u < kOctDim; ++u) pairs.push_back({RotPairKind::XQ, u});
  for (std::size_t u = 1; u < kOctDim; ++u) pairs.push_back({RotPairKind::ZQ, u});

  for (int t = 1; t <= 3; ++t) {
    for (const auto& p : pairs) {
      std::ostringstream name;
      name << "R" << t << "_" << p.str();
      add(GenKind::SimpleRotation, t, name.str(), rotation_gen(t, p), false);
    }
  }

  std::vector<OctonionMap> ders = derivation_space();
  for (std::size_t d = 0; d < ders.size(); ++d) {
    std::ostringstream name;
    name << "D" << (d < 10 ? "0" : "") << d;
    add(GenKind::DerivationLift, 0, name.str(), derivation_lift(ders[d]), false);
  }

  // Brackets of type-1 transverse rotations complete so(7) beyond g2
  // (transverse rotations arise only as brackets).
  for (std::size_t qa = 1; qa < kOctDim; ++qa) {
    for (std::size_t qb = qa + 1; qb < kOctDim; ++qb) {
      Operator b = rotation_gen(1, {RotPairKind::XQ, qa})
                       .bracket(rotation_gen(1, {RotPairKind::XQ, qb}));
      std::ostringstream name;
      name << "[R1_x" << kOctUnitNames[qa] << ",R1_x" << kOctUnitNames[qb] << "]";
      add(GenKind::SynthBracket, 1, name.str(), std::move(b), false);
    }
  }
  return out;
}

std::vector<BasisMember> full_basis() {
  std::vector<BasisMember> candidates = generator_candidates();
  std::vector<BasisMember> selected;
  GreedySpan span(kAlbertDim * kAlbertDim);
  for (auto& cand : candidates) {
    if (span.offer(cand.op.vectorized())) selected.push_back(std::move(cand));
  }
  if (selected.size() != kAlgebraDim) {
    throw std::logic_error("full_basis: span dimension " + std::to_string(selected.size()) +
                           " != 78");
  }
  return selected;
}

}  // namespace e6wb

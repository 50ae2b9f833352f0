#include "vctk/moves.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace vctk {
namespace {

// Applies h_delta^{+-1} without checking the self-pairing of delta.
Cycle reflect_unchecked(const BilinearLattice& lattice, const Cycle& delta, const Cycle& alpha,
                        bool inverse) {
  Integer coeff = inverse ? pairing(lattice, delta, alpha) : pairing(lattice, alpha, delta);
  if (sgn(coeff) == 0) return alpha;
  coeff *= lattice.epsilon();
  Cycle out = alpha;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (sgn(delta[i]) != 0) out[i] -= coeff * delta[i];
  return out;
}

// Row vector delta^t G, so that <delta, v> = row . v and <v, delta> = -+ row . v.
IntVector covector(const BilinearLattice& lattice, const Cycle& delta, bool left) {
  const IntMatrix& g = lattice.gram();
  const std::size_t mu = lattice.rank();
  IntVector row(mu);
  for (std::size_t j = 0; j < mu; ++j)
    for (std::size_t i = 0; i < mu; ++i) {
      if (sgn(delta[i]) == 0) continue;
      // left: <delta, e_j> = sum_i delta_i G_ij ; right: <e_j, delta> = sum_i G_ji delta_i
      row[j] += delta[i] * (left ? g(i, j) : g(j, i));
    }
  return row;
}

// op := h_delta^{+-1} * op, column by column.
void left_multiply_pl(const BilinearLattice& lattice, const Cycle& delta, bool inverse,
                      IntMatrix& op) {
  const IntVector row = covector(lattice, delta, inverse);
  const int eps = lattice.epsilon();
  for (std::size_t c = 0; c < op.cols(); ++c) {
    Integer coeff = 0;
    for (std::size_t k = 0; k < op.rows(); ++k)
      if (sgn(op(k, c)) != 0) coeff += row[k] * op(k, c);
    if (sgn(coeff) == 0) continue;
    coeff *= eps;
    for (std::size_t i = 0; i < op.rows(); ++i)
      if (sgn(delta[i]) != 0) op(i, c) -= coeff * delta[i];
  }
}

int parse_index(std::string_view s, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("malformed move token '" + std::string(token) + "'");
  if (value < 1) throw InputError("move indices start at 1 ('" + std::string(token) + "')");
  return value;
}

}  // namespace

DistinguishedBasis::DistinguishedBasis(BilinearLattice lattice, std::vector<Cycle> vectors)
    : lattice_(std::move(lattice)), vectors_(std::move(vectors)) {
  const std::size_t mu = lattice_.rank();
  if (vectors_.size() != mu)
    throw InvariantError("a distinguished basis has exactly rank-many vectors");
  const Integer self = vanishing_self_pairing(lattice_.n());
  for (std::size_t i = 0; i < mu; ++i) {
    if (vectors_[i].size() != mu) throw DimensionError("basis vector length differs from rank");
    if (pairing(lattice_, vectors_[i], vectors_[i]) != self)
      throw InvariantError("basis vector " + std::to_string(i + 1) +
                           " does not have the vanishing self-pairing " + self.get_str());
  }
  if (!is_unimodular_span(lattice_, vectors_))
    throw InvariantError("basis vectors do not span the lattice");
}

DistinguishedBasis DistinguishedBasis::reference(BilinearLattice lattice) {
  std::vector<Cycle> vs;
  for (std::size_t i = 0; i < lattice.rank(); ++i) vs.push_back(Cycle::unit(lattice.rank(), i));
  return DistinguishedBasis(std::move(lattice), std::move(vs));
}

DistinguishedBasis DistinguishedBasis::trusted(BilinearLattice lattice, std::vector<Cycle> vectors) {
  return DistinguishedBasis(std::move(lattice), std::move(vectors), true);
}

IntMatrix DistinguishedBasis::coordinate_matrix() const {
  IntMatrix m(lattice_.rank(), vectors_.size());
  for (std::size_t j = 0; j < vectors_.size(); ++j)
    for (std::size_t i = 0; i < lattice_.rank(); ++i) m(i, j) = vectors_[j][i];
  return m;
}

Move parse_move(std::string_view token) {
  if (token.size() < 2) throw InputError("malformed move token '" + std::string(token) + "'");
  if (token[0] == 'w') {
    if (token.size() < 4 || (token[1] != 'a' && token[1] != 'b'))
      throw InputError("malformed move token '" + std::string(token) + "'");
    auto rest = token.substr(2);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw InputError("weak move needs the form wa<i>:<j> ('" + std::string(token) + "')");
    int i = parse_index(rest.substr(0, colon), token);
    int j = parse_index(rest.substr(colon + 1), token);
    if (i == j) throw InputError("weak move needs i != j ('" + std::string(token) + "')");
    return token[1] == 'a' ? Move::weak_alpha(i, j) : Move::weak_beta(i, j);
  }
  int idx = parse_index(token.substr(1), token);
  switch (token[0]) {
    case 'a': return Move::alpha(idx);
    case 'b': return Move::beta(idx);
    case 'k': return Move::kappa(idx);
    default: throw InputError("unknown move token '" + std::string(token) + "'");
  }
}

BraidWord parse_braid_word(std::string_view text) {
  BraidWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) w.push_back(parse_move(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::alpha: return "a" + std::to_string(m.first);
    case MoveKind::beta: return "b" + std::to_string(m.first);
    case MoveKind::kappa: return "k" + std::to_string(m.first);
    case MoveKind::weak_alpha:
      return "wa" + std::to_string(m.first) + ":" + std::to_string(m.second);
    case MoveKind::weak_beta:
      return "wb" + std::to_string(m.first) + ":" + std::to_string(m.second);
  }
  return {};
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& m : w) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out;
}

void validate_move(const Move& m, std::size_t mu) {
  const int size = static_cast<int>(mu);
  auto fail = [&](const std::string& why) {
    throw InputError("move '" + to_string(m) + "' invalid for mu = " + std::to_string(mu) + ": " + why);
  };
  switch (m.kind) {
    case MoveKind::alpha:
      if (m.first < 1 || m.first >= size) fail("alpha index must satisfy 1 <= j < mu");
      break;
    case MoveKind::beta:
      if (m.first < 2 || m.first > size) fail("beta index must satisfy 2 <= j <= mu");
      break;
    case MoveKind::kappa:
      if (m.first < 1 || m.first > size) fail("kappa index must satisfy 1 <= i <= mu");
      break;
    case MoveKind::weak_alpha:
    case MoveKind::weak_beta:
      if (m.first < 1 || m.first > size || m.second < 1 || m.second > size)
        fail("weak move indices must lie in 1..mu");
      if (m.first == m.second) fail("weak move needs i != j");
      break;
  }
}

Move inverse_move(const Move& m) {
  switch (m.kind) {
    case MoveKind::alpha: return Move::beta(m.first + 1);
    case MoveKind::beta: return Move::alpha(m.first - 1);
    case MoveKind::kappa: return m;
    case MoveKind::weak_alpha: return Move::weak_beta(m.first, m.second);
    case MoveKind::weak_beta: return Move::weak_alpha(m.first, m.second);
  }
  return m;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_move(*it));
  return out;
}

Cycle reflect(const BilinearLattice& lattice, const Cycle& delta, const Cycle& alpha,
              bool inverse) {
  if (delta.size() != lattice.rank() || alpha.size() != lattice.rank())
    throw DimensionError("reflect: cycle length differs from lattice rank");
  if (pairing(lattice, delta, delta) != vanishing_self_pairing(lattice.n()))
    throw InvariantError("reflect: delta does not have the vanishing self-pairing");
  return reflect_unchecked(lattice, delta, alpha, inverse);
}

IntMatrix picard_lefschetz_matrix(const BilinearLattice& lattice, const Cycle& delta,
                                  bool inverse) {
  if (pairing(lattice, delta, delta) != vanishing_self_pairing(lattice.n()))
    throw InvariantError("Picard-Lefschetz operator needs a vanishing-type cycle");
  IntMatrix m = IntMatrix::identity(lattice.rank());
  left_multiply_pl(lattice, delta, inverse, m);
  return m;
}

DistinguishedBasis apply_move(const DistinguishedBasis& basis, const Move& m) {
  validate_move(m, basis.size());
  const BilinearLattice& lat = basis.lattice();
  std::vector<Cycle> v = basis.vectors();
  switch (m.kind) {
    case MoveKind::alpha: {
      const std::size_t j = static_cast<std::size_t>(m.first - 1);
      Cycle moved = reflect_unchecked(lat, v[j], v[j + 1], false);
      v[j + 1] = v[j];
      v[j] = std::move(moved);
      break;
    }
    case MoveKind::beta: {
      const std::size_t j = static_cast<std::size_t>(m.first - 1);
      Cycle moved = reflect_unchecked(lat, v[j], v[j - 1], true);
      v[j - 1] = v[j];
      v[j] = std::move(moved);
      break;
    }
    case MoveKind::kappa: {
      auto& c = v[static_cast<std::size_t>(m.first - 1)];
      c = -c;
      break;
    }
    case MoveKind::weak_alpha:
    case MoveKind::weak_beta: {
      const auto i = static_cast<std::size_t>(m.first - 1);
      const auto j = static_cast<std::size_t>(m.second - 1);
      v[j] = reflect_unchecked(lat, v[i], v[j], m.kind == MoveKind::weak_beta);
      break;
    }
  }
  return DistinguishedBasis::trusted(lat, std::move(v));
}

DistinguishedBasis apply_braid_word(const DistinguishedBasis& basis, const BraidWord& w) {
  for (const auto& m : w) validate_move(m, basis.size());
  DistinguishedBasis cur = basis;
  for (const auto& m : w) cur = apply_move(cur, m);
  return cur;
}

bool is_isometry(const BilinearLattice& lattice, const IntMatrix& h) {
  if (h.rows() != lattice.rank() || h.cols() != lattice.rank()) return false;
  if (transpose(h) * lattice.gram() * h != lattice.gram()) return false;
  return abs(determinant(h)) == 1;
}

DistinguishedBasis apply_isometry(const DistinguishedBasis& basis, const IntMatrix& h) {
  if (!is_isometry(basis.lattice(), h))
    throw InvariantError("apply_isometry: matrix is not an isometry of the lattice");
  std::vector<Cycle> v;
  v.reserve(basis.size());
  for (const auto& c : basis.vectors()) v.emplace_back(h * c.coords());
  return DistinguishedBasis::trusted(basis.lattice(), std::move(v));
}

IntMatrix coxeter_element(const BilinearLattice& lattice, const std::vector<Cycle>& tuple) {
  IntMatrix h = IntMatrix::identity(lattice.rank());
  // h_{d_1}^{-1} acts first, h_{d_mu}^{-1} last.
  for (const auto& d : tuple) left_multiply_pl(lattice, d, true, h);
  return h;
}

IntMatrix coxeter_element(const DistinguishedBasis& basis) {
  return coxeter_element(basis.lattice(), basis.vectors());
}

IntMatrix coxeter_product(const DistinguishedBasis& basis) {
  IntMatrix c = IntMatrix::identity(basis.lattice().rank());
  for (auto it = basis.vectors().rbegin(); it != basis.vectors().rend(); ++it)
    left_multiply_pl(basis.lattice(), *it, false, c);
  return c;
}

IntMatrix in_basis_coordinates(const DistinguishedBasis& basis, const IntMatrix& op) {
  const IntMatrix p = basis.coordinate_matrix();
  return unimodular_inverse(p) * op * p;
}

}  // namespace vctk

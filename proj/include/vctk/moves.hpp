#pragma once

// Distinguished bases of vanishing cycles and the actions on them: the
// Picard-Lefschetz operators, the braid moves alpha_j / beta_{j+1}, the
// orientation changes kappa_i, the weak moves alpha_i(j) / beta_i(j), the
// action of lattice isometries, and the Coxeter element.
//
// Conventions
//  * Matrices act on column coordinate vectors in the lattice's reference basis.
//  * h_delta(a) = a - eps <a, delta> delta and h_delta^{-1}(a) = a - eps <delta, a> delta,
//    eps = (-1)^{n(n-1)/2}. For even n both agree.
//  * coxeter_element(B) is the matrix of the monodromy of B. It is the inverse
//    of the ordered product h_{d_1} o ... o h_{d_mu}; for even n that is the
//    product in which h_{d_1} is applied first. Expressed in the basis's own
//    coordinates (in_basis_coordinates) it equals the Seifert route
//    (-1)^{n+1} L^{-1} L^t. It is invariant under alpha/beta/kappa moves.

#include <string>
#include <string_view>
#include <vector>

#include "vctk/lattice.hpp"

namespace vctk {

/// An ordered tuple of mu cycles that spans the lattice and consists of
/// vanishing-cycle-like vectors (self-pairing fixed by n).
class DistinguishedBasis {
 public:
  /// Validates span and self-pairing; throws InvariantError.
  DistinguishedBasis(BilinearLattice lattice, std::vector<Cycle> vectors);

  /// (e_1, ..., e_mu); the lattice's diagonal must equal the vanishing self-pairing.
  static DistinguishedBasis reference(BilinearLattice lattice);

  /// Skips validation. For results of moves, which preserve the invariants.
  static DistinguishedBasis trusted(BilinearLattice lattice, std::vector<Cycle> vectors);

  const BilinearLattice& lattice() const { return lattice_; }
  const std::vector<Cycle>& vectors() const { return vectors_; }
  const Cycle& operator[](std::size_t i) const { return vectors_[i]; }
  std::size_t size() const { return vectors_.size(); }
  int n() const { return lattice_.n(); }

  /// Intersection matrix (<d_i, d_j>).
  IntMatrix gram() const { return gram_of(lattice_, vectors_); }
  /// Columns are the basis vectors in reference coordinates.
  IntMatrix coordinate_matrix() const;

  friend bool operator==(const DistinguishedBasis& a, const DistinguishedBasis& b) {
    return a.vectors_ == b.vectors_ && a.lattice_ == b.lattice_;
  }

 private:
  DistinguishedBasis(BilinearLattice lattice, std::vector<Cycle> vectors, bool)
      : lattice_(std::move(lattice)), vectors_(std::move(vectors)) {}

  BilinearLattice lattice_;
  std::vector<Cycle> vectors_;
};

enum class MoveKind { alpha, beta, kappa, weak_alpha, weak_beta };

/// One move token; indices are 1-based slot numbers.
///  alpha(j):   slots (j, j+1)      -> (h_{d_j}(d_{j+1}), d_j)
///  beta(j):    slots (j-1, j)      -> (d_j, h_{d_j}^{-1}(d_{j-1}))   [the beta_{j} of the literature]
///  kappa(i):   d_i -> -d_i
///  weak_alpha(i, j): d_j -> h_{d_i}(d_j)
///  weak_beta(i, j):  d_j -> h_{d_i}^{-1}(d_j)
struct Move {
  MoveKind kind = MoveKind::alpha;
  int first = 0;
  int second = 0;

  static Move alpha(int j) { return {MoveKind::alpha, j, 0}; }
  static Move beta(int j) { return {MoveKind::beta, j, 0}; }
  static Move kappa(int i) { return {MoveKind::kappa, i, 0}; }
  static Move weak_alpha(int i, int j) { return {MoveKind::weak_alpha, i, j}; }
  static Move weak_beta(int i, int j) { return {MoveKind::weak_beta, i, j}; }

  friend bool operator==(const Move&, const Move&) = default;
};

using BraidWord = std::vector<Move>;

/// Token grammar: a<j>, b<j>, k<i>, wa<i>:<j>, wb<i>:<j>. Throws InputError.
Move parse_move(std::string_view token);
/// Whitespace-separated tokens, applied left to right.
BraidWord parse_braid_word(std::string_view text);
std::string to_string(const Move& m);
std::string to_string(const BraidWord& w);

/// Throws InputError when the move's indices do not fit a basis of size mu.
void validate_move(const Move& m, std::size_t mu);

/// The inverse token: alpha(j) <-> beta(j+1), kappa self-inverse, weak_alpha <-> weak_beta.
Move inverse_move(const Move& m);
/// Inverse word (reversed, each token inverted).
BraidWord inverse_word(const BraidWord& w);

/// Picard-Lefschetz transformation h_delta (or its inverse) applied to alpha.
/// Throws InvariantError when <delta, delta> is not the vanishing self-pairing.
Cycle reflect(const BilinearLattice& lattice, const Cycle& delta, const Cycle& alpha,
              bool inverse = false);

/// Matrix of h_delta (or its inverse) in reference coordinates.
IntMatrix picard_lefschetz_matrix(const BilinearLattice& lattice, const Cycle& delta,
                                  bool inverse = false);

DistinguishedBasis apply_move(const DistinguishedBasis& basis, const Move& m);
DistinguishedBasis apply_braid_word(const DistinguishedBasis& basis, const BraidWord& w);

/// Applies an isometry h (h^t G h = G, det +-1) to every vector.
DistinguishedBasis apply_isometry(const DistinguishedBasis& basis, const IntMatrix& h);

bool is_isometry(const BilinearLattice& lattice, const IntMatrix& h);

/// Monodromy (Coxeter element) in reference coordinates; see the header comment.
IntMatrix coxeter_element(const DistinguishedBasis& basis);

/// The ordered product h_{d_1} o ... o h_{d_mu} (h_{d_mu} applied first).
/// Inverse of coxeter_element; equals the Bourbaki matrix of the basis.
IntMatrix coxeter_product(const DistinguishedBasis& basis);

/// Coxeter element of an arbitrary tuple of vanishing-type cycles (no span check).
IntMatrix coxeter_element(const BilinearLattice& lattice, const std::vector<Cycle>& tuple);

/// Expresses a reference-coordinate operator in the coordinates of the basis.
IntMatrix in_basis_coordinates(const DistinguishedBasis& basis, const IntMatrix& op);

}  // namespace vctk

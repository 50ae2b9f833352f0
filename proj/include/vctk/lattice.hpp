#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "vctk/linalg.hpp"

namespace vctk {

enum class Parity { symmetric, skew };

/// (-1)^{n(n-1)/2}: the sign in the Picard-Lefschetz formula.
int pl_sign(int n);

/// Self-intersection of a vanishing cycle: (-1)^{n(n-1)/2} (1 + (-1)^n).
int vanishing_self_pairing(int n);

/// Coordinate vector of a cycle in the lattice's reference basis.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(IntVector coords) : coords_(std::move(coords)) {}
  Cycle(std::initializer_list<long> coords);

  static Cycle zero(std::size_t rank) { return Cycle(IntVector(rank)); }
  static Cycle unit(std::size_t rank, std::size_t index);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const { return vctk::is_zero(coords_); }

  Cycle operator-() const;
  Cycle& operator+=(const Cycle& other);
  Cycle& operator-=(const Cycle& other);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(const Integer& s, const Cycle& c);

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Cycle& a, const Cycle& b) { return !(a == b); }
  friend bool operator<(const Cycle& a, const Cycle& b) { return a.coords_ < b.coords_; }

 private:
  IntVector coords_;
};

struct CycleHash {
  std::size_t operator()(const Cycle& c) const noexcept { return IntVectorHash{}(c.coords()); }
};

/// Integer lattice of rank mu with a Gram matrix that is symmetric with even
/// diagonal (n even) or skew-symmetric (n odd). Immutable after construction.
class BilinearLattice {
 public:
  BilinearLattice(int n, IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  int n() const { return n_; }
  const IntMatrix& gram() const { return gram_; }
  Parity parity() const { return n_ % 2 == 0 ? Parity::symmetric : Parity::skew; }
  int epsilon() const { return pl_sign(n_); }

  friend bool operator==(const BilinearLattice& a, const BilinearLattice& b) {
    return a.n_ == b.n_ && a.gram_ == b.gram_;
  }

 private:
  int n_;
  IntMatrix gram_;
};

/// Throws InvariantError unless `gram` is a valid Gram matrix for parameter n.
void validate_gram(const IntMatrix& gram, int n);

Integer pairing(const BilinearLattice& lattice, const Cycle& u, const Cycle& v);
IntMatrix gram_of(const BilinearLattice& lattice, const std::vector<Cycle>& vectors);

/// Saturated integer basis of the radical {v : G v = 0}; empty iff non-degenerate.
std::vector<Cycle> radical_basis(const BilinearLattice& lattice);

struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of the symmetric form over Q by exact congruence diagonalisation.
Signature signature(const BilinearLattice& lattice);

/// True iff the mu vectors span the lattice (coordinate determinant +-1).
bool is_unimodular_span(const BilinearLattice& lattice, const std::vector<Cycle>& vectors);

/// True iff some y has <v, y> = 1, i.e. the entries of G v have gcd 1.
bool primitive_pairing(const BilinearLattice& lattice, const Cycle& v);

/// Lattice expressed in a new reference basis: columns of `basis_change`
/// are the new basis vectors in old coordinates (must be unimodular).
BilinearLattice change_reference_basis(const BilinearLattice& lattice,
                                       const IntMatrix& basis_change);

/// Orthogonal direct sum of two lattices with the same parameter n.
BilinearLattice orthogonal_sum(const BilinearLattice& a, const BilinearLattice& b);

}  // namespace vctk

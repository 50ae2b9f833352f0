#pragma once

// Conversions among the intersection matrix S, the Seifert matrix L and the
// monodromy matrix H of a distinguished basis.
//
//   S = -L - (-1)^n L^t,  H = (-1)^{n+1} L^{-1} L^t.

#include "vctk/linalg.hpp"

namespace vctk {

/// Lower-triangular integer matrix with every diagonal entry -(-1)^{n(n-1)/2}.
class SeifertMatrix {
 public:
  /// Throws InvariantError if `entries` is not of the required shape.
  SeifertMatrix(int n, IntMatrix entries);

  int n() const { return n_; }
  const IntMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  IntMatrix entries_;
};

/// Checks the parity and diagonal of an intersection matrix; throws InvariantError.
void validate_intersection_matrix(const IntMatrix& s, int n);

SeifertMatrix seifert_from_intersection(const IntMatrix& s, int n);
IntMatrix intersection_from_seifert(const SeifertMatrix& l);
IntMatrix monodromy_from_seifert(const SeifertMatrix& l);

/// C = (I + U)^{-1} (I - V) for A = (eps S_ji), U its strictly upper part and V = A - U.
/// It is the inverse of monodromy_from_seifert(seifert_from_intersection(s, n)).
IntMatrix bou_coxeter(const IntMatrix& s, int n);

/// The Seifert matrix L with L H = (-1)^{n+1} L^t. Throws ArithmeticError when H is not
/// unimodular or no unique integral solution exists.
SeifertMatrix seifert_from_monodromy(const IntMatrix& h, int n);

}  // namespace vctk

#pragma once

// Desk-scale exhaustive searches over distinguished bases.

#include <optional>
#include <set>
#include <vector>

#include "vctk/moves.hpp"

namespace vctk {

using BasisTuple = std::vector<Cycle>;

/// All tuples of roots with unimodular span whose Coxeter element
/// (coxeter_element convention) equals c. Sorted lexicographically.
/// Throws InvariantError if the lattice is not definite.
std::vector<BasisTuple> enumerate_bases(const BilinearLattice& lattice, const std::vector<Cycle>& roots,
                                        const IntMatrix& c);

struct DiagramStats {
  std::size_t diagram_count = 0;
  Integer min_negative_edges;
  Integer min_monotone_feedback;
  bool all_connected = true;
  /// Set when the orbit was truncated: the minima are then upper bounds on the
  /// true minima over the full diagram set.
  bool partial = false;
};

struct OrbitReport {
  DistinguishedBasis seed;
  bool complete = false;
  /// Breadth-first levels fully expanded.
  std::size_t depth = 0;
  std::optional<DiagramStats> stats;

  /// Number of bases found.
  std::size_t size() const { return mu_ == 0 ? 0 : flat_.size() / (mu_ * mu_); }
  /// Bases in discovery order (breadth-first, moves a1.., b2.., k1.. per basis).
  BasisTuple basis(std::size_t i) const;
  std::vector<BasisTuple> bases() const;

  std::size_t diagram_count() const { return diagrams_.size(); }
  /// Distinct intersection matrices, in increasing order of their entry lists.
  std::vector<IntMatrix> diagrams() const;
  bool contains_diagram(const IntMatrix& s) const;

  // Compact storage: coordinates and Gram entries fit in 64 bits at desk scale.
  std::size_t mu_ = 0;
  /// Basis i occupies entries [i mu^2, (i+1) mu^2), vector by vector.
  std::vector<long long> flat_;
  std::set<std::vector<long long>> diagrams_;
};

/// Breadth-first closure under alpha_j, beta_j, kappa_i, stopping once `budget`
/// bases are known (complete = false then).
OrbitReport braid_orbit(const DistinguishedBasis& seed, std::size_t budget);

/// Per-diagram negative-edge and monotone-cycle statistics, minimised over the orbit.
DiagramStats diagram_stats(const OrbitReport& report);

struct QuasiCoxeterClass {
  /// A representative product and its conjugacy-class size in the group.
  IntMatrix representative;
  std::size_t class_size = 0;
  /// Distinct products falling in this class.
  std::vector<IntMatrix> products;
  /// Spanning root tuples whose product lies in the class.
  std::size_t tuple_count = 0;
  /// Number of braid-and-sign orbits on those tuples, one entry per product.
  std::vector<std::size_t> orbit_counts;
  /// Conjugate to the Coxeter element of the reference basis, when that basis is distinguished.
  std::optional<bool> coxeter;
};

struct QuasiCoxeterReport {
  std::size_t spanning_tuples = 0;
  std::size_t distinct_products = 0;
  std::optional<Integer> group_order;
  std::vector<QuasiCoxeterClass> classes;
  bool budget_exceeded = false;
};

/// Spanning ordered root tuples, their products grouped up to conjugacy in the
/// group generated by the root reflections, with orbit counts per product.
/// `budget` bounds the number of tuples examined.
QuasiCoxeterReport quasi_coxeter_survey(const BilinearLattice& lattice, const std::vector<Cycle>& roots,
                                        std::size_t budget);

/// Elements of the group generated by the operators h_d, up to cap (nullopt past it).
std::optional<std::vector<IntMatrix>> group_elements(const BilinearLattice& lattice,
                                                     const std::vector<Cycle>& generators,
                                                     std::size_t cap);

}  // namespace vctk

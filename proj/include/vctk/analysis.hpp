#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vctk/lattice.hpp"
#include "vctk/polynomial.hpp"

namespace vctk {

struct TraceReport {
  Integer trace;
  Integer trace_squared;
  /// Implemented expectation (-1)^{n+1} for tr H.
  int expected_trace = 0;
  /// The alternative sign (-1)^n, kept for comparison.
  int alternative_trace = 0;
  bool trace_pass = false;
  /// Present only when a corank was supplied and n = 2 mod 4.
  std::optional<int> expected_trace_squared;
  std::optional<bool> trace_squared_pass;

  bool pass() const { return trace_pass && trace_squared_pass.value_or(true); }
};

/// tr H against (-1)^{n+1}; tr H^2 against (-1)^corank when n = 2 mod 4.
TraceReport trace_checks(const IntMatrix& h, int n, std::optional<int> corank = std::nullopt);

enum class VanishingAxiom { generates, single_orbit, unit_pairing };
std::string to_string(VanishingAxiom a);

struct VanishingLatticeReport {
  bool ok = false;
  /// Every axiom that fails, in the order generates, single_orbit, unit_pairing.
  std::vector<VanishingAxiom> failed;
  /// Size of the orbit of the first element of Lambda under the generated group.
  std::size_t orbit_size = 0;

  bool fails(VanishingAxiom a) const;
};

/// Tests the vanishing-lattice axioms for a finite set Lambda with the
/// reflections s_d(x) = x - eps <x, d> d. Throws InvariantError when a symmetric
/// lattice has <d, d> != 2 eps for some d in Lambda.
VanishingLatticeReport vanishing_lattice_check(const BilinearLattice& lattice,
                                               const std::vector<Cycle>& lambda, int eps);

/// Coordinate bound floor(sqrt(2 (A^{-1})_ii)) over i for A = eps G, valid when
/// eps G is positive definite; nullopt otherwise. Every v with <v,v> = 2 eps lies in
/// the box of this radius.
std::optional<Integer> root_coordinate_bound(const BilinearLattice& lattice, int eps);

/// All v with coordinates in [-bound, bound], <v,v> = 2 eps, and <v, M> = Z,
/// sorted. Uses a definite-form enumeration when eps G is positive definite and a
/// box search otherwise.
std::vector<Cycle> root_candidates(const BilinearLattice& lattice, int eps, const Integer& bound);

/// Every v with <v,v> = 2 eps, where eps G is positive definite and eps is the sign
/// of the vanishing self-pairing. No primitivity filter, so rank one gives {+-e}.
/// Throws InvariantError for indefinite or skew lattices.
std::vector<Cycle> all_roots(const BilinearLattice& lattice);

struct GroupClosureReport {
  /// Absent when the cap was exceeded.
  std::optional<Integer> order;
  bool cap_exceeded = false;
  /// Orbit size of each generator under the group (absent past the cap).
  std::vector<std::optional<std::size_t>> orbit_sizes;
  std::size_t generator_count = 0;
};

/// BFS closure of the group generated by the Picard-Lefschetz operators h_d.
GroupClosureReport group_closure(const BilinearLattice& lattice, const std::vector<Cycle>& generators,
                                 const Integer& cap);

/// Orbit of a cycle under the group generated by the operators h_d, up to cap
/// elements; nullopt when exceeded. Sorted.
std::optional<std::vector<Cycle>> reflection_orbit(const BilinearLattice& lattice,
                                                   const std::vector<Cycle>& generators,
                                                   const Cycle& start, std::size_t cap);

/// Multiplicative order of a unimodular matrix, searched up to `limit`.
std::optional<unsigned long> matrix_order(const IntMatrix& h, unsigned long limit);

}  // namespace vctk

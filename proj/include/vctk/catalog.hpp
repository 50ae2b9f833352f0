#pragma once

// Named lattices and the product constructions.
//
// Names: A<k>[:pham|:standard], D<k>, E6|E7|E8[:gabrielov|:standard],
// T(p,q,r), S(p,q,r). Every entry is built at a base parameter (n = 0 for
// A<k>:pham, n = 2 otherwise) and moved to the requested n by stabilization,
// which is 4-periodic in the number of added squares.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vctk/matrixrel.hpp"
#include "vctk/moves.hpp"

namespace vctk {

enum class CatalogFamily { A, D, E, T, S };

struct CatalogName {
  CatalogFamily family = CatalogFamily::A;
  /// k for A_k, D_k, E_k; unused for T and S.
  int k = 0;
  /// "standard", "pham" or "gabrielov" for A/D/E; empty for T and S.
  std::string presentation;
  int p = 0, q = 0, r = 0;

  /// Canonical spelling, e.g. "A3:standard", "T(2,3,7)".
  std::string canonical() const;
};

/// Throws InputError on anything outside the grammar.
CatalogName parse_catalog_name(const std::string& name);

struct CatalogEntry {
  std::string name;
  DistinguishedBasis basis;
  std::string provenance;
  /// Corank of the classical normal form (number of variables beyond squares).
  std::optional<int> corank;
  std::optional<Integer> coxeter_number;
  std::optional<Integer> weyl_order;
};

/// The named entry at parameter n. Throws InputError for unknown names or triples.
CatalogEntry catalog_entry(const std::string& name, int n = 2);

/// Applies m suspensions to an intersection matrix valid for n.
IntMatrix stabilize(const IntMatrix& s, int n, int m);

/// (-1)^{(n_f + 1) m} L_f (x) L_g in lexicographic order, m = n_g + 1.
SeifertMatrix tensor_seifert(const SeifertMatrix& lf, const SeifertMatrix& lg);

struct SingularityMatrices {
  SeifertMatrix seifert;
  IntMatrix intersection;
  IntMatrix monodromy;
};

/// z_0^{a_0} + ... + z_n^{a_n} with n = |a| - 1, via iterated tensor products.
SingularityMatrices brieskorn_pham(const std::vector<int>& exponents);

struct OrlikRandellResult {
  int n = 0;
  /// c_0 .. c_mu.
  std::vector<Integer> coefficients;
  SeifertMatrix seifert;
};

OrlikRandellResult orlik_randell(const std::vector<int>& exponents);

/// Lyashko-Looijenga degree k! N^k / |W| for A_k, D_k, E_6, E_7, E_8.
Integer ll_degree(const std::string& type);

struct StoredConstant {
  Integer value;
  std::string provenance;
};

/// "D_count:E8", "weyl_order:<type>", "coxeter_number:<type>". Throws InputError.
StoredConstant stored_constant(const std::string& name);

/// A small list of representative names, used by the CLI and the test suites.
std::vector<std::string> catalog_examples();

/// The fourteen exceptional triples for S(p,q,r).
const std::vector<std::array<int, 3>>& exceptional_triples();

}  // namespace vctk

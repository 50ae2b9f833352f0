#pragma once

// Coxeter-Dynkin diagrams: vertices 1..mu, an edge of weight <d_i, d_j> for
// every i < j with nonzero pairing. An edge of weight w is drawn with |w|
// parallel lines, dashed when sign(w) equals the dashed sign of n.

#include <optional>
#include <string>
#include <vector>

#include "vctk/linalg.hpp"

namespace vctk {

struct DiagramEdge {
  std::size_t a = 0;  // 1-based, a < b
  std::size_t b = 0;
  Integer weight;
  bool dashed = false;

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

class DiagramGraph {
 public:
  /// Throws InvariantError when `intersection` is not square.
  DiagramGraph(const IntMatrix& intersection, int n);

  std::size_t size() const { return mu_; }
  int n() const { return n_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const IntMatrix& intersection() const { return s_; }

  /// +1 or -1: the sign of weights drawn dashed, (-1)^{n/2} for even n and
  /// (-1)^{(n+1)/2} for odd n.
  int dashed_sign() const;

  bool connected() const;

  /// Sum of |w| over edges with w < 0.
  Integer negative_edge_count() const;
  /// Total line count sum |w|.
  Integer line_count() const;

  /// Fewest lines (an edge of weight w counts |w|) whose deletion leaves no
  /// monotone cycle i_1 < ... < i_k, k >= 3.
  Integer monotone_cycle_feedback() const;

  /// Monotone cycles as increasing vertex lists (1-based).
  std::vector<std::vector<std::size_t>> monotone_cycles() const;

 private:
  std::size_t mu_;
  int n_;
  IntMatrix s_;
  std::vector<DiagramEdge> edges_;
};

/// Graphviz rendering: vertices 1..mu, |w| parallel edges, dashed ones styled.
std::string to_dot(const DiagramGraph& g, const std::string& name = "D");

}  // namespace vctk

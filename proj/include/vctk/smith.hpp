#pragma once

#include <vector>

#include "vctk/linalg.hpp"

namespace vctk {

/// Smith normal form with unimodular transforms: left * input * right == diagonal.
/// The invariant factors d_1 | d_2 | ... | d_rank are positive.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
  std::vector<Integer> invariants;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Integer basis of {v : a v = 0}, saturated in Z^cols. Columns of the right
/// transform past the rank.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

}  // namespace vctk

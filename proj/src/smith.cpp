#include "vctk/smith.hpp"

#include <utility>

namespace vctk {
namespace {

// row[target] -= q * row[source] on both the working matrix and the left transform.
void row_axpy(IntMatrix& m, IntMatrix& left, std::size_t target, std::size_t source,
              const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
  for (std::size_t j = 0; j < left.cols(); ++j) left(target, j) -= q * left(source, j);
}

void col_axpy(IntMatrix& m, IntMatrix& right, std::size_t target, std::size_t source,
              const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= q * m(i, source);
  for (std::size_t i = 0; i < right.rows(); ++i) right(i, target) -= q * right(i, source);
}

// Locates the entry of least absolute value in the trailing block starting at (t, t).
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      Integer a = abs(m(i, j));
      if (!found || a < best) {
        best = a;
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;

  while (t < limit) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(m, t, pi, pj)) break;
    m.swap_rows(t, pi);
    left.swap_rows(t, pi);
    m.swap_cols(t, pj);
    right.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (sgn(m(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        row_axpy(m, left, i, t, q);
        if (sgn(m(i, t)) != 0) {
          // remainder is smaller than the pivot: promote it
          m.swap_rows(t, i);
          left.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (sgn(m(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        col_axpy(m, right, j, t, q);
        if (sgn(m(t, j)) != 0) {
          m.swap_cols(t, j);
          right.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility condition d_t | every remaining entry
      for (std::size_t i = t + 1; i < m.rows() && clean; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            row_axpy(m, left, t, i, Integer(-1));
            clean = false;
            break;
          }
        }
    }
    if (sgn(m(t, t)) < 0) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(t, j) = -m(t, j);
      for (std::size_t j = 0; j < left.cols(); ++j) left(t, j) = -left(t, j);
    }
    ++t;
  }

  SmithForm out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(m(i, i));
  out.diagonal = std::move(m);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.right.column(j));
  return basis;
}

}  // namespace vctk

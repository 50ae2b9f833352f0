#include "vctk/matrixrel.hpp"

#include <utility>

#include "vctk/lattice.hpp"

namespace vctk {
namespace {

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

Integer seifert_diagonal(int n) { return -pl_sign(n); }

// Row echelon solve of a x = b over Q. Throws ArithmeticError when the system is
// inconsistent or has more than one solution.
std::vector<Rational> solve_unique(RatMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    std::swap(b[r], b[p]);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) throw ArithmeticError("no Seifert matrix solves L H = (-1)^{n+1} L^t");
  if (r < cols) throw ArithmeticError("Seifert matrix is not determined uniquely by H");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

SeifertMatrix::SeifertMatrix(int n, IntMatrix entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 0) throw InvariantError("fiber dimension n must be non-negative");
  if (!entries_.square()) throw InvariantError("Seifert matrix must be square");
  const Integer d = seifert_diagonal(n_);
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != d)
      throw InvariantError("Seifert matrix diagonal must be " + d.get_str() + " for n = " +
                           std::to_string(n_));
    for (std::size_t j = i + 1; j < entries_.cols(); ++j)
      if (sgn(entries_(i, j)) != 0) throw InvariantError("Seifert matrix must be lower triangular");
  }
}

void validate_intersection_matrix(const IntMatrix& s, int n) {
  validate_gram(s, n);
  const Integer d = vanishing_self_pairing(n);
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (s(i, i) != d)
      throw InvariantError("intersection matrix diagonal must be " + d.get_str() + " for n = " +
                           std::to_string(n));
}

SeifertMatrix seifert_from_intersection(const IntMatrix& s, int n) {
  validate_intersection_matrix(s, n);
  IntMatrix l(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    l(i, i) = seifert_diagonal(n);
    for (std::size_t j = 0; j < i; ++j) l(i, j) = -s(i, j);
  }
  return SeifertMatrix(n, std::move(l));
}

IntMatrix intersection_from_seifert(const SeifertMatrix& l) {
  const IntMatrix& e = l.entries();
  IntMatrix t = transpose(e);
  if (l.n() % 2 == 0) return -e - t;
  return t - e;
}

IntMatrix monodromy_from_seifert(const SeifertMatrix& l) {
  IntMatrix h = unimodular_inverse(l.entries()) * transpose(l.entries());
  return sign_pow(l.n() + 1) == 1 ? h : -h;
}

IntMatrix bou_coxeter(const IntMatrix& s, int n) {
  validate_intersection_matrix(s, n);
  const std::size_t mu = s.rows();
  const int eps = pl_sign(n);
  IntMatrix ipu = IntMatrix::identity(mu);
  IntMatrix imv = IntMatrix::identity(mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      Integer a = eps * s(j, i);
      if (j > i)
        ipu(i, j) += a;
      else
        imv(i, j) -= a;
    }
  // I + U is unipotent upper triangular.
  return unimodular_inverse(ipu) * imv;
}

SeifertMatrix seifert_from_monodromy(const IntMatrix& h, int n) {
  if (!h.square()) throw DimensionError("monodromy matrix must be square");
  if (n < 0) throw InvariantError("fiber dimension n must be non-negative");
  if (abs(determinant(h)) != 1) throw ArithmeticError("monodromy matrix is not unimodular");
  const std::size_t mu = h.rows();
  const Integer d = seifert_diagonal(n);
  const int sign = sign_pow(n + 1);

  // Unknowns: L_ij for i > j, numbered row by row.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  IntMatrix index(mu, mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      index(i, j) = static_cast<long>(unknowns.size());
      unknowns.emplace_back(i, j);
    }
  const std::size_t nu = unknowns.size();

  if (nu == 0) {
    IntMatrix l(mu, mu);
    for (std::size_t i = 0; i < mu; ++i) l(i, i) = d;
    if (l * h != (sign == 1 ? transpose(l) : -transpose(l)))
      throw ArithmeticError("no Seifert matrix solves L H = (-1)^{n+1} L^t");
    return SeifertMatrix(n, std::move(l));
  }

  // (L H)_rc - sign * L_cr = 0 for every (r, c).
  RatMatrix a(mu * mu, nu);
  std::vector<Rational> b(mu * mu);
  for (std::size_t r = 0; r < mu; ++r)
    for (std::size_t c = 0; c < mu; ++c) {
      const std::size_t eq = r * mu + c;
      Rational constant = d * h(r, c);
      for (std::size_t k = 0; k < r; ++k)
        a(eq, index(r, k).get_ui()) += Rational(h(k, c));
      if (c > r)
        a(eq, index(c, r).get_ui()) -= sign;
      else if (c == r)
        constant -= sign * d;
      b[eq] = -constant;
    }
  std::vector<Rational> x = solve_unique(std::move(a), std::move(b));

  IntMatrix l(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) l(i, i) = d;
  for (std::size_t k = 0; k < nu; ++k) {
    x[k].canonicalize();
    if (x[k].get_den() != 1) throw ArithmeticError("Seifert solution is not integral");
    l(unknowns[k].first, unknowns[k].second) = x[k].get_num();
  }
  return SeifertMatrix(n, std::move(l));
}

}  // namespace vctk

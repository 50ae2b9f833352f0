#include "vctk/lattice.hpp"

#include <utility>

#include "vctk/smith.hpp"

namespace vctk {

int pl_sign(int n) {
  if (n < 0) throw InputError("fiber dimension n must be non-negative");
  // n(n-1)/2 is even iff n = 0, 1 mod 4
  return (n % 4 == 0 || n % 4 == 1) ? 1 : -1;
}

int vanishing_self_pairing(int n) { return n % 2 == 1 ? 0 : 2 * pl_sign(n); }

Cycle::Cycle(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

Cycle Cycle::unit(std::size_t rank, std::size_t index) {
  IntVector v(rank);
  v.at(index) = 1;
  return Cycle(std::move(v));
}

Cycle Cycle::operator-() const {
  Cycle c = *this;
  for (auto& x : c.coords_) x = -x;
  return c;
}

Cycle& Cycle::operator+=(const Cycle& other) {
  if (other.size() != size()) throw DimensionError("cycle sum: lengths differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& other) {
  if (other.size() != size()) throw DimensionError("cycle difference: lengths differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Cycle operator*(const Integer& s, const Cycle& c) {
  Cycle r = c;
  for (auto& x : r.coords_) x *= s;
  return r;
}

void validate_gram(const IntMatrix& gram, int n) {
  if (n < 0) throw InvariantError("fiber dimension n must be non-negative");
  if (!gram.square()) throw InvariantError("Gram matrix must be square");
  const bool symmetric = n % 2 == 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const Integer expected = symmetric ? gram(j, i) : Integer(-gram(j, i));
      if (gram(i, j) != expected)
        throw InvariantError(symmetric ? "Gram matrix must be symmetric for even n"
                                       : "Gram matrix must be skew-symmetric for odd n");
    }
    if (symmetric && !mpz_even_p(gram(i, i).get_mpz_t()))
      throw InvariantError("symmetric Gram matrix must have even diagonal");
  }
}

BilinearLattice::BilinearLattice(int n, IntMatrix gram) : n_(n), gram_(std::move(gram)) {
  validate_gram(gram_, n_);
}

Integer pairing(const BilinearLattice& lattice, const Cycle& u, const Cycle& v) {
  const IntMatrix& g = lattice.gram();
  if (u.size() != g.rows() || v.size() != g.rows())
    throw DimensionError("pairing: cycle length differs from lattice rank");
  Integer s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (sgn(u[i]) == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (sgn(v[j]) != 0 && sgn(g(i, j)) != 0) row += g(i, j) * v[j];
    s += u[i] * row;
  }
  return s;
}

IntMatrix gram_of(const BilinearLattice& lattice, const std::vector<Cycle>& vectors) {
  IntMatrix out(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j)
      out(i, j) = pairing(lattice, vectors[i], vectors[j]);
  return out;
}

std::vector<Cycle> radical_basis(const BilinearLattice& lattice) {
  std::vector<Cycle> out;
  for (auto& v : integer_kernel(lattice.gram())) out.emplace_back(std::move(v));
  return out;
}

Signature signature(const BilinearLattice& lattice) {
  if (lattice.parity() != Parity::symmetric)
    throw InvariantError("signature is defined for symmetric lattices only");
  RatMatrix a = to_rational(lattice.gram());
  const std::size_t n = a.rows();
  Signature sig;

  // Congruence transformations a -> P a P^t, one pivot at a time.
  auto add_row_col = [&](std::size_t target, std::size_t source, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a(target, j) += f * a(source, j);
    for (std::size_t i = 0; i < n; ++i) a(i, target) += f * a(i, source);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, p)) == 0) ++p;
      if (p < n) {
        a.swap_rows(k, p);
        a.swap_cols(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && sgn(a(k, q)) == 0) ++q;
        if (q == n) {
          ++sig.zero;
          continue;
        }
        // a_kk = 0 = a_qq, a_kq != 0: row_k += row_q gives 2 a_kq on the diagonal
        add_row_col(k, q, Rational(1));
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      add_row_col(i, k, Rational(-a(i, k) / pivot));
    }
    if (sgn(pivot) > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

bool is_unimodular_span(const BilinearLattice& lattice, const std::vector<Cycle>& vectors) {
  if (vectors.size() != lattice.rank())
    throw DimensionError("is_unimodular_span needs exactly rank-many vectors");
  std::vector<IntVector> cols;
  cols.reserve(vectors.size());
  for (const auto& v : vectors) cols.push_back(v.coords());
  return abs(determinant(columns_matrix(cols, lattice.rank()))) == 1;
}

bool primitive_pairing(const BilinearLattice& lattice, const Cycle& v) {
  return gcd_of(lattice.gram() * v.coords()) == 1;
}

BilinearLattice change_reference_basis(const BilinearLattice& lattice,
                                       const IntMatrix& basis_change) {
  if (abs(determinant(basis_change)) != 1)
    throw ArithmeticError("change of reference basis must be unimodular");
  return BilinearLattice(lattice.n(), transpose(basis_change) * lattice.gram() * basis_change);
}

BilinearLattice orthogonal_sum(const BilinearLattice& a, const BilinearLattice& b) {
  if (a.n() != b.n()) throw DimensionError("orthogonal sum needs equal fiber dimension");
  IntMatrix g(a.rank() + b.rank(), a.rank() + b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  return BilinearLattice(a.n(), std::move(g));
}

}  // namespace vctk

#pragma once

// Independent reference computations for the tests. Everything here works on
// plain long long matrices or straightforward rational arithmetic and does not
// call into the library apart from type conversions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "vctk/linalg.hpp"

namespace oracle {

using Row = std::vector<long long>;
using Mat = std::vector<Row>;

inline Mat identity(std::size_t n) {
  Mat m(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, Row(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(a.empty() ? 0 : a[0].size(), Row(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Mat from(const vctk::IntMatrix& m) {
  Mat out(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline vctk::IntMatrix to(const Mat& m) {
  vctk::IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = static_cast<long>(m[i][j]);
  return out;
}

inline Row row(const vctk::IntVector& v) {
  Row r;
  for (const auto& x : v) r.push_back(x.get_si());
  return r;
}

inline long long pair(const Mat& g, const Row& u, const Row& v) {
  long long s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) s += u[i] * g[i][j] * v[j];
  return s;
}

inline int eps(int n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

/// Matrix of x -> x - eps <x, d> d (or x - eps <d, x> d for the inverse), column convention.
inline Mat reflection(const Mat& g, const Row& d, int n, bool inverse = false) {
  const std::size_t mu = g.size();
  Mat h = identity(mu);
  for (std::size_t j = 0; j < mu; ++j) {
    Row e(mu, 0);
    e[j] = 1;
    const long long p = inverse ? pair(g, d, e) : pair(g, e, d);
    for (std::size_t i = 0; i < mu; ++i) h[i][j] -= eps(n) * p * d[i];
  }
  return h;
}

/// Monodromy of a tuple: the inverse of h_{d_1} ... h_{d_mu}, i.e. the product
/// h_{d_mu}^{-1} ... h_{d_1}^{-1} with h_{d_1}^{-1} applied first.
inline Mat monodromy(const Mat& g, const std::vector<Row>& tuple, int n) {
  Mat c = identity(g.size());
  for (const auto& d : tuple) c = mul(reflection(g, d, n, true), c);
  return c;
}

/// Columns are the tuple's vectors.
inline Mat columns(const std::vector<Row>& tuple) {
  Mat p(tuple.empty() ? 0 : tuple[0].size(), Row(tuple.size()));
  for (std::size_t j = 0; j < tuple.size(); ++j)
    for (std::size_t i = 0; i < tuple[j].size(); ++i) p[i][j] = tuple[j][i];
  return p;
}

/// Determinant by cofactor expansion (small sizes only).
inline long long det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Row r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(a[i][k]);
      minor.push_back(r);
    }
    s += ((j % 2 == 0) ? 1 : -1) * a[0][j] * det(minor);
  }
  return s;
}

/// All v in the box [-r, r]^mu with <v, v> = target.
inline std::vector<Row> norm_vectors(const Mat& g, long long target, long long r) {
  const std::size_t mu = g.size();
  std::vector<Row> out;
  Row v(mu, -r);
  while (true) {
    if (pair(g, v, v) == target) out.push_back(v);
    std::size_t i = 0;
    while (i < mu && v[i] == r) v[i++] = -r;
    if (i == mu) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Characteristic polynomial det(tI - A), lowest coefficient first, by Faddeev-LeVerrier.
inline std::vector<vctk::Integer> faddeev_leverrier(const vctk::IntMatrix& a) {
  const std::size_t n = a.rows();
  using vctk::Rational;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0)), am(n, std::vector<Rational>(n, 0));
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += Rational(a(i, l)) * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = next;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += Rational(a(i, l)) * m[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  std::vector<vctk::Integer> out;
  for (auto& x : c) {
    x.canonicalize();
    out.push_back(x.get_num());
  }
  return out;
}

inline vctk::Integer factorial(unsigned long k) {
  vctk::Integer f = 1;
  for (unsigned long i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

/// Gram matrix of the standard A_k chain at n = 2: -2 on the diagonal, 1 between neighbours.
inline Mat a_path(std::size_t k) {
  Mat g(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    g[i][i] = -2;
    if (i + 1 < k) g[i][i + 1] = g[i + 1][i] = 1;
  }
  return g;
}

/// Complete graph with every edge dashed at n = 2: -2 on the diagonal, -1 elsewhere.
inline Mat a_complete_dashed(std::size_t k) {
  Mat g(k, Row(k, -1));
  for (std::size_t i = 0; i < k; ++i) g[i][i] = -2;
  return g;
}

/// Exhaustive search over mu-tuples of roots of a definite lattice: tuples whose
/// monodromy equals c and which span the lattice; returns the tuple count and the
/// set of their Gram matrices.
struct TupleCensus {
  std::size_t tuples = 0;
  std::set<Mat> grams;
};

inline TupleCensus distinguished_census(const Mat& g, int n, const Mat& c) {
  const std::size_t mu = g.size();
  const long long self = n % 2 == 1 ? 0 : 2 * eps(n);
  const auto roots = norm_vectors(g, self, 2);
  TupleCensus census;
  std::vector<Row> tuple;
  std::function<void()> rec = [&] {
    if (tuple.size() == mu) {
      if (monodromy(g, tuple, n) != c) return;
      const long long d = det(columns(tuple));
      if (d != 1 && d != -1) return;
      ++census.tuples;
      Mat gram(mu, Row(mu));
      for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j) gram[i][j] = pair(g, tuple[i], tuple[j]);
      census.grams.insert(gram);
      return;
    }
    for (const auto& r : roots) {
      tuple.push_back(r);
      rec();
      tuple.pop_back();
    }
  };
  rec();
  return census;
}

}  // namespace oracle

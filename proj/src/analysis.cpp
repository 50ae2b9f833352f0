#include "vctk/analysis.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <unordered_set>

#include "vctk/moves.hpp"
#include "vctk/smith.hpp"

namespace vctk {
namespace {

using SmallMatrix = std::vector<long long>;

struct SmallMatrixHash {
  std::size_t operator()(const SmallMatrix& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (long long v : m) h ^= std::hash<long long>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

SmallMatrix to_small(const IntMatrix& m) {
  SmallMatrix out;
  out.reserve(m.rows() * m.cols());
  for (const auto& v : m.data()) {
    if (!v.fits_slong_p()) throw ArithmeticError("matrix entry exceeds 64 bits");
    out.push_back(v.get_si());
  }
  return out;
}

SmallMatrix multiply(const SmallMatrix& a, const SmallMatrix& b, std::size_t n) {
  SmallMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const long long aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        long long prod;
        if (__builtin_mul_overflow(aik, b[k * n + j], &prod) ||
            __builtin_add_overflow(c[i * n + j], prod, &c[i * n + j]))
          throw ArithmeticError("group element entries exceed 64 bits");
      }
    }
  return c;
}

// Operators h_d (and, for odd n, their inverses) generating the group.
std::vector<IntMatrix> generator_matrices(const BilinearLattice& lattice,
                                          const std::vector<Cycle>& generators) {
  std::vector<IntMatrix> out;
  for (const auto& d : generators) {
    out.push_back(picard_lefschetz_matrix(lattice, d));
    if (lattice.parity() == Parity::skew) out.push_back(picard_lefschetz_matrix(lattice, d, true));
  }
  return out;
}

Cycle reflect_with(const BilinearLattice& lattice, const Cycle& d, const Cycle& x, int eps) {
  Integer c = pairing(lattice, x, d);
  if (sgn(c) == 0) return x;
  c *= eps;
  return x - c * d;
}

Integer floor_sqrt_rational(const Rational& r) {
  if (sgn(r) <= 0) return 0;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
  return s;
}

// Rational decomposition Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2; false if
// some q_ii <= 0, i.e. A is not positive definite.
bool definite_decomposition(const RatMatrix& a, RatMatrix& q) {
  const std::size_t n = a.rows();
  q = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = a(i, i);
    for (std::size_t k = 0; k < i; ++k) d -= q(k, k) * q(k, i) * q(k, i);
    if (sgn(d) <= 0) return false;
    q(i, i) = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = a(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= q(k, k) * q(k, i) * q(k, j);
      q(i, j) = s / d;
    }
  }
  return true;
}

bool positive_definite(const BilinearLattice& lattice, int eps, RatMatrix* q_out = nullptr) {
  if (lattice.parity() != Parity::symmetric) return false;
  RatMatrix a = to_rational(eps * lattice.gram());
  RatMatrix q;
  if (!definite_decomposition(a, q)) return false;
  if (q_out) *q_out = std::move(q);
  return true;
}

// All x with Q(x) = target inside [-bound, bound]^n, Q given by the decomposition q.
void enumerate_definite(const RatMatrix& q, const Rational& target, const Integer& bound,
                        const std::function<void(const IntVector&)>& emit) {
  const std::size_t n = q.rows();
  IntVector x(n);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t level,
                                                              const Rational& remaining) {
    // level counts down from n; the coordinate being chosen is i = level - 1.
    if (level == 0) {
      if (sgn(remaining) == 0) emit(x);
      return;
    }
    const std::size_t i = level - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += q(i, j) * x[j];
    // candidates: q_ii (x_i + c)^2 <= remaining; walk outward from the nearest integer to -c
    Rational neg = -c;
    Integer center;
    mpz_fdiv_q(center.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    auto cost = [&](const Integer& xi) {
      Rational t = xi + c;
      return Rational(q(i, i) * t * t);
    };
    for (int dir : {0, 1}) {
      for (Integer xi = dir == 0 ? center : Integer(center + 1);; dir == 0 ? --xi : ++xi) {
        Rational cst = cost(xi);
        if (cst > remaining) break;
        if (abs(xi) > bound) {
          if ((dir == 0 && xi < 0) || (dir == 1 && xi > 0)) break;
          continue;
        }
        x[i] = xi;
        rec(level - 1, Rational(remaining - cst));
      }
    }
    x[i] = 0;
  };
  rec(n, target);
}

}  // namespace

TraceReport trace_checks(const IntMatrix& h, int n, std::optional<int> corank) {
  if (!h.square()) throw DimensionError("trace checks need a square matrix");
  TraceReport r;
  r.trace = trace(h);
  r.trace_squared = trace(h * h);
  r.expected_trace = n % 2 == 0 ? -1 : 1;
  r.alternative_trace = -r.expected_trace;
  r.trace_pass = r.trace == r.expected_trace;
  if (corank && n % 4 == 2) {
    r.expected_trace_squared = *corank % 2 == 0 ? 1 : -1;
    r.trace_squared_pass = r.trace_squared == *r.expected_trace_squared;
  }
  return r;
}

std::string to_string(VanishingAxiom a) {
  switch (a) {
    case VanishingAxiom::generates: return "generates";
    case VanishingAxiom::single_orbit: return "single_orbit";
    case VanishingAxiom::unit_pairing: return "unit_pairing";
  }
  return {};
}

bool VanishingLatticeReport::fails(VanishingAxiom a) const {
  return std::find(failed.begin(), failed.end(), a) != failed.end();
}

VanishingLatticeReport vanishing_lattice_check(const BilinearLattice& lattice,
                                               const std::vector<Cycle>& lambda, int eps) {
  if (eps != 1 && eps != -1) throw InputError("eps must be +1 or -1");
  const std::size_t mu = lattice.rank();
  for (const auto& d : lambda) {
    if (d.size() != mu) throw DimensionError("cycle length differs from lattice rank");
    if (lattice.parity() == Parity::symmetric && pairing(lattice, d, d) != 2 * eps)
      throw InvariantError("element of Lambda does not satisfy <d, d> = 2 eps");
  }
  VanishingLatticeReport rep;

  // (i) Lambda generates M
  bool generates = false;
  if (mu == 0) {
    generates = true;
  } else if (!lambda.empty()) {
    std::vector<IntVector> cols;
    for (const auto& d : lambda) cols.push_back(d.coords());
    SmithForm s = smith_normal_form(columns_matrix(cols, mu));
    generates = s.rank == mu &&
                std::all_of(s.invariants.begin(), s.invariants.end(), [](const Integer& v) { return v == 1; });
  }
  if (!generates) rep.failed.push_back(VanishingAxiom::generates);

  // (ii) Lambda is one orbit of the group generated by its reflections
  bool single = lambda.empty();
  if (!lambda.empty()) {
    std::unordered_set<Cycle, CycleHash> members(lambda.begin(), lambda.end());
    std::unordered_set<Cycle, CycleHash> seen{lambda.front()};
    std::vector<Cycle> frontier{lambda.front()};
    bool closed = true;
    while (!frontier.empty() && closed) {
      std::vector<Cycle> next;
      for (const auto& x : frontier)
        for (const auto& d : lambda) {
          Cycle y = reflect_with(lattice, d, x, eps);
          if (!members.count(y)) {
            closed = false;
            break;
          }
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    rep.orbit_size = seen.size();
    single = closed && seen.size() == members.size();
  }
  if (!single) rep.failed.push_back(VanishingAxiom::single_orbit);

  // (iii) rank > 1 requires a pair with pairing 1
  bool unit = mu <= 1;
  for (std::size_t i = 0; i < lambda.size() && !unit; ++i)
    for (std::size_t j = 0; j < lambda.size() && !unit; ++j)
      if (pairing(lattice, lambda[i], lambda[j]) == 1) unit = true;
  if (!unit) rep.failed.push_back(VanishingAxiom::unit_pairing);

  rep.ok = rep.failed.empty();
  return rep;
}

std::optional<Integer> root_coordinate_bound(const BilinearLattice& lattice, int eps) {
  if (!positive_definite(lattice, eps)) return std::nullopt;
  auto inv = rational_inverse(eps * lattice.gram());
  Integer best = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    best = std::max(best, floor_sqrt_rational(Rational(2 * (*inv)(i, i))));
  return best;
}

namespace {

std::vector<Cycle> norm_vectors(const BilinearLattice& lattice, int eps, const Integer& bound,
                                bool primitive_only) {
  if (lattice.parity() != Parity::symmetric)
    throw InvariantError("root candidates are defined for symmetric lattices only");
  if (eps != 1 && eps != -1) throw InputError("eps must be +1 or -1");
  if (sgn(bound) <= 0) throw InputError("bound must be positive");
  const std::size_t mu = lattice.rank();
  std::vector<Cycle> out;
  auto consider = [&](const IntVector& x) {
    Cycle v(x);
    if (pairing(lattice, v, v) == 2 * eps && (!primitive_only || primitive_pairing(lattice, v)))
      out.push_back(std::move(v));
  };

  RatMatrix q;
  if (positive_definite(lattice, eps, &q)) {
    enumerate_definite(q, Rational(2), bound, consider);
  } else {
    const Integer side = 2 * bound + 1;
    Integer total = int_pow(side, mu);
    if (total > 50'000'000) throw InputError("box search too large for an indefinite lattice");
    IntVector x(mu, -bound);
    for (Integer count = 0; count < total; ++count) {
      consider(x);
      for (std::size_t i = 0; i < mu; ++i) {
        if (x[i] < bound) {
          ++x[i];
          break;
        }
        x[i] = -bound;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Cycle> root_candidates(const BilinearLattice& lattice, int eps, const Integer& bound) {
  return norm_vectors(lattice, eps, bound, true);
}

std::vector<Cycle> all_roots(const BilinearLattice& lattice) {
  if (lattice.parity() != Parity::symmetric)
    throw InvariantError("root sets are defined for symmetric lattices only");
  const int eps = vanishing_self_pairing(lattice.n()) > 0 ? 1 : -1;
  auto bound = root_coordinate_bound(lattice, eps);
  if (!bound) throw InvariantError("root set is infinite: the form is not definite");
  if (sgn(*bound) == 0) return {};
  return norm_vectors(lattice, eps, *bound, false);
}

std::optional<std::vector<Cycle>> reflection_orbit(const BilinearLattice& lattice,
                                                   const std::vector<Cycle>& generators,
                                                   const Cycle& start, std::size_t cap) {
  std::vector<IntMatrix> ops = generator_matrices(lattice, generators);
  std::unordered_set<Cycle, CycleHash> seen{start};
  std::vector<Cycle> frontier{start};
  while (!frontier.empty()) {
    std::vector<Cycle> next;
    for (const auto& x : frontier)
      for (const auto& op : ops) {
        Cycle y(op * x.coords());
        if (seen.insert(y).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Cycle> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupClosureReport group_closure(const BilinearLattice& lattice, const std::vector<Cycle>& generators,
                                 const Integer& cap) {
  GroupClosureReport rep;
  rep.generator_count = generators.size();
  const std::size_t mu = lattice.rank();
  const std::size_t cap_n = cap.fits_ulong_p() ? cap.get_ui() : ULONG_MAX;

  std::vector<SmallMatrix> ops;
  for (const auto& m : generator_matrices(lattice, generators)) ops.push_back(to_small(m));

  SmallMatrix id = to_small(IntMatrix::identity(mu));
  std::unordered_set<SmallMatrix, SmallMatrixHash> seen{id};
  std::vector<SmallMatrix> frontier{id};
  while (!frontier.empty() && !rep.cap_exceeded) {
    std::vector<SmallMatrix> next;
    for (const auto& g : frontier) {
      for (const auto& s : ops) {
        SmallMatrix h = multiply(g, s, mu);
        if (seen.insert(h).second) {
          if (seen.size() > cap_n) {
            rep.cap_exceeded = true;
            break;
          }
          next.push_back(std::move(h));
        }
      }
      if (rep.cap_exceeded) break;
    }
    frontier = std::move(next);
  }
  if (!rep.cap_exceeded) rep.order = Integer(static_cast<unsigned long>(seen.size()));

  for (const auto& d : generators) {
    auto orbit = reflection_orbit(lattice, generators, d, cap_n);
    rep.orbit_sizes.push_back(orbit ? std::optional<std::size_t>(orbit->size()) : std::nullopt);
  }
  return rep;
}

std::optional<unsigned long> matrix_order(const IntMatrix& h, unsigned long limit) {
  if (!h.square()) throw DimensionError("matrix order needs a square matrix");
  IntMatrix p = h;
  for (unsigned long k = 1; k <= limit; ++k) {
    if (is_identity(p)) return k;
    p = p * h;
  }
  return std::nullopt;
}

}  // namespace vctk

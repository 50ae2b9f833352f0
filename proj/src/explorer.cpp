#include "vctk/explorer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "vctk/analysis.hpp"
#include "vctk/diagram.hpp"

namespace vctk {
namespace {

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticError("orbit coordinates exceed 64 bits");
  return static_cast<long long>(v);
}

long long small(const Integer& v) {
  if (!v.fits_slong_p()) throw ArithmeticError("orbit coordinates exceed 64 bits");
  return v.get_si();
}

// Moves on bases stored as mu consecutive coordinate vectors of 64-bit integers.
class SmallEngine {
 public:
  SmallEngine(const BilinearLattice& lattice) : mu_(lattice.rank()), eps_(lattice.epsilon()) {
    g_.reserve(mu_ * mu_);
    for (const auto& v : lattice.gram().data()) g_.push_back(small(v));
  }

  std::size_t mu() const { return mu_; }

  long long pairing(const long long* u, const long long* v) const {
    __int128 s = 0;
    for (std::size_t i = 0; i < mu_; ++i) {
      if (u[i] == 0) continue;
      __int128 row = 0;
      for (std::size_t j = 0; j < mu_; ++j) row += static_cast<__int128>(g_[i * mu_ + j]) * v[j];
      s += row * u[i];
    }
    return checked(s);
  }

  // a := a - eps <a, d> d   (or <d, a> for the inverse)
  void reflect(const long long* d, long long* a, bool inverse) const {
    const long long c = inverse ? pairing(d, a) : pairing(a, d);
    if (c == 0) return;
    const __int128 f = static_cast<__int128>(c) * eps_;
    for (std::size_t i = 0; i < mu_; ++i) a[i] = checked(a[i] - f * d[i]);
  }

  // Applies the idx-th generator: alpha(1..mu-1), beta(2..mu), kappa(1..mu).
  void apply(std::size_t idx, long long* t) const {
    auto vec = [&](std::size_t slot) { return t + slot * mu_; };
    std::vector<long long> tmp(mu_);
    if (idx < mu_ - 1) {
      const std::size_t j = idx;
      std::copy(vec(j + 1), vec(j + 1) + mu_, tmp.begin());
      reflect(vec(j), tmp.data(), false);
      std::copy(vec(j), vec(j) + mu_, vec(j + 1));
      std::copy(tmp.begin(), tmp.end(), vec(j));
      return;
    }
    idx -= mu_ - 1;
    if (idx < mu_ - 1) {
      const std::size_t j = idx + 1;  // beta(j + 1) in 1-based terms
      std::copy(vec(j - 1), vec(j - 1) + mu_, tmp.begin());
      reflect(vec(j), tmp.data(), true);
      std::copy(vec(j), vec(j) + mu_, vec(j - 1));
      std::copy(tmp.begin(), tmp.end(), vec(j));
      return;
    }
    idx -= mu_ - 1;
    for (std::size_t k = 0; k < mu_; ++k) vec(idx)[k] = -vec(idx)[k];
  }

  std::size_t generator_count() const { return mu_ == 0 ? 0 : 3 * mu_ - 2; }

  std::vector<long long> gram_key(const long long* t) const {
    std::vector<long long> key(mu_ * mu_);
    for (std::size_t i = 0; i < mu_; ++i)
      for (std::size_t j = 0; j < mu_; ++j) key[i * mu_ + j] = pairing(t + i * mu_, t + j * mu_);
    return key;
  }

 private:
  std::size_t mu_;
  int eps_;
  std::vector<long long> g_;
};

IntMatrix key_to_matrix(const std::vector<long long>& key, std::size_t mu) {
  IntMatrix m(mu, mu);
  for (std::size_t k = 0; k < key.size(); ++k) m.data()[k] = static_cast<long>(key[k]);
  return m;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

struct TupleHash {
  std::size_t operator()(const BasisTuple& t) const noexcept {
    std::size_t h = 0;
    for (const auto& c : t) h = h * 1000003u ^ CycleHash{}(c);
    return h;
  }
};

}  // namespace

BasisTuple OrbitReport::basis(std::size_t i) const {
  if (i >= size()) throw InputError("orbit basis index out of range");
  BasisTuple t;
  const long long* p = flat_.data() + i * mu_ * mu_;
  for (std::size_t v = 0; v < mu_; ++v) {
    IntVector c(mu_);
    for (std::size_t k = 0; k < mu_; ++k) c[k] = static_cast<long>(p[v * mu_ + k]);
    t.emplace_back(std::move(c));
  }
  return t;
}

std::vector<BasisTuple> OrbitReport::bases() const {
  std::vector<BasisTuple> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(basis(i));
  return out;
}

std::vector<IntMatrix> OrbitReport::diagrams() const {
  std::vector<IntMatrix> out;
  for (const auto& k : diagrams_) out.push_back(key_to_matrix(k, mu_));
  return out;
}

bool OrbitReport::contains_diagram(const IntMatrix& s) const {
  if (s.rows() != mu_ || s.cols() != mu_) return false;
  std::vector<long long> key;
  for (const auto& v : s.data()) {
    if (!v.fits_slong_p()) return false;
    key.push_back(v.get_si());
  }
  return diagrams_.count(key) > 0;
}

std::vector<BasisTuple> enumerate_bases(const BilinearLattice& lattice, const std::vector<Cycle>& roots,
                                        const IntMatrix& c) {
  const std::size_t mu = lattice.rank();
  const int eps = vanishing_self_pairing(lattice.n()) > 0 ? 1 : -1;
  if (lattice.parity() != Parity::symmetric || !root_coordinate_bound(lattice, eps))
    throw InvariantError("enumerate_bases needs a definite lattice with a finite root set");
  if (c.rows() != mu || c.cols() != mu) throw DimensionError("Coxeter element has the wrong size");
  std::vector<BasisTuple> out;
  if (mu == 0) return out;
  if (determinant(c) != (mu % 2 == 0 ? 1 : -1)) return out;

  // h_d and h_d^{-1} for every root; the last factor is looked up by its matrix.
  std::vector<IntMatrix> fwd, inv;
  std::unordered_map<IntMatrix, std::vector<std::size_t>, IntMatrixHash> by_inverse;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    fwd.push_back(picard_lefschetz_matrix(lattice, roots[i]));
    inv.push_back(picard_lefschetz_matrix(lattice, roots[i], true));
    by_inverse[inv.back()].push_back(i);
  }
  const IntMatrix id = IntMatrix::identity(mu);

  // m = c (X_k ... X_1)^{-1} must be a product of the remaining mu - k factors X = h^{-1}.
  std::vector<std::size_t> chosen;
  std::function<void(const IntMatrix&)> dfs = [&](const IntMatrix& m) {
    const std::size_t k = chosen.size();
    if (k + 1 == mu) {
      auto it = by_inverse.find(m);
      if (it == by_inverse.end()) return;
      for (std::size_t last : it->second) {
        BasisTuple t;
        for (auto idx : chosen) t.push_back(roots[idx]);
        t.push_back(roots[last]);
        if (is_unimodular_span(lattice, t)) out.push_back(std::move(t));
      }
      return;
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
      IntMatrix next = m * fwd[i];
      if (matrix_rank(next - id) > mu - k - 1) continue;
      chosen.push_back(i);
      dfs(next);
      chosen.pop_back();
    }
  };
  dfs(c);
  std::sort(out.begin(), out.end());
  return out;
}

OrbitReport braid_orbit(const DistinguishedBasis& seed, std::size_t budget) {
  OrbitReport rep{seed, false, 0, std::nullopt, seed.size(), {}, {}};
  const std::size_t mu = seed.size();
  if (mu == 0 || budget == 0) {
    rep.complete = mu == 0;
    return rep;
  }
  SmallEngine eng(seed.lattice());
  const std::size_t width = mu * mu;

  auto& flat = rep.flat_;
  auto hash = [&](std::size_t idx) {
    std::size_t h = 0;
    const long long* p = flat.data() + idx * width;
    for (std::size_t k = 0; k < width; ++k) h = h * 1000003u ^ std::hash<long long>{}(p[k]);
    return h;
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    return std::equal(flat.begin() + a * width, flat.begin() + (a + 1) * width, flat.begin() + b * width);
  };
  std::unordered_set<std::size_t, decltype(hash), decltype(equal)> seen(1024, hash, equal);

  for (const auto& v : seed.vectors())
    for (const auto& x : v.coords()) flat.push_back(small(x));
  seen.insert(0);
  rep.diagrams_.insert(eng.gram_key(flat.data()));

  // Once the store holds `budget` bases, expansion continues only to learn
  // whether anything new would have been added.
  std::size_t level_begin = 0, level_end = 1;
  bool overflow = false;
  while (level_begin < level_end && !overflow) {
    for (std::size_t cur = level_begin; cur < level_end && !overflow; ++cur) {
      for (std::size_t g = 0; g < eng.generator_count(); ++g) {
        const std::size_t cand = flat.size() / width;
        flat.insert(flat.end(), flat.begin() + cur * width, flat.begin() + (cur + 1) * width);
        eng.apply(g, flat.data() + cand * width);
        if (seen.count(cand)) {
          flat.resize(cand * width);
          continue;
        }
        if (cand >= budget) {
          flat.resize(cand * width);
          overflow = true;
          break;
        }
        seen.insert(cand);
        rep.diagrams_.insert(eng.gram_key(flat.data() + cand * width));
      }
    }
    if (overflow) break;
    ++rep.depth;
    level_begin = level_end;
    level_end = flat.size() / width;
  }
  rep.complete = !overflow;
  return rep;
}

DiagramStats diagram_stats(const OrbitReport& report) {
  DiagramStats st;
  st.partial = !report.complete;
  st.diagram_count = report.diagram_count();
  bool first = true;
  for (const auto& s : report.diagrams()) {
    DiagramGraph g(s, report.seed.n());
    Integer neg = g.negative_edge_count();
    Integer fb = g.monotone_cycle_feedback();
    if (first || neg < st.min_negative_edges) st.min_negative_edges = neg;
    if (first || fb < st.min_monotone_feedback) st.min_monotone_feedback = fb;
    first = false;
    st.all_connected = st.all_connected && g.connected();
  }
  return st;
}

std::optional<std::vector<IntMatrix>> group_elements(const BilinearLattice& lattice,
                                                     const std::vector<Cycle>& generators,
                                                     std::size_t cap) {
  std::vector<IntMatrix> ops;
  for (const auto& d : generators) {
    ops.push_back(picard_lefschetz_matrix(lattice, d));
    if (lattice.parity() == Parity::skew) ops.push_back(picard_lefschetz_matrix(lattice, d, true));
  }
  const IntMatrix id = IntMatrix::identity(lattice.rank());
  std::unordered_set<IntMatrix, IntMatrixHash> seen{id};
  std::vector<IntMatrix> order{id};
  for (std::size_t cur = 0; cur < order.size(); ++cur)
    for (const auto& s : ops) {
      IntMatrix h = order[cur] * s;
      if (seen.insert(h).second) {
        if (seen.size() > cap) return std::nullopt;
        order.push_back(std::move(h));
      }
    }
  return order;
}

QuasiCoxeterReport quasi_coxeter_survey(const BilinearLattice& lattice, const std::vector<Cycle>& roots,
                                        std::size_t budget) {
  const std::size_t mu = lattice.rank();
  const int eps = vanishing_self_pairing(lattice.n()) > 0 ? 1 : -1;
  if (lattice.parity() != Parity::symmetric || !root_coordinate_bound(lattice, eps))
    throw InvariantError("quasi-Coxeter survey needs a definite lattice");
  QuasiCoxeterReport rep;
  if (mu == 0 || roots.empty()) return rep;

  // Spanning tuples grouped by their ordered product.
  std::map<IntMatrix, std::vector<BasisTuple>> by_product;
  std::vector<std::size_t> idx(mu, 0);
  std::size_t examined = 0;
  for (bool more = true; more;) {
    if (examined++ >= budget) {
      rep.budget_exceeded = true;
      break;
    }
    BasisTuple t;
    for (auto i : idx) t.push_back(roots[i]);
    if (is_unimodular_span(lattice, t)) {
      ++rep.spanning_tuples;
      by_product[coxeter_element(lattice, t)].push_back(std::move(t));
    }
    more = false;
    for (std::size_t k = mu; k-- > 0;) {
      if (++idx[k] < roots.size()) {
        more = true;
        break;
      }
      idx[k] = 0;
    }
  }
  rep.distinct_products = by_product.size();

  auto group = group_elements(lattice, roots, std::max<std::size_t>(budget, 1));
  if (group) rep.group_order = Integer(static_cast<unsigned long>(group->size()));

  std::optional<IntMatrix> reference_coxeter;
  bool reference_distinguished = true;
  for (std::size_t i = 0; i < mu; ++i)
    if (lattice.gram()(i, i) != vanishing_self_pairing(lattice.n())) reference_distinguished = false;
  if (reference_distinguished && is_unimodular_span(lattice, DistinguishedBasis::reference(lattice).vectors()))
    reference_coxeter = coxeter_element(DistinguishedBasis::reference(lattice));

  // Canonical conjugate: least g p g^{-1}; identity class when the group is unknown.
  std::vector<IntMatrix> inverses;
  if (group)
    for (const auto& g : *group) inverses.push_back(unimodular_inverse(g));
  auto conjugacy_class = [&](const IntMatrix& p) {
    std::set<IntMatrix> cls{p};
    if (group)
      for (std::size_t k = 0; k < group->size(); ++k) cls.insert((*group)[k] * p * inverses[k]);
    return cls;
  };

  std::map<IntMatrix, std::size_t> class_index;
  for (const auto& [product, tuples] : by_product) {
    std::set<IntMatrix> cls = conjugacy_class(product);
    const IntMatrix& rep_matrix = *cls.begin();
    auto it = class_index.find(rep_matrix);
    if (it == class_index.end()) {
      QuasiCoxeterClass qc;
      qc.representative = rep_matrix;
      qc.class_size = cls.size();
      if (reference_coxeter && group) qc.coxeter = cls.count(*reference_coxeter) > 0;
      it = class_index.emplace(rep_matrix, rep.classes.size()).first;
      rep.classes.push_back(std::move(qc));
    }
    QuasiCoxeterClass& qc = rep.classes[it->second];
    qc.products.push_back(product);
    qc.tuple_count += tuples.size();

    // Braid-and-sign orbits on the tuples with this product.
    std::unordered_map<BasisTuple, std::size_t, TupleHash> position;
    for (std::size_t i = 0; i < tuples.size(); ++i) position.emplace(tuples[i], i);
    UnionFind uf(tuples.size());
    std::size_t components = tuples.size();
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      auto basis = DistinguishedBasis::trusted(lattice, tuples[i]);
      std::vector<Move> moves;
      for (int j = 1; j < static_cast<int>(mu); ++j) moves.push_back(Move::alpha(j));
      for (int j = 1; j <= static_cast<int>(mu); ++j) moves.push_back(Move::kappa(j));
      for (const auto& m : moves) {
        auto moved = apply_move(basis, m).vectors();
        auto pos = position.find(moved);
        if (pos == position.end()) throw InvariantError("braid move left the product class");
        if (uf.unite(i, pos->second)) --components;
      }
    }
    qc.orbit_counts.push_back(components);
  }
  return rep;
}

}  // namespace vctk

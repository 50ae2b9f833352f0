#include "vctk/catalog.hpp"

#include <regex>

#include "vctk/diagram.hpp"
#include "vctk/polynomial.hpp"

namespace vctk {
namespace {

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

Integer factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// Intersection matrix at n = 2: diagonal -2, the listed edges with their weights.
struct Edge {
  int a, b;
  int w;
};

IntMatrix from_edges(std::size_t mu, const std::vector<Edge>& edges) {
  IntMatrix s(mu, mu);
  for (std::size_t i = 0; i < mu; ++i) s(i, i) = -2;
  for (const auto& e : edges) {
    s(e.a - 1, e.b - 1) = e.w;
    s(e.b - 1, e.a - 1) = e.w;
  }
  return s;
}

std::vector<Edge> path_edges(int from, int to) {
  std::vector<Edge> out;
  for (int v = from; v < to; ++v) out.push_back({v, v + 1, 1});
  return out;
}

// T(p,q,r) and, with `extra`, S(p,q,r): d1, d2 (and d3) first, then the arms.
IntMatrix tpqr_matrix(int p, int q, int r, bool extra) {
  const int head = extra ? 3 : 2;
  std::vector<Edge> edges{{1, 2, -2}};
  if (extra) edges.push_back({2, 3, 1});
  int next = head + 1;
  for (int len : {p - 1, q - 1, r - 1}) {
    edges.push_back({1, next, 1});
    edges.push_back({2, next, 1});
    for (int v = next; v < next + len - 1; ++v) edges.push_back({v, v + 1, 1});
    next += len;
  }
  return from_edges(static_cast<std::size_t>(next - 1), edges);
}

// A ladder of two solid chains (even and odd vertices), solid rungs (2i-1, 2i)
// and dashed diagonals (2i-1, 2i+2).
IntMatrix ladder_matrix(int mu) {
  std::vector<Edge> edges;
  for (int v = 1; v + 2 <= mu; ++v) edges.push_back({v, v + 2, 1});
  for (int v = 1; v + 1 <= mu; v += 2) edges.push_back({v, v + 1, 1});
  for (int v = 1; v + 3 <= mu; v += 2) edges.push_back({v, v + 3, -1});
  return from_edges(static_cast<std::size_t>(mu), edges);
}

Integer weyl_order_of(CatalogFamily f, int k) {
  switch (f) {
    case CatalogFamily::A: return factorial(k + 1);
    case CatalogFamily::D: return int_pow(2, k - 1) * factorial(k);
    case CatalogFamily::E:
      if (k == 6) return 51840;
      if (k == 7) return 2903040;
      return 696729600;
    default: break;
  }
  throw InputError("Weyl group order is defined for A, D, E types only");
}

Integer coxeter_number_of(CatalogFamily f, int k) {
  switch (f) {
    case CatalogFamily::A: return k + 1;
    case CatalogFamily::D: return 2 * k - 2;
    case CatalogFamily::E:
      if (k == 6) return 12;
      if (k == 7) return 18;
      return 30;
    default: break;
  }
  throw InputError("Coxeter number is defined for A, D, E types only");
}

int positive_int(const std::string& s) {
  if (s.size() > 6) throw InputError("catalog index too large: " + s);
  return std::stoi(s);
}

CatalogName parse_ade(const std::string& name) {
  static const std::regex ade(R"(([ADE])(\d+)(?::(pham|standard|gabrielov))?)");
  std::smatch m;
  if (!std::regex_match(name, m, ade)) throw InputError("unknown catalog name '" + name + "'");
  CatalogName c;
  c.k = positive_int(m[2]);
  c.presentation = m[3].matched ? m[3].str() : "standard";
  switch (m[1].str()[0]) {
    case 'A':
      c.family = CatalogFamily::A;
      if (c.k < 1) throw InputError("A_k needs k >= 1");
      if (c.presentation == "gabrielov") throw InputError("A_k has presentations pham and standard");
      break;
    case 'D':
      c.family = CatalogFamily::D;
      if (c.k < 4) throw InputError("D_k needs k >= 4");
      if (c.presentation != "standard") throw InputError("D_k has the standard presentation only");
      break;
    default:
      c.family = CatalogFamily::E;
      if (c.k < 6 || c.k > 8) throw InputError("E_k needs k in {6, 7, 8}");
      if (c.presentation == "pham") throw InputError("E_k has presentations gabrielov and standard");
      if (c.k == 7 && c.presentation == "gabrielov")
        throw InputError("no Gabrielov presentation is available for E7");
      break;
  }
  return c;
}

}  // namespace

std::string CatalogName::canonical() const {
  switch (family) {
    case CatalogFamily::A: return "A" + std::to_string(k) + ":" + presentation;
    case CatalogFamily::D: return "D" + std::to_string(k);
    case CatalogFamily::E: return "E" + std::to_string(k) + ":" + presentation;
    case CatalogFamily::T:
    case CatalogFamily::S:
      return std::string(family == CatalogFamily::T ? "T" : "S") + "(" + std::to_string(p) + "," +
             std::to_string(q) + "," + std::to_string(r) + ")";
  }
  return {};
}

CatalogName parse_catalog_name(const std::string& name) {
  static const std::regex triple(R"(([TS])\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, triple)) {
    CatalogName c;
    c.family = m[1] == "T" ? CatalogFamily::T : CatalogFamily::S;
    c.p = positive_int(m[2]);
    c.q = positive_int(m[3]);
    c.r = positive_int(m[4]);
    if (c.p < 2 || c.p > c.q || c.q > c.r)
      throw InputError("triple must satisfy 2 <= p <= q <= r: '" + name + "'");
    return c;
  }
  return parse_ade(name);
}

IntMatrix stabilize(const IntMatrix& s, int n, int m) {
  validate_intersection_matrix(s, n);
  if (m < 0) throw InputError("number of added squares must be non-negative");
  IntMatrix out = s;
  const long mm = m;
  const int global = sign_pow((n + 1) * mm + mm * (mm - 1) / 2);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i == j) {
        out(i, j) = vanishing_self_pairing(n + m);
        continue;
      }
      const int dir = j > i ? 1 : sign_pow(mm);
      out(i, j) = global * dir * s(i, j);
    }
  return out;
}

SeifertMatrix tensor_seifert(const SeifertMatrix& lf, const SeifertMatrix& lg) {
  const int m = lg.n() + 1;
  IntMatrix k = kronecker(lf.entries(), lg.entries());
  if (sign_pow(static_cast<long>(lf.n() + 1) * m) < 0) k = -k;
  return SeifertMatrix(lf.n() + m, std::move(k));
}

SingularityMatrices brieskorn_pham(const std::vector<int>& exponents) {
  if (exponents.empty()) throw InputError("Brieskorn-Pham needs at least one exponent");
  std::optional<SeifertMatrix> acc;
  for (int a : exponents) {
    if (a < 2) throw InputError("Brieskorn-Pham exponents must be >= 2");
    const std::size_t size = static_cast<std::size_t>(a - 1);
    IntMatrix l(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j <= i; ++j) l(i, j) = -1;
    SeifertMatrix factor(0, std::move(l));
    acc = acc ? tensor_seifert(*acc, factor) : factor;
  }
  IntMatrix s = intersection_from_seifert(*acc);
  IntMatrix h = monodromy_from_seifert(*acc);
  return {*acc, std::move(s), std::move(h)};
}

OrlikRandellResult orlik_randell(const std::vector<int>& exponents) {
  if (exponents.empty()) throw InputError("Orlik-Randell needs at least one exponent");
  const int n = static_cast<int>(exponents.size()) - 1;
  std::vector<Integer> r{1};
  for (int a : exponents) {
    if (a < 2) throw InputError("Orlik-Randell exponents must be >= 2");
    r.push_back(r.back() * a);
  }
  // r[i + 1] = r_i for i = -1..n; exponent of (t^{r_i} - 1) is (-1)^{n-i}.
  IntPolynomial num({1}), den({1});
  for (int i = -1; i <= n; ++i) {
    const Integer& ri = r[static_cast<std::size_t>(i + 1)];
    if (!ri.fits_uint_p() || ri > 100000) throw InputError("Orlik-Randell degree too large");
    IntPolynomial f = IntPolynomial::t_power_minus_one(static_cast<unsigned>(ri.get_ui()));
    if ((n - i) % 2 == 0)
      num = num * f;
    else
      den = den * f;
  }
  PolyDivision d = divide(num, den);
  if (!d.remainder.is_zero())
    throw ArithmeticError("Orlik-Randell product does not close to a polynomial");
  OrlikRandellResult out{n, d.quotient.coefficients(), SeifertMatrix(0, IntMatrix())};
  const std::size_t mu = static_cast<std::size_t>(d.quotient.degree());
  const long e = static_cast<long>(n) * (n + 1) / 2;
  const int sign = -sign_pow(e);
  IntMatrix l(mu, mu);
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j <= i; ++j) l(i, j) = sign * out.coefficients[i - j];
  out.seifert = SeifertMatrix(n, std::move(l));
  return out;
}

CatalogEntry catalog_entry(const std::string& name, int n) {
  if (n < 0) throw InputError("fiber dimension n must be non-negative");
  CatalogName c = parse_catalog_name(name);
  IntMatrix s;
  int base = 2;
  std::string provenance;
  std::optional<int> corank;

  switch (c.family) {
    case CatalogFamily::A:
      if (c.presentation == "pham") {
        base = 0;
        s = IntMatrix(c.k, c.k);
        for (int i = 0; i < c.k; ++i)
          for (int j = 0; j < c.k; ++j) s(i, j) = i == j ? 2 : 1;
        provenance = "Pham basis of z^(k+1): complete graph";
      } else {
        s = from_edges(c.k, path_edges(1, c.k));
        provenance = "standard path diagram";
      }
      corank = c.k == 1 ? 0 : 1;
      break;
    case CatalogFamily::D: {
      auto edges = path_edges(1, c.k - 1);
      edges.push_back({c.k - 2, c.k, 1});
      s = from_edges(c.k, edges);
      provenance = "classical tree; cross-checked via group order and Coxeter number";
      corank = 2;
      break;
    }
    case CatalogFamily::E:
      if (c.presentation == "gabrielov") {
        s = ladder_matrix(c.k);
        provenance = "Gabrielov ladder from the Brieskorn-Pham polynomial";
      } else {
        auto edges = path_edges(1, c.k - 1);
        edges.push_back({c.k - 3, c.k, 1});
        s = from_edges(c.k, edges);
        provenance = c.k == 8 ? "standard tree diagram"
                              : "classical tree; cross-checked via group order and Coxeter number";
      }
      corank = 2;
      break;
    case CatalogFamily::T:
    case CatalogFamily::S:
      s = tpqr_matrix(c.p, c.q, c.r, c.family == CatalogFamily::S);
      provenance = c.family == CatalogFamily::T ? "T(p,q,r) graph" : "S(p,q,r) graph";
      corank = (c.p >= 3) + (c.q >= 3) + (c.r >= 3);
      break;
  }

  const int shift = ((n - base) % 4 + 4) % 4;
  IntMatrix sn = shift == 0 ? s : stabilize(s, base, shift);
  DiagramGraph g(sn, n);
  if (!g.connected()) throw InvariantError("catalog diagram is not connected: " + name);

  CatalogEntry entry{c.canonical(), DistinguishedBasis::reference(BilinearLattice(n, std::move(sn))),
                     provenance, corank, std::nullopt, std::nullopt};
  if (c.family == CatalogFamily::A || c.family == CatalogFamily::D || c.family == CatalogFamily::E) {
    entry.coxeter_number = coxeter_number_of(c.family, c.k);
    entry.weyl_order = weyl_order_of(c.family, c.k);
  }
  return entry;
}

Integer ll_degree(const std::string& type) {
  CatalogName c = parse_ade(type);
  const Integer nk = int_pow(coxeter_number_of(c.family, c.k), static_cast<unsigned long>(c.k));
  const Integer num = factorial(c.k) * nk;
  const Integer w = weyl_order_of(c.family, c.k);
  if (!mpz_divisible_p(num.get_mpz_t(), w.get_mpz_t()))
    throw ArithmeticError("Lyashko-Looijenga degree is not integral");
  return num / w;
}

StoredConstant stored_constant(const std::string& name) {
  if (name == "D_count:E8")
    return {Integer(324000000), "reference count of distinguished diagrams of E8, 2^8 3^4 5^6"};
  auto colon = name.find(':');
  if (colon == std::string::npos) throw InputError("unknown constant '" + name + "'");
  const std::string kind = name.substr(0, colon);
  const std::string type = name.substr(colon + 1);
  CatalogName c;
  try {
    c = parse_ade(type);
  } catch (const InputError&) {
    throw InputError("unknown constant '" + name + "'");
  }
  if (kind == "weyl_order") return {weyl_order_of(c.family, c.k), "classical Weyl group order"};
  if (kind == "coxeter_number") return {coxeter_number_of(c.family, c.k), "classical Coxeter number"};
  throw InputError("unknown constant '" + name + "'");
}

std::vector<std::string> catalog_examples() {
  return {"A1", "A2", "A3", "A4", "A5", "A2:pham", "A3:pham", "D4", "D5", "D6",
          "E6", "E7", "E8", "E6:gabrielov", "E8:gabrielov", "T(3,3,3)", "T(2,4,4)",
          "T(2,3,6)", "T(2,3,7)", "T(2,4,5)", "T(3,3,4)", "S(2,3,7)", "S(3,3,4)", "S(4,4,4)"};
}

const std::vector<std::array<int, 3>>& exceptional_triples() {
  static const std::vector<std::array<int, 3>> t{{2, 3, 7}, {2, 3, 8}, {2, 3, 9}, {2, 4, 5}, {2, 4, 6},
                                                  {2, 4, 7}, {3, 3, 4}, {3, 3, 5}, {3, 3, 6}, {2, 5, 5},
                                                  {2, 5, 6}, {3, 4, 4}, {3, 4, 5}, {4, 4, 4}};
  return t;
}

}  // namespace vctk

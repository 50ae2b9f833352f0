#include "vctk/json_io.hpp"

#include <fstream>
#include <sstream>

namespace vctk {

std::string canonical(const Json& j) { return j.dump(); }

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const IntPolynomial& p) {
  return Json{{"coefficients", to_json(p.coefficients())}, {"display", to_string(p)}};
}

Json to_json(const Signature& s) {
  return Json{{"positive", s.positive}, {"zero", s.zero}, {"negative", s.negative}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InputError("not a decimal integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a matrix (array of rows)");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    IntVector r = vector_from_json(j[i]);
    if (r.size() != cols) throw InputError("ragged matrix: row " + std::to_string(i + 1));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = std::move(r[k]);
  }
  return m;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int small_int(const Json& j, const char* what) {
  Integer v = integer_from_json(j);
  if (!v.fits_sint_p()) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v.get_si());
}

}  // namespace

Json lattice_to_json(const BilinearLattice& l) { return Json{{"n", l.n()}, {"gram", to_json(l.gram())}}; }

BilinearLattice lattice_from_json(const Json& j) {
  const int n = small_int(field(j, "n"), "n");
  IntMatrix g = matrix_from_json(field(j, "gram"));
  try {
    return BilinearLattice(n, std::move(g));
  } catch (const InvariantError& e) {
    throw InputError(std::string("invalid lattice: ") + e.what());
  }
}

Json basis_to_json(const DistinguishedBasis& b) {
  Json vs = Json::array();
  for (const auto& v : b.vectors()) vs.push_back(to_json(v.coords()));
  return Json{{"lattice", lattice_to_json(b.lattice())}, {"vectors", vs}};
}

DistinguishedBasis basis_from_json(const Json& j) {
  BilinearLattice l = lattice_from_json(field(j, "lattice"));
  const Json& vs = field(j, "vectors");
  if (!vs.is_array()) throw InputError("\"vectors\" must be an array");
  std::vector<Cycle> cycles;
  for (const auto& v : vs) {
    IntVector c = vector_from_json(v);
    if (c.size() != l.rank()) throw InputError("basis vector length differs from lattice rank");
    cycles.emplace_back(std::move(c));
  }
  try {
    return DistinguishedBasis(std::move(l), std::move(cycles));
  } catch (const InvariantError& e) {
    throw InputError(std::string("invalid basis: ") + e.what());
  }
}

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::intersection: return "intersection";
    case MatrixKind::seifert: return "seifert";
    case MatrixKind::monodromy: return "monodromy";
  }
  return {};
}

MatrixKind matrix_kind_from_string(const std::string& s) {
  if (s == "intersection") return MatrixKind::intersection;
  if (s == "seifert") return MatrixKind::seifert;
  if (s == "monodromy") return MatrixKind::monodromy;
  throw InputError("matrix kind must be intersection, seifert or monodromy, got \"" + s + "\"");
}

Json matrix_document_to_json(const MatrixDocument& d) {
  return Json{{"n", d.n}, {"kind", to_string(d.kind)}, {"entries", to_json(d.entries)}};
}

MatrixDocument matrix_document_from_json(const Json& j) {
  MatrixDocument d;
  d.n = small_int(field(j, "n"), "n");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InputError("\"kind\" must be a string");
  d.kind = matrix_kind_from_string(kind.get<std::string>());
  d.entries = matrix_from_json(field(j, "entries"));
  if (!d.entries.square()) throw InputError("matrix must be square");
  return d;
}

Json diagram_to_json(const DistinguishedBasis& b) {
  const IntMatrix s = b.gram();
  DiagramGraph g(s, b.n());
  Json nodes = Json::array();
  for (std::size_t v = 1; v <= g.size(); ++v) nodes.push_back({{"id", v}, {"label", std::to_string(v)}});
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", to_json(e.weight)}, {"dashed", e.dashed}});
  Json out{{"n", b.n()},
           {"mu", b.size()},
           {"nodes", nodes},
           {"edges", edges},
           {"dashed_sign", g.dashed_sign()},
           {"connected", g.connected()},
           {"charpoly", to_json(char_poly(coxeter_element(b)))}};
  out["signature"] = b.lattice().parity() == Parity::symmetric ? to_json(signature(b.lattice())) : Json();
  return out;
}

Json matrices_to_json(const DistinguishedBasis& b) {
  const IntMatrix s = b.gram();
  SeifertMatrix l = seifert_from_intersection(s, b.n());
  return Json{{"intersection", to_json(s)},
              {"seifert", to_json(l.entries())},
              {"monodromy", to_json(monodromy_from_seifert(l))},
              {"coxeter_element", to_json(coxeter_element(b))}};
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return Json();
  if constexpr (std::is_same_v<T, Integer>)
    return to_json(*v);
  else
    return Json(*v);
}

}  // namespace

Json to_json(const CatalogEntry& e) {
  return Json{{"name", e.name},
              {"n", e.basis.n()},
              {"mu", e.basis.size()},
              {"provenance", e.provenance},
              {"gram", to_json(e.basis.gram())},
              {"corank", optional_json(e.corank)},
              {"coxeter_number", optional_json(e.coxeter_number)},
              {"weyl_order", optional_json(e.weyl_order)},
              {"basis", basis_to_json(e.basis)}};
}

Json to_json(const TraceReport& t) {
  Json j{{"trace", to_json(t.trace)},
         {"trace_squared", to_json(t.trace_squared)},
         {"expected_trace", t.expected_trace},
         {"alternative_trace", t.alternative_trace},
         {"trace_pass", t.trace_pass},
         {"pass", t.pass()}};
  j["expected_trace_squared"] = optional_json(t.expected_trace_squared);
  j["trace_squared_pass"] = optional_json(t.trace_squared_pass);
  return j;
}

Json to_json(const CyclotomicFactorization& f) {
  return Json{{"quasi_unipotent", f.quasi_unipotent}, {"cyclotomic_factors", f.factors}, {"sign", f.sign}};
}

Json to_json(const GroupClosureReport& g) {
  Json orbits = Json::array();
  for (const auto& o : g.orbit_sizes) orbits.push_back(optional_json(o));
  return Json{{"order", optional_json(g.order)},
              {"cap_exceeded", g.cap_exceeded},
              {"orbit_sizes", orbits},
              {"generator_count", g.generator_count}};
}

Json to_json(const DiagramStats& s) {
  return Json{{"diagram_count", s.diagram_count},
              {"min_negative_edges", to_json(s.min_negative_edges)},
              {"min_monotone_cycle_feedback", to_json(s.min_monotone_feedback)},
              {"all_connected", s.all_connected},
              {"partial", s.partial}};
}

Json to_json(const OrbitReport& r, bool include_bases) {
  Json j{{"seed", basis_to_json(r.seed)},
         {"orbit_size", r.size()},
         {"diagram_count", r.diagram_count()},
         {"status", r.complete ? "complete" : "budget-exceeded"},
         {"depth", r.depth}};
  j["statistics"] = r.stats ? to_json(*r.stats) : Json();
  if (include_bases) {
    Json bases = Json::array();
    for (const auto& t : r.bases()) {
      Json vs = Json::array();
      for (const auto& c : t) vs.push_back(to_json(c.coords()));
      bases.push_back(vs);
    }
    j["bases"] = bases;
    Json ds = Json::array();
    for (const auto& d : r.diagrams()) ds.push_back(to_json(d));
    j["diagrams"] = ds;
  }
  return j;
}

Json to_json(const QuasiCoxeterReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json products = Json::array();
    for (const auto& p : c.products) products.push_back(to_json(p));
    classes.push_back({{"representative", to_json(c.representative)},
                       {"class_size", c.class_size},
                       {"products", products},
                       {"tuple_count", c.tuple_count},
                       {"orbit_counts", c.orbit_counts},
                       {"coxeter", optional_json(c.coxeter)}});
  }
  return Json{{"spanning_tuples", r.spanning_tuples},
              {"distinct_products", r.distinct_products},
              {"group_order", optional_json(r.group_order)},
              {"classes", classes},
              {"budget_exceeded", r.budget_exceeded}};
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"pass", c.passed()},
                      {"detail", c.detail}});
  return Json{{"suite", r.suite}, {"seed", r.seed}, {"pass", r.passed()}, {"checks", checks}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace vctk

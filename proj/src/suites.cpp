#include "vctk/suites.hpp"

#include <algorithm>
#include <functional>

#include "vctk/analysis.hpp"
#include "vctk/catalog.hpp"
#include "vctk/diagram.hpp"
#include "vctk/explorer.hpp"
#include "vctk/matrixrel.hpp"
#include "vctk/sampling.hpp"

namespace vctk {
namespace {

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : report_(r) {}

  void check(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    auto it = std::find_if(report_.checks.begin(), report_.checks.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    if (it == report_.checks.end()) {
      report_.checks.push_back({name, 0, 0, {}});
      it = report_.checks.end() - 1;
    }
    ++it->cases;
    if (!ok) {
      if (it->failures == 0) it->detail = detail();
      ++it->failures;
    }
  }

 private:
  SuiteReport& report_;
};

std::vector<DistinguishedBasis> catalog_seeds() {
  std::vector<DistinguishedBasis> seeds;
  for (const auto& name : catalog_examples())
    for (int n : {0, 1, 2, 3}) seeds.push_back(catalog_entry(name, n).basis);
  return seeds;
}

std::vector<std::vector<int>> small_exponent_lists() {
  std::vector<std::vector<int>> out;
  const int values[] = {2, 3, 4};
  for (int a : values) out.push_back({a});
  for (int a : values)
    for (int b : values) out.push_back({a, b});
  for (int a : values)
    for (int b : values)
      for (int c : values) out.push_back({a, b, c});
  return out;
}

std::string join(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

void suite_slh(Recorder& rec, Rng& rng, std::size_t count) {
  for (const auto& b : sample_orbit_bases(rng, catalog_seeds(), count)) {
    const int n = b.n();
    const IntMatrix s = b.gram();
    const SeifertMatrix l = seifert_from_intersection(s, n);
    const IntMatrix h = monodromy_from_seifert(l);
    auto where = [&] { return "n=" + std::to_string(n) + " S=" + to_string(s); };
    rec.check("S->L->S", intersection_from_seifert(l) == s, where);
    rec.check("L->H->L", seifert_from_monodromy(h, n) == l, where);
    rec.check("H^t S H = S", transpose(h) * s * h == s, where);
    rec.check("H * C = I", is_identity(h * bou_coxeter(s, n)), where);
    rec.check("coxeter_element = Seifert route",
              in_basis_coordinates(b, coxeter_element(b)) == h, where);
    const Integer det_h = determinant(h);
    rec.check("det H", det_h == (n % 2 == 1 ? 1 : (s.rows() % 2 == 0 ? 1 : -1)), where);
  }
}

void suite_braid(Recorder& rec, Rng& rng, std::size_t count) {
  auto seeds = catalog_seeds();
  for (std::size_t k = 0; k < count; ++k) {
    const DistinguishedBasis b = random_walk(rng, seeds[draw(rng, seeds.size())], draw(rng, 6));
    const std::size_t mu = b.size();
    const BraidWord w = random_word(rng, mu, 1 + draw(rng, 8));
    const DistinguishedBasis out = apply_braid_word(b, w);
    auto where = [&] { return "n=" + std::to_string(b.n()) + " word=" + to_string(w); };
    rec.check("word then inverse word", apply_braid_word(out, inverse_word(w)) == b, where);
    rec.check("coxeter element invariant", coxeter_element(out) == coxeter_element(b), where);
    rec.check("basis invariants preserved",
              is_unimodular_span(out.lattice(), out.vectors()) &&
                  std::all_of(out.vectors().begin(), out.vectors().end(),
                              [&](const Cycle& c) {
                                return pairing(out.lattice(), c, c) == vanishing_self_pairing(out.n());
                              }),
              where);
    if (mu >= 2) {
      const int j = 1 + static_cast<int>(draw(rng, mu - 1));
      rec.check("alpha_j beta_{j+1} = id",
                apply_braid_word(b, {Move::alpha(j), Move::beta(j + 1)}) == b, where);
    }
    if (mu >= 3) {
      const int j = 1 + static_cast<int>(draw(rng, mu - 2));
      rec.check("braid relation",
                apply_braid_word(b, {Move::alpha(j), Move::alpha(j + 1), Move::alpha(j)}) ==
                    apply_braid_word(b, {Move::alpha(j + 1), Move::alpha(j), Move::alpha(j + 1)}),
                where);
    }
    if (mu >= 4) {
      const int i = 1 + static_cast<int>(draw(rng, mu - 3));
      const int j = i + 2 + static_cast<int>(draw(rng, mu - 2 - i));
      rec.check("far commutation",
                apply_braid_word(b, {Move::alpha(i), Move::alpha(j)}) ==
                    apply_braid_word(b, {Move::alpha(j), Move::alpha(i)}),
                where);
    }
  }
}

void spectral_case(Recorder& rec, const std::string& label, const IntMatrix& h, int n,
                   std::optional<int> corank) {
  auto where = [&] { return label + " n=" + std::to_string(n); };
  IntPolynomial p = char_poly(h);
  rec.check("quasi-unipotent", is_quasi_unipotent(p).quasi_unipotent, where);
  TraceReport t = trace_checks(h, n, corank);
  rec.check("tr H = (-1)^{n+1}", t.trace_pass, where);
  if (t.trace_squared_pass) rec.check("tr H^2 = (-1)^corank", *t.trace_squared_pass, where);
}

void suite_traces(Recorder& rec) {
  for (const auto& a : small_exponent_lists()) {
    SingularityMatrices m = brieskorn_pham(a);
    int corank = static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x >= 3; }));
    spectral_case(rec, "BP" + join(a), m.monodromy, m.seifert.n(), corank);
  }
  std::vector<std::string> names = catalog_examples();
  for (const auto& t : exceptional_triples())
    names.push_back("S(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  for (const auto& name : names)
    for (int n : {0, 1, 2, 3}) {
      CatalogEntry e = catalog_entry(name, n);
      spectral_case(rec, e.name, coxeter_element(e.basis), n, e.corank);
    }
}

void suite_tensor(Recorder& rec) {
  const auto lists = small_exponent_lists();
  for (const auto& a : lists)
    for (const auto& b : lists) {
      if (a.size() + b.size() > 3) continue;
      std::vector<int> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      rec.check("H(a+b) = H(a) (x) H(b)",
                brieskorn_pham(ab).monodromy ==
                    kronecker(brieskorn_pham(a).monodromy, brieskorn_pham(b).monodromy),
                [&] { return join(a) + " " + join(b); });
    }
  for (int k = 1; k <= 6; ++k) {
    const IntMatrix s = catalog_entry("A" + std::to_string(k) + ":pham", 0).basis.gram();
    const SeifertMatrix l = seifert_from_intersection(s, 0);
    const SeifertMatrix a1(0, IntMatrix::from_rows({{-1}}));
    rec.check("stabilize(A_k, 0, 1) = tensor with A1",
              stabilize(s, 0, 1) == intersection_from_seifert(tensor_seifert(l, a1)),
              [&] { return "k=" + std::to_string(k); });
  }
  for (int a = 2; a <= 9; ++a)
    rec.check("orlik_randell((a)) = brieskorn_pham((a))",
              orlik_randell({a}).seifert == brieskorn_pham({a}).seifert,
              [&] { return "a=" + std::to_string(a); });
}

void suite_stab(Recorder& rec, Rng& rng, std::size_t count) {
  for (const auto& b : sample_orbit_bases(rng, catalog_seeds(), count)) {
    const IntMatrix s = b.gram();
    const int n = b.n();
    auto where = [&] { return "n=" + std::to_string(n) + " S=" + to_string(s); };
    rec.check("stab1 o stab1 = stab2", stabilize(stabilize(s, n, 1), n + 1, 1) == stabilize(s, n, 2), where);
    rec.check("stab4 = id", stabilize(s, n, 4) == s, where);
    const IntMatrix s1 = stabilize(s, n, 1);
    const IntMatrix h0 = monodromy_from_seifert(seifert_from_intersection(s, n));
    const IntMatrix h1 = monodromy_from_seifert(seifert_from_intersection(s1, n + 1));
    rec.check("suspension negates monodromy", h1 == -h0, where);
  }
}

void suite_radicals(Recorder& rec) {
  for (const std::string name : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7",
                                 "E6", "E7", "E8"}) {
    CatalogEntry e = catalog_entry(name);
    Signature s = signature(e.basis.lattice());
    rec.check("ADE negative definite", s == Signature{0, 0, e.basis.size()}, [&] { return name; });
  }
  for (const std::string name : {"T(3,3,3)", "T(2,4,4)", "T(2,3,6)"}) {
    CatalogEntry e = catalog_entry(name);
    rec.check("parabolic radical rank 2", radical_basis(e.basis.lattice()).size() == 2, [&] { return name; });
    Signature s = signature(e.basis.lattice());
    rec.check("parabolic semi-definite", s == Signature{0, 2, e.basis.size() - 2}, [&] { return name; });
  }
  for (const std::string name : {"T(2,3,7)", "T(2,4,5)", "T(3,3,4)", "T(3,4,5)", "T(4,4,4)"}) {
    CatalogEntry e = catalog_entry(name);
    const std::size_t mu = e.basis.size();
    Signature s = signature(e.basis.lattice());
    rec.check("hyperbolic signature (1,1,mu-2)", s == Signature{1, 1, mu - 2}, [&] { return name; });
    auto rad = radical_basis(e.basis.lattice());
    Cycle d = Cycle::unit(mu, 1) - Cycle::unit(mu, 0);
    bool spans = rad.size() == 1 && (rad[0] == d || rad[0] == -d);
    rec.check("radical spanned by d2 - d1", spans, [&] { return name; });
  }
  std::vector<std::string> names = catalog_examples();
  for (const auto& t : exceptional_triples())
    names.push_back("S(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
  for (const auto& name : names)
    for (int n : {0, 1, 2, 3}) {
      CatalogEntry e = catalog_entry(name, n);
      rec.check("diagram connected", DiagramGraph(e.basis.gram(), n).connected(),
                [&] { return name + " n=" + std::to_string(n); });
    }
}

void suite_vanishing(Recorder& rec) {
  for (int k = 1; k <= 5; ++k) {
    const std::string name = "A" + std::to_string(k);
    CatalogEntry e = catalog_entry(name);
    auto roots = all_roots(e.basis.lattice());
    rec.check("A_k root count k(k+1)", roots.size() == static_cast<std::size_t>(k * (k + 1)), [&] { return name; });
    auto v = vanishing_lattice_check(e.basis.lattice(), roots, -1);
    rec.check("A_k vanishing lattice", v.ok, [&] { return name; });
    GroupClosureReport g = group_closure(e.basis.lattice(), e.basis.vectors(), 1000000);
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), k + 1);
    rec.check("A_k group order (k+1)!", g.order && *g.order == fact, [&] { return name; });
    rec.check("root orbit is all roots",
              std::all_of(g.orbit_sizes.begin(), g.orbit_sizes.end(),
                          [&](const auto& o) { return o && *o == roots.size(); }),
              [&] { return name; });
  }
  BilinearLattice a1a1(2, IntMatrix::from_rows({{-2, 0}, {0, -2}}));
  auto roots = all_roots(a1a1);
  auto v = vanishing_lattice_check(a1a1, roots, -1);
  rec.check("A1+A1 fails the unit-pairing axiom", !v.ok && v.fails(VanishingAxiom::unit_pairing),
            [] { return "A1+A1"; });
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"slh", "braid", "traces", "tensor", "stab", "radicals", "vanishing"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  Recorder rec(report);
  Rng rng(options.seed);
  if (name == "slh")
    suite_slh(rec, rng, options.random);
  else if (name == "braid")
    suite_braid(rec, rng, options.random);
  else if (name == "traces")
    suite_traces(rec);
  else if (name == "tensor")
    suite_tensor(rec);
  else if (name == "stab")
    suite_stab(rec, rng, options.random);
  else if (name == "radicals")
    suite_radicals(rec);
  else if (name == "vanishing")
    suite_vanishing(rec);
  else
    throw InputError("unknown suite '" + name + "'");
  return report;
}

}  // namespace vctk

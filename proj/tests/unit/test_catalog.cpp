#include <doctest.h>

#include "oracles.hpp"
#include "vctk/analysis.hpp"
#include "vctk/catalog.hpp"
#include "vctk/diagram.hpp"
#include "vctk/polynomial.hpp"

using namespace vctk;

namespace {

IntMatrix m(std::initializer_list<std::initializer_list<long>> rows) { return IntMatrix::from_rows(rows); }

std::size_t count_edges(const DiagramGraph& g, bool dashed) {
  std::size_t c = 0;
  for (const auto& e : g.edges()) c += e.dashed == dashed;
  return c;
}

}  // namespace

TEST_CASE("catalog names") {
  CHECK(parse_catalog_name("A3").canonical() == "A3:standard");
  CHECK(parse_catalog_name("E8:gabrielov").canonical() == "E8:gabrielov");
  CHECK(parse_catalog_name("T(2,3,7)").canonical() == "T(2,3,7)");
  for (const char* bad : {"Q7", "A0", "D3", "E9", "E7:gabrielov", "T(3,2,2)", "T(1,3,3)", "A3:weird", "T(2,3)"})
    CHECK_THROWS_AS(catalog_entry(bad), InputError);
}

TEST_CASE("catalog Gram matrices") {
  CHECK(catalog_entry("A2:pham", 0).basis.gram() == m({{2, 1}, {1, 2}}));
  CHECK(catalog_entry("A2:standard").basis.gram() == m({{-2, 1}, {1, -2}}));
  CHECK(catalog_entry("T(3,3,3)").basis.size() == 8);
  CHECK(catalog_entry("T(2,3,7)").basis.size() == 11);
  for (const auto& name : catalog_examples())
    for (int n = 0; n < 8; ++n) {
      const auto e = catalog_entry(name, n);
      CHECK(e.basis.n() == n);
      CHECK(DiagramGraph(e.basis.gram(), n).connected());
    }
  for (const auto& t : exceptional_triples()) {
    const std::string name = "S(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    CHECK(DiagramGraph(catalog_entry(name).basis.gram(), 2).connected());
  }
}

TEST_CASE("diagram payloads") {
  const DiagramGraph a2(catalog_entry("A2:standard").basis.gram(), 2);
  CHECK(a2.size() == 2);
  REQUIRE(a2.edges().size() == 1);
  CHECK_FALSE(a2.edges()[0].dashed);

  const DiagramGraph t(catalog_entry("T(2,3,7)").basis.gram(), 2);
  bool double_dashed = false;
  for (const auto& e : t.edges())
    if (abs(e.weight) == 2) double_dashed = e.dashed && e.a == 1 && e.b == 2;
  CHECK(double_dashed);

  const DiagramGraph g(catalog_entry("E8:gabrielov").basis.gram(), 2);
  CHECK(g.size() == 8);
  CHECK(count_edges(g, false) == 10);
  CHECK(count_edges(g, true) == 3);
  const std::string dot = to_dot(g, "G");
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.rfind("graph G", 0) == 0);
}

TEST_CASE("dashed sign by parity") {
  CHECK(DiagramGraph(m({{2}}), 0).dashed_sign() == 1);
  CHECK(DiagramGraph(m({{0}}), 1).dashed_sign() == -1);
  CHECK(DiagramGraph(m({{-2}}), 2).dashed_sign() == -1);
  CHECK(DiagramGraph(m({{0}}), 3).dashed_sign() == 1);
}

TEST_CASE("monotone cycles") {
  const DiagramGraph dashed(oracle::to(oracle::a_complete_dashed(4)), 2);
  CHECK(dashed.monotone_cycles().size() == 5);  // 4 triangles and the 4-cycle 1-2-3-4
  CHECK(dashed.negative_edge_count() == 6);
  CHECK(dashed.monotone_cycle_feedback() == 2);
  const DiagramGraph path(oracle::to(oracle::a_path(5)), 2);
  CHECK(path.monotone_cycles().empty());
  CHECK(path.monotone_cycle_feedback() == 0);
  CHECK(path.negative_edge_count() == 0);
}

TEST_CASE("stabilization") {
  const IntMatrix pham4 = catalog_entry("A4:pham", 0).basis.gram();
  const IntMatrix s2 = stabilize(pham4, 0, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(s2(i, j) == (i == j ? -2 : -1));
  CHECK(stabilize(catalog_entry("A2:pham", 0).basis.gram(), 0, 1)(0, 1) == -1);
  for (const auto& name : catalog_examples())
    for (int n : {0, 1, 2, 3}) {
      const IntMatrix s = catalog_entry(name, n).basis.gram();
      CHECK(stabilize(stabilize(s, n, 1), n + 1, 1) == stabilize(s, n, 2));
      CHECK(stabilize(s, n, 4) == s);
      CHECK(stabilize(s, n, 0) == s);
    }
}

TEST_CASE("tensor products of Seifert matrices") {
  const SeifertMatrix a1(0, m({{-1}}));
  const SeifertMatrix t = tensor_seifert(a1, a1);
  CHECK(t.n() == 1);
  CHECK(t.entries() == m({{-1}}));
  CHECK(monodromy_from_seifert(t) == m({{1}}));

  const SeifertMatrix a2 = seifert_from_intersection(catalog_entry("A2:pham", 0).basis.gram(), 0);
  const SeifertMatrix u = tensor_seifert(a2, a1);
  CHECK(u.entries() == m({{-1, 0}, {-1, -1}}));
  CHECK(intersection_from_seifert(u) == m({{0, -1}, {1, 0}}));
  CHECK(intersection_from_seifert(u) == stabilize(catalog_entry("A2:pham", 0).basis.gram(), 0, 1));

  const SeifertMatrix d4 = tensor_seifert(a2, a2);
  CHECK(d4.size() == 4);
  const IntMatrix h = monodromy_from_seifert(d4);
  // (t - 1)^2 (t^2 + t + 1) = t^4 - t^3 - t + 1
  CHECK(oracle::faddeev_leverrier(h) == std::vector<Integer>{1, -1, 0, -1, 1});
}

TEST_CASE("Brieskorn-Pham examples") {
  const auto a1 = brieskorn_pham({2});
  CHECK(a1.seifert.entries() == m({{-1}}));
  CHECK(a1.monodromy == m({{-1}}));
  const auto a2s = brieskorn_pham({3, 2});
  CHECK(a2s.monodromy.rows() == 2);
  CHECK(to_string(char_poly(a2s.monodromy)) == "t^2 - t + 1");
  const auto a1s = brieskorn_pham({2, 2, 2});
  CHECK(a1s.monodromy == m({{-1}}));
  CHECK_THROWS_AS(brieskorn_pham({1, 3}), InputError);
  CHECK_THROWS_AS(brieskorn_pham({}), InputError);
}

TEST_CASE("property: Sebastiani-Thom monodromy is the tensor product") {
  std::vector<std::vector<int>> lists;
  for (int a : {2, 3, 4}) {
    lists.push_back({a});
    for (int b : {2, 3, 4}) lists.push_back({a, b});
  }
  for (const auto& a : lists)
    for (const auto& b : lists) {
      if (a.size() + b.size() > 3) continue;
      std::vector<int> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      CHECK(brieskorn_pham(ab).monodromy == kronecker(brieskorn_pham(a).monodromy, brieskorn_pham(b).monodromy));
    }
}

TEST_CASE("Orlik-Randell construction") {
  const auto r2 = orlik_randell({2});
  CHECK(r2.n == 0);
  CHECK(r2.coefficients == std::vector<Integer>{1, 1});
  CHECK(r2.seifert.entries() == m({{-1}}));
  for (int a = 2; a <= 9; ++a) {
    const auto r = orlik_randell({a});
    for (std::size_t i = 0; i < r.seifert.size(); ++i)
      for (std::size_t j = 0; j < r.seifert.size(); ++j) CHECK(r.seifert.entries()(i, j) == (i >= j ? -1 : 0));
    CHECK(r.seifert == brieskorn_pham({a}).seifert);
  }
  const auto r22 = orlik_randell({2, 2});
  CHECK(r22.n == 1);
  CHECK(r22.coefficients == std::vector<Integer>{-1, 1, -1, 1});
  CHECK(r22.seifert.entries() == m({{-1, 0, 0}, {1, -1, 0}, {-1, 1, -1}}));
}

TEST_CASE("Lyashko-Looijenga degrees and stored constants") {
  // k! N^k / |W| with (k, N, |W|) typed in: A2 (2, 3, 6), A3 (3, 4, 24), E8 (8, 30, 696729600)
  auto formula = [](unsigned long k, unsigned long h, unsigned long w) -> Integer {
    return oracle::factorial(k) * int_pow(Integer(h), k) / Integer(w);
  };
  CHECK(ll_degree("A2") == formula(2, 3, 6));
  CHECK(ll_degree("A3") == formula(3, 4, 24));
  CHECK(ll_degree("E8") == formula(8, 30, 696729600ul));
  CHECK(ll_degree("A2") == 3);
  CHECK(ll_degree("A3") == 16);
  CHECK(ll_degree("E8") == 37968750);
  CHECK_THROWS_AS(ll_degree("T(2,3,7)"), InputError);
  CHECK(stored_constant("D_count:E8").value == 324000000);
  CHECK(stored_constant("weyl_order:A3").value == 24);
  CHECK(stored_constant("coxeter_number:E8").value == 30);
  CHECK_THROWS_AS(stored_constant("nothing"), InputError);
}

TEST_CASE("Coxeter numbers are orders of the Coxeter element") {
  for (int k = 1; k <= 7; ++k)
    CHECK(matrix_order(coxeter_element(catalog_entry("A" + std::to_string(k)).basis), 100) ==
          static_cast<unsigned long>(k + 1));
  CHECK(matrix_order(coxeter_element(catalog_entry("E8").basis), 100) == 30ul);
  CHECK(matrix_order(coxeter_element(catalog_entry("E6").basis), 100) == 12ul);
  CHECK(matrix_order(coxeter_element(catalog_entry("D4").basis), 100) == 6ul);
  CHECK(*catalog_entry("E8").coxeter_number == 30);
}

TEST_CASE("radical ranks of T(p,q,r)") {
  for (int p = 2; p <= 4; ++p)
    for (int q = p; q <= 6; ++q)
      for (int r = q; r <= 7; ++r) {
        const int num = q * r + p * r + p * q, den = p * q * r;  // 1/p + 1/q + 1/r = num / den
        if (num > den) continue;
        const auto l = catalog_entry("T(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")")
                           .basis.lattice();
        const auto rad = radical_basis(l);
        if (num == den) {
          CHECK(rad.size() == 2);
        } else {
          REQUIRE(rad.size() == 1);
          const Cycle d = Cycle::unit(l.rank(), 1) - Cycle::unit(l.rank(), 0);
          CHECK((rad[0] == d || rad[0] == -d));
          CHECK(signature(l) == Signature{1, 1, l.rank() - 2});
        }
      }
}

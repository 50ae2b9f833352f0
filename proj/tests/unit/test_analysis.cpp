#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "vctk/analysis.hpp"
#include "vctk/catalog.hpp"
#include "vctk/polynomial.hpp"
#include "vctk/sampling.hpp"

using namespace vctk;

namespace {

IntMatrix m(std::initializer_list<std::initializer_list<long>> rows) { return IntMatrix::from_rows(rows); }

IntPolynomial poly(std::vector<Integer> low_first) { return IntPolynomial(std::move(low_first)); }

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coefficient(i) * b.coefficient(j);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("characteristic polynomial examples") {
  CHECK(to_string(char_poly(m({{-1, 1}, {-1, 0}}))) == "t^2 + t + 1");
  CHECK(to_string(char_poly(m({{1, -1}, {1, 0}}))) == "t^2 - t + 1");
  CHECK(char_poly(IntMatrix::identity(3)) == poly({-1, 3, -3, 1}));
}

TEST_CASE("property: char_poly matches Faddeev-LeVerrier and is a similarity invariant") {
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 7;
    IntMatrix a(n, n);
    for (auto& x : a.data()) x = static_cast<long>(draw(rng, 11)) - 5;
    const IntPolynomial p = char_poly(a);
    CHECK(p.coefficients() == oracle::faddeev_leverrier(a));
    const IntMatrix u = random_unimodular(rng, n);
    CHECK(char_poly(u * a * unimodular_inverse(u)) == p);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  for (unsigned n = 1; n <= 36; ++n) {
    IntPolynomial prod = poly({1});
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod = mul(prod, cyclotomic(d));
    std::vector<Integer> tn(n + 1);
    tn[0] = -1;
    tn[n] = 1;
    CHECK(prod == poly(tn));
    CHECK(static_cast<unsigned long>(cyclotomic(n).degree()) == euler_phi(n));
  }
}

TEST_CASE("quasi-unipotence") {
  const auto f3 = is_quasi_unipotent(poly({1, 1, 1}));
  CHECK(f3.quasi_unipotent);
  CHECK(f3.factors == std::vector<unsigned>{3});
  CHECK_FALSE(is_quasi_unipotent(poly({-2, 1})).quasi_unipotent);
  const auto d4 = is_quasi_unipotent(poly({1, -1, 0, -1, 1}));
  CHECK(d4.quasi_unipotent);
  CHECK(d4.factors == std::vector<unsigned>{1, 1, 3});
  CHECK_FALSE(is_quasi_unipotent(poly({1, -3, 1})).quasi_unipotent);
}

TEST_CASE("trace checks") {
  const auto a2 = trace_checks(coxeter_element(catalog_entry("A2").basis), 2, 1);
  CHECK(a2.trace == -1);
  CHECK(a2.expected_trace == -1);
  CHECK(a2.alternative_trace == 1);
  CHECK(a2.trace_squared == -1);
  CHECK(a2.pass());
  const auto a1 = trace_checks(coxeter_element(catalog_entry("A1").basis), 2, 0);
  CHECK(a1.trace == -1);
  CHECK(a1.trace_squared == 1);
  CHECK(a1.pass());
  const auto id = trace_checks(IntMatrix::identity(1), 1);
  CHECK(id.trace == 1);
  CHECK(id.pass());
  CHECK_FALSE(id.expected_trace_squared.has_value());
  CHECK_FALSE(trace_checks(IntMatrix::identity(2), 2).pass());
}

TEST_CASE("roots") {
  const auto a2 = catalog_entry("A2").basis.lattice();
  const auto bound = root_coordinate_bound(a2, -1);
  REQUIRE(bound.has_value());
  const auto roots = root_candidates(a2, -1, 2);
  CHECK(roots == std::vector<Cycle>{Cycle{-1, -1}, Cycle{-1, 0}, Cycle{0, -1}, Cycle{0, 1}, Cycle{1, 0}, Cycle{1, 1}});
  CHECK(root_candidates(catalog_entry("A3").basis.lattice(), -1, 2).size() == 12);
  CHECK_FALSE(root_coordinate_bound(catalog_entry("T(2,3,7)").basis.lattice(), -1).has_value());
  const auto t = catalog_entry("T(2,3,7)").basis.lattice();
  for (const auto& v : root_candidates(t, -1, 1)) {
    CHECK(primitive_pairing(t, v));
    CHECK_FALSE(is_zero(t.gram() * v.coords()));
  }
  CHECK(all_roots(catalog_entry("A1").basis.lattice()).size() == 2);
  CHECK(all_roots(catalog_entry("E8").basis.lattice()).size() == 240);
  CHECK(all_roots(catalog_entry("E7").basis.lattice()).size() == 126);
  CHECK_THROWS_AS(all_roots(t), InvariantError);
}

TEST_CASE("property: all_roots matches a box search") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"}) {
    const auto l = catalog_entry(name).basis.lattice();
    const long long r = std::string(name) == "E6" ? 3 : 2;
    std::vector<oracle::Row> expected = oracle::norm_vectors(oracle::from(l.gram()), -2, r);
    std::vector<oracle::Row> got;
    for (const auto& v : all_roots(l)) got.push_back(oracle::row(v.coords()));
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("vanishing-lattice axioms") {
  const auto a2 = catalog_entry("A2").basis.lattice();
  const auto r = vanishing_lattice_check(a2, all_roots(a2), -1);
  CHECK(r.ok);
  CHECK(r.orbit_size == 6);
  const BilinearLattice a1(2, m({{-2}}));
  CHECK(vanishing_lattice_check(a1, {Cycle{1}, Cycle{-1}}, -1).ok);
  const BilinearLattice a1a1(2, m({{-2, 0}, {0, -2}}));
  const auto bad = vanishing_lattice_check(a1a1, all_roots(a1a1), -1);
  CHECK_FALSE(bad.ok);
  CHECK(bad.fails(VanishingAxiom::unit_pairing));
  CHECK_FALSE(bad.fails(VanishingAxiom::generates));
  // a set not closed under its reflections leaves its own orbit
  CHECK(vanishing_lattice_check(a2, {Cycle{1, 0}, Cycle{0, 1}}, -1).fails(VanishingAxiom::single_orbit));
  CHECK_THROWS_AS(vanishing_lattice_check(a2, {Cycle{1, 0}, Cycle{2, 0}}, -1), InvariantError);
}

TEST_CASE("group closures of A_k and D4") {
  for (int k = 1; k <= 5; ++k) {
    const auto b = catalog_entry("A" + std::to_string(k)).basis;
    const auto g = group_closure(b.lattice(), b.vectors(), Integer(100000));
    REQUIRE(g.order.has_value());
    CHECK(*g.order == oracle::factorial(k + 1));
    for (const auto& o : g.orbit_sizes) {
      REQUIRE(o.has_value());
      CHECK(*o == static_cast<std::size_t>(k * (k + 1)));
    }
    auto reversed = b.vectors();
    std::reverse(reversed.begin(), reversed.end());
    CHECK(group_closure(b.lattice(), reversed, Integer(100000)).order == g.order);
    const auto orbit = reflection_orbit(b.lattice(), b.vectors(), b[0], 1000);
    REQUIRE(orbit.has_value());
    CHECK(*orbit == all_roots(b.lattice()));
  }
  const auto d4 = catalog_entry("D4").basis;
  const auto g = group_closure(d4.lattice(), d4.vectors(), Integer(100000));
  CHECK(g.order == Integer(192));  // 2^{k-1} k!
  for (const auto& o : g.orbit_sizes) {
    REQUIRE(o.has_value());
    CHECK(*o == 24);
    CHECK(192 % *o == 0);
  }
  const auto capped = group_closure(d4.lattice(), d4.vectors(), Integer(100));
  CHECK(capped.cap_exceeded);
  CHECK_FALSE(capped.order.has_value());
}

TEST_CASE("matrix order") {
  CHECK(matrix_order(m({{-1, 1}, {-1, 0}}), 10) == 3ul);
  CHECK(matrix_order(IntMatrix::identity(3), 10) == 1ul);
  CHECK_FALSE(matrix_order(m({{1, 1}, {0, 1}}), 50).has_value());
}

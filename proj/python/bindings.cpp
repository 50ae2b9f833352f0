#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vctk/analysis.hpp"
#include "vctk/catalog.hpp"
#include "vctk/explorer.hpp"
#include "vctk/json_io.hpp"
#include "vctk/matrixrel.hpp"
#include "vctk/polynomial.hpp"
#include "vctk/service.hpp"
#include "vctk/suites.hpp"

namespace py = pybind11;
using namespace vctk;

namespace {

// Python ints of any size cross the boundary as decimal strings.
py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw InputError("expected an integer");
  return Integer(py::str(h).cast<std::string>());
}

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(to_py(m(i, j)));
    rows.append(r);
  }
  return rows;
}

IntMatrix matrix_from_py(const py::handle& h) {
  const auto rows = h.cast<py::sequence>();
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].cast<py::sequence>().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const auto row = rows[i].cast<py::sequence>();
    if (row.size() != c) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

DistinguishedBasis basis_from_py(const py::handle& gram, int n, const py::object& vectors) {
  BilinearLattice l(n, matrix_from_py(gram));
  if (vectors.is_none()) return DistinguishedBasis::reference(std::move(l));
  const IntMatrix rows = matrix_from_py(vectors);
  std::vector<Cycle> vs;
  for (std::size_t i = 0; i < rows.rows(); ++i) vs.emplace_back(rows.row(i));
  return DistinguishedBasis(std::move(l), std::move(vs));
}

py::list vectors_to_py(const DistinguishedBasis& b) {
  py::list out;
  for (const auto& v : b.vectors()) out.append(to_py(v.coords()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_vctk, m) {
  m.doc() = "Exact computations with vanishing-cycle lattices";
  py::register_exception<Error>(m, "VctkError", PyExc_ValueError);

  m.def("catalog_names", &catalog_examples);
  m.def("catalog_gram", [](const std::string& name, int n) { return to_py(catalog_entry(name, n).basis.gram()); },
        py::arg("name"), py::arg("n") = 2);
  m.def("catalog_entry_json", [](const std::string& name, int n) { return canonical(to_json(catalog_entry(name, n))); },
        py::arg("name"), py::arg("n") = 2);

  m.def(
      "apply_word",
      [](const py::object& gram, int n, const std::string& word, const py::object& vectors) {
        const auto r = apply_braid_word(basis_from_py(gram, n, vectors), parse_braid_word(word));
        py::dict d;
        d["gram"] = to_py(r.gram());
        d["vectors"] = vectors_to_py(r);
        return d;
      },
      py::arg("gram"), py::arg("n"), py::arg("word"), py::arg("vectors") = py::none());
  m.def(
      "coxeter_element",
      [](const py::object& gram, int n, const py::object& vectors) {
        return to_py(coxeter_element(basis_from_py(gram, n, vectors)));
      },
      py::arg("gram"), py::arg("n"), py::arg("vectors") = py::none());

  m.def("seifert_from_intersection",
        [](const py::object& s, int n) { return to_py(seifert_from_intersection(matrix_from_py(s), n).entries()); });
  m.def("intersection_from_seifert",
        [](const py::object& l, int n) { return to_py(intersection_from_seifert(SeifertMatrix(n, matrix_from_py(l)))); });
  m.def("monodromy_from_seifert",
        [](const py::object& l, int n) { return to_py(monodromy_from_seifert(SeifertMatrix(n, matrix_from_py(l)))); });
  m.def("seifert_from_monodromy",
        [](const py::object& h, int n) { return to_py(seifert_from_monodromy(matrix_from_py(h), n).entries()); });
  m.def("bou_coxeter", [](const py::object& s, int n) { return to_py(bou_coxeter(matrix_from_py(s), n)); });

  m.def("char_poly", [](const py::object& h) { return to_py(char_poly(matrix_from_py(h)).coefficients()); },
        "Coefficients of det(tI - H), lowest degree first.");
  m.def("cyclotomic_factors", [](const std::vector<py::int_>& coeffs) {
    std::vector<Integer> c;
    for (const auto& x : coeffs) c.push_back(from_py(x));
    const auto f = is_quasi_unipotent(IntPolynomial(std::move(c)));
    return py::make_tuple(f.quasi_unipotent, f.factors, f.sign);
  });
  m.def("signature", [](const py::object& gram, int n) {
    const auto s = signature(BilinearLattice(n, matrix_from_py(gram)));
    return py::make_tuple(s.positive, s.zero, s.negative);
  });
  m.def("group_order", [](const std::string& name, int n, unsigned long cap) -> py::object {
    const auto b = catalog_entry(name, n).basis;
    const auto g = group_closure(b.lattice(), b.vectors(), Integer(cap));
    if (!g.order) return py::none();
    return to_py(*g.order);
  }, py::arg("name"), py::arg("n") = 2, py::arg("cap") = 100000ul);
  m.def("orbit_json", [](const std::string& name, int n, std::size_t budget) {
    return canonical(to_json(braid_orbit(catalog_entry(name, n).basis, budget)));
  }, py::arg("name"), py::arg("n") = 2, py::arg("budget") = 100000);
  m.def("ll_degree", [](const std::string& type) { return to_py(ll_degree(type)); });
  m.def("stored_constant", [](const std::string& name) {
    const auto c = stored_constant(name);
    return py::make_tuple(to_py(c.value), c.provenance);
  });
  m.def("suite_names", &suite_names);
  m.def("run_suite_json", [](const std::string& name, std::uint64_t seed, std::size_t random) {
    SuiteOptions o;
    o.seed = seed;
    o.random = random;
    return canonical(to_json(run_suite(name, o)));
  }, py::arg("name"), py::arg("seed") = 42, py::arg("random") = 100);

  py::class_<Service>(m, "Service")
      .def(py::init([](std::optional<std::string> dir) { return std::make_unique<Service>(std::move(dir)); }),
           py::arg("snapshot_dir") = py::none())
      .def("handle", [](Service& s, const std::string& method, const std::string& path, const std::string& body) {
        py::gil_scoped_release release;
        const Response r = s.handle(method, path, body);
        return std::make_pair(r.status, r.body);
      }, py::arg("method"), py::arg("path"), py::arg("body") = "");
}

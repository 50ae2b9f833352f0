#pragma once

// Canonical JSON: object keys sorted, no insignificant whitespace, integers in
// the signed 64-bit range as JSON numbers and larger ones as decimal strings.

#include <string>

#include <json.hpp>

#include "vctk/analysis.hpp"
#include "vctk/catalog.hpp"
#include "vctk/diagram.hpp"
#include "vctk/explorer.hpp"
#include "vctk/suites.hpp"

namespace vctk {

using Json = nlohmann::json;

std::string canonical(const Json& j);

Json to_json(const Integer& v);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const IntPolynomial& p);
Json to_json(const Signature& s);

/// Accepts a JSON integer or a decimal string; throws InputError otherwise.
Integer integer_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
/// Rectangular array of integer rows; throws InputError when ragged.
IntMatrix matrix_from_json(const Json& j);

/// {"n": int, "gram": [[...]]}
Json lattice_to_json(const BilinearLattice& l);
BilinearLattice lattice_from_json(const Json& j);

/// {"lattice": {...}, "vectors": [[...]]}
Json basis_to_json(const DistinguishedBasis& b);
DistinguishedBasis basis_from_json(const Json& j);

enum class MatrixKind { intersection, seifert, monodromy };
std::string to_string(MatrixKind k);
MatrixKind matrix_kind_from_string(const std::string& s);

struct MatrixDocument {
  int n = 0;
  MatrixKind kind = MatrixKind::intersection;
  IntMatrix entries;
};

/// {"n": int, "kind": "...", "entries": [[...]]}
Json matrix_document_to_json(const MatrixDocument& d);
MatrixDocument matrix_document_from_json(const Json& j);

/// nodes, edges, charpoly and (for even n) signature of the diagram of a basis.
Json diagram_to_json(const DistinguishedBasis& b);
/// S, L and H of a basis.
Json matrices_to_json(const DistinguishedBasis& b);

Json to_json(const CatalogEntry& e);
Json to_json(const TraceReport& t);
Json to_json(const CyclotomicFactorization& f);
Json to_json(const GroupClosureReport& g);
Json to_json(const DiagramStats& s);
Json to_json(const OrbitReport& r, bool include_bases = false);
Json to_json(const QuasiCoxeterReport& r);
Json to_json(const SuiteReport& r);

/// Reads a file into a JSON value; throws InputError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace vctk

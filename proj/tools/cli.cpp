#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "vctk/analysis.hpp"
#include "vctk/catalog.hpp"
#include "vctk/diagram.hpp"
#include "vctk/explorer.hpp"
#include "vctk/json_io.hpp"
#include "vctk/matrixrel.hpp"
#include "vctk/polynomial.hpp"
#include "vctk/service.hpp"
#include "vctk/suites.hpp"

namespace vctk {
namespace {

constexpr std::size_t default_budget = 100000;

// Where a basis comes from: a catalog name or a basis JSON file.
struct BasisSource {
  std::string catalog;
  std::string file;
  int n = 2;

  void add_to(CLI::App* cmd) {
    auto* c = cmd->add_option("--catalog", catalog, "catalog name, e.g. E8:gabrielov");
    auto* f = cmd->add_option("--basis", file, "basis JSON file {\"lattice\":{\"n\",\"gram\"},\"vectors\"}");
    c->excludes(f);
    cmd->add_option("--n", n, "fiber dimension for catalog entries")->check(CLI::NonNegativeNumber);
  }

  bool given() const { return !catalog.empty() || !file.empty(); }

  struct Loaded {
    DistinguishedBasis basis;
    std::optional<int> corank;
  };

  Loaded load() const {
    if (!catalog.empty()) {
      CatalogEntry e = catalog_entry(catalog, n);
      return {e.basis, e.corank};
    }
    return {basis_from_json(read_json_file(file)), std::nullopt};
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const Json& j) { out << canonical(j) << '\n'; }

std::size_t budget_from_env(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("VCTK_BUDGET")) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || env[pos] != '\0') throw UsageError("VCTK_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return default_budget;
}

IntMatrix convert_matrix(const MatrixDocument& doc, MatrixKind to) {
  const int n = doc.n;
  switch (to) {
    case MatrixKind::seifert:
      switch (doc.kind) {
        case MatrixKind::seifert: return SeifertMatrix(n, doc.entries).entries();
        case MatrixKind::intersection: return seifert_from_intersection(doc.entries, n).entries();
        case MatrixKind::monodromy: return seifert_from_monodromy(doc.entries, n).entries();
      }
      break;
    case MatrixKind::intersection:
      switch (doc.kind) {
        case MatrixKind::seifert: return intersection_from_seifert(SeifertMatrix(n, doc.entries));
        case MatrixKind::intersection: validate_intersection_matrix(doc.entries, n); return doc.entries;
        case MatrixKind::monodromy: return intersection_from_seifert(seifert_from_monodromy(doc.entries, n));
      }
      break;
    case MatrixKind::monodromy:
      switch (doc.kind) {
        case MatrixKind::seifert: return monodromy_from_seifert(SeifertMatrix(n, doc.entries));
        case MatrixKind::intersection: return monodromy_from_seifert(seifert_from_intersection(doc.entries, n));
        case MatrixKind::monodromy: seifert_from_monodromy(doc.entries, n); return doc.entries;
      }
      break;
  }
  throw InputError("unsupported conversion");
}

std::string zero_padded(std::size_t i, std::size_t width) {
  std::ostringstream s;
  s << std::setw(static_cast<int>(width)) << std::setfill('0') << i;
  return s.str();
}

}  // namespace

int cli_run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"vctk: exact computations with vanishing-cycle lattices"};
  app.require_subcommand(1);

  // catalog
  auto* cat = app.add_subcommand("catalog", "print a catalog entry");
  std::string cat_name;
  int cat_n = 2;
  std::string cat_format = "json";
  bool cat_list = false;
  cat->add_option("name", cat_name, "e.g. A3, A2:pham, E8:gabrielov, T(2,3,7)");
  cat->add_option("--n", cat_n, "fiber dimension")->check(CLI::NonNegativeNumber);
  cat->add_option("--format", cat_format)->check(CLI::IsMember({"json", "dot"}));
  cat->add_flag("--list", cat_list, "list the built-in example names");

  // moves
  auto* mv = app.add_subcommand("moves", "apply a braid word and print the intersection matrix");
  BasisSource mv_src;
  mv_src.add_to(mv);
  std::string mv_word;
  bool mv_full = false;
  mv->add_option("--word", mv_word, "tokens a<j> b<j> k<i> wa<i>:<j> wb<i>:<j>")->required();
  mv->add_flag("--full", mv_full, "print basis, diagram and matrices instead of the matrix");

  // convert
  auto* cv = app.add_subcommand("convert", "convert among intersection, Seifert and monodromy matrices");
  std::string cv_to, cv_from, cv_in;
  std::optional<int> cv_n;
  cv->add_option("--to", cv_to)->required()->check(CLI::IsMember({"seifert", "intersection", "monodromy"}));
  cv->add_option("--from", cv_from, "kind of a bare matrix input (default intersection)")
      ->check(CLI::IsMember({"seifert", "intersection", "monodromy"}));
  cv->add_option("--n", cv_n, "fiber dimension")->check(CLI::NonNegativeNumber);
  cv->add_option("--in", cv_in, "matrix JSON: [[...]] or {\"n\",\"kind\",\"entries\"}")->required();

  // verify
  auto* vf = app.add_subcommand("verify", "run a deterministic verification suite");
  std::string vf_suite;
  SuiteOptions vf_opts;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  vf->add_option("suite", vf_suite)->required()->check(CLI::IsMember(suites));
  vf->add_option("--random", vf_opts.random, "randomized cases per check");
  vf->add_option("--seed", vf_opts.seed, "random seed");

  // orbit
  auto* ob = app.add_subcommand("orbit", "breadth-first braid orbit of a distinguished basis");
  BasisSource ob_src;
  ob_src.add_to(ob);
  std::optional<std::size_t> ob_budget;
  std::string ob_emit;
  bool ob_bases = false, ob_no_stats = false;
  ob->add_option("--budget", ob_budget, "maximum number of bases (default $VCTK_BUDGET or 100000)");
  ob->add_option("--emit-diagrams", ob_emit, "write one DOT file per distinct diagram into this directory");
  ob->add_flag("--bases", ob_bases, "include all bases and diagrams in the output");
  ob->add_flag("--no-stats", ob_no_stats, "skip the per-diagram statistics");

  // analyze
  auto* an = app.add_subcommand("analyze", "characteristic polynomial, traces, signature and group closure");
  BasisSource an_src;
  an_src.add_to(an);
  std::size_t an_cap = 100000;
  bool an_no_group = false;
  an->add_option("--cap", an_cap, "maximum group order explored");
  an->add_flag("--no-group", an_no_group, "skip the group closure");

  // ll-degree, constant
  auto* ll = app.add_subcommand("ll-degree", "Lyashko-Looijenga degree k! N^k / |W|");
  std::string ll_type;
  ll->add_option("type", ll_type, "A<k>, D<k> or E6/E7/E8")->required();
  auto* cs = app.add_subcommand("constant", "print a stored constant with its provenance");
  std::string cs_name;
  cs->add_option("name", cs_name, "e.g. D_count:E8, weyl_order:E6")->required();

  // serve
  auto* sv = app.add_subcommand("serve", "run the HTTP session service");
  int sv_port = 8080;
  std::string sv_host = "127.0.0.1", sv_snapshots;
  sv->add_option("--port", sv_port)->check(CLI::Range(1, 65535));
  sv->add_option("--host", sv_host);
  sv->add_option("--snapshot-dir", sv_snapshots, "persist sessions as one JSON file each");

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (cat->parsed()) {
      if (cat_list) {
        emit(out, Json(catalog_examples()));
        return exit_ok;
      }
      if (cat_name.empty()) throw UsageError("catalog: a name or --list is required");
      CatalogEntry e = catalog_entry(cat_name, cat_n);
      if (cat_format == "dot") {
        out << to_dot(DiagramGraph(e.basis.gram(), e.basis.n()), e.name);
        return exit_ok;
      }
      Json j = to_json(e);
      j["diagram"] = diagram_to_json(e.basis);
      j["matrices"] = matrices_to_json(e.basis);
      emit(out, j);
      return exit_ok;
    }

    if (mv->parsed()) {
      if (!mv_src.given()) throw UsageError("moves: --catalog or --basis is required");
      const DistinguishedBasis b = mv_src.load().basis;
      const BraidWord w = parse_braid_word(mv_word);
      const DistinguishedBasis r = apply_braid_word(b, w);
      if (!mv_full) {
        emit(out, to_json(r.gram()));
        return exit_ok;
      }
      emit(out, Json{{"word", to_string(w)},
                     {"basis", basis_to_json(r)},
                     {"diagram", diagram_to_json(r)},
                     {"matrices", matrices_to_json(r)}});
      return exit_ok;
    }

    if (cv->parsed()) {
      const Json in = read_json_file(cv_in);
      MatrixDocument doc;
      if (in.is_array()) {
        if (!cv_n) throw UsageError("convert: --n is required for a bare matrix");
        doc.entries = matrix_from_json(in);
        doc.kind = cv_from.empty() ? MatrixKind::intersection : matrix_kind_from_string(cv_from);
        doc.n = *cv_n;
      } else {
        Json with_n = in;
        if (cv_n) with_n["n"] = *cv_n;
        if (!with_n.contains("n")) throw UsageError("convert: --n is required");
        if (!cv_from.empty()) with_n["kind"] = cv_from;
        doc = matrix_document_from_json(with_n);
      }
      emit(out, to_json(convert_matrix(doc, matrix_kind_from_string(cv_to))));
      return exit_ok;
    }

    if (vf->parsed()) {
      if (vf_suite != "all") {
        SuiteReport r = run_suite(vf_suite, vf_opts);
        emit(out, to_json(r));
        return r.passed() ? exit_ok : exit_check_failed;
      }
      Json reports = Json::array();
      bool ok = true;
      for (const auto& s : suite_names()) {
        SuiteReport r = run_suite(s, vf_opts);
        ok = ok && r.passed();
        reports.push_back(to_json(r));
      }
      emit(out, Json{{"pass", ok}, {"seed", vf_opts.seed}, {"suites", reports}});
      return ok ? exit_ok : exit_check_failed;
    }

    if (ob->parsed()) {
      if (!ob_src.given()) throw UsageError("orbit: --catalog or --basis is required");
      const std::size_t budget = budget_from_env(ob_budget);
      if (budget == 0) throw UsageError("orbit: budget must be positive");
      OrbitReport r = braid_orbit(ob_src.load().basis, budget);
      if (!ob_no_stats) r.stats = diagram_stats(r);
      if (!ob_emit.empty()) {
        std::filesystem::create_directories(ob_emit);
        const auto ds = r.diagrams();
        const std::size_t width = std::to_string(ds.size()).size();
        for (std::size_t i = 0; i < ds.size(); ++i) {
          const std::string stem = "diagram-" + zero_padded(i + 1, width);
          std::ofstream f(std::filesystem::path(ob_emit) / (stem + ".dot"));
          if (!f) throw InputError("cannot write into " + ob_emit);
          f << to_dot(DiagramGraph(ds[i], r.seed.n()), "D" + std::to_string(i + 1));
        }
      }
      emit(out, to_json(r, ob_bases));
      return r.complete ? exit_ok : exit_cap_exceeded;
    }

    if (an->parsed()) {
      if (!an_src.given()) throw UsageError("analyze: --catalog or --basis is required");
      const auto loaded = an_src.load();
      const DistinguishedBasis& b = loaded.basis;
      const IntMatrix h = coxeter_element(b);
      const IntPolynomial p = char_poly(h);
      const CyclotomicFactorization f = is_quasi_unipotent(p);
      const TraceReport t = trace_checks(h, b.n(), loaded.corank);
      Json j{{"n", b.n()},
             {"mu", b.size()},
             {"charpoly", to_json(p)},
             {"cyclotomic", to_json(f)},
             {"traces", to_json(t)},
             {"radical_rank", radical_basis(b.lattice()).size()},
             {"corank", loaded.corank ? Json(*loaded.corank) : Json()}};
      j["signature"] = b.lattice().parity() == Parity::symmetric ? to_json(signature(b.lattice())) : Json();
      bool cap_exceeded = false;
      if (!an_no_group) {
        GroupClosureReport g;
        try {
          g = group_closure(b.lattice(), b.vectors(), Integer(static_cast<unsigned long>(an_cap)));
        } catch (const ArithmeticError&) {
          g.cap_exceeded = true;
          g.generator_count = b.size();
        }
        cap_exceeded = g.cap_exceeded;
        j["group"] = to_json(g);
      } else {
        j["group"] = Json();
      }
      const bool pass = f.quasi_unipotent && t.pass();
      j["pass"] = pass;
      emit(out, j);
      if (!pass) return exit_check_failed;
      return cap_exceeded ? exit_cap_exceeded : exit_ok;
    }

    if (ll->parsed()) {
      emit(out, Json{{"type", ll_type}, {"degree", to_json(ll_degree(ll_type))}});
      return exit_ok;
    }

    if (cs->parsed()) {
      const StoredConstant c = stored_constant(cs_name);
      emit(out, Json{{"name", cs_name}, {"value", to_json(c.value)}, {"provenance", c.provenance}});
      return exit_ok;
    }

    if (sv->parsed()) {
      std::optional<std::string> dir;
      if (!sv_snapshots.empty()) dir = sv_snapshots;
      Service service(dir);
      err << "vctk: serving on http://" << sv_host << ':' << sv_port << '\n';
      err.flush();
      if (!serve(service, sv_host, sv_port)) {
        err << "vctk: cannot listen on " << sv_host << ':' << sv_port << '\n';
        return exit_bad_input;
      }
      return exit_ok;
    }
  } catch (const UsageError& e) {
    err << "vctk: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "vctk: " << e.what() << '\n';
    return exit_bad_input;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "vctk: " << e.what() << '\n';
    return exit_bad_input;
  }
  return exit_usage;
}

}  // namespace vctk

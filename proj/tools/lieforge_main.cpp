// Command line front end: validate and analyze definition files, run the
// verification suites, list the bundled corpus. Exit codes: 0 success,
// 1 violation or semantic error, 2 usage or parse error.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lieforge/checks.hpp"
#include "lieforge/corpus.hpp"
#include "lieforge/errors.hpp"
#include "lieforge/finring.hpp"
#include "lieforge/parser.hpp"
#include "lieforge/radicals.hpp"
#include "lieforge/report.hpp"
#include "lieforge/structure.hpp"

namespace {

using namespace lieforge;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string dims_of(const std::vector<Subspace>& terms) {
  std::string out;
  for (const Subspace& s : terms) {
    if (!out.empty()) out += " ";
    out += std::to_string(s.dim());
  }
  return out;
}

std::string sizes_of(const std::vector<Subgroup>& terms) {
  std::string out;
  for (const Subgroup& s : terms) {
    if (!out.empty()) out += " ";
    out += std::to_string(s.size());
  }
  return out;
}

CheckResult info(const std::string& name, const std::string& note) {
  CheckResult r;
  r.name = name;
  r.instances = 1;
  r.note = note;
  return r;
}

std::vector<CheckResult> analyze_series(const DefinitionFile& df) {
  std::vector<CheckResult> out;
  if (df.is_algebra()) {
    const LieAlgebra& l = *df.algebra;
    out.push_back(info("lower-central-series",
                       "dims " + dims_of(lower_central_series(l).terms)));
    out.push_back(info("derived-series",
                       "dims " + dims_of(derived_series(l).terms)));
    out.push_back(info("upper-central-series",
                       "dims " + dims_of(upper_central_series(l).terms)));
    auto nc = nilpotency_class(l);
    auto sl = solvable_length(l);
    out.push_back(info(
        "class",
        (nc ? "nilpotent of class " + std::to_string(*nc) : "not nilpotent") +
            ", " +
            (sl ? "solvable of length " + std::to_string(*sl)
                : "not solvable")));
  } else {
    const FiniteLieRing& r = *df.ring;
    out.push_back(info("lower-central-series",
                       "sizes " + sizes_of(ring_lower_central_series(r).terms)));
    out.push_back(info("upper-central-series",
                       "sizes " + sizes_of(ring_upper_central_series(r).terms)));
    auto nc = ring_nilpotency_class(r);
    out.push_back(info("class", nc ? "nilpotent of class " + std::to_string(*nc)
                                   : "not nilpotent"));
  }
  return out;
}

std::vector<CheckResult> analyze_centralizers(const DefinitionFile& df) {
  std::vector<CheckResult> out;
  if (df.is_algebra()) {
    const LieAlgebra& l = *df.algebra;
    out.push_back(
        info("center", "dim " + std::to_string(center(l).dim())));
    std::string dims;
    for (std::size_t i = 0; i < l.dim(); ++i) {
      Subspace line = Subspace::span_of(Matrix::from_vec_rows(
          l.field(), l.dim(), {l.basis_element(i).coords}));
      if (!dims.empty()) dims += " ";
      dims += std::to_string(centralizer(l, line).space.dim());
    }
    out.push_back(info("basis-centralizer-dims", dims));
  } else {
    const FiniteLieRing& r = *df.ring;
    out.push_back(
        info("center", "size " + std::to_string(ring_center(r).size())));
    CentralizerLattice lat = centralizer_lattice(r);
    out.push_back(info("centralizer-lattice",
                       std::to_string(lat.nodes.size()) + " nodes, max chain " +
                           std::to_string(lat.max_chain)));
  }
  return out;
}

std::vector<CheckResult> analyze_radicals(const DefinitionFile& df) {
  std::vector<CheckResult> out;
  if (df.is_algebra()) {
    const LieAlgebra& l = *df.algebra;
    if (!l.field().is_rationals()) {
      CheckResult r;
      r.name = "radicals";
      r.applicable = false;
      r.note = "trace-based radicals need characteristic zero";
      out.push_back(r);
      return out;
    }
    FittingCertificate cert = fitting_certificate(l);
    out.push_back(info("fitting-ideal",
                       "dim " + std::to_string(cert.ideal.space.dim()) +
                           ", class " +
                           std::to_string(cert.central_series.size() - 1)));
    out.push_back(info("baer-radical",
                       "dim " + std::to_string(cert.ideal.space.dim()) +
                           " (equals the fitting ideal in finite dimension)"));
  } else {
    const FiniteLieRing& r = *df.ring;
    out.push_back(info("fitting-subgroup",
                       "size " +
                           std::to_string(ring_fitting_bruteforce(r).size())));
  }
  return out;
}

void emit(const Report& rep, const std::string& json_path) {
  std::string json = report_to_json(rep);
  if (json_path.empty()) {
    std::cout << render_table(json);
  } else if (json_path == "-") {
    std::cout << json;
  } else {
    std::ofstream out(json_path);
    if (!out) throw Error("cannot write '" + json_path + "'");
    out << json;
    std::cout << render_table(json);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact workbench for finite-dimensional Lie algebras and finite "
      "Lie rings"};
  app.require_subcommand(1);

  std::string file;
  std::string corpus_name;
  std::string suite = "all";
  std::string json_path;
  std::uint64_t seed = 42;
  std::uint64_t samples = 25;
  bool no_timing = false;
  bool want_series = false;
  bool want_centralizers = false;
  bool want_radicals = false;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a definition file");
  validate->add_option("file", file, "definition file")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "report structural invariants");
  analyze->add_option("file", file, "definition file")->required();
  analyze->add_flag("--series", want_series, "central and derived series");
  analyze->add_flag("--centralizers", want_centralizers, "center and centralizer dimensions");
  analyze->add_flag("--radicals", want_radicals, "fitting and baer radicals");
  analyze->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
  analyze->add_flag("--no-timing", no_timing, "omit timing from the report");

  CLI::App* check = app.add_subcommand("check", "run verification suites");
  check->add_option("file", file, "definition file");
  check->add_option("--corpus", corpus_name, "bundled definition name");
  check->add_option("--suite", suite, "jacobi|centralizers|lemma-cent-it|radicals|exp|semidirect|finring|all");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--samples", samples, "per-property sample count");
  check->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");
  check->add_flag("--no-timing", no_timing, "omit timing from the report");

  CLI::App* corpus = app.add_subcommand("corpus", "bundled definitions");
  CLI::App* corpus_list = corpus->add_subcommand("list", "list bundled definition names");
  corpus->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (corpus_list->parsed()) {
      for (const CorpusEntry& e : corpus_entries()) {
        std::cout << e.name << "\n";
      }
      return 0;
    }

    if (validate->parsed()) {
      std::string text = slurp(file);
      DefinitionFile df = parse_definition(text);
      if (df.is_algebra()) {
        std::cout << df.name() << ": valid algebra over "
                  << df.algebra->field().str() << ", dim "
                  << df.algebra->dim() << "\n";
      } else {
        std::cout << df.name() << ": valid ring of order " << df.ring->order()
                  << "\n";
      }
      for (const Representation& rep : df.reps) {
        std::cout << "  rep " << rep.name << ": valid, module dim "
                  << rep.module_dim << "\n";
      }
      return 0;
    }

    auto started = std::chrono::steady_clock::now();
    Report rep;
    rep.seed = seed;
    rep.samples = samples;
    rep.with_timing = !no_timing;

    if (check->parsed()) {
      const auto& names = suite_names();
      if (suite != "all" &&
          std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'");
      }
    }

    DefinitionFile df;
    if (check->parsed() && !corpus_name.empty()) {
      if (!file.empty()) throw UsageError("give a file or --corpus, not both");
      df = corpus_load(corpus_name);
      for (const CorpusEntry& e : corpus_entries()) {
        if (e.name == corpus_name) rep.input_digest = fnv1a_hex(e.definition);
      }
    } else {
      if (file.empty()) throw UsageError("give a file or --corpus");
      std::string text = slurp(file);
      rep.input_digest = fnv1a_hex(text);
      df = parse_definition(text);
    }
    rep.input_name = df.name();

    if (analyze->parsed()) {
      rep.command = "analyze";
      bool all = !want_series && !want_centralizers && !want_radicals;
      if (all || want_series) {
        for (CheckResult& r : analyze_series(df)) rep.checks.push_back(r);
      }
      if (all || want_centralizers) {
        for (CheckResult& r : analyze_centralizers(df)) rep.checks.push_back(r);
      }
      if (all || want_radicals) {
        for (CheckResult& r : analyze_radicals(df)) rep.checks.push_back(r);
      }
    } else {
      rep.command = "check";
      SuiteOptions opt;
      opt.seed = seed;
      opt.samples = samples;
      rep.checks = run_suite(df, suite, opt);
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    emit(rep, json_path);
    return rep.all_passed() ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

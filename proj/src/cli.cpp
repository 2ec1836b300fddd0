#include "latgate/cli.hpp"

#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "latgate/analysis.hpp"
#include "latgate/catalog.hpp"
#include "latgate/error.hpp"
#include "latgate/json_io.hpp"
#include "latgate/selftest.hpp"

namespace latgate {
namespace {

struct CommonFlags {
  std::string file;
  std::string catalog;
  bool json = false;
  bool stats = false;
  std::size_t workers = 1;
};

std::string join(LatticeVector const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

void print_stats(std::ostream& out, StatsSection const& s) {
  out << "stats: nodes=" << s.nodes << " leaves=" << s.leaves
      << " prunes=" << s.prunes << " radius_shrinks=" << s.radius_shrinks
      << "\n";
}

void print_analysis(std::ostream& out, Report const& r) {
  FormAnalysis const& a = *r.analysis;
  out << "source: " << r.source << "\n"
      << "rank: " << r.gram.size() << "\n"
      << "validation: " << a.validation << "\n"
      << "determinant: " << a.determinant << "\n"
      << "unimodular: " << (a.unimodular ? "yes" : "no") << "\n"
      << "definiteness: " << a.definiteness << "\n"
      << "parity: " << a.parity << "\n";
  if (a.signature) out << "signature: " << *a.signature << "\n";
  out << "characteristic base w0: " << join(a.char_base) << "\n";
  if (a.elkies) {
    ElkiesSection const& e = *a.elkies;
    out << "minimal characteristic norm m: " << e.m << "\n"
        << "k = (n - m)/8: " << e.k << "\n"
        << "minimizer: " << join(e.minimizer) << " (" << e.count_minimizers
        << " minimizers)\n"
        << "norm-1 vectors: " << e.unit_vector_count << "\n"
        << "m = signature mod 8: " << (e.mod8_ok ? "yes" : "NO") << "\n"
        << "verdict: " << e.verdict << "\n";
  }
  if (a.note) out << "note: " << *a.note << "\n";
  if (r.oracle) out << "oracle: " << r.oracle->detail << "\n";
  if (r.stats) print_stats(out, *r.stats);
}

void print_donaldson(std::ostream& out, Report const& r) {
  ModuliReport const& m = *r.moduli;
  long const b2 = static_cast<long>(r.gram.size());
  out << "source: " << r.source << "\n"
      << "b1 = " << *r.b1 << ", b2 = " << b2 << "\n";
  out << "1. surgery along " << m.surgery.size()
      << " loop(s): b1 -> 0, intersection form unchanged";
  if (!m.surgery.empty()) {
    bool all_ok = true;
    for (SurgeryCertificate const& c : m.surgery) all_ok = all_ok && c.ok();
    out << ", Mayer-Vietoris rank sums "
        << (all_ok ? "all 0" : "INCONSISTENT");
  }
  out << "\n";
  if (m.verdict == VerdictKind::kNotApplicable) {
    out << "verdict: NotApplicable (" << m.reason << ")\n";
    if (r.stats) print_stats(out, *r.stats);
    return;
  }
  out << "2. short characteristic vector: c1(L)^2 = " << *m.c1_squared
      << " = -b2 + 8k with k = " << *m.k << "\n"
      << "3. virtual dimension (c1^2 - (2chi + 3sigma))/4 = "
      << *m.virtual_dim << " = 2k - 1; based moduli dimension "
      << *m.based_dim << "\n";
  if (m.verdict == VerdictKind::kRealizable) {
    out << "4. k = 0: no short characteristic vector, the form is minus the "
           "identity\n"
        << "verdict: Realizable\n";
  } else {
    out << "4. link of the reducible point: " << *m.boundary
        << ", w2^(k-1)[" << *m.boundary << "] = " << *m.sw_boundary_number
        << "\n"
        << "5. the boundary of a compact manifold must have vanishing "
           "Stiefel-Whitney numbers: contradiction\n"
        << "verdict: Forbidden\n";
  }
  if (r.stats) print_stats(out, *r.stats);
}

GramMatrix load_form(CommonFlags const& flags, std::string& source,
                     std::string& form_id) {
  if (!flags.catalog.empty()) {
    source = "catalog:" + flags.catalog;
    form_id = flags.catalog;
    return catalog_get(flags.catalog).gram;
  }
  source = flags.file;
  form_id = flags.file;
  return load_gram_file(flags.file);
}

int exit_code_for(Error const& e) {
  return e.code() == ErrorCode::kInconsistentDimension ? kExitVerification
                                                       : kExitUsage;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact characteristic-vector and intersection-form toolkit",
               "latgate"};
  app.require_subcommand(1);

  CommonFlags analyze;
  bool oracle = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one form");
  auto* analyze_file =
      analyze_cmd->add_option("file", analyze.file, "Gram JSON file");
  auto* analyze_catalog =
      analyze_cmd->add_option("--catalog", analyze.catalog, "Catalog id");
  analyze_file->excludes(analyze_catalog);
  analyze_cmd->add_flag("--json", analyze.json, "Emit the JSON report");
  analyze_cmd->add_flag("--oracle", oracle,
                        "Cross-check against brute-force enumeration");
  analyze_cmd->add_flag("--stats", analyze.stats, "Report search counters");
  analyze_cmd->add_option("--workers", analyze.workers, "Search threads")
      ->check(CLI::Range(1, 256));

  CommonFlags donaldson;
  long b1 = 0;
  bool negate = false;
  auto* donaldson_cmd = app.add_subcommand(
      "donaldson", "Run the diagonalizability argument on a 4-manifold");
  auto* donaldson_file = donaldson_cmd->add_option(
      "file", donaldson.file, "Manifold JSON file");
  auto* donaldson_catalog = donaldson_cmd->add_option(
      "--catalog", donaldson.catalog, "Catalog id for the intersection form");
  donaldson_file->excludes(donaldson_catalog);
  auto* b1_option = donaldson_cmd->add_option("--b1", b1, "First Betti number")
                        ->check(CLI::NonNegativeNumber);
  auto* negate_flag =
      donaldson_cmd->add_flag("--negate", negate, "Use minus the catalog form");
  b1_option->needs(donaldson_catalog);
  negate_flag->needs(donaldson_catalog);
  donaldson_cmd->add_flag("--json", donaldson.json, "Emit the JSON report");
  donaldson_cmd->add_flag("--stats", donaldson.stats,
                          "Report search counters");
  donaldson_cmd->add_option("--workers", donaldson.workers, "Search threads")
      ->check(CLI::Range(1, 256));

  SelftestConfig selftest;
  std::string goldens_file;
  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the invariant suite");
  selftest_cmd->add_option("--max-rank", selftest.max_rank,
                           "Skip catalog forms above this rank")
      ->check(CLI::Range(1, 24));
  selftest_cmd->add_option("--workers", selftest.workers, "Search threads")
      ->check(CLI::Range(1, 256));
  selftest_cmd->add_option("--goldens", goldens_file,
                           "JSON file overriding catalog golden values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (analyze.file.empty() && analyze.catalog.empty()) {
        err << "error: analyze needs a file or --catalog ID\n";
        return kExitUsage;
      }
      std::string source;
      std::string form_id;
      GramMatrix const g = load_form(analyze, source, form_id);
      AnalyzeOptions options;
      options.oracle = oracle;
      options.stats = analyze.stats;
      options.workers = analyze.workers;
      Report const r = analyze_form(g, source, form_id, options);
      if (analyze.json) {
        out << report_to_json(r).dump(2) << "\n";
      } else {
        print_analysis(out, r);
      }
      if (r.oracle && !r.oracle->agree) {
        err << "oracle mismatch: " << r.oracle->detail << "\n";
        return kExitVerification;
      }
      return kExitOk;
    }

    if (donaldson_cmd->parsed()) {
      std::optional<ManifoldDescriptor> m;
      std::string source;
      if (!donaldson.catalog.empty()) {
        GramMatrix form = catalog_get(donaldson.catalog).gram;
        if (negate) form = form.negated();
        m = ManifoldDescriptor{b1, std::move(form)};
        source = std::string(negate ? "catalog:-" : "catalog:") +
                 donaldson.catalog;
      } else if (!donaldson.file.empty()) {
        m = load_manifold_file(donaldson.file);
        source = donaldson.file;
      } else {
        err << "error: donaldson needs a file or --catalog ID\n";
        return kExitUsage;
      }
      AnalyzeOptions options;
      options.stats = donaldson.stats;
      options.workers = donaldson.workers;
      Report const r = donaldson_report(*m, source, options);
      if (donaldson.json) {
        out << report_to_json(r).dump(2) << "\n";
      } else {
        print_donaldson(out, r);
      }
      return kExitOk;
    }

    if (selftest_cmd->parsed()) {
      if (!goldens_file.empty()) {
        selftest.golden_overrides =
            load_golden_overrides(read_file(goldens_file));
      }
      bool all = true;
      for (SelftestRow const& row : run_selftest(selftest)) {
        out << (row.passed ? "PASS  " : "FAIL  ") << std::left
            << std::setw(44) << row.name << row.detail << "\n";
        all = all && row.passed;
      }
      return all ? kExitOk : kExitVerification;
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace latgate

#include "latgate/analysis.hpp"

#include <algorithm>
#include <optional>

#include "latgate/charvec.hpp"
#include "latgate/error.hpp"

namespace latgate {
namespace {

StatsSection to_section(EnumStats const& s) {
  return {s.nodes, s.leaves, s.prunes, s.radius_shrinks};
}

// Number of points the brute-force scan would visit.
double scan_size(std::vector<IntegerInterval> const& ranges) {
  double points = 1;
  for (IntegerInterval const& r : ranges) {
    points *= r.empty() ? 0.0 : (r.hi - r.lo + 1).convert_to<double>();
  }
  return points;
}

struct OracleTally {
  int checked = 0;
  int skipped = 0;
  std::string mismatch;
};

// Runs both routes when the scan fits the budget; returns the brute-force
// result (empty when skipped).
std::optional<EnumResult> compare(EnumQuery const& query, char const* label,
                                  AnalyzeOptions const& options,
                                  OracleTally& tally) {
  std::vector<IntegerInterval> const ranges = coordinate_ranges(query);
  if (scan_size(ranges) > options.oracle_budget) {
    ++tally.skipped;
    return std::nullopt;
  }
  ++tally.checked;
  EnumOptions enum_options;
  enum_options.workers = options.workers;
  EnumResult const fast = enumerate_coset(query, enum_options);
  EnumResult slow = brute_force_coset(query, ranges);
  if (fast != slow && tally.mismatch.empty()) {
    tally.mismatch = std::string(label) + ": enumeration found " +
                     std::to_string(fast.vectors.size()) +
                     " vectors, brute force " +
                     std::to_string(slow.vectors.size());
  }
  return slow;
}

}  // namespace

OracleSection run_oracle(GramMatrix const& g, AnalyzeOptions const& options) {
  OracleSection out;
  if (definiteness(g) != Definiteness::kPositiveDefinite) {
    out.detail = "skipped: form is not positive definite";
    return out;
  }
  std::size_t const n = g.rank();
  OracleTally tally;
  compare({g, RationalVector(n), Rational(1)}, "norm <= 1 vectors", options,
          tally);

  if (is_unimodular(g)) {
    EnumOptions enum_options;
    enum_options.workers = options.workers;
    CharVecResult const r = min_char_vector(g, enum_options);
    LatticeVector const base = solve_char_coset(g).base;
    RationalVector shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = Rational(base[i], 2);
    EnumQuery const query{g, shift, Rational(r.norm_m, 4)};
    std::optional<EnumResult> const slow =
        compare(query, "minimal characteristic vectors", options, tally);
    if (slow && tally.mismatch.empty()) {
      // Everything inside radius m/4 must sit exactly at the minimum.
      bool const all_minimal =
          std::all_of(slow->norms.begin(), slow->norms.end(),
                      [&](Rational const& q) { return q == query.radius; });
      if (!all_minimal || slow->vectors.size() != r.count_minimizers) {
        tally.mismatch = "brute force finds " +
                         std::to_string(slow->vectors.size()) +
                         " characteristic vectors of norm <= m, expected " +
                         std::to_string(r.count_minimizers) + " of norm m";
      }
    }
  }

  out.ran = tally.checked > 0;
  out.agree = tally.mismatch.empty();
  if (!out.agree) {
    out.detail = tally.mismatch;
  } else if (!out.ran) {
    out.detail = "skipped: brute-force scan too large";
  } else {
    out.detail = "agree on " + std::to_string(tally.checked) + " of " +
                 std::to_string(tally.checked + tally.skipped) + " queries";
  }
  return out;
}

Report analyze_form(GramMatrix const& g, std::string const& source,
                    std::string const& form_id,
                    AnalyzeOptions const& options) {
  Report report;
  report.command = "analyze";
  report.source = source;
  report.gram = g.rows();

  EnumStats stats;
  EnumOptions enum_options;
  enum_options.workers = options.workers;
  enum_options.stats = &stats;

  FormAnalysis a;
  a.determinant = determinant(g);
  a.unimodular = a.determinant == 1 || a.determinant == -1;
  Definiteness const d = definiteness(g);
  a.definiteness = to_string(d);
  a.parity = to_string(parity(g));
  if (inertia(g).zero == 0) a.signature = signature(g);
  a.char_base = solve_char_coset(g).base;

  if (d == Definiteness::kPositiveDefinite && a.unimodular) {
    ElkiesVerdict const v = elkies_verdict(g, enum_options);
    ElkiesSection e;
    e.form_id = form_id;
    e.n = static_cast<long>(g.rank());
    e.m = v.witness.norm_m;
    e.k = v.witness.k;
    e.minimizer = v.witness.minimizer;
    e.count_minimizers = v.witness.count_minimizers;
    e.verdict = to_string(v.kind);
    e.unit_vector_count = count_unit_vectors(g, enum_options);
    e.mod8_ok = signature_mod8_check(g, enum_options);
    a.elkies = std::move(e);
  } else if (!a.unimodular) {
    a.note = "not unimodular: the characteristic coset is not w0 + 2Z^n and "
             "no Elkies verdict applies";
  } else {
    a.note = "Elkies verdict needs a positive-definite form; got " +
             std::string(to_string(d));
  }
  report.analysis = std::move(a);

  if (options.oracle) report.oracle = run_oracle(g, options);
  if (options.stats) report.stats = to_section(stats);
  return report;
}

Report donaldson_report(ManifoldDescriptor const& m, std::string const& source,
                        AnalyzeOptions const& options) {
  Report report;
  report.command = "donaldson";
  report.source = source;
  report.gram = m.form.rows();
  report.b1 = m.b1;

  EnumStats stats;
  EnumOptions enum_options;
  enum_options.workers = options.workers;
  enum_options.stats = &stats;
  report.moduli = donaldson_verdict(m, enum_options);
  if (options.stats) report.stats = to_section(stats);
  return report;
}

}  // namespace latgate

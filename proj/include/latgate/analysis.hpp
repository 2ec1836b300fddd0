#pragma once

#include <cstddef>
#include <string>

#include "latgate/enumerate.hpp"
#include "latgate/manifold.hpp"
#include "latgate/report.hpp"

namespace latgate {

struct AnalyzeOptions {
  bool oracle = false;
  bool stats = false;
  std::size_t workers = 1;
  // Brute force is skipped when (2B + 1)^n exceeds this many points.
  double oracle_budget = 2.0e7;
};

// Full single-form analysis: validation, determinant, definiteness, parity,
// signature, characteristic coset and, for positive-definite unimodular
// forms, the Elkies stage.
Report analyze_form(GramMatrix const& g, std::string const& source,
                    std::string const& form_id, AnalyzeOptions const& options);

// Cross-checks enumerate_coset against brute_force_coset on the queries the
// analysis depends on.
OracleSection run_oracle(GramMatrix const& g, AnalyzeOptions const& options);

Report donaldson_report(ManifoldDescriptor const& m, std::string const& source,
                        AnalyzeOptions const& options);

}  // namespace latgate

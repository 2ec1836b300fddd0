#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "latgate/charvec.hpp"
#include "latgate/gram.hpp"
#include "latgate/manifold.hpp"

namespace latgate {

inline constexpr int kReportFormat = 1;

// Elkies stage of a form analysis. Field names follow the verdict JSON:
// {form_id, n, m, k, minimizer, verdict, unit_vector_count, mod8_ok}.
struct ElkiesSection {
  std::string form_id;
  long n = 0;
  Integer m;
  long k = 0;
  LatticeVector minimizer;
  std::size_t count_minimizers = 0;
  std::string verdict;
  std::size_t unit_vector_count = 0;
  bool mod8_ok = false;
  friend bool operator==(ElkiesSection const&, ElkiesSection const&) = default;
};

struct OracleSection {
  bool ran = false;
  bool agree = true;
  std::string detail;
  friend bool operator==(OracleSection const&, OracleSection const&) = default;
};

struct FormAnalysis {
  std::string validation = "ok";
  Integer determinant;
  bool unimodular = false;
  std::string definiteness;
  std::string parity;
  std::optional<long> signature;
  LatticeVector char_base;
  std::optional<ElkiesSection> elkies;
  std::optional<std::string> note;
  friend bool operator==(FormAnalysis const&, FormAnalysis const&) = default;
};

struct StatsSection {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t prunes = 0;
  std::uint64_t radius_shrinks = 0;
  friend bool operator==(StatsSection const&, StatsSection const&) = default;
};

struct Report {
  int format = kReportFormat;
  std::string command;
  std::string source;  // "catalog:<id>" or the input path
  std::vector<std::vector<Integer>> gram;
  std::optional<long> b1;
  std::optional<FormAnalysis> analysis;
  std::optional<ModuliReport> moduli;
  std::optional<OracleSection> oracle;
  std::optional<StatsSection> stats;
  friend bool operator==(Report const&, Report const&) = default;
};

nlohmann::json report_to_json(Report const& r);
// Throws ParseError.
Report report_from_json(nlohmann::json const& j);

}  // namespace latgate

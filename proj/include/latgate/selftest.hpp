#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "latgate/catalog.hpp"

namespace latgate {

struct SelftestConfig {
  std::size_t max_rank = 16;
  std::size_t workers = 1;
  std::size_t conjugates = 5;
  // Replaces the built-in golden values for the named entries.
  std::map<std::string, Golden> golden_overrides;
};

struct SelftestRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SelftestRow> run_selftest(SelftestConfig const& config);

// {"<id>": {"det": int, "parity": "Even"|"Odd", "m": int, "k": int}, ...}.
// Throws ParseError.
std::map<std::string, Golden> load_golden_overrides(std::string_view text);

}  // namespace latgate

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latgate/gram.hpp"

namespace latgate {

// Reference values a catalog entry must reproduce. m and k are present only
// for positive-definite unimodular entries.
struct Golden {
  Integer det;
  Parity parity;
  std::optional<long> m;
  std::optional<long> k;
  friend bool operator==(Golden const&, Golden const&) = default;
};

struct CatalogEntry {
  std::string id;
  GramMatrix gram;
  std::optional<Golden> expected;
};

// Grammar: summands joined by '+', each one of
//   "Zn:<n>" or "Z<n>"   the diagonal form I_n
//   "E8"                 Bourbaki Cartan matrix
//   "D<n>"               root lattice D_n (n >= 2) in the simple-root basis
//   "D<n>plus"           D_n extended by the glue (1/2,...,1/2), n = 0 mod 4
// Throws UnknownId or InvalidParameter.
CatalogEntry catalog_get(std::string_view id);

// D_n^+ basis, in the coordinates of R^n scaled by 2 (so entries are
// integers): h = (1/2,...,1/2), e_2-e_3, ..., e_{n-1}-e_n, e_{n-1}+e_n.
std::vector<std::vector<Integer>> dn_plus_basis_doubled(int n);

// The fixed corpus used by the acceptance and self-test suites.
std::vector<std::string> standard_catalog_ids();

}  // namespace latgate

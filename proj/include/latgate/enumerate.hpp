#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latgate/gram.hpp"

namespace latgate {

// Request for all u in Z^n with Q(u + shift) <= radius.
struct EnumQuery {
  GramMatrix form;
  RationalVector shift;
  Rational radius;
};

struct EnumResult {
  std::vector<LatticeVector> vectors;  // lexicographically sorted
  std::vector<Rational> norms;         // Q(u + shift), matching vectors
  bool exhaustive = true;

  friend bool operator==(EnumResult const&, EnumResult const&) = default;
};

// Search-tree counters, summed over workers.
struct EnumStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t prunes = 0;  // interior nodes whose child interval was empty
  std::uint64_t radius_shrinks = 0;
};

struct EnumOptions {
  std::size_t rank_cap = 24;
  // Threads sharing the top-level coordinate range. Output does not depend
  // on this value.
  std::size_t workers = 1;
  EnumStats* stats = nullptr;
};

// Shifted Fincke-Pohst on the exact rational Cholesky factor.
// Throws NotPositiveDefinite, RankCapExceeded, BadShape.
EnumResult enumerate_coset(EnumQuery const& query,
                           EnumOptions const& options = {});

// Vectors of least norm among those with Q(u + shift) <= radius, found by
// shrinking the radius on every hit. Empty when nothing lies in the ball.
EnumResult minimize_coset(EnumQuery const& query,
                          EnumOptions const& options = {});

// Exhaustive scan of [-box, box]^n. Independent of the Cholesky path.
// Throws NotPositiveDefinite.
EnumResult brute_force_coset(EnumQuery const& query, Integer const& box);
// Same scan over a product of per-coordinate ranges.
EnumResult brute_force_coset(EnumQuery const& query,
                             std::vector<IntegerInterval> const& ranges);

// Exact range of u_i over all solutions' bounding box, from
// (u_i + t_i)^2 <= R (G^-1)_ii (Cauchy-Schwarz in the dual basis).
std::vector<IntegerInterval> coordinate_ranges(EnumQuery const& query);

// B >= 1 with |u_i| <= B for every solution; the widest coordinate range.
Integer sufficient_box(EnumQuery const& query);

}  // namespace latgate

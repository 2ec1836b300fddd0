#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "latgate/enumerate.hpp"
#include "latgate/gram.hpp"

namespace latgate {

// The characteristic vectors of a unimodular form are exactly base + 2Z^n.
struct CharCoset {
  LatticeVector base;  // lex-least 0/1 representative
  bool unimodular = true;  // false: the coset description does not apply
};

struct CharVecResult {
  LatticeVector minimizer;  // lex-least among minimal-norm characteristic
  Integer norm_m;
  long k = 0;  // (n - m) / 8
  std::size_t count_minimizers = 0;
  friend bool operator==(CharVecResult const&, CharVecResult const&) = default;
};

// True iff (v, v + w) is even for every v, i.e. G w = diag(G) mod 2.
bool is_characteristic(GramMatrix const& g, LatticeVector const& w);

// Solves G w = diag(G) over GF(2). Throws NoSolution (unreachable for
// symmetric input, kept as a consistency guard).
CharCoset solve_char_coset(GramMatrix const& g);

// Throws NotPositiveDefinite, NotUnimodular.
CharVecResult min_char_vector(GramMatrix const& g,
                              EnumOptions const& options = {});

enum class ElkiesKind { kIdentity, kHasShortCharVector };
std::string_view to_string(ElkiesKind kind);

struct ElkiesVerdict {
  ElkiesKind kind;
  CharVecResult witness;  // the minimal characteristic vector either way
};

ElkiesVerdict elkies_verdict(GramMatrix const& g,
                             EnumOptions const& options = {});

// m = signature (mod 8) with m the minimal characteristic norm. For a
// negative-definite g the search runs on -g and the norm is negated.
// Throws NotDefinite for indefinite or degenerate forms, NotUnimodular.
bool signature_mod8_check(GramMatrix const& g,
                          EnumOptions const& options = {});

// Number of v with (v, v) = 1. Throws NotPositiveDefinite.
std::size_t count_unit_vectors(GramMatrix const& g,
                               EnumOptions const& options = {});

}  // namespace latgate

#include "latgate/charvec.hpp"

#include <boost/dynamic_bitset.hpp>
#include <string>

#include "latgate/error.hpp"

namespace latgate {
namespace {

bool odd(Integer const& x) {
  return boost::multiprecision::bit_test(boost::multiprecision::abs(x), 0);
}

}  // namespace

bool is_characteristic(GramMatrix const& g, LatticeVector const& w) {
  std::size_t const n = g.rank();
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += g(i, j) * w[j];
    if (odd(row) != odd(g(i, i))) return false;
  }
  return true;
}

CharCoset solve_char_coset(GramMatrix const& g) {
  std::size_t const n = g.rank();
  // Augmented rows [G mod 2 | diag mod 2].
  std::vector<boost::dynamic_bitset<>> rows(n, boost::dynamic_bitset<>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = odd(g(i, j));
    rows[i][n] = odd(g(i, i));
  }

  // Reduced row echelon form with pivots taken from the last column
  // backwards: every pivot variable then depends only on free variables of
  // smaller index, and zeroing the free variables gives the lex-least
  // solution.
  std::vector<std::size_t> pivot_row_of(n, n);
  std::size_t rank = 0;
  for (std::size_t col = n; col-- > 0 && rank < n;) {
    std::size_t r = rank;
    while (r < n && !rows[r][col]) ++r;
    if (r == n) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != rank && rows[i][col]) rows[i] ^= rows[rank];
    }
    pivot_row_of[col] = rank;
    ++rank;
  }
  for (std::size_t i = rank; i < n; ++i) {
    if (rows[i][n]) {
      throw Error(ErrorCode::kNoSolution,
                  "G w = diag(G) has no solution mod 2");
    }
  }

  CharCoset coset;
  coset.base.assign(n, Integer(0));
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row_of[col] != n && rows[pivot_row_of[col]][n]) {
      coset.base[col] = 1;
    }
  }
  coset.unimodular = is_unimodular(g);
  return coset;
}

CharVecResult min_char_vector(GramMatrix const& g,
                              EnumOptions const& options) {
  if (definiteness(g) != Definiteness::kPositiveDefinite) {
    throw Error(ErrorCode::kNotPositiveDefinite, "min_char_vector");
  }
  if (!is_unimodular(g)) {
    throw Error(ErrorCode::kNotUnimodular,
                "determinant " + determinant(g).str());
  }
  std::size_t const n = g.rank();
  LatticeVector const base = solve_char_coset(g).base;

  // w = base + 2u, so (w, w) = 4 Q(u + base/2).
  RationalVector shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = Rational(base[i], 2);
  Integer const base_norm = g.norm(base);
  Integer const ceiling = std::min(base_norm, Integer(n));
  EnumQuery const query{g, shift, Rational(ceiling, 4)};
  EnumResult const found = minimize_coset(query, options);
  if (found.vectors.empty()) {
    throw Error(ErrorCode::kInconsistentDimension,
                "no characteristic vector within norm " + ceiling.str());
  }

  CharVecResult result;
  result.minimizer.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.minimizer[i] = base[i] + 2 * found.vectors.front()[i];
  }
  Rational const m = 4 * found.norms.front();
  result.norm_m = boost::multiprecision::numerator(m);
  result.count_minimizers = found.vectors.size();
  Integer const deficit = Integer(n) - result.norm_m;
  if (boost::multiprecision::denominator(m) != 1 || deficit % 8 != 0) {
    throw Error(ErrorCode::kInconsistentDimension,
                "minimal characteristic norm " + m.str() +
                    " is not congruent to the rank mod 8");
  }
  result.k = static_cast<long>(deficit / 8);
  return result;
}

std::string_view to_string(ElkiesKind kind) {
  return kind == ElkiesKind::kIdentity ? "Identity" : "HasShortCharVector";
}

ElkiesVerdict elkies_verdict(GramMatrix const& g, EnumOptions const& options) {
  CharVecResult witness = min_char_vector(g, options);
  ElkiesKind const kind = witness.norm_m == Integer(g.rank())
                              ? ElkiesKind::kIdentity
                              : ElkiesKind::kHasShortCharVector;
  return {kind, std::move(witness)};
}

bool signature_mod8_check(GramMatrix const& g, EnumOptions const& options) {
  Definiteness const d = definiteness(g);
  if (d != Definiteness::kPositiveDefinite &&
      d != Definiteness::kNegativeDefinite) {
    throw Error(ErrorCode::kNotDefinite,
                "minimal characteristic norm needs a definite form, got " +
                    std::string(to_string(d)));
  }
  bool const negative = d == Definiteness::kNegativeDefinite;
  CharVecResult const r =
      min_char_vector(negative ? g.negated() : g, options);
  Integer const m = negative ? Integer(-r.norm_m) : r.norm_m;
  Integer const diff = m - Integer(signature(g));
  return diff % 8 == 0;
}

std::size_t count_unit_vectors(GramMatrix const& g,
                               EnumOptions const& options) {
  EnumQuery const query{g, RationalVector(g.rank()), Rational(1)};
  EnumResult const found = enumerate_coset(query, options);
  std::size_t count = 0;
  for (Rational const& norm : found.norms) {
    if (norm == 1) ++count;
  }
  return count;
}

}  // namespace latgate

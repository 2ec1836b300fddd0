#include <random>

#include "gtest/gtest.h"
#include "latgate/catalog.hpp"
#include "latgate/charvec.hpp"
#include "latgate/random_basis.hpp"
#include "test_support.hpp"

namespace latgate {
namespace {

using testing::code_of;
using testing::vec;

// Minimal characteristic norm by scanning every w in [-box, box]^n.
struct CharScan {
  Integer norm;
  std::vector<LatticeVector> minimizers;
};

CharScan scan_characteristic(GramMatrix const& g, int box) {
  std::size_t const n = g.rank();
  CharScan best{-1, {}};
  LatticeVector w(n, Integer(-box));
  while (true) {
    Integer const q = g.norm(w);
    if ((best.norm < 0 || q <= best.norm) &&
        testing::characteristic_by_definition(g, w)) {
      if (best.norm < 0 || q < best.norm) {
        best.norm = q;
        best.minimizers.clear();
      }
      if (q == best.norm) best.minimizers.push_back(w);
    }
    std::size_t i = n;
    while (i > 0 && w[i - 1] == box) w[--i] = -box;
    if (i == 0) break;
    ++w[i - 1];
  }
  return best;
}

IntMatrix block_diagonal(IntMatrix const& a, std::size_t extra) {
  std::size_t const n = a.size();
  IntMatrix m(n + extra);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = n; i < n + extra; ++i) m(i, i) = 1;
  return m;
}

// Characteristic coset of g, with every vector in it checked by definition.
RationalVector half_base(GramMatrix const& g) {
  CharCoset const c = solve_char_coset(g);
  EXPECT_TRUE(testing::characteristic_by_definition(g, c.base));
  RationalVector t;
  for (Integer const& x : c.base) t.push_back(Rational(x, 2));
  return t;
}

TEST(IsCharacteristicTest, Examples) {
  GramMatrix const i3 = GramMatrix::identity(3);
  EXPECT_TRUE(is_characteristic(i3, vec({1, 1, 1})));
  EXPECT_TRUE(is_characteristic(i3, vec({-1, 3, 1})));
  EXPECT_FALSE(is_characteristic(i3, vec({1, 0, 1})));
  GramMatrix const e8 = catalog_get("E8").gram;
  EXPECT_TRUE(is_characteristic(e8, LatticeVector(8)));
  EXPECT_FALSE(is_characteristic(e8, vec({1, 0, 0, 0, 0, 0, 0, 0})));
}

TEST(IsCharacteristicTest, AgreesWithDefinition) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    GramMatrix const g = testing::random_symmetric(4, 3, rng);
    LatticeVector w(4);
    for (Integer& x : w) x = entry(rng);
    EXPECT_EQ(is_characteristic(g, w),
              testing::characteristic_by_definition(g, w));
  }
}

TEST(SolveCharCosetTest, Examples) {
  EXPECT_EQ(solve_char_coset(GramMatrix::identity(3)).base, vec({1, 1, 1}));
  EXPECT_EQ(solve_char_coset(catalog_get("E8").gram).base, LatticeVector(8));
  EXPECT_EQ(solve_char_coset(catalog_get("E8+Z2").gram).base,
            vec({0, 0, 0, 0, 0, 0, 0, 0, 1, 1}));
}

TEST(SolveCharCosetTest, BaseIsLexLeastBinarySolution) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    GramMatrix const g = testing::random_symmetric(5, 4, rng);
    CharCoset const c = solve_char_coset(g);
    LatticeVector least;
    for (unsigned mask = 0; mask < 32; ++mask) {
      LatticeVector w(5);
      for (std::size_t i = 0; i < 5; ++i) w[i] = (mask >> (4 - i)) & 1u;
      if (testing::characteristic_by_definition(g, w)) {
        least = w;
        break;
      }
    }
    ASSERT_FALSE(least.empty());
    EXPECT_EQ(c.base, least);
  }
}

TEST(MinCharVectorTest, IdentityRankThree) {
  CharVecResult const r = min_char_vector(GramMatrix::identity(3));
  EXPECT_EQ(r.minimizer, vec({-1, -1, -1}));
  EXPECT_EQ(r.norm_m, 3);
  EXPECT_EQ(r.k, 0);
  EXPECT_EQ(r.count_minimizers, 8u);
}

TEST(MinCharVectorTest, E8) {
  CharVecResult const r = min_char_vector(catalog_get("E8").gram);
  EXPECT_EQ(r.minimizer, LatticeVector(8));
  EXPECT_EQ(r.norm_m, 0);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.count_minimizers, 1u);
}

TEST(MinCharVectorTest, E8PlusZ1AgainstBruteForce) {
  CharVecResult const r = min_char_vector(catalog_get("E8+Z1").gram);
  EXPECT_EQ(r.norm_m, 1);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.count_minimizers, 2u);

  // Brute force on a reduced basis: norm 1 is (w, w) / 4 = 1/4.
  GramMatrix const g = basis_change(
      catalog_get("E8+Z1").gram,
      block_diagonal(testing::e8_dual_reduced_transform(), 1));
  EnumQuery const q{g, half_base(g), Rational(1, 4)};
  EnumResult const slow = brute_force_coset(q, sufficient_box(q));
  EXPECT_EQ(slow.vectors.size(), 2u);
  for (Rational const& norm : slow.norms) EXPECT_EQ(norm, Rational(1, 4));
  EXPECT_EQ(min_char_vector(g).norm_m, 1);
}

TEST(MinCharVectorTest, D12PlusAgainstBruteForce) {
  CharVecResult const r = min_char_vector(catalog_get("D12plus").gram);
  EXPECT_EQ(r.norm_m, 4);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.count_minimizers, 24u);

  GramMatrix const g = basis_change(catalog_get("D12plus").gram,
                                    testing::d12plus_dual_reduced_transform());
  EnumQuery const q{g, half_base(g), Rational(1)};
  EnumResult const slow = brute_force_coset(q, coordinate_ranges(q));
  EXPECT_EQ(slow.vectors.size(), 24u);
  for (Rational const& norm : slow.norms) EXPECT_EQ(norm, Rational(1));
  // Nothing shorter exists.
  EnumQuery const below{g, q.shift, Rational(3, 4)};
  EXPECT_TRUE(brute_force_coset(below, coordinate_ranges(below)).vectors.empty());
  EXPECT_EQ(min_char_vector(g).count_minimizers, 24u);
}

TEST(MinCharVectorTest, MatchesScanOnSmallForms) {
  std::mt19937_64 rng(53);
  std::vector<GramMatrix> forms;
  for (char const* id : {"Zn:1", "Zn:2", "Zn:3", "Zn:4", "D4plus"}) {
    forms.push_back(catalog_get(id).gram);
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    forms.push_back(
        basis_change(GramMatrix::identity(n), random_unimodular(n, 2, rng)));
  }
  for (GramMatrix const& g : forms) {
    CharScan const s = scan_characteristic(g, 10);
    for (LatticeVector const& w : s.minimizers) {
      for (Integer const& x : w) ASSERT_LT(boost::multiprecision::abs(x), 10);
    }
    CharVecResult const r = min_char_vector(g);
    EXPECT_EQ(r.norm_m, s.norm);
    EXPECT_EQ(r.count_minimizers, s.minimizers.size());
    EXPECT_EQ(r.minimizer, s.minimizers.front());
  }
}

TEST(MinCharVectorTest, Errors) {
  EXPECT_EQ(code_of([] { min_char_vector(catalog_get("D4").gram); }),
            ErrorCode::kNotUnimodular);
  EXPECT_EQ(code_of([] { min_char_vector(GramMatrix::diagonal({1, -1})); }),
            ErrorCode::kNotPositiveDefinite);
  EXPECT_EQ(code_of([] {
              min_char_vector(catalog_get("E8").gram.negated());
            }),
            ErrorCode::kNotPositiveDefinite);
}

TEST(ElkiesVerdictTest, Examples) {
  for (int n = 1; n <= 8; ++n) {
    ElkiesVerdict const v = elkies_verdict(GramMatrix::identity(n));
    EXPECT_EQ(v.kind, ElkiesKind::kIdentity);
    EXPECT_EQ(v.witness.norm_m, n);
  }
  for (char const* id : {"E8", "E8+Z1", "D12plus", "E8+E8", "D16plus"}) {
    ElkiesVerdict const v = elkies_verdict(catalog_get(id).gram);
    EXPECT_EQ(v.kind, ElkiesKind::kHasShortCharVector) << id;
    EXPECT_LT(v.witness.norm_m, catalog_get(id).gram.rank()) << id;
  }
  EXPECT_EQ(to_string(ElkiesKind::kIdentity), "Identity");
}

TEST(SignatureMod8CheckTest, Examples) {
  EXPECT_TRUE(signature_mod8_check(catalog_get("E8").gram));
  EXPECT_TRUE(signature_mod8_check(catalog_get("E8").gram.negated()));
  EXPECT_TRUE(signature_mod8_check(GramMatrix::identity(5).negated()));
  EXPECT_EQ(code_of([] {
              signature_mod8_check(GramMatrix::diagonal({1, -1}));
            }),
            ErrorCode::kNotDefinite);
  EXPECT_EQ(code_of([] { signature_mod8_check(catalog_get("D4").gram); }),
            ErrorCode::kNotUnimodular);
}

TEST(CountUnitVectorsTest, Examples) {
  EXPECT_EQ(count_unit_vectors(GramMatrix::identity(5)), 10u);
  EXPECT_EQ(count_unit_vectors(catalog_get("E8").gram), 0u);
  EXPECT_EQ(count_unit_vectors(catalog_get("E8+Z3").gram), 6u);
  EXPECT_EQ(count_unit_vectors(catalog_get("D12plus").gram), 0u);
  EXPECT_EQ(count_unit_vectors(catalog_get("D4").gram), 0u);
  EXPECT_EQ(code_of([] {
              count_unit_vectors(GramMatrix::diagonal({1, -1}));
            }),
            ErrorCode::kNotPositiveDefinite);
}

TEST(CharvecPropertyTest, InvariantUnderChangeOfBasis) {
  std::mt19937_64 rng(59);
  for (char const* id : {"Zn:5", "E8", "E8+Z2", "D4plus", "D12plus"}) {
    GramMatrix const g = catalog_get(id).gram;
    CharVecResult const base = min_char_vector(g);
    for (int trial = 0; trial < 3; ++trial) {
      GramMatrix const h =
          basis_change(g, random_unimodular(g.rank(), 2, rng));
      CharVecResult const r = min_char_vector(h);
      EXPECT_EQ(r.norm_m, base.norm_m) << id;
      EXPECT_EQ(r.k, base.k) << id;
      EXPECT_EQ(r.count_minimizers, base.count_minimizers) << id;
      EXPECT_EQ(h.norm(r.minimizer), r.norm_m) << id;
      EXPECT_TRUE(testing::characteristic_by_definition(h, r.minimizer)) << id;
      EXPECT_TRUE(signature_mod8_check(h)) << id;
      EXPECT_EQ(count_unit_vectors(h), count_unit_vectors(g)) << id;
    }
  }
}

TEST(CharvecPropertyTest, NormCongruentToRankModEight) {
  for (std::string const& id : standard_catalog_ids()) {
    GramMatrix const g = catalog_get(id).gram;
    CharVecResult const r = min_char_vector(g);
    Integer const n = g.rank();
    EXPECT_EQ((n - r.norm_m) % 8, 0) << id;
    EXPECT_GE(r.norm_m, 0) << id;
    EXPECT_LE(r.norm_m, n) << id;
    EXPECT_EQ(Integer(r.k) * 8, n - r.norm_m) << id;
  }
}

}  // namespace
}  // namespace latgate

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "latgate/exact.hpp"

namespace latgate {

using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Square integer matrix, row-major. Used for basis transforms.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::vector<std::vector<Integer>> const& rows);

  std::size_t size() const { return n_; }
  Integer const& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }

  IntMatrix transpose() const;
  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

// Exact determinant by Bareiss fraction-free elimination.
Integer determinant(IntMatrix const& m);

// A symmetric integer bilinear form on Z^n, given by its Gram matrix.
// Immutable once constructed; every constructor validates.
class GramMatrix {
 public:
  // Throws BadShape or NotSymmetric.
  static GramMatrix from_rows(std::vector<std::vector<Integer>> const& rows);
  static GramMatrix from_matrix(IntMatrix m);
  static GramMatrix identity(std::size_t n);
  static GramMatrix diagonal(std::vector<Integer> const& diag);

  std::size_t rank() const { return matrix_.size(); }
  Integer const& operator()(std::size_t i, std::size_t j) const {
    return matrix_(i, j);
  }
  IntMatrix const& matrix() const { return matrix_; }
  std::vector<std::vector<Integer>> rows() const;

  // (x, y) for integer or rational coordinate vectors.
  Integer pair(std::span<Integer const> x, std::span<Integer const> y) const;
  Integer norm(std::span<Integer const> x) const { return pair(x, x); }
  Rational norm(std::span<Rational const> x) const;

  GramMatrix negated() const;

  friend bool operator==(GramMatrix const&, GramMatrix const&) = default;

 private:
  explicit GramMatrix(IntMatrix m) : matrix_(std::move(m)) {}
  IntMatrix matrix_;
};

// Throws BadShape or NotSymmetric; returns normally otherwise.
void validate(std::vector<std::vector<Integer>> const& rows);

Integer determinant(GramMatrix const& g);
bool is_unimodular(GramMatrix const& g);

enum class Definiteness {
  kPositiveDefinite,
  kNegativeDefinite,
  kIndefinite,
  kDegenerate,
};
std::string_view to_string(Definiteness d);

enum class Parity { kEven, kOdd };
std::string_view to_string(Parity p);

// Counts of positive, negative and zero diagonal entries of any rational
// congruence diagonalization (Sylvester's law of inertia).
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(Inertia const&, Inertia const&) = default;
};

// Leading principal minor signs when the chain is conclusive, exact
// congruence diagonalization otherwise.
Inertia inertia(GramMatrix const& g);
// Always the diagonalization route; test oracle for inertia().
Inertia inertia_by_diagonalization(GramMatrix const& g);

Definiteness definiteness(GramMatrix const& g);
Parity parity(GramMatrix const& g);
// Throws DegenerateForm.
long signature(GramMatrix const& g);

GramMatrix direct_sum(GramMatrix const& a, GramMatrix const& b);
// Returns u^T g u. Throws NotUnimodularTransform unless det(u) = +-1,
// BadShape on a size mismatch.
GramMatrix basis_change(GramMatrix const& g, IntMatrix const& u);

// Q(x) = sum_i diag[i] * (x_i + sum_{j>i} upper(i,j) x_j)^2.
class RationalCholesky {
 public:
  RationalCholesky(std::vector<Rational> diag, std::vector<Rational> upper);

  std::size_t rank() const { return diag_.size(); }
  Rational const& diag(std::size_t i) const { return diag_[i]; }
  // Zero for j <= i.
  Rational const& upper(std::size_t i, std::size_t j) const {
    return upper_[i * diag_.size() + j];
  }
  Rational evaluate(std::span<Rational const> x) const;

 private:
  std::vector<Rational> diag_;
  std::vector<Rational> upper_;
};

// Throws NotPositiveDefinite.
RationalCholesky cholesky(GramMatrix const& g);

// Diagonal of g^-1, exact. Throws DegenerateForm.
std::vector<Rational> inverse_diagonal(GramMatrix const& g);

}  // namespace latgate

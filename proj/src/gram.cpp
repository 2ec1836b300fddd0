#include "latgate/gram.hpp"

#include <string>
#include <utility>

#include "latgate/error.hpp"

namespace latgate {

IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Integer>> const& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kBadShape,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kBadShape, "matrix product of mismatched sizes");
  }
  std::size_t const n = a.size();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Integer determinant(IntMatrix const& input) {
  std::size_t const n = input.size();
  if (n == 0) return Integer(1);
  IntMatrix m = input;
  Integer previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division: Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous_pivot;
      }
    }
    previous_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void validate(std::vector<std::vector<Integer>> const& rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kBadShape, "rank must be at least 1");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::kBadShape,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(rows.size()));
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::kNotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differs from (" + std::to_string(j) + "," +
                        std::to_string(i) + ")");
      }
    }
  }
}

GramMatrix GramMatrix::from_rows(
    std::vector<std::vector<Integer>> const& rows) {
  validate(rows);
  return GramMatrix(IntMatrix::from_rows(rows));
}

GramMatrix GramMatrix::from_matrix(IntMatrix m) {
  if (m.size() == 0) {
    throw Error(ErrorCode::kBadShape, "rank must be at least 1");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m(i, j) != m(j, i)) {
        throw Error(ErrorCode::kNotSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differs from its transpose");
      }
    }
  }
  return GramMatrix(std::move(m));
}

GramMatrix GramMatrix::identity(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kBadShape, "rank must be at least 1");
  return GramMatrix(IntMatrix::identity(n));
}

GramMatrix GramMatrix::diagonal(std::vector<Integer> const& diag) {
  IntMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return from_matrix(std::move(m));
}

std::vector<std::vector<Integer>> GramMatrix::rows() const {
  std::vector<std::vector<Integer>> out(rank(), std::vector<Integer>(rank()));
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) out[i][j] = matrix_(i, j);
  }
  return out;
}

Integer GramMatrix::pair(std::span<Integer const> x,
                         std::span<Integer const> y) const {
  Integer total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += matrix_(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

Rational GramMatrix::norm(std::span<Rational const> x) const {
  Rational total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    total += Rational(matrix_(i, i)) * x[i] * x[i];
    for (std::size_t j = i + 1; j < rank(); ++j) {
      total += 2 * Rational(matrix_(i, j)) * x[i] * x[j];
    }
  }
  return total;
}

GramMatrix GramMatrix::negated() const {
  IntMatrix m = matrix_;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = -m(i, j);
  }
  return GramMatrix(std::move(m));
}

Integer determinant(GramMatrix const& g) { return determinant(g.matrix()); }

bool is_unimodular(GramMatrix const& g) {
  Integer const d = determinant(g);
  return d == 1 || d == -1;
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::kPositiveDefinite: return "PositiveDefinite";
    case Definiteness::kNegativeDefinite: return "NegativeDefinite";
    case Definiteness::kIndefinite: return "Indefinite";
    case Definiteness::kDegenerate: return "Degenerate";
  }
  return "Unknown";
}

std::string_view to_string(Parity p) {
  return p == Parity::kEven ? "Even" : "Odd";
}

namespace {

// Leading principal minors D_1..D_n by Bareiss elimination without
// pivoting; stops at the first zero minor.
std::vector<Integer> leading_minors(GramMatrix const& g) {
  std::size_t const n = g.rank();
  IntMatrix m = g.matrix();
  std::vector<Integer> minors;
  Integer previous_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m(k, k));
    if (m(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous_pivot;
      }
    }
    previous_pivot = m(k, k);
  }
  return minors;
}

}  // namespace

Inertia inertia_by_diagonalization(GramMatrix const& g) {
  std::size_t const n = g.rank();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(g(i, j));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Rational& {
    return a[i * n + j];
  };
  auto swap_index = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(at(i, p), at(i, q));
  };
  // Congruence x_p <- x_p + x_q.
  auto add_index = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) at(p, j) += at(q, j);
    for (std::size_t i = 0; i < n; ++i) at(i, p) += at(i, q);
  };

  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, pivot) == 0) ++pivot;
      if (pivot < n) {
        swap_index(k, pivot);
      } else {
        std::size_t partner = k + 1;
        while (partner < n && at(k, partner) == 0) ++partner;
        if (partner == n) {
          ++result.zero;
          continue;
        }
        // a_kk = 0 = a_pp, so the new a_kk = 2 a_kp != 0.
        add_index(k, partner);
      }
    }
    Rational const pivot_value = at(k, k);
    (pivot_value > 0 ? result.positive : result.negative) += 1;
    // Schur complement on the trailing block; column k is read before any
    // row below it changes.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      Rational const factor = at(i, k) / pivot_value;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      at(i, k) = 0;
      at(k, i) = 0;
    }
  }
  return result;
}

Inertia inertia(GramMatrix const& g) {
  std::vector<Integer> const minors = leading_minors(g);
  if (minors.size() < g.rank() || minors.back() == 0) {
    return inertia_by_diagonalization(g);
  }
  Inertia result;
  int previous_sign = 1;
  for (Integer const& minor : minors) {
    int const s = minor > 0 ? 1 : -1;
    (s == previous_sign ? result.positive : result.negative) += 1;
    previous_sign = s;
  }
  return result;
}

Definiteness definiteness(GramMatrix const& g) {
  Inertia const in = inertia(g);
  if (in.positive > 0 && in.negative > 0) return Definiteness::kIndefinite;
  if (in.zero > 0) return Definiteness::kDegenerate;
  return in.negative == 0 ? Definiteness::kPositiveDefinite
                          : Definiteness::kNegativeDefinite;
}

Parity parity(GramMatrix const& g) {
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (boost::multiprecision::bit_test(boost::multiprecision::abs(g(i, i)),
                                        0)) {
      return Parity::kOdd;
    }
  }
  return Parity::kEven;
}

long signature(GramMatrix const& g) {
  Inertia const in = inertia(g);
  if (in.zero > 0) {
    throw Error(ErrorCode::kDegenerateForm,
                "signature of a degenerate form (nullity " +
                    std::to_string(in.zero) + ")");
  }
  return static_cast<long>(in.positive) - static_cast<long>(in.negative);
}

GramMatrix direct_sum(GramMatrix const& a, GramMatrix const& b) {
  std::size_t const n = a.rank() + b.rank();
  IntMatrix m(n);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) {
      m(a.rank() + i, a.rank() + j) = b(i, j);
    }
  }
  return GramMatrix::from_matrix(std::move(m));
}

GramMatrix basis_change(GramMatrix const& g, IntMatrix const& u) {
  if (u.size() != g.rank()) {
    throw Error(ErrorCode::kBadShape, "transform size " +
                                          std::to_string(u.size()) +
                                          " does not match rank " +
                                          std::to_string(g.rank()));
  }
  Integer const d = determinant(u);
  if (d != 1 && d != -1) {
    throw Error(ErrorCode::kNotUnimodularTransform,
                "transform determinant is " + d.str());
  }
  return GramMatrix::from_matrix(u.transpose() * g.matrix() * u);
}

RationalCholesky::RationalCholesky(std::vector<Rational> diag,
                                   std::vector<Rational> upper)
    : diag_(std::move(diag)), upper_(std::move(upper)) {}

Rational RationalCholesky::evaluate(std::span<Rational const> x) const {
  std::size_t const n = rank();
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational term = x[i];
    for (std::size_t j = i + 1; j < n; ++j) term += upper(i, j) * x[j];
    total += diag_[i] * term * term;
  }
  return total;
}

RationalCholesky cholesky(GramMatrix const& g) {
  std::size_t const n = g.rank();
  std::vector<Rational> diag(n);
  std::vector<Rational> upper(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = Rational(g(i, i));
    for (std::size_t k = 0; k < i; ++k) {
      Rational const& mu = upper[k * n + i];
      d -= diag[k] * mu * mu;
    }
    if (d <= 0) {
      throw Error(ErrorCode::kNotPositiveDefinite,
                  "pivot " + std::to_string(i) + " is " + d.str());
    }
    diag[i] = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = Rational(g(i, j));
      for (std::size_t k = 0; k < i; ++k) {
        s -= diag[k] * upper[k * n + i] * upper[k * n + j];
      }
      upper[i * n + j] = s / d;
    }
  }
  return RationalCholesky(std::move(diag), std::move(upper));
}

std::vector<Rational> inverse_diagonal(GramMatrix const& g) {
  std::size_t const n = g.rank();
  // Gauss-Jordan on [g | I].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(g(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      throw Error(ErrorCode::kDegenerateForm, "singular Gram matrix");
    }
    std::swap(a[col], a[pivot]);
    Rational const p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational const f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n + i];
  return out;
}

}  // namespace latgate

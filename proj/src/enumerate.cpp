#include "latgate/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "latgate/error.hpp"

namespace latgate {
namespace {

void check_query(EnumQuery const& query) {
  if (query.shift.size() != query.form.rank()) {
    throw Error(ErrorCode::kBadShape,
                "shift has " + std::to_string(query.shift.size()) +
                    " coordinates, form has rank " +
                    std::to_string(query.form.rank()));
  }
  if (query.radius < 0) {
    throw Error(ErrorCode::kInvalidParameter, "negative radius");
  }
}

struct Hit {
  LatticeVector u;
  Rational norm;
};

struct ScaledHit {
  LatticeVector u;
  Integer norm;  // Q(u + t) times the factor's norm scale
};

// The rational Cholesky factor rescaled level by level so that the search
// runs on integers. With T the common denominator of the shift and M_i the
// common denominator of row i of the upper factor, level i works with
//   X_i = M_i T (u_i + t_i + sum_{j>i} upper(i,j) y_j),   y_j = u_j + t_j,
// an integer, and contributes weight_i * X_i^2 to the norm scaled by L.
struct ScaledFactor {
  std::size_t n = 0;
  Integer norm_scale;               // L
  std::vector<Integer> step;        // M_i T: change of X_i per unit of u_i
  std::vector<Integer> weight;      // L d_i / (M_i T)^2
  std::vector<Integer> coupling;    // M_i upper(i,j), row-major
  std::vector<Integer> shift_term;  // M_i T t_i
  std::vector<Integer> scaled_shift;  // T t_i
  Integer shift_den;                  // T

  ScaledFactor(RationalCholesky const& chol, RationalVector const& shift)
      : n(chol.rank()),
        step(n),
        weight(n),
        coupling(n * n),
        shift_term(n),
        scaled_shift(n) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    Integer t_den = 1;
    for (Rational const& t : shift) t_den = lcm(t_den, denominator(t));
    shift_den = t_den;
    std::vector<Integer> row_den(n, Integer(1));
    norm_scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        row_den[i] = lcm(row_den[i], denominator(chol.upper(i, j)));
      }
      step[i] = row_den[i] * t_den;
      Integer const level_den =
          denominator(chol.diag(i)) * step[i] * step[i];
      norm_scale = lcm(norm_scale, level_den);
    }
    for (std::size_t i = 0; i < n; ++i) {
      weight[i] = norm_scale / (denominator(chol.diag(i)) * step[i] * step[i]) *
                  numerator(chol.diag(i));
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational const c = chol.upper(i, j) * row_den[i];
        coupling[i * n + j] = numerator(c);
      }
      scaled_shift[i] = numerator(Rational(shift[i] * t_den));
      shift_term[i] = row_den[i] * scaled_shift[i];
    }
  }
};

// Depth-first search from the last coordinate down to the first. Each level
// fixes u_i to the integers in the exact interval left by the norm budget.
class Search {
 public:
  Search(ScaledFactor const& f, Integer budget, bool minimize)
      : f_(f),
        budget_(std::move(budget)),
        minimize_(minimize),
        n_(f.n),
        u_(n_),
        y_(n_),
        partial_(n_ * (n_ + 1)),
        stale_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      partial_[i * (n_ + 1) + n_] = f_.shift_term[i];
      stale_[i] = n_ - 1;
    }
  }

  // Interval for the top coordinate with nothing fixed yet.
  IntegerInterval top_interval() {
    return interval(n_ - 1, offset(n_ - 1), budget_);
  }

  void run_top(Integer const& z) {
    ++stats_.nodes;
    visit(n_ - 1, offset(n_ - 1), Integer(0), z);
  }

  std::vector<ScaledHit>& hits() { return hits_; }
  Integer const& budget() const { return budget_; }
  EnumStats const& stats() const { return stats_; }

 private:
  // sum_{j>level} coupling(level, j) Y_j + shift term, where Y_j = T y_j.
  // Partial sums are cached per row and refreshed only from the highest
  // coordinate that changed since the row was last used.
  Integer const& offset(std::size_t level) {
    std::size_t& from = stale_[level];
    std::size_t const row = level * (n_ + 1);
    for (std::size_t k = from; k > level; --k) {
      partial_[row + k] =
          partial_[row + k + 1] + f_.coupling[level * n_ + k] * y_[k];
    }
    from = level;
    return partial_[row + level + 1];
  }

  // All z with weight * (step z + s)^2 <= remaining.
  IntegerInterval interval(std::size_t level, Integer const& s,
                           Integer const& remaining) const {
    if (remaining < 0) return {Integer(1), Integer(0)};
    Integer const q = isqrt(remaining / f_.weight[level]);
    Integer const& a = f_.step[level];
    return {ceil_div(-q - s, a), floor_div(q - s, a)};
  }

  void visit(std::size_t level, Integer const& s, Integer const& used,
             Integer const& z) {
    Integer const x = f_.step[level] * z + s;
    Integer const total = used + f_.weight[level] * x * x;
    if (total > budget_) return;  // budget shrank since the interval was cut
    u_[level] = z;
    y_[level] = f_.scaled_shift[level] + f_.shift_den * z;
    for (std::size_t i = 0; i < level; ++i) {
      stale_[i] = std::max(stale_[i], level);
    }
    if (level == 0) {
      record(total);
    } else {
      descend(level - 1, total);
    }
  }

  void descend(std::size_t level, Integer const& used) {
    Integer const s = offset(level);  // copy: the cache row may be refreshed
    IntegerInterval const range = interval(level, s, budget_ - used);
    if (range.empty()) {
      ++stats_.prunes;
      return;
    }
    for (Integer z = range.lo; z <= range.hi; ++z) {
      ++stats_.nodes;
      visit(level, s, used, z);
    }
  }

  void record(Integer const& norm) {
    ++stats_.leaves;
    if (minimize_ && norm < budget_) {
      hits_.clear();
      budget_ = norm;
      ++stats_.radius_shrinks;
    }
    hits_.push_back({u_, norm});
  }

  ScaledFactor const& f_;
  Integer budget_;
  bool minimize_;
  std::size_t n_;
  LatticeVector u_;
  std::vector<Integer> y_;  // T (u_j + t_j)
  std::vector<Integer> partial_;
  std::vector<std::size_t> stale_;
  std::vector<ScaledHit> hits_;
  EnumStats stats_;
};

void add_stats(EnumStats& into, EnumStats const& from) {
  into.nodes += from.nodes;
  into.leaves += from.leaves;
  into.prunes += from.prunes;
  into.radius_shrinks += from.radius_shrinks;
}

EnumResult finish(std::vector<Hit> hits) {
  std::sort(hits.begin(), hits.end(),
            [](Hit const& a, Hit const& b) { return a.u < b.u; });
  EnumResult result;
  result.vectors.reserve(hits.size());
  result.norms.reserve(hits.size());
  for (Hit& h : hits) {
    result.vectors.push_back(std::move(h.u));
    result.norms.push_back(std::move(h.norm));
  }
  return result;
}

EnumResult run(EnumQuery const& query, EnumOptions const& options,
               bool minimize) {
  check_query(query);
  if (query.form.rank() > options.rank_cap) {
    throw Error(ErrorCode::kRankCapExceeded,
                "rank " + std::to_string(query.form.rank()) +
                    " exceeds cap " + std::to_string(options.rank_cap));
  }
  RationalCholesky const chol = cholesky(query.form);
  ScaledFactor const factor(chol, query.shift);
  // Scaled norms are integers, so Q <= R iff scaled Q <= floor(R L).
  Integer const budget = floor(query.radius * factor.norm_scale);

  Search probe(factor, budget, minimize);
  IntegerInterval const top = probe.top_interval();
  std::vector<Integer> top_values;
  for (Integer z = top.lo; z <= top.hi; ++z) top_values.push_back(z);

  std::size_t const workers =
      std::max<std::size_t>(1, std::min(options.workers, top_values.size()));
  std::vector<Search> searches;
  searches.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    searches.emplace_back(factor, budget, minimize);
  }
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < top_values.size(); i += workers) {
      searches[w].run_top(top_values[i]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  std::vector<Hit> hits;
  EnumStats stats;
  if (top.empty()) ++stats.prunes;
  Integer best = budget;
  for (Search& s : searches) {
    add_stats(stats, s.stats());
    if (minimize && !s.hits().empty()) best = std::min(best, s.budget());
  }
  for (Search& s : searches) {
    for (ScaledHit& h : s.hits()) {
      if (!minimize || h.norm == best) {
        hits.push_back({std::move(h.u), Rational(h.norm, factor.norm_scale)});
      }
    }
  }
  if (options.stats != nullptr) add_stats(*options.stats, stats);
  return finish(std::move(hits));
}

}  // namespace

EnumResult enumerate_coset(EnumQuery const& query, EnumOptions const& options) {
  return run(query, options, /*minimize=*/false);
}

EnumResult minimize_coset(EnumQuery const& query, EnumOptions const& options) {
  return run(query, options, /*minimize=*/true);
}

EnumResult brute_force_coset(EnumQuery const& query, Integer const& box) {
  if (box < 0) throw Error(ErrorCode::kInvalidParameter, "negative box");
  return brute_force_coset(
      query, std::vector<IntegerInterval>(query.form.rank(), {-box, box}));
}

EnumResult brute_force_coset(EnumQuery const& query,
                             std::vector<IntegerInterval> const& ranges) {
  check_query(query);
  if (definiteness(query.form) != Definiteness::kPositiveDefinite) {
    throw Error(ErrorCode::kNotPositiveDefinite, "brute-force oracle");
  }
  std::size_t const n = query.form.rank();
  if (ranges.size() != n) {
    throw Error(ErrorCode::kBadShape, "one range per coordinate expected");
  }
  for (IntegerInterval const& r : ranges) {
    if (r.empty()) return {};
  }
  GramMatrix const& g = query.form;

  // Integer scaling: Y = D(u + t), Q(u + t) = Y^T G Y / D^2.
  Integer scale = 1;
  for (Rational const& t : query.shift) {
    scale = boost::multiprecision::lcm(scale,
                                       boost::multiprecision::denominator(t));
  }
  Integer const bound_num = boost::multiprecision::numerator(query.radius) *
                            scale * scale;
  Integer const bound_den = boost::multiprecision::denominator(query.radius);

  LatticeVector u(n);
  std::vector<Integer> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = ranges[i].lo;
    y[i] = scale * u[i] +
           boost::multiprecision::numerator(query.shift[i]) *
               (scale / boost::multiprecision::denominator(query.shift[i]));
  }
  std::vector<Integer> gy(n);
  Integer q = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gy[i] += g(i, j) * y[j];
    q += y[i] * gy[i];
  }
  // Moves u_k by delta_u and updates Q and G y incrementally.
  auto shift_coordinate = [&](std::size_t k, Integer const& delta_u) {
    Integer const delta = delta_u * scale;
    q += 2 * delta * gy[k] + delta * delta * g(k, k);
    for (std::size_t i = 0; i < n; ++i) gy[i] += delta * g(i, k);
    y[k] += delta;
    u[k] += delta_u;
  };

  std::vector<Hit> hits;
  Integer const scale_sq = scale * scale;
  while (true) {
    if (q * bound_den <= bound_num) {
      hits.push_back({u, Rational(q, scale_sq)});
    }
    std::size_t k = 0;
    while (k < n && u[k] == ranges[k].hi) {
      shift_coordinate(k, ranges[k].lo - ranges[k].hi);
      ++k;
    }
    if (k == n) break;
    shift_coordinate(k, Integer(1));
  }
  return finish(std::move(hits));
}

namespace {

// floor(c + sqrt(r2)) for r2 >= 0.
Integer floor_plus_sqrt(Rational const& c, Rational const& r2) {
  Integer z = floor(c) + ceil_sqrt(r2) + 1;
  while (true) {
    Rational const d = Rational(z) - c;
    if (d <= 0 || d * d <= r2) return z;
    --z;
  }
}

}  // namespace

std::vector<IntegerInterval> coordinate_ranges(EnumQuery const& query) {
  check_query(query);
  if (definiteness(query.form) != Definiteness::kPositiveDefinite) {
    throw Error(ErrorCode::kNotPositiveDefinite, "coordinate_ranges");
  }
  std::vector<Rational> const inv = inverse_diagonal(query.form);
  std::vector<IntegerInterval> ranges;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    Rational const r2 = query.radius * inv[i];
    Rational const t = query.shift[i];
    // -t - sqrt(r2) <= u_i <= -t + sqrt(r2)
    ranges.push_back({-floor_plus_sqrt(t, r2), floor_plus_sqrt(-t, r2)});
  }
  return ranges;
}

Integer sufficient_box(EnumQuery const& query) {
  Integer box = 1;
  for (IntegerInterval const& r : coordinate_ranges(query)) {
    Integer const lo = boost::multiprecision::abs(r.lo);
    Integer const hi = boost::multiprecision::abs(r.hi);
    box = std::max({box, lo, hi});
  }
  return box;
}

}  // namespace latgate

#include "latgate/random_basis.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace latgate {

IntMatrix random_unimodular(std::size_t n, int bound, std::mt19937_64& rng) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && std::bernoulli_distribution(0.5)(rng)) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t const steps = 4 * n * n;
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t const i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    int const sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    bool fits = true;
    for (std::size_t r = 0; r < n && fits; ++r) {
      Integer const v = u(r, i) + sign * u(r, j);
      fits = v >= -bound && v <= bound;
    }
    if (!fits) continue;
    for (std::size_t r = 0; r < n; ++r) u(r, i) += sign * u(r, j);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix out(n);
  for (std::size_t c = 0; c < n; ++c) {
    int const sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    for (std::size_t r = 0; r < n; ++r) out(r, c) = sign * u(r, perm[c]);
  }
  return out;
}

}  // namespace latgate

#pragma once

#include <cstddef>
#include <random>

#include "latgate/gram.hpp"

namespace latgate {

// Random element of GL(n, Z) with every entry in [-bound, bound]: a random
// walk of elementary column operations that rejects steps leaving the box,
// followed by a random signed permutation.
IntMatrix random_unimodular(std::size_t n, int bound, std::mt19937_64& rng);

}  // namespace latgate

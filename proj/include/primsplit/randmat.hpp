#pragma once

#include "primsplit/matrix.hpp"

#include <cstdint>
#include <random>

namespace primsplit {

/// Random unimodular integer matrix (product of elementary shears and swaps),
/// so the exact inverse exists and entries stay small.
Matrix random_unimodular(std::mt19937_64& rng, std::size_t n);

} // namespace primsplit

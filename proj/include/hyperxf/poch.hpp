#pragma once

#include <cstddef>

#include "hyperxf/rat.hpp"

namespace hyperxf {

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Rat poch(const Rat& a, std::size_t k);

/// (s - g)_k (s + g)_k where g^2 = square, computed as
/// prod_{j<k} ((s+j)^2 - square). No square root is ever taken, so `square`
/// may be negative or a non-square.
Rat paired_poch(const Rat& s, const Rat& square, std::size_t k);

Rat factorial(std::size_t k);

}  // namespace hyperxf

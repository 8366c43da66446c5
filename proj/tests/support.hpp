#pragma once

// Shared helpers for the unit suites: a seeded rational generator and
// brute-force oracles that never call into the library's evaluation paths.

#include <cstdint>
#include <random>
#include <vector>

#include "hyperxf/rat.hpp"

namespace hyperxf::testing {

class RatGen {
 public:
  explicit RatGen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }
  Rat rational(long lo = -9, long hi = 9, long max_den = 5) {
    return Rat(integer(lo, hi), integer(1, max_den));
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Falling-product oracle: a(a+1)...(a+k-1) by literal multiplication.
inline Rat naive_product(const Rat& a, std::size_t k) {
  Rat out(1);
  for (std::size_t j = 0; j < k; ++j) out = out * (a + Rat(static_cast<unsigned long>(j)));
  return out;
}

/// Brute-force hypergeometric sum of terms 0..n straight from the defining
/// product formula.
inline Rat brute_sum(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Rat& z,
                     std::size_t n) {
  Rat total(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat num(1);
    Rat den(1);
    for (const auto& u : upper) num = num * naive_product(u, k);
    for (const auto& l : lower) den = den * naive_product(l, k);
    den = den * naive_product(Rat(1), k);
    Rat zk(1);
    for (std::size_t j = 0; j < k; ++j) zk = zk * z;
    total = total + num * zk / den;
  }
  return total;
}

/// Taylor coefficients of (1 - x)^alpha from the k-th derivative at 0:
/// d^k/dx^k (1-x)^alpha = (-1)^k alpha (alpha-1) ... (alpha-k+1) (1-x)^(alpha-k).
inline std::vector<Rat> binomial_by_derivatives(const Rat& alpha, std::size_t order) {
  std::vector<Rat> out;
  Rat falling(1);
  Rat fact(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) {
      falling = falling * (alpha - Rat(static_cast<unsigned long>(k - 1)));
      fact = fact * Rat(static_cast<unsigned long>(k));
    }
    const Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    out.push_back(sign * falling / fact);
  }
  return out;
}

}  // namespace hyperxf::testing

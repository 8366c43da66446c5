#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperxf/rat.hpp"

namespace hyperxf {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N over the rationals.
///
/// Binary operations require equal orders and throw Error(OrderMismatch)
/// otherwise; every result has the order of its operands.
class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Takes ownership of `coeffs`; order = coeffs.size() - 1. Throws on empty.
  explicit PowerSeries(std::vector<Rat> coeffs);

  static PowerSeries constant(const Rat& c, std::size_t order);
  static PowerSeries one(std::size_t order) { return constant(Rat(1), order); }
  /// c0 + c1 x.
  static PowerSeries linear(const Rat& c0, const Rat& c1, std::size_t order);
  /// x^k (zero if k > order).
  static PowerSeries monomial(std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rat> coeffs() const noexcept { return coeffs_; }
  const Rat& operator[](std::size_t k) const { return coeffs_.at(k); }

  bool is_zero() const;
  /// Evaluates the truncated polynomial at x.
  Rat evaluate(const Rat& x) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rat> coeffs_;
};

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries ps_scale(const Rat& s, const PowerSeries& p);
/// Truncated Cauchy product.
PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
/// Multiplicative inverse; throws Error(NotInvertible) on a zero constant term.
PowerSeries ps_invert(const PowerSeries& p);
/// (1 - x)^alpha: coefficient of x^k is (-alpha)_k / k!.
PowerSeries ps_binomial_one_minus_x(const Rat& alpha, std::size_t order);

}  // namespace hyperxf

#include "hyperxf/power_series.hpp"

#include <string>

#include "hyperxf/error.hpp"

namespace hyperxf {

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch,
                "power series order mismatch: " + std::to_string(a.order()) +
                    " vs " + std::to_string(b.order()));
  }
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const Rat& c, std::size_t order) {
  PowerSeries p(order);
  p.coeffs_[0] = c;
  return p;
}

PowerSeries PowerSeries::linear(const Rat& c0, const Rat& c1, std::size_t order) {
  PowerSeries p(order);
  p.coeffs_[0] = c0;
  if (order >= 1) p.coeffs_[1] = c1;
  return p;
}

PowerSeries PowerSeries::monomial(std::size_t k, std::size_t order) {
  PowerSeries p(order);
  if (k <= order) p.coeffs_[k] = Rat(1);
  return p;
}

bool PowerSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Rat PowerSeries::evaluate(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  std::vector<Rat> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return PowerSeries(std::move(c));
}

PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
  return ps_add(a, ps_scale(Rat(-1), b));
}

PowerSeries ps_scale(const Rat& s, const PowerSeries& p) {
  std::vector<Rat> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<Rat> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_invert(const PowerSeries& p) {
  if (p[0].is_zero()) {
    throw Error(ErrorKind::NotInvertible, "not invertible as a power series (zero constant term)");
  }
  const std::size_t n = p.order();
  const Rat inv0 = Rat(1) / p[0];
  std::vector<Rat> q(n + 1);
  q[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat s(0);
    for (std::size_t i = 1; i <= k; ++i) s += p[i] * q[k - i];
    q[k] = -s * inv0;
  }
  return PowerSeries(std::move(q));
}

PowerSeries ps_binomial_one_minus_x(const Rat& alpha, std::size_t order) {
  // c_k = (-alpha)_k / k!, built by the ratio c_{k+1} = c_k (k - alpha)/(k+1).
  std::vector<Rat> c(order + 1);
  c[0] = Rat(1);
  for (std::size_t k = 0; k < order; ++k) {
    c[k + 1] = c[k] * (Rat(static_cast<long>(k)) - alpha) / Rat(static_cast<long>(k + 1));
  }
  return PowerSeries(std::move(c));
}

}  // namespace hyperxf

#include "hyperxf/summations.hpp"

#include <initializer_list>
#include <string>

#include "hyperxf/error.hpp"
#include "hyperxf/poch.hpp"

namespace hyperxf {

namespace {

const Rat kOne(1);
const Rat kTwo(2);

Rat nrat(std::size_t n) { return Rat(static_cast<unsigned long>(n)); }

Rat aux_ratio(const Rat& num, const Rat& den, const char* den_text, const char* symbol) {
  if (den.is_zero()) {
    throw Error(ErrorKind::AuxDenominatorZero,
                std::string("aux denominator zero: ") + den_text + " = 0 (" + symbol + ")");
  }
  return num / den;
}

struct Named {
  Rat value;
  const char* text;
};

// prod (num)_n / prod (den)_n, naming the first vanishing denominator.
Rat poch_quotient(std::initializer_list<Rat> nums, std::initializer_list<Named> dens, std::size_t n) {
  Rat out(1);
  for (const auto& d : dens) {
    const Rat v = poch(d.value, n);
    if (v.is_zero()) {
      throw Error(ErrorKind::DegenerateClosedForm, std::string("degenerate closed form: (") + d.text + ")_n = 0");
    }
    out /= v;
  }
  for (const auto& u : nums) out *= poch(u, n);
  return out;
}

void require_lower(const SeriesSpec& lhs, std::size_t n) {
  if (auto why = find_degenerate_lower(lhs, n)) {
    throw Error(ErrorKind::DegenerateLower, "degenerate lower parameter at " + *why);
  }
}

SeriesSpec unit_terminating(std::vector<Rat> up, std::vector<Rat> lo, std::size_t n) {
  SeriesSpec s;
  s.upper = std::move(up);
  s.lower = std::move(lo);
  s.arg = Rat(1);
  s.mode = Terminating{n};
  return s;
}

}  // namespace

Rat aux_ecv_q(const Rat& a, const Rat& b, const Rat& p) {
  return aux_ratio(p * (b - a - kOne), p - a, "p - a", "q");
}

Rat aux_rr_q(const Rat& a, const Rat& b, const Rat& c, const Rat& p) {
  return aux_ratio(p * (c - a - kOne) * (c - b - kOne), a * b + p * (c - a - b - kOne),
                   "ab + p(c-a-b-1)", "q");
}

Rat aux_rr_gamma1(const Rat& a, const Rat& b, const Rat& c, const Rat& p) {
  return aux_ratio(p * (a - p) * (b + c - a), b * c - p * (a - p), "bc - p(a-p)", "gamma");
}

Rat aux_svf_alpha(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n) {
  const Rat num = p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d);
  const Rat first = kTwo * a - b - c - d + nrat(n);
  const Rat second = b * c * d + p * (a - p) * (a - b - c - d);
  if (first.is_zero()) {
    throw Error(ErrorKind::AuxDenominatorZero, "aux denominator zero: 2a-b-c-d+n = 0 (alpha)");
  }
  return aux_ratio(num, first * second, "bcd + p(a-p)(a-b-c-d)", "alpha");
}

Rat aux_svf_gamma_sq(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p) {
  const Rat lambda = kTwo * a - b - c - d;
  return lambda * lambda / Rat(4) -
         aux_ratio(p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d), b * c * d + p * (a - p) * (a - b - c - d),
                   "bcd + p(a-p)(a-b-c-d)", "gamma^2");
}

SeriesSpec lhs_ext_chu_vandermonde(const Rat& a, const Rat& b, const Rat& p, std::size_t n) {
  return unit_terminating({a, p + kOne, -nrat(n)}, {b, p}, n);
}

ClosedForm sum_ext_chu_vandermonde(const Rat& a, const Rat& b, const Rat& p, std::size_t n) {
  const Rat q = aux_ecv_q(a, b, p);
  require_lower(lhs_ext_chu_vandermonde(a, b, p, n), n);
  return {poch_quotient({b - a - kOne, q + kOne}, {{b, "b"}, {q, "q"}}, n), {{"q", q}}};
}

SeriesSpec lhs_rakha_rathie(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n) {
  return unit_terminating({a, b, p + kOne, -nrat(n)}, {c, p, kTwo + a + b - c - nrat(n)}, n);
}

ClosedForm sum_rakha_rathie(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n) {
  const Rat q = aux_rr_q(a, b, c, p);
  require_lower(lhs_rakha_rathie(a, b, c, p, n), n);
  const Rat v = poch_quotient({c - a - kOne, c - b - kOne, q + kOne},
                              {{c, "c"}, {c - a - b - kOne, "c-a-b-1"}, {q, "q"}}, n);
  return {v, {{"q", q}}};
}

SeriesSpec lhs_rr_formA(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n) {
  const Rat g = aux_rr_gamma1(a, b, c, p);
  return unit_terminating({a - b - c, g + kOne, a + nrat(n), -nrat(n)}, {kOne + a - b, kOne + a - c, g}, n);
}

ClosedForm sum_rr_formA(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n) {
  const Rat g = aux_rr_gamma1(a, b, c, p);
  require_lower(lhs_rr_formA(a, b, c, p, n), n);
  const Rat v = poch_quotient({b, c, a - p + kOne, p + kOne},
                              {{kOne + a - b, "1+a-b"}, {kOne + a - c, "1+a-c"}, {p, "p"}, {a - p, "a-p"}}, n);
  return {v, {{"gamma1", g}}};
}

SeriesSpec lhs_rr_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n) {
  const Rat g = aux_rr_q(a, b, c, p);
  return unit_terminating({c - a - kOne, c - b - kOne, g + kOne, -nrat(n)}, {c, g, c - a - b - nrat(n)}, n);
}

ClosedForm sum_rr_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n) {
  const Rat g = aux_rr_q(a, b, c, p);
  require_lower(lhs_rr_formB(a, b, c, p, n), n);
  const Rat v = poch_quotient({a, b, p + kOne}, {{c, "c"}, {kOne + a + b - c, "1+a+b-c"}, {p, "p"}}, n);
  return {v, {{"gamma2", g}}};
}

SeriesSpec lhs_svf_9f8(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n) {
  const Rat nn = nrat(n);
  return unit_terminating(
      {a, kOne + a / kTwo, b, c, d, kTwo * a - b - c - d + nn, a - p + kOne, p + kOne, -nn},
      {a / kTwo, kOne + a - b, kOne + a - c, kOne + a - d, kOne + b + c + d - a - nn, p, a - p, kOne + a + nn}, n);
}

ClosedForm sum_svf_9f8(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n) {
  const Rat alpha = aux_svf_alpha(a, b, c, d, p, n);
  require_lower(lhs_svf_9f8(a, b, c, d, p, n), n);
  const Rat v = poch_quotient({kOne + a, a - b - c, a - b - d, a - c - d, alpha + kOne},
                              {{kOne + a - b, "1+a-b"},
                               {kOne + a - c, "1+a-c"},
                               {kOne + a - d, "1+a-d"},
                               {a - b - c - d, "a-b-c-d"},
                               {alpha, "alpha"}},
                              n);
  return {v, {{"alpha", alpha}}};
}

SeriesSpec lhs_svf_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n) {
  const Rat nn = nrat(n);
  const Rat lambda = kTwo * a - b - c - d;
  const Rat g2 = aux_svf_gamma_sq(a, b, c, d, p);
  SeriesSpec s = unit_terminating(
      {lambda, kOne + lambda / kTwo, lambda + b - a, lambda + c - a, lambda + d - a, a + nn, -nn},
      {lambda / kTwo, kOne + a - b, kOne + a - c, kOne + a - d, kOne + lambda - a - nn, kOne + lambda + nn}, n);
  s.upper_pairs = {{lambda / kTwo + kOne, g2}};
  s.lower_pairs = {{lambda / kTwo, g2}};
  return s;
}

ClosedForm sum_svf_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n) {
  const Rat lambda = kTwo * a - b - c - d;
  const Rat g2 = aux_svf_gamma_sq(a, b, c, d, p);
  require_lower(lhs_svf_formB(a, b, c, d, p, n), n);
  const Rat v = poch_quotient({kOne + lambda, b, c, d, a - p + kOne, p + kOne},
                              {{a - lambda, "a-lambda"},
                               {kOne + a - b, "1+a-b"},
                               {kOne + a - c, "1+a-c"},
                               {kOne + a - d, "1+a-d"},
                               {p, "p"},
                               {a - p, "a-p"}},
                              n);
  return {v, {{"lambda", lambda}, {"gamma^2", g2}}};
}

SeriesSpec lhs_chu_vandermonde(const Rat& a, const Rat& b, std::size_t n) {
  return unit_terminating({a, -nrat(n)}, {b}, n);
}

ClosedForm sum_chu_vandermonde(const Rat& a, const Rat& b, std::size_t n) {
  require_lower(lhs_chu_vandermonde(a, b, n), n);
  return {poch_quotient({b - a}, {{b, "b"}}, n), {}};
}

SeriesSpec lhs_pfaff_saalschutz(const Rat& a, const Rat& b, const Rat& c, std::size_t n) {
  return unit_terminating({a, b, -nrat(n)}, {c, kOne + a + b - c - nrat(n)}, n);
}

ClosedForm sum_pfaff_saalschutz(const Rat& a, const Rat& b, const Rat& c, std::size_t n) {
  require_lower(lhs_pfaff_saalschutz(a, b, c, n), n);
  return {poch_quotient({c - a, c - b}, {{c, "c"}, {c - a - b, "c-a-b"}}, n), {}};
}

SeriesSpec lhs_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::size_t n) {
  const Rat nn = nrat(n);
  return unit_terminating({a, kOne + a / kTwo, b, c, d, kOne + kTwo * a - b - c - d + nn, -nn},
                          {a / kTwo, kOne + a - b, kOne + a - c, kOne + a - d, b + c + d - a - nn, kOne + a + nn}, n);
}

ClosedForm sum_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::size_t n) {
  require_lower(lhs_dougall(a, b, c, d, n), n);
  const Rat v = poch_quotient({kOne + a, kOne + a - b - c, kOne + a - b - d, kOne + a - c - d},
                              {{kOne + a - b, "1+a-b"},
                               {kOne + a - c, "1+a-c"},
                               {kOne + a - d, "1+a-d"},
                               {kOne + a - b - c - d, "1+a-b-c-d"}},
                              n);
  return {v, {}};
}

}  // namespace hyperxf

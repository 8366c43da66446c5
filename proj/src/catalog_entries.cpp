#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hyperxf/catalog.hpp"
#include "hyperxf/error.hpp"
#include "hyperxf/summations.hpp"

namespace hyperxf {

namespace {

const Rat kHalf(1, 2);

template <typename... Names>
std::array<Rat, sizeof...(Names)> params(const ParamEnv& env, Names... names) {
  return {env.at(names)...};
}

Rat quotient(const Rat& num, const Rat& den, const std::string& what) {
  if (den.is_zero()) throw Error(ErrorKind::AuxDenominatorZero, "aux denominator zero: " + what);
  return num / den;
}

Rat nrat(std::size_t n) { return Rat(static_cast<unsigned long>(n)); }

SeriesSpec terminating(std::vector<Rat> upper, std::vector<Rat> lower, std::size_t n, Rat z = Rat(1),
                       std::vector<ConjugatePair> up = {}, std::vector<ConjugatePair> lo = {}) {
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.upper_pairs = std::move(up);
  s.lower_pairs = std::move(lo);
  s.arg = std::move(z);
  s.mode = Terminating{n};
  return s;
}

SeriesSpec formal(std::vector<Rat> upper, std::vector<Rat> lower, Argument arg, std::size_t order) {
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.arg = std::move(arg);
  s.mode = Formal{order};
  return s;
}

SeriesSpec partial(std::vector<Rat> upper, std::vector<Rat> lower, Rat z, std::size_t terms) {
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.arg = std::move(z);
  s.mode = Partial{terms};
  return s;
}

Side plain(SeriesSpec s, bool saal = false, bool vwp = false) {
  Side side;
  side.body = std::move(s);
  side.saalschutzian = saal;
  side.very_well_poised = vwp;
  return side;
}

Side with_prefactor(std::vector<Factor> pre, SeriesSpec s, bool saal = false, bool vwp = false) {
  Side side = plain(std::move(s), saal, vwp);
  side.prefactor = std::move(pre);
  return side;
}

Side closed(const Rat& value) {
  Side side;
  side.prefactor.push_back(Scalar{value});
  return side;
}

std::vector<Rat> cat(std::vector<Rat> a, const std::vector<Rat>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void append_shifted(std::vector<AffineParam>& out, const std::vector<Rat>& xs) {
  for (const auto& x : xs) out.push_back({x, Rat(1)});
}

BuiltSides from_closed(const SeriesSpec& lhs, const ClosedForm& cf, bool saal = false, bool vwp = false) {
  BuiltSides b;
  for (const auto& [k, v] : cf.aux) b.derived.emplace_back(k, v);
  b.lhs = plain(lhs, saal, vwp);
  b.rhs = closed(cf.value);
  return b;
}

// Shared auxiliaries.

// p(a-p)(b+c-a) / (bc - p(a-p))
Rat gamma_nearly_poised(const Rat& a, const Rat& b, const Rat& c, const Rat& p) {
  return quotient(p * (a - p) * (b + c - a), b * c - p * (a - p), "bc - p(a-p) = 0 (gamma)");
}

// p(c-a-1)(c-b-1) / (ab + p(c-a-b-1)) written for lower parameter d.
Rat gamma_saalschutz(const Rat& a, const Rat& b, const Rat& d, const Rat& p) {
  return quotient(p * (d - a - Rat(1)) * (d - b - Rat(1)), a * b + p * (d - a - b - Rat(1)),
                  "ab + p(d-a-b-1) = 0 (gamma)");
}

Rat alpha_w(const Rat& a, const Rat& q, const Rat& w) {
  return quotient(q * (Rat(1) + a - w), a - q, "a - q = 0 (alpha)");
}

Rat beta_w(const Rat& a, const Rat& q, const Rat& w, std::size_t n) {
  return quotient(q * (Rat(1) + a - w) + nrat(n) * (a - q), Rat(1) + Rat(2) * q - w + nrat(n),
                  "1 + 2q - w + n = 0 (beta)");
}

// Shared 7F6-type bracket p(a-p)(a-b-c)(a-b-d)(a-c-d) / (bcd + p(a-p)(a-b-c-d)).
Rat svf_ratio(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, const std::string& sym) {
  return quotient(p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d), b * c * d + p * (a - p) * (a - b - c - d),
                  "bcd + p(a-p)(a-b-c-d) = 0 (" + sym + ")");
}

// ---- summation theorems ----

BuiltSides build_ecv(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, p] = params(env, "a", "b", "p");
  return from_closed(lhs_ext_chu_vandermonde(a, b, p, env.n), sum_ext_chu_vandermonde(a, b, p, env.n));
}

BuiltSides build_rr(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, p] = params(env, "a", "b", "c", "p");
  return from_closed(lhs_rakha_rathie(a, b, c, p, env.n), sum_rakha_rathie(a, b, c, p, env.n), true);
}

BuiltSides build_rr_a(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, p] = params(env, "a", "b", "c", "p");
  return from_closed(lhs_rr_formA(a, b, c, p, env.n), sum_rr_formA(a, b, c, p, env.n), true);
}

BuiltSides build_rr_b(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, p] = params(env, "a", "b", "c", "p");
  return from_closed(lhs_rr_formB(a, b, c, p, env.n), sum_rr_formB(a, b, c, p, env.n), true);
}

BuiltSides build_svf(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, p] = params(env, "a", "b", "c", "d", "p");
  return from_closed(lhs_svf_9f8(a, b, c, d, p, env.n), sum_svf_9f8(a, b, c, d, p, env.n), false, true);
}

BuiltSides build_svf_b(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, p] = params(env, "a", "b", "c", "d", "p");
  return from_closed(lhs_svf_formB(a, b, c, d, p, env.n), sum_svf_formB(a, b, c, d, p, env.n), false, true);
}

BuiltSides build_cv(const ParamEnv& env, const EvalOptions&) {
  auto [a, b] = params(env, "a", "b");
  return from_closed(lhs_chu_vandermonde(a, b, env.n), sum_chu_vandermonde(a, b, env.n));
}

BuiltSides build_ps(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c] = params(env, "a", "b", "c");
  return from_closed(lhs_pfaff_saalschutz(a, b, c, env.n), sum_pfaff_saalschutz(a, b, c, env.n), true);
}

BuiltSides build_dougall(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d] = params(env, "a", "b", "c", "d");
  return from_closed(lhs_dougall(a, b, c, d, env.n), sum_dougall(a, b, c, d, env.n), false, true);
}

// ---- nearly-poised transformations ----

BuiltSides build_11P1(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, p, x] = params(env, "a", "b", "c", "p", "x");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat g = gamma_nearly_poised(a, b, c, p);
  const auto& A = env.extra_upper;
  const auto& B = env.extra_lower;
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(terminating(cat(cat({a, b, c, a - p + Rat(1), p + Rat(1)}, A), {-N}),
                              cat({Rat(1) + a - b, Rat(1) + a - c, p, a - p}, B), n, x));
  DoubleSum ds;
  ds.outer = terminating(cat(cat({a / Rat(2), (a + Rat(1)) / Rat(2), a - b - c, g + Rat(1)}, A), {-N}),
                         cat({Rat(1) + a - b, Rat(1) + a - c, g}, B), n, Rat(-4) * x);
  ds.inner.upper.push_back({a, Rat(2)});
  append_shifted(ds.inner.upper, A);
  ds.inner.upper.push_back({-N, Rat(1)});
  append_shifted(ds.inner.lower, B);
  ds.inner.arg = x;
  ds.inner.length_base = static_cast<long>(n);
  ds.inner.length_slope = -1;
  out.rhs.body = std::move(ds);
  return out;
}

BuiltSides build_3P16(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, p, q, w] = params(env, "a", "b", "c", "p", "q", "w");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat al = alpha_w(a, q, w);
  const Rat be = beta_w(a, q, w, n);
  const Rat g = gamma_nearly_poised(a, b, c, p);
  BuiltSides out;
  out.derived = {{"alpha", al}, {"beta", be}, {"gamma", g}};
  out.lhs = plain(terminating({a, b, c, a - p + Rat(1), p + Rat(1), q + Rat(1), -N},
                              {Rat(1) + a - b, Rat(1) + a - c, p, a - p, q, w}, n));
  out.rhs = with_prefactor(
      {PochRatio{{w - a - Rat(1), al + Rat(1)}, {w, al}, n}},
      terminating({Rat(1) + a - w, a / Rat(2), (a + Rat(1)) / Rat(2), a - b - c, be + Rat(1), g + Rat(1), -N},
                  {Rat(1) + a - b, Rat(1) + a - c, (Rat(2) + a - w - N) / Rat(2), (Rat(3) + a - w - N) / Rat(2), be, g},
                  n),
      true);
  return out;
}

BuiltSides build_1C3P16(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, p, w] = params(env, "a", "b", "c", "p", "w");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat g = gamma_nearly_poised(a, b, c, p);
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(terminating({a, b, c, a - p + Rat(1), p + Rat(1), -N}, {Rat(1) + a - b, Rat(1) + a - c, p, a - p, w}, n));
  out.rhs = with_prefactor(
      {PochRatio{{w - a}, {w}, n}},
      terminating({Rat(1) + a - w, a / Rat(2), (a + Rat(1)) / Rat(2), a - b - c, g + Rat(1), -N},
                  {Rat(1) + a - b, Rat(1) + a - c, (Rat(1) + a - w - N) / Rat(2), (Rat(2) + a - w - N) / Rat(2), g}, n),
      true);
  return out;
}

BuiltSides build_2C3P16(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, q, w] = params(env, "a", "b", "c", "q", "w");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat al = alpha_w(a, q, w);
  const Rat be = beta_w(a, q, w, n);
  BuiltSides out;
  out.derived = {{"alpha", al}, {"beta", be}};
  out.lhs = plain(terminating({a, b, c, q + Rat(1), -N}, {Rat(1) + a - b, Rat(1) + a - c, q, w}, n));
  out.rhs = with_prefactor(
      {PochRatio{{w - a - Rat(1), al + Rat(1)}, {w, al}, n}},
      terminating({Rat(1) + a - w, a / Rat(2), (a + Rat(1)) / Rat(2), Rat(1) + a - b - c, be + Rat(1), -N},
                  {Rat(1) + a - b, Rat(1) + a - c, (Rat(2) + a - w - N) / Rat(2), (Rat(3) + a - w - N) / Rat(2), be}, n),
      true);
  return out;
}

BuiltSides build_11P2(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, e, p, q, w] = params(env, "a", "b", "c", "d", "e", "p", "q", "w");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat al = alpha_w(a, q, w);
  const Rat be = beta_w(a, q, w, n);
  const Rat g = gamma_nearly_poised(a, b, c, p);
  BuiltSides out;
  out.derived = {{"alpha", al}, {"beta", be}, {"gamma", g}};
  out.lhs = plain(terminating({a, b, c, d, e, a - p + Rat(1), p + Rat(1), q + Rat(1), -N},
                              {Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, Rat(1) + a - e, p, a - p, q, w}, n));
  DoubleSum ds;
  ds.outer = terminating({-N, a / Rat(2), (a + Rat(1)) / Rat(2), Rat(1) + a - w, Rat(1) + a - d - e, be + Rat(1)},
                         {Rat(1) + a - d, Rat(1) + a - e, (Rat(2) + a - w - N) / Rat(2),
                          (Rat(3) + a - w - N) / Rat(2), be},
                         n);
  ds.inner.upper = {{Rat(0), Rat(-1)}, {a - b - c, Rat(0)}, {d, Rat(0)}, {e, Rat(0)}, {g + Rat(1), Rat(0)}};
  ds.inner.lower = {{Rat(1) + a - b, Rat(0)}, {Rat(1) + a - c, Rat(0)}, {d + e - a, Rat(-1)}, {g, Rat(0)}};
  ds.inner.length_base = 0;
  ds.inner.length_slope = 1;
  out.rhs.prefactor = {PochRatio{{w - a - Rat(1), al + Rat(1)}, {w, al}, n}};
  out.rhs.body = std::move(ds);
  return out;
}

BuiltSides build_1e1C11P2(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, e, p] = params(env, "a", "b", "c", "d", "e", "p");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat g = gamma_nearly_poised(a, b, c, p);
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(terminating({a, Rat(1) + a / Rat(2), b, c, d, e, a - p + Rat(1), p + Rat(1), -N},
                              {a / Rat(2), Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, Rat(1) + a - e, p, a - p,
                               Rat(1) + a + N},
                              n),
                  false, true);
  out.rhs = with_prefactor({PochRatio{{Rat(1) + a, Rat(1) + a - d - e}, {Rat(1) + a - d, Rat(1) + a - e}, n}},
                           terminating({a - b - c, d, e, g + Rat(1), -N},
                                       {Rat(1) + a - b, Rat(1) + a - c, d + e - a - N, g}, n),
                           true);
  return out;
}

// ---- Saalschutzian transformations ----

BuiltSides build_12P1(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, p, x] = params(env, "a", "b", "c", "p", "x");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat g = gamma_saalschutz(a, b, c, p);
  const auto& A = env.extra_upper;
  const auto& B = env.extra_lower;
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(terminating(cat(cat({a, b, p + Rat(1)}, A), {-N}), cat({c, p}, B), n, x));
  DoubleSum ds;
  ds.outer = terminating(cat(cat({c - a - Rat(1), c - b - Rat(1), g + Rat(1)}, A), {-N}), cat({c, g}, B), n, x);
  ds.inner.upper.push_back({Rat(1) + a + b - c, Rat(0)});
  append_shifted(ds.inner.upper, A);
  ds.inner.upper.push_back({-N, Rat(1)});
  append_shifted(ds.inner.lower, B);
  ds.inner.arg = x;
  ds.inner.length_base = static_cast<long>(n);
  ds.inner.length_slope = -1;
  out.rhs.body = std::move(ds);
  return out;
}

struct Whipple6 {
  Rat f, alpha, gamma, delta;
};

Whipple6 whipple6_aux(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& p, const Rat& q,
                      std::size_t n) {
  Whipple6 w;
  const Rat N = nrat(n);
  w.f = Rat(3) + a + b + c - d - e - N;
  const Rat u = (e - c - Rat(1)) * (w.f - c - Rat(1));
  const Rat v = (c - q) * (d - a - b - Rat(1));
  w.alpha = quotient(q * u, v, "(c-q)(d-a-b-1) = 0 (alpha)");
  w.gamma = gamma_saalschutz(a, b, d, p);
  w.delta = quotient(q * u + N * v, u - v, "(e-c-1)(f-c-1) - (c-q)(d-a-b-1) = 0 (delta)");
  return w;
}

SeriesSpec whipple6_series(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f,
                           const Rat& p, const Rat& q, std::size_t n) {
  return terminating({a, b, c, p + Rat(1), q + Rat(1), -nrat(n)}, {d, e, f, p, q}, n);
}

BuiltSides build_12P2(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, e, p, q] = params(env, "a", "b", "c", "d", "e", "p", "q");
  const std::size_t n = env.n;
  const Whipple6 w = whipple6_aux(a, b, c, d, e, p, q, n);
  BuiltSides out;
  out.derived = {{"f", w.f}, {"alpha", w.alpha}, {"gamma", w.gamma}, {"delta", w.delta}};
  out.lhs = plain(whipple6_series(a, b, c, d, e, w.f, p, q, n), true);
  const Rat N = nrat(n);
  out.rhs = with_prefactor(
      {PochRatio{{e - c - Rat(1), w.f - c - Rat(1), w.alpha + Rat(1)}, {e, w.f, w.alpha}, n}},
      whipple6_series(d - a - Rat(1), d - b - Rat(1), c, d, Rat(2) + c - e - N, Rat(2) + c - w.f - N, w.gamma,
                      w.delta, n),
      true);
  return out;
}

Side f_tilde_side(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& p, const Rat& q,
                  std::size_t n, Whipple6& aux) {
  aux = whipple6_aux(a, b, c, d, e, p, q, n);
  return with_prefactor({PochRatio{{d, e, aux.f, aux.alpha}, {}, n}},
                        whipple6_series(a, b, c, d, e, aux.f, p, q, n), true);
}

BuiltSides build_1R12P2(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, e, p, q] = params(env, "a", "b", "c", "d", "e", "p", "q");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  BuiltSides out;
  Whipple6 w, wr;
  out.lhs = f_tilde_side(a, b, c, d, e, p, q, n, w);
  out.rhs = f_tilde_side(d - a - Rat(1), d - b - Rat(1), c, d, Rat(2) + c - e - N, w.gamma, w.delta, n, wr);
  out.rhs.prefactor.insert(out.rhs.prefactor.begin(), SignPower{n});
  out.derived = {{"f", w.f}, {"alpha", w.alpha}, {"gamma", w.gamma}, {"delta", w.delta}, {"alpha'", wr.alpha}};
  return out;
}

BuiltSides build_1C12P2(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, e, p] = params(env, "a", "b", "c", "d", "e", "p");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat f = Rat(2) + a + b + c - d - e - N;
  const Rat g = gamma_saalschutz(a, b, d, p);
  BuiltSides out;
  out.derived = {{"f", f}, {"gamma", g}};
  out.lhs = plain(terminating({a, b, c, p + Rat(1), -N}, {d, e, f, p}, n), true);
  out.rhs = with_prefactor({PochRatio{{e - c, f - c}, {e, f}, n}},
                           terminating({d - a - Rat(1), d - b - Rat(1), c, g + Rat(1), -N},
                                       {d, Rat(1) + c - e - N, Rat(1) + c - f - N, g}, n),
                           true);
  return out;
}

BuiltSides build_2C12P2(const ParamEnv& env, const EvalOptions&) {
  auto [a, c, d, e, p] = params(env, "a", "c", "d", "e", "p");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat g = quotient(p * (d - a - Rat(1)), p - a, "p - a = 0 (gamma)");
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(terminating({a, c, p + Rat(1), -N}, {d, e, p}, n));
  out.rhs = with_prefactor({PochRatio{{e - c}, {e}, n}},
                           terminating({d - a - Rat(1), c, g + Rat(1), -N}, {d, Rat(1) + c - e - N, g}, n));
  return out;
}

BuiltSides build_3e2C12P2(const ParamEnv& env, const EvalOptions&) {
  auto [a, c, d, e] = params(env, "a", "c", "d", "e");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  BuiltSides out;
  out.lhs = plain(terminating({a, c, -N}, {d, e}, n));
  out.rhs = with_prefactor({PochRatio{{e - c}, {e}, n}}, terminating({d - a, c, -N}, {d, Rat(1) + c - e - N}, n));
  return out;
}

// ---- very-well-poised transformations ----

BuiltSides build_13P1(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, p, x] = params(env, "a", "b", "c", "d", "p", "x");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat l = Rat(2) * a - b - c - d;
  const Rat g2 = l * l / Rat(4) - svf_ratio(a, b, c, d, p, "gamma^2");
  const auto& A = env.extra_upper;
  const auto& B = env.extra_lower;
  BuiltSides out;
  out.derived = {{"lambda", l}, {"gamma^2", g2}};
  out.lhs = plain(terminating(cat(cat({a, b, c, d, a - p + Rat(1), p + Rat(1)}, A), {-N}),
                              cat({Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, p, a - p}, B), n, x));
  DoubleSum ds;
  ds.outer = terminating(
      cat(cat({l, l + b - a, l + c - a, l + d - a, a / Rat(2), (a + Rat(1)) / Rat(2)}, A), {-N}),
      cat({l / Rat(2), (l + Rat(1)) / Rat(2), Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d}, B), n, x,
      {{l / Rat(2) + Rat(1), g2}}, {{l / Rat(2), g2}});
  ds.inner.upper = {{a, Rat(2)}, {a - l, Rat(0)}};
  append_shifted(ds.inner.upper, A);
  ds.inner.upper.push_back({-N, Rat(1)});
  ds.inner.lower = {{Rat(1) + l, Rat(2)}};
  append_shifted(ds.inner.lower, B);
  ds.inner.arg = x;
  ds.inner.length_base = static_cast<long>(n);
  ds.inner.length_slope = -1;
  out.rhs.body = std::move(ds);
  return out;
}

BuiltSides build_13P3(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, e, f, p, q] = params(env, "a", "b", "c", "d", "e", "f", "p", "q");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat g = Rat(3) * a - b - c - d - e - f + N;
  const Rat l = Rat(2) * a - b - c - d;
  const Rat mu = Rat(2) * a - e - f - g;
  const Rat g2 = l * l / Rat(4) - svf_ratio(a, b, c, d, p, "gamma^2");
  const Rat d2 = mu * mu / Rat(4) - svf_ratio(a, e, f, g, q, "delta^2");
  const Rat efg = e * f * g + q * (a - q) * (a - e - f - g);
  const Rat top = q * (a - q) * (a - e - f) * (a - e - g) * (a - f - g) + N * (mu + N) * efg;
  const Rat bottom =
      (a - e - f) * (a - e - g) * (a - f - g) - (mu + N) * (e * f + e * g + f * g + a * (a - e - f - g) - q * (a - q));
  const Rat e2 = l * l / Rat(4) - quotient(top, bottom, "denominator of epsilon^2 = 0");
  BuiltSides out;
  out.derived = {{"g", g}, {"lambda", l}, {"mu", mu}, {"gamma^2", g2}, {"delta^2", d2}, {"epsilon^2", e2}};
  out.lhs = plain(terminating({a, Rat(1) + a / Rat(2), b, c, d, e, f, g, a - p + Rat(1), p + Rat(1), a - q + Rat(1),
                               q + Rat(1), -N},
                              {a / Rat(2), Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, Rat(1) + a - e,
                               Rat(1) + a - f, Rat(1) + a - g, p, a - p, q, a - q, Rat(1) + a + N},
                              n),
                  false, true);
  const Rat h = l / Rat(2);
  out.rhs = with_prefactor(
      {PochRatio{{Rat(1) + a, Rat(1) + l - e, Rat(1) + l - f, Rat(1) + l - g},
                 {Rat(1) + l, Rat(1) + a - e, Rat(1) + a - f, Rat(1) + a - g}, n},
       PairedPochRatio{{{mu / Rat(2) + Rat(1), d2}}, {{mu / Rat(2), d2}}, n}},
      terminating({l, Rat(1) + h, l + b - a, l + c - a, l + d - a, e, f, g, -N},
                  {h, Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, Rat(1) + l - e, Rat(1) + l - f, Rat(1) + l - g,
                   Rat(1) + l + N},
                  n, Rat(1), {{h + Rat(1), g2}, {h + Rat(1), e2}}, {{h, g2}, {h, e2}}),
      false, true);
  return out;
}

// Right side shared by the omega = 1 very-well-poised transformation and
// its corollary; `g2` absent drops the gamma pair.
Side vwp_omega1_rhs(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& l, const Rat& w,
                    const Rat& al, const Rat* g2, const Rat& d2, std::size_t n) {
  const Rat N = nrat(n);
  const Rat h = l / Rat(2);
  std::vector<ConjugatePair> up, lo;
  if (g2 != nullptr) {
    up.push_back({h + Rat(1), *g2});
    lo.push_back({h, *g2});
  }
  up.push_back({h + Rat(1), d2});
  lo.push_back({h, d2});
  return with_prefactor(
      {PochRatio{{Rat(2) * l - a, l - a, al + Rat(1)}, {Rat(1) + l, Rat(2) * l - Rat(2) * a, al}, n}},
      terminating({l, Rat(1) + h, a / Rat(2), (a + Rat(1)) / Rat(2), l + b - a, l + c - a, l + d - a, Rat(1) + a - w, -N},
                  {h, (Rat(2) + Rat(2) * l - a) / Rat(2), (Rat(1) + Rat(2) * l - a) / Rat(2), Rat(1) + a - b,
                   Rat(1) + a - c, Rat(1) + a - d, l + w - a, Rat(1) + l + N},
                  n, Rat(1), std::move(up), std::move(lo)),
      false, true);
}

BuiltSides build_13P4(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, p, q] = params(env, "a", "b", "c", "d", "p", "q");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat l = Rat(2) * a - b - c - d;
  const Rat w = Rat(1) + Rat(2) * a - Rat(2) * l - N;
  const Rat al = quotient(q * (Rat(2) * l - a), Rat(2) * q - a, "2q - a = 0 (alpha)");
  const Rat g2 = l * l / Rat(4) - svf_ratio(a, b, c, d, p, "gamma^2");
  const Rat d2 = l * l / Rat(4) - (q * (Rat(2) * l - a) + N * (Rat(2) * q - a)) / Rat(2);
  BuiltSides out;
  out.derived = {{"lambda", l}, {"w", w}, {"alpha", al}, {"gamma^2", g2}, {"delta^2", d2}};
  out.lhs = plain(terminating({a, b, c, d, a - p + Rat(1), p + Rat(1), q + Rat(1), -N},
                              {Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, p, a - p, q, w}, n),
                  true);
  out.rhs = vwp_omega1_rhs(a, b, c, d, l, w, al, &g2, d2, n);
  return out;
}

BuiltSides build_1C13P4(const ParamEnv& env, const EvalOptions&) {
  auto [a, b, c, d, q] = params(env, "a", "b", "c", "d", "q");
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat l = Rat(1) + Rat(2) * a - b - c - d;
  const Rat w = Rat(1) + Rat(2) * a - Rat(2) * l - N;
  const Rat al = quotient(q * (Rat(2) * l - a), Rat(2) * q - a, "2q - a = 0 (alpha)");
  const Rat d2 = l * l / Rat(4) - (q * (Rat(2) * l - a) + N * (Rat(2) * q - a)) / Rat(2);
  BuiltSides out;
  out.derived = {{"lambda", l}, {"w", w}, {"alpha", al}, {"delta^2", d2}};
  out.lhs = plain(terminating({a, b, c, d, q + Rat(1), -N}, {Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, q, w}, n),
                  true);
  out.rhs = vwp_omega1_rhs(a, b, c, d, l, w, al, nullptr, d2, n);
  return out;
}

// ---- quadratic transformations (formal in x) ----

Side formal_rhs(std::vector<Factor> pre, std::vector<Rat> upper, std::vector<Rat> lower, std::size_t order,
                std::vector<XShiftPair> xp = {}) {
  Side s = with_prefactor(std::move(pre), formal(std::move(upper), std::move(lower), QuadraticX{}, order));
  s.x_pairs = std::move(xp);
  return s;
}

XShiftPair delta_q(const Rat& a, const Rat& q) { return {q, a - q, Rat(1), Rat(1)}; }

Rat q_slope(const Rat& a, const Rat& q) { return quotient(a - q, q, "q = 0 ((a-q)/q)"); }

BuiltSides build_6P1(const ParamEnv& env, const EvalOptions& opt) {
  auto [a, b, c, p, q] = params(env, "a", "b", "c", "p", "q");
  const std::size_t N = opt.ps_order;
  const Rat g = gamma_nearly_poised(a, b, c, p);
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(formal({a, b, c, a - p + Rat(1), p + Rat(1), q + Rat(1)}, {Rat(1) + a - b, Rat(1) + a - c, p, a - p, q},
                         FormalX{}, N));
  out.rhs = formal_rhs({PSLinear{Rat(1), q_slope(a, q)}, PSBinomial{-a - Rat(1)}},
                       {a / Rat(2), (a + Rat(1)) / Rat(2), a - b - c, g + Rat(1)}, {Rat(1) + a - b, Rat(1) + a - c, g}, N,
                       {delta_q(a, q)});
  return out;
}

BuiltSides build_1C6P1(const ParamEnv& env, const EvalOptions& opt) {
  auto [a, b, c, p] = params(env, "a", "b", "c", "p");
  const std::size_t N = opt.ps_order;
  const Rat g = gamma_nearly_poised(a, b, c, p);
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(formal({a, b, c, a - p + Rat(1), p + Rat(1)}, {Rat(1) + a - b, Rat(1) + a - c, p, a - p}, FormalX{}, N));
  out.rhs = formal_rhs({PSBinomial{-a}}, {a / Rat(2), (a + Rat(1)) / Rat(2), a - b - c, g + Rat(1)},
                       {Rat(1) + a - b, Rat(1) + a - c, g}, N);
  return out;
}

BuiltSides build_2C6P1(const ParamEnv& env, const EvalOptions& opt) {
  auto [a, b, c, q] = params(env, "a", "b", "c", "q");
  const std::size_t N = opt.ps_order;
  BuiltSides out;
  out.lhs = plain(formal({a, b, c, q + Rat(1)}, {Rat(1) + a - b, Rat(1) + a - c, q}, FormalX{}, N));
  out.rhs = formal_rhs({PSLinear{Rat(1), q_slope(a, q)}, PSBinomial{-a - Rat(1)}},
                       {a / Rat(2), (a + Rat(1)) / Rat(2), Rat(1) + a - b - c}, {Rat(1) + a - b, Rat(1) + a - c}, N,
                       {delta_q(a, q)});
  return out;
}

BuiltSides build_1e6(const ParamEnv& env, const EvalOptions& opt) {
  auto [a, b, c] = params(env, "a", "b", "c");
  const std::size_t N = opt.ps_order;
  BuiltSides out;
  out.lhs = plain(formal({a, b, c}, {Rat(1) + a - b, Rat(1) + a - c}, FormalX{}, N));
  out.rhs = formal_rhs({PSBinomial{-a}}, {a / Rat(2), (a + Rat(1)) / Rat(2), Rat(1) + a - b - c},
                       {Rat(1) + a - b, Rat(1) + a - c}, N);
  return out;
}

BuiltSides build_2e6(const ParamEnv& env, const EvalOptions& opt) {
  auto [a, b, c] = params(env, "a", "b", "c");
  const std::size_t N = opt.ps_order;
  BuiltSides out;
  out.lhs = plain(formal({a, Rat(1) + a / Rat(2), b, c}, {a / Rat(2), Rat(1) + a - b, Rat(1) + a - c}, FormalX{}, N));
  out.rhs = formal_rhs({PSLinear{Rat(1), Rat(1)}, PSBinomial{-a - Rat(1)}},
                       {(a + Rat(1)) / Rat(2), (a + Rat(2)) / Rat(2), Rat(1) + a - b - c},
                       {Rat(1) + a - b, Rat(1) + a - c}, N);
  return out;
}

// ---- soft numeric checks at x = -1 ----

BuiltSides build_3C6P1(const ParamEnv& env, const EvalOptions& opt) {
  auto [a, b, c, p, q] = params(env, "a", "b", "c", "p", "q");
  const std::size_t M = opt.soft_terms;
  if (q == a / Rat(2)) throw Error(ErrorKind::Inadmissible, "inadmissible: q = a/2");
  const Rat g = gamma_nearly_poised(a, b, c, p);
  const Rat pre = quotient((Rat(2) * q - a) * pow(Rat(2), -a.num().get_si() - 1), q, "q = 0 (prefactor)");
  BuiltSides out;
  out.derived = {{"gamma", g}};
  out.lhs = plain(partial({a, b, c, a - p + Rat(1), p + Rat(1), q + Rat(1)}, {Rat(1) + a - b, Rat(1) + a - c, p, a - p, q},
                          Rat(-1), M));
  out.rhs = with_prefactor({Scalar{pre}}, partial({a / Rat(2), (a + Rat(1)) / Rat(2), a - b - c, g + Rat(1)},
                                                  {Rat(1) + a - b, Rat(1) + a - c, g}, Rat(1), M));
  return out;
}

BuiltSides build_3e6(const ParamEnv& env, const EvalOptions& opt) {
  auto [a, b, c] = params(env, "a", "b", "c");
  const std::size_t M = opt.soft_terms;
  BuiltSides out;
  out.lhs = plain(partial({a, b, c}, {Rat(1) + a - b, Rat(1) + a - c}, Rat(-1), M));
  out.rhs = with_prefactor({Scalar{pow(Rat(2), -a.num().get_si())}},
                           partial({a / Rat(2), (a + Rat(1)) / Rat(2), Rat(1) + a - b - c},
                                   {Rat(1) + a - b, Rat(1) + a - c}, Rat(1), M));
  return out;
}

using Derived = std::vector<std::pair<std::string, std::string>>;

IdentityEntry make(std::string id, std::string eq, std::string title, std::vector<std::string> free, Derived derived,
                   std::string constraints, CheckMode mode,
                   std::function<BuiltSides(const ParamEnv&, const EvalOptions&)> build, SamplingHints hints = {}) {
  IdentityEntry e;
  e.id = std::move(id);
  e.paper_eq = std::move(eq);
  e.title = std::move(title);
  e.free_params = std::move(free);
  e.derived_params = std::move(derived);
  e.constraints_note = std::move(constraints);
  e.mode = mode;
  e.build = std::move(build);
  e.hints = std::move(hints);
  return e;
}

const char* const kGamma11 = "p(a-p)(b+c-a)/(bc-p(a-p))";
const char* const kGamma12 = "p(c-a-1)(c-b-1)/(ab+p(c-a-b-1))";
const char* const kAlphaW = "q(1+a-w)/(a-q)";
const char* const kBetaW = "(q(1+a-w)+n(a-q))/(1+2q-w+n)";
const char* const kGammaSq = "lambda^2/4 - p(a-p)(a-b-c)(a-b-d)(a-c-d)/(bcd+p(a-p)(a-b-c-d))";

std::vector<IdentityEntry> build_registry() {
  using enum CheckMode;
  std::vector<IdentityEntry> r;
  const std::string none = "none";
  r.push_back(make("sum-ext-chu-vandermonde", "(2)-(3)", "extended Chu-Vandermonde 3F2 sum", {"a", "b", "p"},
                   {{"q", "p(b-a-1)/(p-a)"}}, "p != a", ExactTerminating, build_ecv));
  r.push_back(make("sum-rakha-rathie", "(5)-(6)", "Saalschutzian 4F3 sum extending Pfaff-Saalschutz",
                   {"a", "b", "c", "p"}, {{"q", kGamma12}}, "ab + p(c-a-b-1) != 0", ExactTerminating, build_rr));
  r.push_back(make("sum-rr-formA", "(7)-(8)", "4F3 sum, nearly-poised rewrite", {"a", "b", "c", "p"},
                   {{"gamma1", kGamma11}}, "bc != p(a-p)", ExactTerminating, build_rr_a));
  r.push_back(make("sum-rr-formB", "(9)-(10)", "4F3 sum, reversed rewrite", {"a", "b", "c", "p"},
                   {{"gamma2", kGamma12}}, "ab + p(c-a-b-1) != 0", ExactTerminating, build_rr_b));
  r.push_back(make("sum-svf-9f8", "(11)-(12)", "very-well-poised 9F8 sum extending Dougall",
                   {"a", "b", "c", "d", "p"},
                   {{"alpha", "p(a-p)(a-b-c)(a-b-d)(a-c-d)/((2a-b-c-d+n)(bcd+p(a-p)(a-b-c-d)))"}},
                   "(2a-b-c-d+n)(bcd+p(a-p)(a-b-c-d)) != 0", ExactTerminating, build_svf));
  r.push_back(make("sum-svf-formB", "(13)-(15)", "9F8 sum with the conjugate pair lambda/2 +- gamma",
                   {"a", "b", "c", "d", "p"}, {{"lambda", "2a-b-c-d"}, {"gamma^2", kGammaSq}},
                   "bcd + p(a-p)(a-b-c-d) != 0", ExactTerminating, build_svf_b));
  r.push_back(make("sum-chu-vandermonde", "classical", "Chu-Vandermonde 2F1 sum", {"a", "b"}, {}, none,
                   ExactTerminating, build_cv));
  r.push_back(make("sum-pfaff-saalschutz", "classical", "Pfaff-Saalschutz 3F2 sum", {"a", "b", "c"}, {}, none,
                   ExactTerminating, build_ps));
  r.push_back(make("sum-dougall", "classical", "Dougall 7F6 sum", {"a", "b", "c", "d"}, {}, none, ExactTerminating,
                   build_dougall));

  r.push_back(make("prop-11P1", "2e11P1", "nearly-poised series with arbitrary extra parameters as a double sum",
                   {"a", "b", "c", "p", "x"}, {{"gamma", kGamma11}}, "bc != p(a-p); extra lists arbitrary",
                   ExactTerminating, build_11P1, {{}, true}));
  r.push_back(make("prop-3P16", "1e3P16", "nearly-poised 7F6 to Saalschutzian 7F6", {"a", "b", "c", "p", "q", "w"},
                   {{"alpha", kAlphaW}, {"beta", kBetaW}, {"gamma", kGamma11}},
                   "a != q; 1+2q-w+n != 0; bc != p(a-p)", ExactTerminating, build_3P16));
  r.push_back(make("cor-1C3P16", "1e1C3P16", "nearly-poised 6F5 to Saalschutzian 6F5", {"a", "b", "c", "p", "w"},
                   {{"gamma", kGamma11}}, "bc != p(a-p)", ExactTerminating, build_1C3P16));
  r.push_back(make("cor-2C3P16", "1e2C3P16", "nearly-poised 5F4 to Saalschutzian 6F5", {"a", "b", "c", "q", "w"},
                   {{"alpha", kAlphaW}, {"beta", kBetaW}}, "a != q; 1+2q-w+n != 0", ExactTerminating,
                   build_2C3P16));
  r.push_back(make("prop-11P2", "1e11P2", "nearly-poised 9F8 as a double sum", {"a", "b", "c", "d", "e", "p", "q", "w"},
                   {{"alpha", kAlphaW}, {"beta", kBetaW}, {"gamma", kGamma11}},
                   "a != q; 1+2q-w+n != 0; bc != p(a-p)", ExactTerminating, build_11P2));
  r.push_back(make("eq-1e1C11P2", "1e1C11P2", "very-well-poised 9F8 to Saalschutzian 5F4",
                   {"a", "b", "c", "d", "e", "p"}, {{"gamma", kGamma11}}, "bc != p(a-p)", ExactTerminating,
                   build_1e1C11P2));

  r.push_back(make("prop-12P1", "1e12P1", "Saalschutz-type series with extra parameters as a double sum",
                   {"a", "b", "c", "p", "x"}, {{"gamma", kGamma12}}, "ab + p(c-a-b-1) != 0; extra lists arbitrary",
                   ExactTerminating, build_12P1, {{}, true}));
  const Derived w6 = {{"f", "3+a+b+c-d-e-n"},
                      {"alpha", "q(e-c-1)(f-c-1)/((c-q)(d-a-b-1))"},
                      {"gamma", "p(d-a-1)(d-b-1)/(ab+p(d-a-b-1))"},
                      {"delta", "(q(e-c-1)(f-c-1)+n(c-q)(d-a-b-1))/((e-c-1)(f-c-1)-(c-q)(d-a-b-1))"}};
  r.push_back(make("prop-12P2", "1e12P2", "Saalschutzian 6F5 Whipple-type transformation",
                   {"a", "b", "c", "d", "e", "p", "q"}, w6, "d+e+f-a-b-c+n = 3 (f derived)", ExactTerminating,
                   build_12P2));
  Derived w6r = w6;
  w6r.push_back({"alpha'", "alpha built from (d-a-1, d-b-1, c; d, 2+c-e-n, 2+c-f-n; gamma, delta)"});
  r.push_back(make("remark-1R12P2", "2e1R12P2", "reflection of the normalised Saalschutzian 6F5",
                   {"a", "b", "c", "d", "e", "p", "q"}, w6r, "d+e+f-a-b-c+n = 3 (f derived)", ExactTerminating,
                   build_1R12P2));
  r.push_back(make("cor-1C12P2", "1e1C12P2", "Saalschutzian 5F4 transformation", {"a", "b", "c", "d", "e", "p"},
                   {{"f", "2+a+b+c-d-e-n"}, {"gamma", "p(d-a-1)(d-b-1)/(ab+p(d-a-b-1))"}},
                   "d+e+f-a-b-c+n = 2 (f derived)", ExactTerminating, build_1C12P2));
  r.push_back(make("cor-2C12P2", "1e2C12P2", "4F3 transformation with one extra pair", {"a", "c", "d", "e", "p"},
                   {{"gamma", "p(d-a-1)/(p-a)"}}, "p != a", ExactTerminating, build_2C12P2));
  r.push_back(make("eq-3e2C12P2", "3e2C12P2", "Sheppard 3F2 transformation", {"a", "c", "d", "e"}, {}, none,
                   ExactTerminating, build_3e2C12P2));

  r.push_back(make("prop-13P1", "2e13P1", "9F8-type series with extra parameters as a double sum",
                   {"a", "b", "c", "d", "p", "x"}, {{"lambda", "2a-b-c-d"}, {"gamma^2", kGammaSq}},
                   "bcd + p(a-p)(a-b-c-d) != 0; extra lists arbitrary", ExactTerminating, build_13P1, {{}, true}));
  r.push_back(make("prop-13P3", "2e13P3", "very-well-poised 13F12 transformation",
                   {"a", "b", "c", "d", "e", "f", "p", "q"},
                   {{"g", "3a-b-c-d-e-f+n"},
                    {"lambda", "2a-b-c-d"},
                    {"mu", "2a-e-f-g"},
                    {"gamma^2", kGammaSq},
                    {"delta^2", "mu^2/4 - q(a-q)(a-e-f)(a-e-g)(a-f-g)/(efg+q(a-q)(a-e-f-g))"},
                    {"epsilon^2", "lambda^2/4 - (q(a-q)(a-e-f)(a-e-g)(a-f-g)+n(mu+n)(efg+q(a-q)(a-e-f-g)))/"
                                  "((a-e-f)(a-e-g)(a-f-g)-(mu+n)(ef+eg+fg+a(a-e-f-g)-q(a-q)))"}},
                   "3a = b+c+d+e+f+g-n (g derived)", ExactTerminating, build_13P3));
  r.push_back(make("prop-13P4", "1e13P4", "Saalschutzian 8F7 to very-well-poised 13F12",
                   {"a", "b", "c", "d", "p", "q"},
                   {{"lambda", "2a-b-c-d"},
                    {"w", "1+2a-2lambda-n"},
                    {"alpha", "q(2lambda-a)/(2q-a)"},
                    {"gamma^2", kGammaSq},
                    {"delta^2", "lambda^2/4 - (q(2lambda-a)+n(2q-a))/2"}},
                   "parametric excess 1 (w derived); 2q != a", ExactTerminating, build_13P4));
  r.push_back(make("cor-1C13P4", "1e1C13P4", "Saalschutzian 6F5 to very-well-poised 11F10",
                   {"a", "b", "c", "d", "q"},
                   {{"lambda", "1+2a-b-c-d"},
                    {"w", "1+2a-2lambda-n"},
                    {"alpha", "q(2lambda-a)/(2q-a)"},
                    {"delta^2", "lambda^2/4 - (q(2lambda-a)+n(2q-a))/2"}},
                   "parametric excess 1 (w derived); 2q != a", ExactTerminating, build_1C13P4));

  const Derived dq = {{"delta(x)", "(q+(a-q)x)/(1+x)"}};
  Derived g6 = {{"gamma", kGamma11}};
  Derived g6d = g6;
  g6d.insert(g6d.end(), dq.begin(), dq.end());
  r.push_back(make("prop-6P1", "1e6P1", "quadratic transformation of a nearly-poised 6F5",
                   {"a", "b", "c", "p", "q"}, g6d, "q != 0; bc != p(a-p)", FormalPS, build_6P1));
  r.push_back(make("cor-1C6P1", "1e1C6P1", "quadratic transformation of a nearly-poised 5F4", {"a", "b", "c", "p"},
                   g6, "bc != p(a-p)", FormalPS, build_1C6P1));
  r.push_back(make("cor-2C6P1", "1e2C6P1", "quadratic transformation of a 4F3 with one extra pair",
                   {"a", "b", "c", "q"}, dq, "q != 0", FormalPS, build_2C6P1));
  r.push_back(make("eq-1e6", "1e6", "Whipple quadratic transformation of a well-poised 3F2", {"a", "b", "c"}, {},
                   none, FormalPS, build_1e6));
  r.push_back(make("eq-2e6", "2e6", "quadratic transformation of a very-well-poised 4F3", {"a", "b", "c"}, {}, none,
                   FormalPS, build_2e6));

  r.push_back(make("cor-3C6P1", "1e3C6P1", "6F5 at x = -1 against a 4F3 at unit argument",
                   {"a", "b", "c", "p", "q"}, g6, "a integer; q != a/2; q != 0; positive excess on both sides",
                   NumericSoft, build_3C6P1, {{"a"}, false}));
  r.push_back(make("eq-3e6", "3e6", "well-poised 3F2 at x = -1 against a 3F2 at unit argument", {"a", "b", "c"}, {},
                   "a integer; positive excess on both sides", NumericSoft, build_3e6, {{"a"}, false}));
  return r;
}

}  // namespace

const std::vector<IdentityEntry>& list_entries() {
  static const std::vector<IdentityEntry> registry = build_registry();
  return registry;
}

Rat f_tilde_12P2(const ParamEnv& env) {
  auto [a, b, c, d, e, p, q] = params(env, "a", "b", "c", "d", "e", "p", "q");
  Whipple6 w;
  const Side s = f_tilde_side(a, b, c, d, e, p, q, env.n, w);
  return evaluate_exact(s, env.n);
}

ParamEnv reflect_12P2(const ParamEnv& env) {
  auto [a, b, c, d, e, p, q] = params(env, "a", "b", "c", "d", "e", "p", "q");
  const std::size_t n = env.n;
  ParamEnv out;
  out.n = n;
  try {
    const Whipple6 w = whipple6_aux(a, b, c, d, e, p, q, n);
    out.bindings = {{"a", d - a - Rat(1)}, {"b", d - b - Rat(1)}, {"c", c},      {"d", d},
                    {"e", Rat(2) + c - e - nrat(n)}, {"p", w.gamma}, {"q", w.delta}};
    f_tilde_12P2(out);
  } catch (const Error& err) {
    if (!err.is_degeneracy()) throw;
    throw Error(ErrorKind::Inadmissible, std::string("inadmissible reflected environment: ") + err.what());
  }
  return out;
}

}  // namespace hyperxf

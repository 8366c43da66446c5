#include "doctest.h"

#include "hyperxf/error.hpp"
#include "hyperxf/poch.hpp"
#include "hyperxf/series.hpp"
#include "support.hpp"

using namespace hyperxf;
using hyperxf::testing::RatGen;

namespace {

SeriesSpec terminating(std::vector<Rat> up, std::vector<Rat> lo, Rat z, std::size_t n) {
  SeriesSpec s;
  s.upper = std::move(up);
  s.lower = std::move(lo);
  s.arg = std::move(z);
  s.mode = Terminating{n};
  return s;
}

}  // namespace

TEST_CASE("term examples") {
  auto s = terminating({Rat(-2), Rat(1)}, {Rat(1)}, Rat(1, 3), 2);
  CHECK(term(s, 0) == Rat(1));
  CHECK(term(s, 1) == Rat(-2, 3));

  SeriesSpec p;
  p.upper = {Rat(-1)};
  p.upper_pairs = {{Rat(1), Rat(4)}};
  p.arg = Rat(1);
  CHECK(term(p, 1) == Rat(3));
}

TEST_CASE("term reports a vanishing lower Pochhammer") {
  auto s = terminating({Rat(-3)}, {Rat(-1)}, Rat(1), 3);
  CHECK(term(s, 1) == Rat(3));
  try {
    term(s, 2);
    FAIL("expected DegenerateLower");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateLower);
  }
  CHECK_THROWS_AS(eval_terminating(s), Error);
}

TEST_CASE("eval_terminating examples") {
  // Binomial theorem: 2F1(-2, 1; 1; z) = (1 - z)^2.
  const Rat z(1, 3);
  const Rat oracle = (Rat(1) - z) * (Rat(1) - z);
  CHECK(oracle == Rat(4, 9));
  CHECK(eval_terminating(terminating({Rat(-2), Rat(1)}, {Rat(1)}, z, 2)) == oracle);
  CHECK(eval_terminating(terminating({Rat(-3)}, {}, Rat(1), 3)) == Rat(0));
  CHECK(eval_terminating(terminating({Rat(0), Rat(7, 2)}, {Rat(-3, 5)}, Rat(9), 0)) == Rat(1));
}

TEST_CASE("terminating mode requires the -n numerator") {
  auto s = terminating({Rat(2)}, {Rat(1)}, Rat(1), 2);
  CHECK_THROWS_AS(eval_terminating(s), Error);
}

TEST_CASE("eval_partial examples") {
  SeriesSpec geo;
  geo.upper = {Rat(1)};
  geo.arg = Rat(1, 2);
  geo.mode = Partial{4};
  const auto one = eval_partial(geo, 1);
  CHECK(one.value == Rat(1));
  CHECK(one.last_term == Rat(1));
  const auto four = eval_partial(geo, 4);
  CHECK(four.value == Rat(15, 8));
  CHECK(four.last_term == Rat(1, 8));

  const auto padded = eval_partial(terminating({Rat(-2), Rat(1)}, {Rat(1)}, Rat(1, 3), 2), 10);
  CHECK(padded.value == Rat(4, 9));
  CHECK(padded.last_term == Rat(0));
}

TEST_CASE("eval_formal examples") {
  const Rat a(5, 3);
  SeriesSpec s;
  s.upper = {a};
  s.arg = FormalX{};
  const auto f = eval_formal(s, 2);
  CHECK(f == PowerSeries({Rat(1), a, a * (a + 1) / Rat(2)}));
  CHECK(eval_formal(s, 0) == PowerSeries::one(0));

  // A single nonzero term beyond k=0: c1 (-4x)(1-x)^-2 = c1 (-4)(x + 2x^2 + ...).
  SeriesSpec q;
  q.upper = {Rat(-1), Rat(2, 3)};
  q.lower = {Rat(4, 5)};
  q.arg = QuadraticX{};
  const Rat c1 = Rat(-1) * Rat(2, 3) / Rat(4, 5);
  CHECK(eval_formal(q, 2) == PowerSeries({Rat(1), c1 * Rat(-4), c1 * Rat(-8)}));

  CHECK_THROWS_AS(eval_formal(terminating({Rat(-1)}, {}, Rat(1), 1), 3), Error);
}

TEST_CASE("eval_formal x-shift pair factor") {
  // delta = (2 + x)/(1 + x): term 1 picks up (delta + 1)/delta = (3 + 2x)/(2 + x).
  SeriesSpec s;
  s.upper = {Rat(-1)};
  s.arg = FormalX{};
  const XShiftPair xp{Rat(2), Rat(1), Rat(1), Rat(1)};
  const auto f = eval_formal(s, 3, std::span<const XShiftPair>(&xp, 1));
  // 1 - x (3 + 2x)/(2 + x) = 1 - x (3/2 + x/4 - x^2/8 + ...)
  CHECK(f == PowerSeries({Rat(1), Rat(-3, 2), Rat(-1, 4), Rat(1, 8)}));
  const XShiftPair bad{Rat(0), Rat(1), Rat(1), Rat(0)};
  CHECK_THROWS_AS(eval_formal(s, 3, std::span<const XShiftPair>(&bad, 1)), Error);
}

TEST_CASE("excess examples") {
  const Rat a(1, 2), b(3), c(-7, 4), d(2, 5);
  const std::size_t n = 4;
  auto s = terminating({a, b, Rat(-4)}, {c, d}, Rat(1), n);
  CHECK(excess(s) == c + d - a - b + Rat(4));

  // Pfaff-Saalschutz 3F2(a, b, -n; c, 1 + a + b - c - n) is Saalschutzian.
  auto ps = terminating({a, b, Rat(-4)}, {c, Rat(1) + a + b - c - Rat(4)}, Rat(1), n);
  CHECK(excess(ps) == Rat(1));

  SeriesSpec p;
  p.upper_pairs = {{Rat(1), Rat(5)}};
  p.lower = {Rat(2)};
  CHECK(excess(p) == Rat(0));

  SeriesSpec unbalanced;
  unbalanced.upper = {Rat(1)};
  unbalanced.lower = {Rat(1)};
  CHECK_THROWS_AS(excess(unbalanced), Error);
}

TEST_CASE("well-poised detection") {
  const Rat a(7, 3), b(1, 2), c(-5, 4);
  SeriesSpec s;
  s.upper = {a, Rat(1) + a / Rat(2), b, c, Rat(-3)};
  s.lower = {a / Rat(2), Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a + Rat(3)};
  CHECK(is_well_poised(s));
  CHECK(is_very_well_poised(s));
  s.upper_pairs = {{Rat(1) + a / Rat(2), Rat(2)}};
  s.lower_pairs = {{a / Rat(2), Rat(2)}};
  CHECK(is_very_well_poised(s));
  s.lower_pairs[0].square = Rat(3);
  CHECK_FALSE(is_well_poised(s));
  s.lower_pairs.clear();
  s.upper_pairs.clear();
  s.lower[2] += Rat(1);
  CHECK_FALSE(is_well_poised(s));
}

TEST_CASE("series properties over random terminating specs") {
  RatGen g(21);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(g.integer(0, 6));
    std::vector<Rat> up{Rat(-static_cast<long>(n))};
    std::vector<Rat> lo;
    const long r = g.integer(0, 3);
    for (long j = 0; j < r; ++j) up.push_back(g.rational());
    for (long j = 0; j < r; ++j) lo.push_back(g.rational());
    // One conjugate pair on each side, with a rational root so it can be split.
    const Rat cu = g.rational(), tu = g.rational(), cl = g.rational(), tl = g.rational();
    const Rat z = g.rational();
    SeriesSpec s = terminating(up, lo, z, n);
    s.upper_pairs = {{cu, tu * tu}};
    s.lower_pairs = {{cl, tl * tl}};
    if (find_degenerate_lower(s, n)) continue;
    ++checked;

    const Rat forward = eval_terminating(s);
    Rat backward(0);
    for (std::size_t k = n + 1; k-- > 0;) backward += term(s, k);
    CHECK(forward == backward);

    CHECK(eval_partial(s, n + 1).value == forward);

    SeriesSpec split = terminating(up, lo, z, n);
    split.upper.push_back(cu - tu);
    split.upper.push_back(cu + tu);
    split.lower.push_back(cl - tl);
    split.lower.push_back(cl + tl);
    CHECK(eval_terminating(split) == forward);

    std::vector<Rat> all_up = split.upper;
    std::vector<Rat> all_lo = split.lower;
    CHECK(hyperxf::testing::brute_sum(all_up, all_lo, z, n) == forward);

    SeriesSpec formal = s;
    formal.arg = FormalX{};
    formal.mode = Formal{8};
    CHECK(eval_formal(formal, 8).evaluate(z) == forward);
  }
  CHECK(checked > 150);
}

TEST_CASE("dyadic partial sums track the exact partial sum") {
  SeriesSpec s;
  s.upper = {Rat(1, 2), Rat(2, 3)};
  s.lower = {Rat(7, 4)};
  s.upper_pairs = {{Rat(1, 3), Rat(-2)}};
  s.lower_pairs = {{Rat(5, 2), Rat(3)}};
  s.arg = Rat(-1, 2);
  const std::size_t m = 40;
  const auto exact = eval_partial(s, m);
  const auto dyadic = eval_partial_dyadic(s, m, 128);
  const Rat bound = Rat(static_cast<unsigned long>(m)) / pow(Rat(2), 128) * Rat(4);
  CHECK(abs(dyadic.value - exact.value) < bound);
  CHECK(abs(dyadic.last_term - exact.last_term) < bound);
  CHECK(abs(dyadic.previous - (exact.value - exact.last_term)) < bound);
}

TEST_CASE("series spec JSON") {
  const auto spec = series_from_json(nlohmann::json::parse(
      R"({"upper":["-2","1"],"lower":["1"],"upper_pairs":[],"lower_pairs":[],"arg":"1/3","mode":{"terminating":2}})"));
  CHECK(eval_terminating(spec) == Rat(4, 9));
  CHECK(series_from_json(to_json(spec)).upper == spec.upper);
  CHECK(to_json(series_from_json(to_json(spec))) == to_json(spec));

  SeriesSpec q;
  q.upper = {Rat(1, 2)};
  q.upper_pairs = {{Rat(1), Rat(-3, 7)}};
  q.lower_pairs = {{Rat(2), Rat(5)}};
  q.arg = QuadraticX{};
  q.mode = Formal{5};
  CHECK(to_json(series_from_json(to_json(q))) == to_json(q));

  using nlohmann::json;
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"upper":["1/0"],"arg":"1","mode":{"terminating":0}})")), Error);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"upper":[],"arg":"1"})")), Error);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"arg":"x","mode":{"terminating":1}})")), Error);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"arg":"1","mode":{"partial":0}})")), Error);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"upper_pairs":[["1"]],"arg":"1","mode":{"partial":2}})")), Error);
}

#include "doctest.h"

#include <functional>
#include <set>

#include "hyperxf/catalog.hpp"
#include "hyperxf/error.hpp"
#include "support.hpp"

using namespace hyperxf;
using hyperxf::testing::RatGen;
using hyperxf::testing::brute_sum;

namespace {

ParamEnv draw(const IdentityEntry& e, RatGen& g, std::size_t n) {
  ParamEnv env;
  env.n = n;
  for (const auto& p : e.free_params) env.bindings[p] = g.rational();
  for (const auto& p : e.hints.integer_params) env.bindings[p] = Rat(g.integer(-9, 9));
  if (e.hints.extra_lists) {
    const long r = g.integer(0, 2);
    const long s = g.integer(0, 2);
    for (long i = 0; i < r; ++i) env.extra_upper.push_back(g.rational());
    for (long i = 0; i < s; ++i) env.extra_lower.push_back(g.rational());
  }
  return env;
}

// Tries random environments until `want` of them instantiate.
int for_instances(const std::string& id, std::uint64_t seed, int want, std::size_t n,
                  const std::function<void(const IdentityInstance&)>& body, EvalOptions opt = {}) {
  RatGen g(seed);
  const auto& e = find_entry(id);
  int done = 0;
  for (int tries = 0; done < want && tries < 200 * want; ++tries) {
    IdentityInstance inst;
    try {
      inst = instantiate(id, draw(e, g, n), opt);
    } catch (const Error& err) {
      if (!err.is_degeneracy()) throw;
      continue;
    }
    body(inst);
    ++done;
  }
  return done;
}

}  // namespace

TEST_CASE("registry lists every identity once") {
  const auto& all = list_entries();
  CHECK(all.size() >= 24);
  std::set<std::string> ids;
  for (const auto& e : all) ids.insert(e.id);
  CHECK(ids.size() == all.size());
  CHECK(ids.count("prop-3P16") == 1);
  CHECK(find_entry("cor-3C6P1").mode == CheckMode::NumericSoft);
  CHECK(find_entry("prop-6P1").mode == CheckMode::FormalPS);
  for (const char* id : {"prop-11P1", "prop-3P16", "cor-1C3P16", "cor-2C3P16", "prop-11P2", "eq-1e1C11P2",
                         "prop-12P1", "prop-12P2", "remark-1R12P2", "cor-1C12P2", "cor-2C12P2", "eq-3e2C12P2",
                         "prop-13P1", "prop-13P3", "prop-13P4", "cor-1C13P4", "prop-6P1", "cor-1C6P1", "cor-2C6P1",
                         "eq-1e6", "eq-2e6", "cor-3C6P1", "eq-3e6"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
  const auto j = entry_summary(find_entry("prop-12P2"));
  CHECK(j["check_mode"] == "exact");
  CHECK(j["free_params"].size() == 7);
}

TEST_CASE("instantiate errors") {
  ParamEnv env;
  CHECK_THROWS_AS(instantiate("no-such-id", env), Error);
  try {
    instantiate("no-such-id", env);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownId);
  }
  // missing free parameter
  try {
    instantiate("sum-chu-vandermonde", env);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
  // an explicit f must agree with the derived one
  ParamEnv w;
  w.n = 2;
  w.bindings = {{"a", Rat(1, 3)}, {"b", Rat(2, 5)}, {"c", Rat(-7, 2)}, {"d", Rat(5, 3)},
                {"e", Rat(9, 4)}, {"p", Rat(3, 2)},  {"q", Rat(-1, 5)}, {"f", Rat(1)}};
  try {
    instantiate("prop-12P2", w);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolated);
  }
  // gamma denominator bc - p(a-p) vanishes at b = c = 1, p(a-p) = 1
  ParamEnv g;
  g.n = 1;
  g.bindings = {{"a", Rat(5, 2)}, {"b", Rat(1)}, {"c", Rat(1)}, {"p", Rat(1, 2)}, {"w", Rat(7, 3)}};
  try {
    instantiate("cor-1C3P16", g);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AuxDenominatorZero);
    CHECK(std::string(e.what()).find("bc - p(a-p)") != std::string::npos);
  }
}

TEST_CASE("soft entries reject their excluded points") {
  ParamEnv env;
  env.bindings = {{"a", Rat(4)}, {"b", Rat(1, 3)}, {"c", Rat(1, 5)}, {"p", Rat(7, 2)}, {"q", Rat(2)}};
  try {
    instantiate("cor-3C6P1", env, {12, 100});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Inadmissible);
  }
  env.bindings["a"] = Rat(7, 2);
  try {
    instantiate("cor-3C6P1", env, {12, 100});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolated);
  }
}

TEST_CASE("n = 0 collapses both sides to one") {
  for (const auto& e : list_entries()) {
    if (e.mode != CheckMode::ExactTerminating) continue;
    CAPTURE(e.id);
    const int done = for_instances(e.id, 11, 3, 0, [](const IdentityInstance& inst) {
      CHECK(evaluate_exact(inst.lhs, 0) == Rat(1));
      CHECK(std::get<Rat>(residual(inst)).is_zero());
    });
    CHECK(done == 3);
  }
}

TEST_CASE("exact residuals vanish on random environments") {
  for (const auto& e : list_entries()) {
    if (e.mode != CheckMode::ExactTerminating) continue;
    CAPTURE(e.id);
    for (std::size_t n = 1; n <= 4; ++n) {
      CAPTURE(n);
      const int done = for_instances(e.id, 100 + n, 4, n, [](const IdentityInstance& inst) {
        const Residual r = residual(inst);
        CHECK(std::get<Rat>(r) == Rat(0));
      });
      CHECK(done == 4);
    }
  }
}

TEST_CASE("side evaluation matches brute force on plain series") {
  for (const auto& e : list_entries()) {
    if (e.mode != CheckMode::ExactTerminating) continue;
    for_instances(e.id, 7, 2, 3, [](const IdentityInstance& inst) {
      for (const Side* side : {&inst.lhs, &inst.rhs}) {
        const auto* s = std::get_if<SeriesSpec>(&side->body);
        if (s == nullptr || !s->upper_pairs.empty() || !s->lower_pairs.empty()) continue;
        Side bare;
        bare.body = *s;
        CHECK(evaluate_exact(bare, 3) == brute_sum(s->upper, s->lower, std::get<Rat>(s->arg), 3));
      }
    });
  }
}

TEST_CASE("prop-11P1 against a literal double sum") {
  const Rat a(7, 3), b(-1, 2), c(4, 5), p(3, 4), x(2, 3);
  const std::size_t n = 2;
  const std::vector<Rat> A = {Rat(1, 5)};
  const std::vector<Rat> B = {Rat(-7, 4), Rat(9, 2)};
  ParamEnv env;
  env.n = n;
  env.bindings = {{"a", a}, {"b", b}, {"c", c}, {"p", p}, {"x", x}};
  env.extra_upper = A;
  env.extra_lower = B;
  const auto inst = instantiate("prop-11P1", env);
  const Rat g = p * (a - p) * (b + c - a) / (b * c - p * (a - p));
  CHECK(inst.env.at("gamma") == g);

  std::vector<Rat> up = {a, b, c, a - p + Rat(1), p + Rat(1), A[0], Rat(-2)};
  std::vector<Rat> lo = {Rat(1) + a - b, Rat(1) + a - c, p, a - p, B[0], B[1]};
  const Rat lhs = brute_sum(up, lo, x, n);
  Rat rhs(0);
  for (std::size_t m = 0; m <= n; ++m) {
    const Rat mm(static_cast<unsigned long>(m));
    // term m of the outer series, computed as a difference of brute sums
    std::vector<Rat> ou = {a / Rat(2), (a + Rat(1)) / Rat(2), a - b - c, g + Rat(1), A[0], Rat(-2)};
    std::vector<Rat> ol = {Rat(1) + a - b, Rat(1) + a - c, g, B[0], B[1]};
    Rat t = brute_sum(ou, ol, Rat(-4) * x, m);
    if (m > 0) t = t - brute_sum(ou, ol, Rat(-4) * x, m - 1);
    std::vector<Rat> iu = {a + Rat(2) * mm, A[0] + mm, Rat(-2) + mm};
    std::vector<Rat> il = {B[0] + mm, B[1] + mm};
    rhs = rhs + t * brute_sum(iu, il, x, n - m);
  }
  CHECK(lhs == rhs);
  CHECK(evaluate_exact(inst.lhs, n) == lhs);
  CHECK(evaluate_exact(inst.rhs, n) == rhs);
}

TEST_CASE("Sheppard transformation worked example") {
  ParamEnv env;
  env.n = 1;
  env.bindings = {{"a", Rat(1)}, {"c", Rat(1)}, {"d", Rat(2)}, {"e", Rat(2)}};
  const auto inst = instantiate("eq-3e2C12P2", env);
  CHECK(evaluate_exact(inst.lhs, 1) == Rat(3, 4));
  CHECK(evaluate_exact(inst.rhs, 1) == Rat(3, 4));
}

TEST_CASE("prop-12P2 derives f from the balancing condition") {
  for_instances("prop-12P2", 5, 10, 3, [](const IdentityInstance& inst) {
    const auto& v = inst.env.bindings;
    CHECK(v.at("d") + v.at("e") + v.at("f") - v.at("a") - v.at("b") - v.at("c") + Rat(3) == Rat(3));
  });
}

TEST_CASE("structural flags hold") {
  int saal = 0, vwp = 0;
  for (const auto& e : list_entries()) {
    if (e.mode != CheckMode::ExactTerminating) continue;
    CAPTURE(e.id);
    for_instances(e.id, 21, 3, 3, [&](const IdentityInstance& inst) {
      for (const Side* side : {&inst.lhs, &inst.rhs}) {
        const auto* s = std::get_if<SeriesSpec>(&side->body);
        if (side->saalschutzian) {
          REQUIRE(s != nullptr);
          CHECK(excess(*s) == Rat(1));
          ++saal;
        }
        if (side->very_well_poised) {
          REQUIRE(s != nullptr);
          CHECK(is_very_well_poised(*s));
          ++vwp;
        }
      }
    });
  }
  CHECK(saal > 0);
  CHECK(vwp > 0);
  // both 13F12 sides of the three-pair transformation carry the flag
  for_instances("prop-13P3", 3, 1, 2, [](const IdentityInstance& inst) {
    CHECK(inst.lhs.very_well_poised);
    CHECK(inst.rhs.very_well_poised);
    CHECK(std::get<SeriesSpec>(inst.lhs.body).r() == 13);
    CHECK(std::get<SeriesSpec>(inst.rhs.body).r() == 13);
  });
}

TEST_CASE("quadratic transformations vanish as power series") {
  for (const auto& e : list_entries()) {
    if (e.mode != CheckMode::FormalPS) continue;
    CAPTURE(e.id);
    const int done = for_instances(e.id, 31, 3, 0, [](const IdentityInstance& inst) {
      const auto r = std::get<PowerSeries>(residual(inst));
      CHECK(r.order() == 8);
      CHECK(r.is_zero());
    }, {8, 1});
    CHECK(done == 3);
  }
}

TEST_CASE("Whipple quadratic series at order 2 by hand") {
  // 3F2(a,b,c;1+a-b,1+a-c;x): coefficient of x is abc/((1+a-b)(1+a-c)).
  const Rat a(1, 2), b(1, 3), c(1, 4);
  ParamEnv env;
  env.bindings = {{"a", a}, {"b", b}, {"c", c}};
  const auto inst = instantiate("eq-1e6", env, {2, 1});
  const auto lhs = evaluate_formal(inst.lhs, 2);
  CHECK(lhs[1] == a * b * c / ((Rat(1) + a - b) * (Rat(1) + a - c)));
  const auto rhs = evaluate_formal(inst.rhs, 2);
  CHECK(lhs == rhs);
}

TEST_CASE("reflection of the normalised 6F5") {
  int checked = 0;
  for_instances("prop-12P2", 9, 12, 3, [&](const IdentityInstance& inst) {
    ParamEnv base;
    base.n = inst.env.n;
    for (const char* s : {"a", "b", "c", "d", "e", "p", "q"}) base.bindings[s] = inst.env.at(s);
    ParamEnv r;
    try {
      r = reflect_12P2(base);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Inadmissible);
      return;
    }
    const Rat lhs = f_tilde_12P2(base);
    const Rat rhs = f_tilde_12P2(r);
    CHECK(lhs == (base.n % 2 ? -rhs : rhs));
    ++checked;
  });
  CHECK(checked > 0);
}

TEST_CASE("env json round trip") {
  ParamEnv env;
  env.n = 3;
  env.bindings = {{"a", Rat(-1, 3)}, {"gamma^2", Rat(5)}};
  env.extra_lower = {Rat(1, 2)};
  const auto j = to_json(env);
  CHECK(j["params"]["a"] == "-1/3");
  CHECK(env_from_json(j) == env);
  CHECK_THROWS_AS(env_from_json(nlohmann::json::array()), Error);
}

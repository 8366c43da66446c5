#include "doctest.h"

#include <set>

#include "hyperxf/catalog.hpp"
#include "hyperxf/error.hpp"
#include "hyperxf/verifier.hpp"

using namespace hyperxf;

namespace {

VerifyConfig quick(std::size_t samples = 4, std::size_t n_max = 3) {
  VerifyConfig c;
  c.samples = samples;
  c.n_max = n_max;
  c.soft_terms = 2000;
  c.threads = 1;
  return c;
}

bool degenerate_at(const std::string& id, ParamEnv env, const EvalOptions& opt) {
  try {
    instantiate(id, env, opt);
  } catch (const Error& e) {
    return e.is_degeneracy();
  }
  return false;
}

}  // namespace

TEST_CASE("config validation") {
  VerifyConfig c;
  CHECK_NOTHROW(c.validate());
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = VerifyConfig{};
  c.denominators = {};
  CHECK_THROWS_AS(c.validate(), Error);
  c = VerifyConfig{};
  c.denominators = {3, 0};
  CHECK_THROWS_AS(c.validate(), Error);
  c = VerifyConfig{};
  c.numerator_lo = 4;
  c.numerator_hi = 3;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("sample_env is a function of seed, id and index") {
  const auto cfg = quick();
  for (const auto& e : list_entries()) {
    const ParamEnv a = sample_env(e, 2, cfg);
    const ParamEnv b = sample_env(e, 2, cfg);
    CHECK(a == b);
  }
  const auto& e = find_entry("prop-13P3");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < 6; ++i) seen.insert(to_json(sample_env(e, i, cfg)).dump());
  CHECK(seen.size() == 6);
  auto other = cfg;
  other.seed = 7;
  CHECK_FALSE(sample_env(e, 0, cfg) == sample_env(e, 0, other));
}

TEST_CASE("drawn values stay inside the configured grid") {
  auto cfg = quick();
  cfg.numerator_lo = -2;
  cfg.numerator_hi = 2;
  cfg.denominators = {3};
  const auto& e = find_entry("prop-11P1");
  bool saw_list = false;
  for (std::size_t i = 0; i < 20; ++i) {
    const ParamEnv env = sample_env(e, i, cfg);
    auto in_grid = [](const Rat& v) {
      const Rat t = v * Rat(3);
      return t.is_integer() && t >= Rat(-2) && t <= Rat(2);
    };
    for (const auto& [k, v] : env.bindings) CHECK(in_grid(v));
    for (const auto& v : env.extra_upper) CHECK(in_grid(v));
    for (const auto& v : env.extra_lower) CHECK(in_grid(v));
    CHECK(env.extra_upper.size() <= 2);
    CHECK(env.extra_lower.size() <= 2);
    saw_list = saw_list || !env.extra_upper.empty() || !env.extra_lower.empty();
  }
  CHECK(saw_list);
}

TEST_CASE("samples are admissible for every n up to n_max") {
  const auto cfg = quick(5, 4);
  for (const auto& e : list_entries()) {
    if (e.mode != CheckMode::ExactTerminating) continue;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      ParamEnv env = sample_env(e, i, cfg);
      for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        env.n = n;
        CHECK_NOTHROW(instantiate(e.id, env, cfg.eval_options()));
      }
    }
  }
}

TEST_CASE("prop-12P2 samples satisfy the balancing condition") {
  const auto cfg = quick(10, 3);
  const auto& e = find_entry("prop-12P2");
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    ParamEnv env = sample_env(e, i, cfg);
    env.n = 2;
    const auto inst = instantiate(e.id, env, cfg.eval_options());
    const auto& v = inst.env.bindings;
    CHECK(v.at("d") + v.at("e") + v.at("f") - v.at("a") - v.at("b") - v.at("c") + Rat(2) == Rat(3));
  }
}

TEST_CASE("cor-3C6P1 samples: integer a, q away from a/2") {
  const auto cfg = quick(10);
  const auto& e = find_entry("cor-3C6P1");
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const ParamEnv env = sample_env(e, i, cfg);
    CHECK(env.at("a").is_integer());
    CHECK(env.at("q") * Rat(2) != env.at("a"));
  }
}

TEST_CASE("every rejected draw really is degenerate") {
  const auto cfg = quick(8, 4);
  std::size_t checked = 0;
  for (const auto& e : list_entries()) {
    const auto report = verify_entry(e.id, cfg);
    for (const auto& rec : report.records) {
      if (rec.status != Status::Rejected || rec.env.is_null()) continue;
      ParamEnv env = env_from_json(rec.env);
      env.n = rec.n.value_or(0);
      CHECK_MESSAGE(degenerate_at(e.id, env, cfg.eval_options()), e.id, " ", rec.env.dump());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("verify_entry record layout") {
  const auto cfg = quick(3, 2);
  SUBCASE("exact") {
    const auto r = verify_entry("sum-dougall", cfg);
    std::size_t evaluated = 0;
    for (const auto& rec : r.records) {
      if (rec.status == Status::Rejected) continue;
      ++evaluated;
      REQUIRE(rec.n.has_value());
      CHECK(rec.detail.at("residual") == "0");
    }
    CHECK(evaluated == cfg.samples * (cfg.n_max + 1));
    CHECK(r.summary.passes == evaluated);
    CHECK(r.ok());
  }
  SUBCASE("formal") {
    const auto r = verify_entry("eq-1e6", cfg);
    CHECK(r.summary.passes == cfg.samples);
    for (const auto& rec : r.records) {
      if (rec.status == Status::Pass) CHECK(rec.detail.at("order") == cfg.ps_order);
    }
  }
  SUBCASE("soft records do not count as failures") {
    const auto r = verify_entry("cor-3C6P1", cfg);
    CHECK(r.summary.fails == 0);
    CHECK(r.summary.soft_passes + r.summary.soft_fails == cfg.samples);
    CHECK(r.ok());
    for (const auto& rec : r.records) {
      if (rec.status == Status::SoftPass || rec.status == Status::SoftFail) CHECK(rec.detail.at("exact") == false);
    }
  }
}

TEST_CASE("n_max = 0 collapses every exact entry to 1 = 1") {
  const auto cfg = quick(3, 0);
  for (const auto& e : list_entries()) {
    if (e.mode != CheckMode::ExactTerminating) continue;
    const auto r = verify_entry(e.id, cfg);
    CHECK_MESSAGE(r.summary.fails == 0, e.id);
    for (const auto& rec : r.records)
      if (rec.status == Status::Pass) CHECK(rec.detail.at("lhs") == "1");
  }
}

TEST_CASE("unknown ids") {
  CHECK_THROWS_AS(verify_entry("no-such-entry", quick()), Error);
  CHECK_THROWS_AS(run_cross_check("no-such-check", quick()), Error);
  try {
    verify_entry("no-such-entry", quick());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownId);
  }
}

TEST_CASE("exhausting max_rejects is recorded, not thrown") {
  auto cfg = quick(2);
  cfg.numerator_lo = 0;
  cfg.numerator_hi = 0;
  cfg.denominators = {1};
  cfg.max_rejects = 5;
  const auto r = verify_entry("prop-13P3", cfg);
  CHECK(r.summary.passes == 0);
  CHECK(r.summary.fails == 0);
  CHECK(r.summary.rejects == cfg.samples * (cfg.max_rejects + 1));
  CHECK_THROWS_AS(sample_env(find_entry("prop-13P3"), 0, cfg), Error);
}

TEST_CASE("verify_all is deterministic and thread-count independent") {
  auto cfg = quick(2, 2);
  const std::string one = to_json(verify_all(cfg), cfg).dump();
  cfg.threads = 3;
  const std::string three = to_json(verify_all(cfg), cfg).dump();
  CHECK(one == three);
  const auto j = nlohmann::json::parse(one);
  CHECK(j.at("reports").size() == list_entries().size() + cross_check_names().size());
  CHECK(j.at("summary").at("fails") == 0);
}

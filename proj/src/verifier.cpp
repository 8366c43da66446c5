#include "hyperxf/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "hyperxf/error.hpp"

namespace hyperxf {

void VerifyConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (samples == 0) bad("samples must be positive");
  if (numerator_lo > numerator_hi) bad("empty numerator range");
  if (denominators.empty()) bad("empty denominator set");
  for (long d : denominators) {
    if (d <= 0) bad("denominators must be positive");
  }
  if (max_rejects == 0) bad("max_rejects must be positive");
  if (soft_terms == 0) bad("soft_terms must be positive");
  if (soft_rel_tol.sign() < 0) bad("soft_rel_tol must be non-negative");
}

nlohmann::json to_json(const VerifyConfig& c) {
  std::vector<long> dens = c.denominators;
  return {{"seed", c.seed},
          {"samples", c.samples},
          {"n_max", c.n_max},
          {"ps_order", c.ps_order},
          {"numerator_range", {c.numerator_lo, c.numerator_hi}},
          {"denominator_set", dens},
          {"max_rejects", c.max_rejects},
          {"soft_terms", c.soft_terms},
          {"soft_rel_tol", c.soft_rel_tol.str()}};
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Rejected: return "rejected";
    case Status::SoftPass: return "soft-pass";
    case Status::SoftFail: return "soft-fail";
  }
  return "?";
}

void VerificationReport::add(Record r) {
  switch (r.status) {
    case Status::Pass: ++summary.passes; break;
    case Status::Fail: ++summary.fails; break;
    case Status::Rejected: ++summary.rejects; break;
    case Status::SoftPass: ++summary.soft_passes; break;
    case Status::SoftFail: ++summary.soft_fails; break;
  }
  records.push_back(std::move(r));
}

namespace {

nlohmann::json summary_json(const Summary& s) {
  return {{"passes", s.passes},
          {"fails", s.fails},
          {"rejects", s.rejects},
          {"soft_passes", s.soft_passes},
          {"soft_fails", s.soft_fails}};
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    nlohmann::json j = {{"sample", rec.sample}, {"status", std::string(to_string(rec.status))}};
    j["n"] = rec.n ? nlohmann::json(*rec.n) : nlohmann::json(nullptr);
    j["env"] = rec.env;
    j["detail"] = rec.detail;
    records.push_back(std::move(j));
  }
  return {{"entry", r.entry},
          {"kind", r.kind},
          {"check_mode", r.check_mode},
          {"description", r.description},
          {"config", to_json(r.config)},
          {"records", records},
          {"summary", summary_json(r.summary)}};
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports, const VerifyConfig& config) {
  Summary total;
  std::size_t failing = 0;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    total.passes += r.summary.passes;
    total.fails += r.summary.fails;
    total.rejects += r.summary.rejects;
    total.soft_passes += r.summary.soft_passes;
    total.soft_fails += r.summary.soft_fails;
    if (!r.ok()) ++failing;
    arr.push_back(to_json(r));
  }
  nlohmann::json s = summary_json(total);
  s["reports"] = reports.size();
  s["failing_reports"] = failing;
  return {{"config", to_json(config)}, {"reports", arr}, {"summary", s}};
}

// ---- sampling ----

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::string_view key, std::size_t index) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return splitmix64(splitmix64(seed) ^ splitmix64(h) ^ splitmix64(0xA5A5A5A5ULL + index));
}

// Portable bounded draw in [0, span).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t span) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % span;
}

class Drawer {
 public:
  Drawer(const VerifyConfig& c, std::uint64_t seed) : cfg_(c), rng_(seed) {}

  long integer() {
    const auto span = static_cast<std::uint64_t>(cfg_.numerator_hi - cfg_.numerator_lo) + 1;
    return cfg_.numerator_lo + static_cast<long>(bounded(rng_, span));
  }
  Rat rational() {
    const long num = integer();
    const long den = cfg_.denominators[bounded(rng_, cfg_.denominators.size())];
    return Rat(num, den);
  }
  std::size_t small(std::size_t hi) { return bounded(rng_, hi + 1); }

 private:
  const VerifyConfig& cfg_;
  std::mt19937_64 rng_;
};

std::string reason_of(const Error& e) { return std::string(to_string(e.kind())) + ": " + e.what(); }

}  // namespace

DrawResult draw_admissible(std::string_view key, std::size_t index, const VerifyConfig& config, const DrawSpec& spec,
                           const std::function<void(const ParamEnv&, std::optional<std::size_t>&)>& validate) {
  config.validate();
  Drawer d(config, stream_seed(config.seed, key, index));
  DrawResult out;
  while (out.rejections.size() < config.max_rejects) {
    ParamEnv env;
    for (const auto& p : spec.params) env.bindings[p] = d.rational();
    for (const auto& p : spec.integer_params) env.bindings[p] = Rat(d.integer());
    if (spec.extra_lists) {
      const std::size_t r = d.small(2);
      const std::size_t s = d.small(2);
      for (std::size_t i = 0; i < r; ++i) env.extra_upper.push_back(d.rational());
      for (std::size_t i = 0; i < s; ++i) env.extra_lower.push_back(d.rational());
    }
    std::optional<std::size_t> at_n;
    try {
      validate(env, at_n);
      out.env = std::move(env);
      return out;
    } catch (const Error& e) {
      if (!e.is_degeneracy()) throw;
      out.rejections.push_back({std::move(env), at_n, reason_of(e)});
    }
  }
  return out;
}

DrawSpec draw_spec(const IdentityEntry& entry) {
  DrawSpec spec;
  for (const auto& p : entry.free_params) {
    const auto& ints = entry.hints.integer_params;
    if (std::find(ints.begin(), ints.end(), p) == ints.end()) spec.params.push_back(p);
  }
  spec.integer_params = entry.hints.integer_params;
  spec.extra_lists = entry.hints.extra_lists;
  return spec;
}

namespace {

void validate_entry(const IdentityEntry& entry, const VerifyConfig& config, const ParamEnv& env,
                    std::optional<std::size_t>& at_n) {
  const EvalOptions opt = config.eval_options();
  if (entry.mode != CheckMode::ExactTerminating) {
    instantiate(entry.id, env, opt);
    return;
  }
  ParamEnv e = env;
  for (std::size_t n = 0; n <= config.n_max; ++n) {
    at_n = n;
    e.n = n;
    instantiate(entry.id, e, opt);
  }
}

DrawResult draw_for_entry(const IdentityEntry& entry, std::size_t index, const VerifyConfig& config) {
  return draw_admissible(entry.id, index, config, draw_spec(entry),
                         [&](const ParamEnv& env, std::optional<std::size_t>& at_n) {
                           validate_entry(entry, config, env, at_n);
                         });
}

}  // namespace

ParamEnv sample_env(const IdentityEntry& entry, std::size_t sample_index, const VerifyConfig& config) {
  DrawResult r = draw_for_entry(entry, sample_index, config);
  if (!r.env) {
    const std::string last = r.rejections.empty() ? "none" : r.rejections.back().reason;
    throw Error(ErrorKind::NoAdmissibleSample, "no admissible sample found for " + entry.id + " after " +
                                                   std::to_string(r.rejections.size()) + " rejects; last: " + last);
  }
  return *r.env;
}

// ---- evaluation ----

namespace {

nlohmann::json exact_detail(const Rat& lhs, const Rat& rhs) {
  return {{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"residual", (lhs - rhs).str()}};
}

nlohmann::json soft_side_json(const SoftSide& s) {
  return {{"estimate", s.estimate.decimal(12)},
          {"partial_sum", s.partial.decimal(12)},
          {"previous_partial_sum", s.previous.decimal(12)},
          {"last_term", s.last_term.decimal(6)},
          {"prefactor", s.prefactor.str()},
          {"excess", s.excess.str()},
          {"terms", s.terms},
          {"rule", s.rule}};
}

Record evaluate_record(const IdentityEntry& entry, const ParamEnv& env, std::size_t sample, const VerifyConfig& config) {
  Record rec;
  rec.sample = sample;
  if (entry.mode == CheckMode::ExactTerminating) rec.n = env.n;
  IdentityInstance inst;
  try {
    inst = instantiate(entry.id, env, config.eval_options());
    rec.env = to_json(inst.env);
    switch (entry.mode) {
      case CheckMode::ExactTerminating: {
        const Rat lhs = evaluate_exact(inst.lhs, env.n);
        const Rat rhs = evaluate_exact(inst.rhs, env.n);
        rec.status = lhs == rhs ? Status::Pass : Status::Fail;
        rec.detail = exact_detail(lhs, rhs);
        break;
      }
      case CheckMode::FormalPS: {
        const auto r = std::get<PowerSeries>(residual(inst));
        rec.status = r.is_zero() ? Status::Pass : Status::Fail;
        rec.detail = {{"order", r.order()}, {"zero", r.is_zero()}};
        for (std::size_t k = 0; k <= r.order(); ++k) {
          if (!r[k].is_zero()) {
            rec.detail["first_nonzero"] = {{"power", k}, {"coefficient", r[k].str()}};
            break;
          }
        }
        break;
      }
      case CheckMode::NumericSoft: {
        const auto r = std::get<SoftResidual>(residual(inst));
        rec.status = r.discrepancy <= config.soft_rel_tol ? Status::SoftPass : Status::SoftFail;
        rec.detail = {{"exact", false},
                      {"discrepancy", r.discrepancy.decimal(6)},
                      {"tolerance", config.soft_rel_tol.str()},
                      {"lhs", soft_side_json(r.lhs)},
                      {"rhs", soft_side_json(r.rhs)}};
        break;
      }
    }
  } catch (const Error& e) {
    rec.status = Status::Fail;
    if (rec.env.is_null()) rec.env = to_json(env);
    rec.detail = {{"error", reason_of(e)}};
  }
  return rec;
}

void add_rejections(VerificationReport& report, std::size_t sample, std::vector<Rejection>& rej) {
  for (auto& r : rej) {
    Record rec;
    rec.sample = sample;
    rec.n = r.n;
    rec.status = Status::Rejected;
    rec.env = to_json(r.env);
    rec.detail = {{"reason", r.reason}};
    report.add(std::move(rec));
  }
}

}  // namespace

VerificationReport verify_entry(std::string_view id, const VerifyConfig& config) {
  config.validate();
  const IdentityEntry& entry = find_entry(id);
  VerificationReport report;
  report.entry = entry.id;
  report.kind = "identity";
  report.check_mode = std::string(to_string(entry.mode));
  report.description = entry.title;
  report.config = config;
  for (std::size_t s = 0; s < config.samples; ++s) {
    DrawResult draw = draw_for_entry(entry, s, config);
    add_rejections(report, s, draw.rejections);
    if (!draw.env) {
      Record rec;
      rec.sample = s;
      rec.status = Status::Rejected;
      rec.detail = {{"reason", "no-admissible-sample: no admissible sample found after " + std::to_string(config.max_rejects) + " rejects"}};
      report.add(std::move(rec));
      continue;
    }
    if (entry.mode == CheckMode::ExactTerminating) {
      ParamEnv env = *draw.env;
      for (std::size_t n = 0; n <= config.n_max; ++n) {
        env.n = n;
        report.add(evaluate_record(entry, env, s, config));
      }
    } else {
      report.add(evaluate_record(entry, *draw.env, s, config));
    }
  }
  return report;
}

unsigned resolve_threads(const VerifyConfig& config) {
  if (config.threads > 0) return config.threads;
  if (const char* v = std::getenv("HYPERXF_THREADS")) {
    char* end = nullptr;
    const long t = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && t > 0) return static_cast<unsigned>(t);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> verify_all(const VerifyConfig& config) {
  config.validate();
  std::vector<std::function<VerificationReport()>> tasks;
  for (const auto& e : list_entries()) {
    tasks.emplace_back([&config, id = e.id] { return verify_entry(id, config); });
  }
  for (const auto& name : cross_check_names()) {
    tasks.emplace_back([&config, name] { return run_cross_check(name, config); });
  }
  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(resolve_threads(config), tasks.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace hyperxf

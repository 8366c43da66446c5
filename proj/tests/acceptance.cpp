// Acceptance run: one PASS/FAIL line per criterion, exit status from the
// gating ones (all but the soft numeric suite).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperxf/catalog.hpp"
#include "hyperxf/error.hpp"
#include "hyperxf/verifier.hpp"

using namespace hyperxf;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  bool gating;
  std::function<Outcome()> run;
};

VerifyConfig config(std::size_t samples, std::size_t n_max) {
  VerifyConfig c;
  c.samples = samples;
  c.n_max = n_max;
  return c;
}

// Tallies a batch of reports; `expect` is the number of evaluated
// records each report should have.
Outcome tally(const std::vector<VerificationReport>& reports, std::size_t expect) {
  std::size_t passes = 0, fails = 0, rejects = 0, short_reports = 0;
  std::ostringstream bad;
  for (const auto& r : reports) {
    passes += r.summary.passes;
    fails += r.summary.fails;
    rejects += r.summary.rejects;
    if (r.summary.fails > 0) bad << " " << r.entry << "(fail " << r.summary.fails << ")";
    if (expect > 0 && r.summary.passes != expect) {
      ++short_reports;
      bad << " " << r.entry << "(" << r.summary.passes << "/" << expect << ")";
    }
  }
  std::ostringstream os;
  os << reports.size() << " reports, " << passes << " exact passes, " << fails << " fails, " << rejects
     << " rejected draws";
  if (!bad.str().empty()) os << ";" << bad.str();
  return {fails == 0 && short_reports == 0 && passes > 0, os.str()};
}

std::vector<VerificationReport> verify_ids(const std::vector<std::string>& ids, const VerifyConfig& c) {
  std::vector<VerificationReport> out;
  for (const auto& id : ids) out.push_back(verify_entry(id, c));
  return out;
}

Outcome summation_suite() {
  const auto c = config(100, 6);
  return tally(verify_ids({"sum-ext-chu-vandermonde", "sum-rakha-rathie", "sum-rr-formA", "sum-rr-formB",
                           "sum-svf-9f8", "sum-svf-formB"},
                          c),
               c.samples * (c.n_max + 1));
}

Outcome specialization_suite() {
  const auto c = config(50, 6);
  return tally({run_cross_check("cross-rr-p=b-pfaff-saalschutz", c), run_cross_check("cross-svf-p=b-dougall", c)},
               c.samples * (c.n_max + 1));
}

Outcome transformation_suite() {
  const auto c = config(25, 5);
  const std::vector<std::string> ids = {"prop-11P1",   "prop-3P16",  "cor-1C3P16",  "cor-2C3P16", "prop-11P2",
                                        "eq-1e1C11P2", "prop-12P1",  "prop-12P2",   "cor-1C12P2", "cor-2C12P2",
                                        "eq-3e2C12P2", "prop-13P1",  "prop-13P3",   "prop-13P4",  "cor-1C13P4"};
  const auto reports = verify_ids(ids, c);
  Outcome o = tally(reports, c.samples * (c.n_max + 1));
  // list lengths 0, 1, 2 on both sides for the double-sum entries
  for (const auto& r : reports) {
    if (r.entry != "prop-11P1" && r.entry != "prop-12P1" && r.entry != "prop-13P1") continue;
    std::set<std::size_t> up, low;
    for (const auto& rec : r.records) {
      if (rec.status != Status::Pass) continue;
      up.insert(rec.env.contains("extra_upper") ? rec.env["extra_upper"].size() : 0);
      low.insert(rec.env.contains("extra_lower") ? rec.env["extra_lower"].size() : 0);
    }
    const std::set<std::size_t> all = {0, 1, 2};
    if (up != all || low != all) {
      o.pass = false;
      o.detail += "; " + r.entry + " did not exercise every list length";
    }
  }
  return o;
}

Outcome reflection_suite() {
  const auto c = config(25, 5);
  const auto report = verify_entry("remark-1R12P2", c);
  Outcome o = tally({report}, c.samples * (c.n_max + 1));
  // and directly: F~(env) = (-1)^n F~(reflect(env))
  std::size_t direct = 0, mismatched = 0;
  const auto& entry = find_entry("remark-1R12P2");
  for (std::size_t s = 0; s < c.samples; ++s) {
    ParamEnv env = sample_env(entry, s, c);
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      env.n = n;
      const Rat lhs = f_tilde_12P2(env);
      const Rat rhs = f_tilde_12P2(reflect_12P2(env));
      if (lhs != (n % 2 == 0 ? rhs : -rhs)) ++mismatched;
      ++direct;
    }
  }
  o.detail += "; direct " + std::to_string(direct - mismatched) + "/" + std::to_string(direct);
  o.pass = o.pass && mismatched == 0;
  return o;
}

Outcome quadratic_suite() {
  auto c = config(10, 0);
  c.ps_order = 12;
  return tally(verify_ids({"prop-6P1", "cor-1C6P1", "cor-2C6P1", "eq-1e6", "eq-2e6"}, c), c.samples);
}

Outcome structural_suite() {
  const auto c = config(25, 5);
  const auto r = run_cross_check("structural", c);
  Outcome o = tally({r}, 0);
  // the two 13F12 sides of prop-13P3 must both be flagged very-well-poised
  ParamEnv env = sample_env(find_entry("prop-13P3"), 0, c);
  env.n = 3;
  const auto inst = instantiate("prop-13P3", env);
  for (const Side* side : {&inst.lhs, &inst.rhs}) {
    const auto* s = std::get_if<SeriesSpec>(&side->body);
    const bool shape = s && s->upper.size() + 2 * s->upper_pairs.size() == 13 &&
                       s->lower.size() + 2 * s->lower_pairs.size() == 12;
    if (!side->very_well_poised || !shape) {
      o.pass = false;
      o.detail += "; prop-13P3 side is not a flagged 13F12";
    }
  }
  return o;
}

Outcome soft_suite() {
  const auto c = config(25, 0);
  std::ostringstream os;
  bool pass = true;
  for (const char* id : {"cor-3C6P1", "eq-3e6"}) {
    const auto r = verify_entry(id, c);
    double worst = 0;
    for (const auto& rec : r.records) {
      if (rec.status != Status::SoftPass && rec.status != Status::SoftFail) continue;
      worst = std::max(worst, std::stod(rec.detail.at("discrepancy").get<std::string>()));
    }
    os << id << " " << r.summary.soft_passes << " within / " << r.summary.soft_fails << " outside tolerance "
       << c.soft_rel_tol.str() << ", worst " << worst << "; ";
    pass = pass && r.summary.soft_fails == 0 && r.summary.fails == 0;
  }
  std::string d = os.str();
  return {pass, d.substr(0, d.size() - 2)};
}

Outcome determinism() {
  const VerifyConfig c;
  const std::string a = to_json(verify_all(c), c).dump();
  const std::string b = to_json(verify_all(c), c).dump();
  return {a == b, std::to_string(a.size()) + " bytes, seed " + std::to_string(c.seed) + (a == b ? ", identical" : ", differ")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "summation suite", true, summation_suite},
      {2, "specialization p=b", true, specialization_suite},
      {3, "exact transformations", true, transformation_suite},
      {4, "reflection", true, reflection_suite},
      {5, "quadratic formal N=12", true, quadratic_suite},
      {6, "structural", true, structural_suite},
      {7, "soft numeric (non-gating)", false, soft_suite},
      {8, "determinism", true, determinism},
  };
  bool ok = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d %-28s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (c.gating && !o.pass) ok = false;
  }
  return ok ? 0 : 1;
}

#include <string>
#include <vector>

#include "hyperxf/catalog.hpp"
#include "hyperxf/error.hpp"
#include "hyperxf/poch.hpp"
#include "hyperxf/summations.hpp"
#include "hyperxf/verifier.hpp"

namespace hyperxf {

namespace {

struct Outcome {
  ParamEnv env;
  bool ok = false;
  nlohmann::json detail;
};

using PointCheck = std::function<Outcome(const ParamEnv&)>;

struct CrossCheck {
  std::string name;
  std::string description;
  DrawSpec spec;
  PointCheck check;
};

Rat nrat(std::size_t n) { return Rat(static_cast<unsigned long>(n)); }

SeriesSpec unit_series(std::vector<Rat> upper, std::vector<Rat> lower, std::size_t n) {
  SeriesSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.mode = Terminating{n};
  return s;
}

Rat poch_ratio(const std::vector<Rat>& nums, const std::vector<Rat>& dens, std::size_t n) {
  Rat v(1);
  for (const auto& x : nums) v *= poch(x, n);
  for (const auto& x : dens) {
    const Rat p = poch(x, n);
    if (p.is_zero()) throw Error(ErrorKind::DegenerateClosedForm, "degenerate closed form: (" + x.str() + ")_n = 0");
    v /= p;
  }
  return v;
}

nlohmann::json values(std::initializer_list<std::pair<const char*, Rat>> kv) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : kv) j[k] = v.str();
  return j;
}

Outcome rr_pb(const ParamEnv& env) {
  const Rat &a = env.at("a"), &b = env.at("b"), &c = env.at("c");
  const Rat rr = sum_rakha_rathie(a, b, c, b, env.n).value;
  const Rat ps = sum_pfaff_saalschutz(a, b + Rat(1), c, env.n).value;
  const Rat direct = eval_terminating(lhs_rakha_rathie(a, b, c, b, env.n));
  return {env, rr == ps && direct == ps, values({{"extension", rr}, {"classical", ps}, {"direct", direct}})};
}

Outcome svf_pb(const ParamEnv& env) {
  const Rat &a = env.at("a"), &b = env.at("b"), &c = env.at("c"), &d = env.at("d");
  const Rat svf = sum_svf_9f8(a, b, c, d, b, env.n).value;
  const Rat dg = sum_dougall(a, b + Rat(1), c, d, env.n).value;
  const Rat direct = eval_terminating(lhs_svf_9f8(a, b, c, d, b, env.n));
  return {env, svf == dg && direct == dg, values({{"extension", svf}, {"classical", dg}, {"direct", direct}})};
}

Outcome ecv_bp1(const ParamEnv& env) {
  const Rat &a = env.at("a"), &p = env.at("p");
  const Rat ecv = sum_ext_chu_vandermonde(a, p + Rat(1), p, env.n).value;
  const Rat cv = sum_chu_vandermonde(a, p, env.n).value;
  return {env, ecv == cv, values({{"extension", ecv}, {"classical", cv}})};
}

// At p = b the 5F4 transformation loses its extra pair and must coincide
// with the classical Whipple 4F3 transformation in b+1.
Outcome whipple_pb(const ParamEnv& env) {
  ParamEnv e = env;
  e.bindings["p"] = env.at("b");
  const auto inst = instantiate("cor-1C12P2", e);
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat &a = env.at("a"), &b = env.at("b"), &c = env.at("c"), &d = env.at("d"), &ee = env.at("e");
  const Rat f = inst.env.at("f");
  const Rat b1 = b + Rat(1);
  const Rat cl = eval_terminating(unit_series({a, b1, c, -N}, {d, ee, f}, n));
  const Rat cr = poch_ratio({ee - c, f - c}, {ee, f}, n) *
                 eval_terminating(unit_series({d - a, d - b1, c, -N}, {d, Rat(1) + c - ee - N, Rat(1) + c - f - N}, n));
  const Rat il = evaluate_exact(inst.lhs, n);
  const Rat ir = evaluate_exact(inst.rhs, n);
  return {inst.env, il == cl && ir == cr && cl == cr,
          values({{"lhs", il}, {"rhs", ir}, {"whipple_lhs", cl}, {"whipple_rhs", cr}})};
}

// At q = e the delta pair has the rational root (f+g-e)/2 and the 13F12
// loses the parameters e, 1+a-e.
Outcome vwp_qe(const ParamEnv& env) {
  ParamEnv e = env;
  e.bindings["q"] = env.at("e");
  const auto inst = instantiate("prop-13P3", e);
  const std::size_t n = env.n;
  const Rat N = nrat(n);
  const Rat &a = env.at("a"), &b = env.at("b"), &c = env.at("c"), &d = env.at("d"), &ee = env.at("e"),
            &f = env.at("f"), &p = env.at("p");
  const Rat g = inst.env.at("g");
  const Rat half_root = (f + g - ee) / Rat(2);
  const bool rational_root = inst.env.at("delta^2") == half_root * half_root;
  const Rat reduced = eval_terminating(unit_series(
      {a, Rat(1) + a / Rat(2), b, c, d, f, g, a - p + Rat(1), p + Rat(1), ee + Rat(1), -N},
      {a / Rat(2), Rat(1) + a - b, Rat(1) + a - c, Rat(1) + a - d, Rat(1) + a - f, Rat(1) + a - g, p, a - p, a - ee,
       Rat(1) + a + N},
      n));
  Side split = inst.rhs;
  split.prefactor = {split.prefactor.front(),
                     PochRatio{{Rat(1) + a - f - g, Rat(1) + a - ee}, {a - f - g, a - ee}, n}};
  for (const auto& x : std::get<PochRatio>(split.prefactor.back()).dens) {
    if (poch(x, n).is_zero()) throw Error(ErrorKind::DegenerateClosedForm, "degenerate closed form: split prefactor");
  }
  const Rat il = evaluate_exact(inst.lhs, n);
  const Rat ir = evaluate_exact(inst.rhs, n);
  const Rat sr = evaluate_exact(split, n);
  return {inst.env, rational_root && il == reduced && ir == sr && il == ir,
          values({{"lhs", il}, {"rhs", ir}, {"reduced_lhs", reduced}, {"split_rhs", sr}})};
}

Outcome reflect_twice(const ParamEnv& env) {
  const ParamEnv r1 = reflect_12P2(env);
  const ParamEnv r2 = reflect_12P2(r1);
  const Rat f0 = f_tilde_12P2(env);
  const Rat f1 = f_tilde_12P2(r1);
  const Rat f2 = f_tilde_12P2(r2);
  const Rat sign = env.n % 2 ? Rat(-1) : Rat(1);
  Outcome o{env, f0 == sign * f1 && f0 == f2, values({{"F", f0}, {"F_reflected", f1}, {"F_reflected_twice", f2}})};
  o.detail["reflected_env"] = to_json(r1);
  o.detail["twice_reflected_env"] = to_json(r2);
  return o;
}

const std::vector<CrossCheck>& pointwise_checks() {
  static const std::vector<CrossCheck> checks = {
      {"cross-rr-p=b-pfaff-saalschutz", "Saalschutzian 4F3 sum at p = b against Pfaff-Saalschutz in b+1",
       {{"a", "b", "c"}, {}, false}, rr_pb},
      {"cross-svf-p=b-dougall", "9F8 sum at p = b against Dougall in b+1", {{"a", "b", "c", "d"}, {}, false}, svf_pb},
      {"cross-ecv-b=p+1-chu-vandermonde", "extended 3F2 sum at b = p+1 against Chu-Vandermonde",
       {{"a", "p"}, {}, false}, ecv_bp1},
      {"cross-1C12P2-p=b-whipple", "Saalschutzian 5F4 transformation at p = b against classical Whipple 4F3",
       {{"a", "b", "c", "d", "e"}, {}, false}, whipple_pb},
      {"cross-13P3-q=e", "13F12 transformation at q = e with the delta pair split rationally",
       {{"a", "b", "c", "d", "e", "f", "p"}, {}, false}, vwp_qe},
      {"cross-1R12P2-reflect-twice", "normalised 6F5 under one and two reflections",
       {{"a", "b", "c", "d", "e", "p", "q"}, {}, false}, reflect_twice},
  };
  return checks;
}

VerificationReport run_pointwise(const CrossCheck& cc, const VerifyConfig& config) {
  VerificationReport report;
  report.entry = cc.name;
  report.kind = "cross-check";
  report.check_mode = "exact";
  report.description = cc.description;
  report.config = config;
  for (std::size_t s = 0; s < config.samples; ++s) {
    std::vector<Outcome> outcomes;
    DrawResult draw = draw_admissible(cc.name, s, config, cc.spec,
                                      [&](const ParamEnv& env, std::optional<std::size_t>& at_n) {
                                        outcomes.clear();
                                        ParamEnv e = env;
                                        for (std::size_t n = 0; n <= config.n_max; ++n) {
                                          at_n = n;
                                          e.n = n;
                                          outcomes.push_back(cc.check(e));
                                        }
                                      });
    for (auto& r : draw.rejections) {
      report.add({s, r.n, Status::Rejected, to_json(r.env), {{"reason", r.reason}}});
    }
    if (!draw.env) {
      report.add({s, std::nullopt, Status::Rejected, nullptr,
                  {{"reason", "no-admissible-sample: no admissible sample found"}}});
      continue;
    }
    for (std::size_t n = 0; n < outcomes.size(); ++n) {
      auto& o = outcomes[n];
      report.add({s, n, o.ok ? Status::Pass : Status::Fail, to_json(o.env), std::move(o.detail)});
    }
  }
  return report;
}

VerificationReport run_structural(const VerifyConfig& config) {
  VerificationReport report;
  report.entry = "structural";
  report.kind = "cross-check";
  report.check_mode = "exact";
  report.description = "parametric excess 1 on Saalschutzian-flagged series, pairing on very-well-poised ones";
  report.config = config;
  for (const auto& entry : list_entries()) {
    if (entry.mode != CheckMode::ExactTerminating) continue;
    for (std::size_t s = 0; s < config.samples; ++s) {
      ParamEnv env;
      try {
        env = sample_env(entry, s, config);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoAdmissibleSample) throw;
        report.add({s, std::nullopt, Status::Rejected, nullptr, {{"entry", entry.id}, {"reason", e.what()}}});
        continue;
      }
      for (std::size_t n = 0; n <= config.n_max; ++n) {
        env.n = n;
        const auto inst = instantiate(entry.id, env, config.eval_options());
        nlohmann::json checks = nlohmann::json::array();
        bool ok = true;
        for (const auto& [name, side] : {std::pair{"lhs", &inst.lhs}, std::pair{"rhs", &inst.rhs}}) {
          const auto* spec = std::get_if<SeriesSpec>(&side->body);
          if (side->saalschutzian) {
            const bool good = spec != nullptr && spec->r() == spec->s() + 1 && excess(*spec) == Rat(1);
            checks.push_back({{"side", name},
                              {"property", "saalschutzian"},
                              {"excess", spec && spec->r() == spec->s() + 1 ? excess(*spec).str() : "n/a"},
                              {"ok", good}});
            ok = ok && good;
          }
          if (side->very_well_poised) {
            const bool good = spec != nullptr && is_very_well_poised(*spec);
            checks.push_back({{"side", name}, {"property", "very-well-poised"}, {"ok", good}});
            ok = ok && good;
          }
        }
        if (checks.empty()) break;
        report.add({s, n, ok ? Status::Pass : Status::Fail, to_json(inst.env), {{"entry", entry.id}, {"checks", checks}}});
      }
    }
  }
  return report;
}

}  // namespace

const std::vector<std::string>& cross_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : pointwise_checks()) v.push_back(c.name);
    v.push_back("structural");
    return v;
  }();
  return names;
}

VerificationReport run_cross_check(std::string_view name, const VerifyConfig& config) {
  config.validate();
  if (name == "structural") return run_structural(config);
  for (const auto& c : pointwise_checks()) {
    if (c.name == name) return run_pointwise(c, config);
  }
  throw Error(ErrorKind::UnknownId, "unknown cross-check '" + std::string(name) + "'");
}

}  // namespace hyperxf

#include "hyperxf/catalog.hpp"

#include <algorithm>
#include <type_traits>

#include "hyperxf/error.hpp"
#include "hyperxf/poch.hpp"

namespace hyperxf {

const Rat& ParamEnv::at(const std::string& symbol) const {
  auto it = bindings.find(symbol);
  if (it == bindings.end()) {
    throw Error(ErrorKind::InvalidArgument, "missing parameter '" + symbol + "'");
  }
  return it->second;
}

nlohmann::json to_json(const ParamEnv& env) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : env.bindings) params[k] = v.str();
  nlohmann::json j = {{"n", env.n}, {"params", params}};
  auto list = [](const std::vector<Rat>& xs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
  };
  if (!env.extra_upper.empty()) j["extra_upper"] = list(env.extra_upper);
  if (!env.extra_lower.empty()) j["extra_lower"] = list(env.extra_lower);
  return j;
}

namespace {

Rat rat_from_json(const nlohmann::json& v) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw Error(ErrorKind::Parse, "rational must be a string or an integer");
}

}  // namespace

ParamEnv env_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "environment must be an object");
  ParamEnv env;
  if (j.contains("n")) {
    if (!j["n"].is_number_unsigned()) throw Error(ErrorKind::Parse, "n must be a non-negative integer");
    env.n = j["n"].get<std::size_t>();
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw Error(ErrorKind::Parse, "params must be an object");
    for (const auto& [k, v] : j["params"].items()) env.bindings[k] = rat_from_json(v);
  }
  for (const char* key : {"extra_upper", "extra_lower"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array()) throw Error(ErrorKind::Parse, std::string(key) + " must be an array");
    auto& out = std::string_view(key) == "extra_upper" ? env.extra_upper : env.extra_lower;
    for (const auto& v : j[key]) out.push_back(rat_from_json(v));
  }
  return env;
}

std::size_t SeriesTemplate::length(std::size_t m) const {
  const long len = length_base + length_slope * static_cast<long>(m);
  if (len < 0) throw Error(ErrorKind::InvalidArgument, "negative inner series length");
  return static_cast<std::size_t>(len);
}

SeriesSpec SeriesTemplate::at(std::size_t m) const {
  SeriesSpec s;
  for (const auto& u : upper) s.upper.push_back(u.at(m));
  for (const auto& l : lower) s.lower.push_back(l.at(m));
  s.arg = arg;
  s.mode = Terminating{length(m)};
  return s;
}

std::string_view to_string(CheckMode mode) {
  switch (mode) {
    case CheckMode::ExactTerminating: return "exact";
    case CheckMode::FormalPS: return "formal";
    case CheckMode::NumericSoft: return "soft";
  }
  return "?";
}

const IdentityEntry& find_entry(std::string_view id) {
  const auto& all = list_entries();
  auto it = std::find_if(all.begin(), all.end(), [&](const IdentityEntry& e) { return e.id == id; });
  if (it == all.end()) throw Error(ErrorKind::UnknownId, "unknown identity id '" + std::string(id) + "'");
  return *it;
}

nlohmann::json entry_summary(const IdentityEntry& e) {
  nlohmann::json derived = nlohmann::json::array();
  for (const auto& [sym, formula] : e.derived_params) derived.push_back({{"symbol", sym}, {"formula", formula}});
  return {{"id", e.id},
          {"paper_eq", e.paper_eq},
          {"title", e.title},
          {"free_params", e.free_params},
          {"derived_params", derived},
          {"constraints", e.constraints_note},
          {"check_mode", std::string(to_string(e.mode))}};
}

namespace {

void require_poch_nonzero(const Rat& x, std::size_t len, const char* where) {
  if (poch(x, len).is_zero()) {
    throw Error(ErrorKind::DegenerateClosedForm,
                std::string("degenerate closed form: (") + x.str() + ")_" + std::to_string(len) + " = 0 in " + where);
  }
}

void require_series(const SeriesSpec& s, std::size_t last_k, const char* where) {
  if (auto why = find_degenerate_lower(s, last_k)) {
    throw Error(ErrorKind::DegenerateLower, std::string(where) + ": " + *why);
  }
}

void check_side(const Side& side, CheckMode mode, std::size_t n, const EvalOptions& opt, const char* where) {
  for (const auto& f : side.prefactor) {
    if (const auto* pr = std::get_if<PochRatio>(&f)) {
      for (const auto& d : pr->dens) require_poch_nonzero(d, pr->len, where);
    } else if (const auto* pp = std::get_if<PairedPochRatio>(&f)) {
      for (const auto& d : pp->dens) {
        if (paired_poch(d.center, d.square, pp->len).is_zero()) {
          throw Error(ErrorKind::DegenerateClosedForm,
                      std::string("degenerate closed form: paired Pochhammer (") + d.center.str() + " +- sqrt(" +
                          d.square.str() + "))_" + std::to_string(pp->len) + " = 0 in " + where);
        }
      }
    } else if (mode != CheckMode::FormalPS &&
               (std::holds_alternative<PSLinear>(f) || std::holds_alternative<PSBinomial>(f))) {
      throw Error(ErrorKind::InvalidArgument, "power-series factor outside formal mode");
    }
  }
  if (const auto* s = std::get_if<SeriesSpec>(&side.body)) {
    switch (mode) {
      case CheckMode::ExactTerminating: require_series(*s, n, where); break;
      // No early-termination shortcut here: a lower -m hidden behind an
      // upper -k with k < m is a 0/0 in the analytic series.
      case CheckMode::FormalPS: require_series(*s, opt.ps_order, where); break;
      case CheckMode::NumericSoft: require_series(*s, opt.soft_terms - 1, where); break;
    }
  } else if (const auto* d = std::get_if<DoubleSum>(&side.body)) {
    require_series(d->outer, n, where);
    for (std::size_t m = 0; m <= n; ++m) {
      const SeriesSpec inner = d->inner.at(m);
      require_series(inner, d->inner.length(m), where);
    }
  }
  for (const auto& xp : side.x_pairs) {
    if (xp.num0.is_zero()) {
      throw Error(ErrorKind::DegenerateLower, std::string(where) + ": x-dependent lower parameter vanishes at x = 0");
    }
  }
}

Rat exact_prefactor(const std::vector<Factor>& pre) {
  Rat v(1);
  for (const auto& f : pre) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PochRatio>) {
            for (const auto& a : x.nums) v *= poch(a, x.len);
            for (const auto& a : x.dens) v /= poch(a, x.len);
          } else if constexpr (std::is_same_v<T, PairedPochRatio>) {
            for (const auto& a : x.nums) v *= paired_poch(a.center, a.square, x.len);
            for (const auto& a : x.dens) v /= paired_poch(a.center, a.square, x.len);
          } else if constexpr (std::is_same_v<T, SignPower>) {
            if (x.len % 2 == 1) v = -v;
          } else if constexpr (std::is_same_v<T, Scalar>) {
            v *= x.value;
          } else {
            throw Error(ErrorKind::InvalidArgument, "power-series factor in an exact side");
          }
        },
        f);
  }
  return v;
}

}  // namespace

Rat evaluate_exact(const Side& side, std::size_t n) {
  Rat body(1);
  if (const auto* s = std::get_if<SeriesSpec>(&side.body)) {
    body = eval_terminating(*s);
  } else if (const auto* d = std::get_if<DoubleSum>(&side.body)) {
    body = Rat(0);
    for (std::size_t m = 0; m <= n; ++m) {
      const Rat t = term(d->outer, m);
      if (t.is_zero()) continue;
      body += t * eval_terminating(d->inner.at(m));
    }
  }
  return exact_prefactor(side.prefactor) * body;
}

PowerSeries evaluate_formal(const Side& side, std::size_t order) {
  PowerSeries acc = PowerSeries::one(order);
  std::vector<Factor> scalars;
  for (const auto& f : side.prefactor) {
    if (const auto* lin = std::get_if<PSLinear>(&f)) {
      acc = ps_mul(acc, PowerSeries::linear(lin->c0, lin->c1, order));
    } else if (const auto* bin = std::get_if<PSBinomial>(&f)) {
      acc = ps_mul(acc, ps_binomial_one_minus_x(bin->alpha, order));
    } else {
      scalars.push_back(f);
    }
  }
  acc = ps_scale(exact_prefactor(scalars), acc);
  if (const auto* s = std::get_if<SeriesSpec>(&side.body)) {
    acc = ps_mul(acc, eval_formal(*s, order, side.x_pairs));
  } else if (std::holds_alternative<DoubleSum>(side.body)) {
    throw Error(ErrorKind::InvalidArgument, "double sums have no formal evaluation");
  }
  return acc;
}

SoftSide evaluate_soft(const Side& side, std::size_t terms) {
  SoftSide out;
  out.prefactor = exact_prefactor(side.prefactor);
  const auto* s = std::get_if<SeriesSpec>(&side.body);
  if (s == nullptr) {
    out.estimate = out.prefactor;
    out.partial = out.previous = Rat(1);
    out.rule = "closed";
    return out;
  }
  const auto* z = std::get_if<Rat>(&s->arg);
  if (z == nullptr) throw Error(ErrorKind::InvalidArgument, "soft evaluation needs a rational argument");
  const DyadicPartialSum ps = eval_partial_dyadic(*s, terms);
  out.partial = ps.value;
  out.previous = ps.previous;
  out.last_term = ps.last_term;
  out.terms = ps.terms;
  out.excess = s->r() == s->s() + 1 ? excess(*s) : Rat(0);
  Rat est = ps.value;
  if (*z == Rat(-1)) {
    est = (ps.value + ps.previous) / Rat(2);
    out.rule = "mean of last two partial sums";
  } else if (*z == Rat(1) && out.excess.sign() > 0 && !ps.last_term.is_zero()) {
    est = ps.value + ps.last_term * Rat(static_cast<long>(ps.terms)) / out.excess;
    out.rule = "partial sum plus tail t*M/excess";
  } else {
    out.rule = "partial sum";
  }
  out.estimate = out.prefactor * est;
  return out;
}

namespace {

void check_soft_side(const Side& side, const char* where) {
  const auto* s = std::get_if<SeriesSpec>(&side.body);
  if (s == nullptr) return;
  if (s->r() != s->s() + 1) return;
  if (excess(*s).sign() <= 0) {
    throw Error(ErrorKind::Inadmissible,
                std::string("inadmissible: non-positive parametric excess ") + excess(*s).str() + " on " + where);
  }
}

}  // namespace

IdentityInstance instantiate(std::string_view id, const ParamEnv& env, const EvalOptions& options) {
  const IdentityEntry& entry = find_entry(id);
  for (const auto& p : entry.free_params) env.at(p);
  for (const auto& p : entry.hints.integer_params) {
    if (!env.at(p).is_integer()) {
      throw Error(ErrorKind::ConstraintViolated, "constraint violated: " + p + " must be an integer");
    }
  }
  if (entry.mode == CheckMode::NumericSoft && options.soft_terms == 0) {
    throw Error(ErrorKind::InvalidArgument, "soft evaluation needs at least one term");
  }
  BuiltSides built = entry.build(env, options);
  IdentityInstance inst;
  inst.entry = &entry;
  inst.env = env;
  inst.options = options;
  for (const auto& [sym, value] : built.derived) {
    auto it = env.bindings.find(sym);
    if (it != env.bindings.end() && it->second != value) {
      throw Error(ErrorKind::ConstraintViolated, "constraint violated: " + sym + " = " + it->second.str() +
                                                     " but the entry requires " + value.str());
    }
    inst.env.bindings[sym] = value;
  }
  inst.lhs = std::move(built.lhs);
  inst.rhs = std::move(built.rhs);
  check_side(inst.lhs, entry.mode, env.n, options, "lhs");
  check_side(inst.rhs, entry.mode, env.n, options, "rhs");
  if (entry.mode == CheckMode::NumericSoft) {
    check_soft_side(inst.lhs, "lhs");
    check_soft_side(inst.rhs, "rhs");
  }
  return inst;
}

Residual residual(const IdentityInstance& inst) {
  switch (inst.entry->mode) {
    case CheckMode::ExactTerminating:
      return evaluate_exact(inst.lhs, inst.env.n) - evaluate_exact(inst.rhs, inst.env.n);
    case CheckMode::FormalPS:
      return ps_sub(evaluate_formal(inst.lhs, inst.options.ps_order),
                    evaluate_formal(inst.rhs, inst.options.ps_order));
    case CheckMode::NumericSoft: {
      SoftResidual r;
      r.lhs = evaluate_soft(inst.lhs, inst.options.soft_terms);
      r.rhs = evaluate_soft(inst.rhs, inst.options.soft_terms);
      const Rat scale = std::max(abs(r.lhs.estimate), abs(r.rhs.estimate));
      r.discrepancy = scale.is_zero() ? Rat(0) : abs(r.lhs.estimate - r.rhs.estimate) / scale;
      return r;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown check mode");
}

bool residual_vanishes(const Residual& r) {
  if (const auto* q = std::get_if<Rat>(&r)) return q->is_zero();
  if (const auto* p = std::get_if<PowerSeries>(&r)) return p->is_zero();
  return std::get<SoftResidual>(r).discrepancy.is_zero();
}

}  // namespace hyperxf

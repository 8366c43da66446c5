#pragma once

// Registry of identities. Every entry turns a parameter environment into two
// evaluable sides; the residual LHS - RHS is a Rat, a power series or a soft
// numeric comparison depending on the entry's check mode.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hyperxf/power_series.hpp"
#include "hyperxf/rat.hpp"
#include "hyperxf/series.hpp"

namespace hyperxf {

struct ParamEnv {
  std::map<std::string, Rat> bindings;
  std::size_t n = 0;
  // Arbitrary extra numerator / denominator lists carried by the
  // general double-sum transformations.
  std::vector<Rat> extra_upper;
  std::vector<Rat> extra_lower;

  /// Throws Error(InvalidArgument) when the symbol is unbound.
  const Rat& at(const std::string& symbol) const;
  bool has(const std::string& symbol) const { return bindings.count(symbol) != 0; }

  friend bool operator==(const ParamEnv&, const ParamEnv&) = default;
};

nlohmann::json to_json(const ParamEnv& env);
ParamEnv env_from_json(const nlohmann::json& j);

// Prefactor pieces. Lengths are Pochhammer lengths (normally n).
struct PochRatio {
  std::vector<Rat> nums, dens;
  std::size_t len = 0;
};
struct PairedPochRatio {
  std::vector<ConjugatePair> nums, dens;
  std::size_t len = 0;
};
struct SignPower {
  std::size_t len = 0;
};
struct Scalar {
  Rat value;
};
/// c0 + c1 x (formal mode only).
struct PSLinear {
  Rat c0, c1;
};
/// (1 - x)^alpha (formal mode only).
struct PSBinomial {
  Rat alpha;
};
using Factor = std::variant<PochRatio, PairedPochRatio, SignPower, Scalar, PSLinear, PSBinomial>;

/// base + slope * m.
struct AffineParam {
  Rat base;
  Rat slope;
  Rat at(std::size_t m) const { return base + slope * Rat(static_cast<long>(m)); }
};

/// Inner series of a double sum; parameters and length depend affinely on
/// the outer index m. The length must appear negated among the upper
/// parameters.
struct SeriesTemplate {
  std::vector<AffineParam> upper, lower;
  Rat arg = Rat(1);
  long length_base = 0;
  long length_slope = 0;

  std::size_t length(std::size_t m) const;
  SeriesSpec at(std::size_t m) const;
};

/// sum_{m=0}^{n} term(outer, m) * inner(m), outer terminating at n.
struct DoubleSum {
  SeriesSpec outer;
  SeriesTemplate inner;
};

using SideBody = std::variant<std::monostate, SeriesSpec, DoubleSum>;

struct Side {
  std::vector<Factor> prefactor;
  SideBody body;
  std::vector<XShiftPair> x_pairs;  // formal mode only
  bool saalschutzian = false;
  bool very_well_poised = false;
};

enum class CheckMode { ExactTerminating, FormalPS, NumericSoft };
std::string_view to_string(CheckMode mode);

struct SamplingHints {
  std::vector<std::string> integer_params;
  bool extra_lists = false;
};

struct EvalOptions {
  std::size_t ps_order = 12;
  std::size_t soft_terms = 200000;
};

struct BuiltSides {
  std::vector<std::pair<std::string, Rat>> derived;
  Side lhs, rhs;
};

struct IdentityEntry {
  std::string id;
  std::string paper_eq;
  std::string title;
  std::vector<std::string> free_params;
  /// (symbol, formula) in evaluation order.
  std::vector<std::pair<std::string, std::string>> derived_params;
  std::string constraints_note;
  CheckMode mode = CheckMode::ExactTerminating;
  SamplingHints hints;
  std::function<BuiltSides(const ParamEnv&, const EvalOptions&)> build;
};

struct IdentityInstance {
  const IdentityEntry* entry = nullptr;
  ParamEnv env;  // free and derived bindings
  EvalOptions options;
  Side lhs, rhs;
};

const std::vector<IdentityEntry>& list_entries();
/// Throws Error(UnknownId).
const IdentityEntry& find_entry(std::string_view id);
nlohmann::json entry_summary(const IdentityEntry& entry);

/// Binds derived parameters and both sides, then checks every denominator
/// the evaluation will meet. Errors: UnknownId, InvalidArgument (missing
/// free parameter), ConstraintViolated, AuxDenominatorZero, DegenerateLower,
/// DegenerateClosedForm, Inadmissible.
IdentityInstance instantiate(std::string_view id, const ParamEnv& env, const EvalOptions& options = {});

struct SoftSide {
  Rat estimate;
  Rat partial;
  Rat previous;
  Rat last_term;
  Rat prefactor;
  Rat excess;
  std::size_t terms = 0;
  std::string rule;
};
struct SoftResidual {
  SoftSide lhs, rhs;
  Rat discrepancy;  // |lhs - rhs| / max(|lhs|, |rhs|), 0 when both vanish
};
using Residual = std::variant<Rat, PowerSeries, SoftResidual>;

Rat evaluate_exact(const Side& side, std::size_t n);
PowerSeries evaluate_formal(const Side& side, std::size_t order);
SoftSide evaluate_soft(const Side& side, std::size_t terms);

Residual residual(const IdentityInstance& instance);
bool residual_vanishes(const Residual& r);

/// The reflection (a,b,c,d,e,p,q) -> (d-a-1, d-b-1, c, d, 2+c-e-n, gamma,
/// delta) on the six-parameter Saalschutzian transformation. Throws
/// Error(Inadmissible) when the normalised 6F5 is undefined at the
/// reflected point.
ParamEnv reflect_12P2(const ParamEnv& env);
/// (d)_n (e)_n (f)_n (alpha)_n times the 6F5, with f and alpha derived.
Rat f_tilde_12P2(const ParamEnv& env);

}  // namespace hyperxf

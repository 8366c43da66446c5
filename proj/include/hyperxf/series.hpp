#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hyperxf/power_series.hpp"
#include "hyperxf/rat.hpp"

namespace hyperxf {

/// A parameter pair center -/+ g with g^2 = square. Contributes
/// (center - g)_k (center + g)_k to its side of the term.
struct ConjugatePair {
  Rat center;
  Rat square;
  friend bool operator==(const ConjugatePair&, const ConjugatePair&) = default;
};

/// The argument is the formal variable x.
struct FormalX {
  friend bool operator==(FormalX, FormalX) { return true; }
};
/// The argument is -4x/(1-x)^2 in the formal variable x.
struct QuadraticX {
  friend bool operator==(QuadraticX, QuadraticX) { return true; }
};
using Argument = std::variant<Rat, FormalX, QuadraticX>;

struct Terminating {
  std::size_t n = 0;
};
struct Partial {
  std::size_t terms = 1;
};
struct Formal {
  std::size_t order = 0;
};
using EvalMode = std::variant<Terminating, Partial, Formal>;

/// A concrete rFs instance.
struct SeriesSpec {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  std::vector<ConjugatePair> upper_pairs;
  std::vector<ConjugatePair> lower_pairs;
  Argument arg = Rat(1);
  EvalMode mode = Terminating{0};

  /// Number of numerator / denominator parameters, pairs counted twice.
  std::size_t r() const { return upper.size() + 2 * upper_pairs.size(); }
  std::size_t s() const { return lower.size() + 2 * lower_pairs.size(); }
};

/// Parameter delta(x) = (num0 + num1 x) / (den0 + den1 x) occurring as
/// delta + 1 upstairs and delta downstairs; term k picks up the rational
/// function (delta + k) / delta.
struct XShiftPair {
  Rat num0, num1;
  Rat den0, den1;
};

/// Last index that can carry a nonzero term: a nonpositive integer upper
/// parameter -m ends the series after term m.
std::size_t natural_last(const SeriesSpec& spec, std::size_t last_k);

/// Description of the first vanishing lower Pochhammer among terms 0..last_k,
/// or nullopt when every denominator is nonzero.
std::optional<std::string> find_degenerate_lower(const SeriesSpec& spec, std::size_t last_k);

/// Term coefficient without the argument power:
/// prod (u)_k prod pairs / (k! prod (l)_k prod pairs).
Rat term_coefficient(const SeriesSpec& spec, std::size_t k);

/// Full summand of the series at index k. Requires a rational argument.
Rat term(const SeriesSpec& spec, std::size_t k);

/// Exact sum of terms 0..n. Requires mode Terminating(n) with some upper
/// parameter equal to -n.
Rat eval_terminating(const SeriesSpec& spec);

struct PartialSum {
  Rat value;
  Rat last_term;
};
/// Exact sum of the first `terms` terms (k = 0..terms-1).
PartialSum eval_partial(const SeriesSpec& spec, std::size_t terms);

/// Fixed-precision partial sums on a dyadic grid: every term is truncated to
/// a multiple of 2^-bits as it is generated, so sizes stay bounded for very
/// long sums. All values are rationals with denominator dividing 2^bits.
struct DyadicPartialSum {
  Rat value;      // S_{M-1}
  Rat previous;   // S_{M-2} (equals value when M == 1)
  Rat last_term;  // t_{M-1}
  std::size_t terms = 0;
};
DyadicPartialSum eval_partial_dyadic(const SeriesSpec& spec, std::size_t terms, unsigned bits = 256);

/// Power series in x to the given order. The argument must be FormalX or
/// QuadraticX; each XShiftPair multiplies term k by (delta + k) / delta.
PowerSeries eval_formal(const SeriesSpec& spec, std::size_t order,
                        std::span<const XShiftPair> x_pairs = {});

/// Dispatches on spec.mode: Terminating -> eval_terminating,
/// Partial -> eval_partial(...).value.
Rat eval_exact(const SeriesSpec& spec);

/// Parametric excess: sum(lower) - sum(upper), each pair counted as 2*center.
/// Requires r = s + 1.
Rat excess(const SeriesSpec& spec);

/// 1 + a1 = b_i + a_{i+1} positionally, pairs matched positionally with equal
/// squares and centers summing to 1 + a1.
bool is_well_poised(const SeriesSpec& spec);
/// Well-poised with a2 = 1 + a1/2.
bool is_very_well_poised(const SeriesSpec& spec);

nlohmann::json to_json(const SeriesSpec& spec);
/// Throws Error(Parse) on schema violations.
SeriesSpec series_from_json(const nlohmann::json& j);

}  // namespace hyperxf

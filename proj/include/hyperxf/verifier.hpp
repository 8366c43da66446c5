#pragma once

// Seeded randomized verification of catalog entries plus the
// specialization, reflection and structural cross-checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hyperxf/catalog.hpp"
#include "hyperxf/rat.hpp"

namespace hyperxf {

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 25;
  std::size_t n_max = 5;
  std::size_t ps_order = 12;
  long numerator_lo = -9;
  long numerator_hi = 9;
  std::vector<long> denominators = {1, 2, 3, 4, 5};
  std::size_t max_rejects = 1000;
  std::size_t soft_terms = 200000;
  Rat soft_rel_tol = Rat(1, 100);
  /// 0 = HYPERXF_THREADS or the machine's hardware concurrency. Not part of
  /// the report.
  unsigned threads = 0;

  /// Throws Error(InvalidArgument) on samples = 0, an empty or non-positive
  /// denominator set, an empty numerator range, etc.
  void validate() const;
  EvalOptions eval_options() const { return {ps_order, soft_terms}; }
};

nlohmann::json to_json(const VerifyConfig& config);

enum class Status { Pass, Fail, Rejected, SoftPass, SoftFail };
std::string_view to_string(Status s);

struct Record {
  std::size_t sample = 0;
  std::optional<std::size_t> n;
  Status status = Status::Pass;
  nlohmann::json env;
  nlohmann::json detail;  // residual summary or rejection reason
};

struct Summary {
  std::size_t passes = 0;
  std::size_t fails = 0;
  std::size_t rejects = 0;
  std::size_t soft_passes = 0;
  std::size_t soft_fails = 0;
};

struct VerificationReport {
  std::string entry;
  std::string kind;  // "identity" or "cross-check"
  std::string check_mode;
  std::string description;
  VerifyConfig config;
  std::vector<Record> records;
  Summary summary;

  void add(Record r);
  bool ok() const { return summary.fails == 0; }
};

nlohmann::json to_json(const VerificationReport& report);
/// {"config": ..., "reports": [...], "summary": {...}}
nlohmann::json to_json(const std::vector<VerificationReport>& reports, const VerifyConfig& config);

/// Parameter names to draw and how.
struct DrawSpec {
  std::vector<std::string> params;
  std::vector<std::string> integer_params;
  bool extra_lists = false;
};

struct Rejection {
  ParamEnv env;
  std::optional<std::size_t> n;
  std::string reason;
};

struct DrawResult {
  std::optional<ParamEnv> env;  // nullopt when max_rejects was exhausted
  std::vector<Rejection> rejections;
};

/// Draws environments from an RNG seeded by hash(seed, key, index) until
/// `validate` accepts one. `validate` signals a degenerate draw by throwing
/// an Error whose is_degeneracy() is true; it may set Rejection::n through
/// the second argument.
DrawResult draw_admissible(std::string_view key, std::size_t index, const VerifyConfig& config, const DrawSpec& spec,
                           const std::function<void(const ParamEnv&, std::optional<std::size_t>&)>& validate);

DrawSpec draw_spec(const IdentityEntry& entry);

/// Free parameters admissible for every n in 0..n_max (exact entries) or
/// for the single formal / soft evaluation. n is left at 0. Throws
/// Error(NoAdmissibleSample) with the last rejection reason.
ParamEnv sample_env(const IdentityEntry& entry, std::size_t sample_index, const VerifyConfig& config);

/// Throws Error(UnknownId).
VerificationReport verify_entry(std::string_view id, const VerifyConfig& config);

/// Names of the cross-check reports appended by verify_all.
const std::vector<std::string>& cross_check_names();
/// Throws Error(UnknownId).
VerificationReport run_cross_check(std::string_view name, const VerifyConfig& config);

/// One report per catalog entry, then the cross-checks, in registry order.
std::vector<VerificationReport> verify_all(const VerifyConfig& config);

/// Worker count: config.threads, else HYPERXF_THREADS, else hardware.
unsigned resolve_threads(const VerifyConfig& config);

}  // namespace hyperxf

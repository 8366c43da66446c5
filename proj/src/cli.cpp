#include "hyperxf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperxf/catalog.hpp"
#include "hyperxf/error.hpp"
#include "hyperxf/series.hpp"
#include "hyperxf/verifier.hpp"

namespace hyperxf {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string id;
  std::string format = "json";
  std::string spec_path;
  std::string out_path;
  VerifyConfig config;
};

void add_config_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.config.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--samples", o.config.samples, "samples per entry")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--nmax", o.config.n_max, "largest n for terminating entries")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--ps-order", o.config.ps_order, "power-series truncation order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--soft-terms", o.config.soft_terms, "partial-sum terms for soft checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << pad(r.entry, 34) << pad(r.check_mode, 7) << "pass " << std::setw(5) << r.summary.passes << "  fail "
     << std::setw(3) << r.summary.fails << "  rejected " << std::setw(4) << r.summary.rejects;
  if (r.summary.soft_passes + r.summary.soft_fails > 0) {
    os << "  soft-pass " << r.summary.soft_passes << "  soft-fail " << r.summary.soft_fails;
  }
  return os.str();
}

std::string reports_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  std::size_t fails = 0, soft_fails = 0;
  for (const auto& r : reports) {
    os << report_line(r) << "\n";
    fails += r.summary.fails;
    soft_fails += r.summary.soft_fails;
  }
  os << "total: " << reports.size() << " reports, " << fails << " failing records";
  if (soft_fails > 0) os << ", " << soft_fails << " soft (non-exact) failures";
  os << "\n";
  return os.str();
}

bool emit(const Options& o, const std::string& text, std::ostream& out, std::ostream& err) {
  if (o.out_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    err << "error: cannot write " << o.out_path << "\n";
    return false;
  }
  return true;
}

int cmd_list(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : list_entries()) arr.push_back(entry_summary(e));
    return emit(o, arr.dump(2) + "\n", out, err) ? kOk : kUsage;
  }
  std::ostringstream os;
  os << pad("id", 26) << pad("eq", 12) << pad("mode", 8) << "free parameters\n";
  for (const auto& e : list_entries()) {
    std::string params;
    for (const auto& p : e.free_params) params += (params.empty() ? "" : " ") + p;
    os << pad(e.id, 26) << pad(e.paper_eq, 12) << pad(std::string(to_string(e.mode)), 8) << params << "\n";
  }
  return emit(o, os.str(), out, err) ? kOk : kUsage;
}

bool is_cross_check(const std::string& id) {
  const auto& names = cross_check_names();
  return std::find(names.begin(), names.end(), id) != names.end();
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerificationReport r = is_cross_check(o.id) ? run_cross_check(o.id, o.config) : verify_entry(o.id, o.config);
  const std::string text = o.format == "json" ? to_json(r).dump(2) + "\n" : reports_text({r});
  if (!emit(o, text, out, err)) return kUsage;
  return r.ok() ? kOk : kFailed;
}

int cmd_verify_all(const Options& o, std::ostream& out, std::ostream& err) {
  const auto reports = verify_all(o.config);
  const std::string text = o.format == "json" ? to_json(reports, o.config).dump(2) + "\n" : reports_text(reports);
  if (!emit(o, text, out, err)) return kUsage;
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
  return ok ? kOk : kFailed;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream f(o.spec_path);
  if (!f) {
    err << "error: cannot read " << o.spec_path << "\n";
    return kUsage;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << o.spec_path << ": " << e.what() << "\n";
    return kUsage;
  }
  const SeriesSpec spec = series_from_json(j);
  nlohmann::json result;
  std::string text;
  if (const auto* t = std::get_if<Terminating>(&spec.mode)) {
    const Rat v = eval_terminating(spec);
    result = {{"mode", "terminating"}, {"n", t->n}, {"value", v.str()}};
    text = v.str();
  } else if (const auto* p = std::get_if<Partial>(&spec.mode)) {
    const PartialSum ps = eval_partial(spec, p->terms);
    result = {{"mode", "partial"}, {"terms", p->terms}, {"value", ps.value.str()}, {"last_term", ps.last_term.str()}};
    text = ps.value.str() + "  (last term " + ps.last_term.str() + ")";
  } else {
    const auto order = std::get<Formal>(spec.mode).order;
    const PowerSeries s = eval_formal(spec, order);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
      coeffs.push_back(c.str());
      text += (text.empty() ? "[" : ", ") + c.str();
    }
    text += "]";
    result = {{"mode", "formal"}, {"order", order}, {"coefficients", coeffs}};
  }
  const std::string body = o.format == "json" ? result.dump(2) + "\n" : text + "\n";
  return emit(o, body, out, err) ? kOk : kUsage;
}

int cmd_explain(const Options& o, std::ostream& out, std::ostream& err) {
  const IdentityEntry& e = find_entry(o.id);
  if (o.format == "json") return emit(o, entry_summary(e).dump(2) + "\n", out, err) ? kOk : kUsage;
  std::ostringstream os;
  os << e.id << "  (" << e.paper_eq << ")  " << e.title << "\n";
  os << "mode         " << to_string(e.mode) << "\n";
  os << "free         ";
  for (const auto& p : e.free_params) os << p << " ";
  os << "\n";
  if (!e.hints.integer_params.empty()) {
    os << "integers     ";
    for (const auto& p : e.hints.integer_params) os << p << " ";
    os << "\n";
  }
  if (e.hints.extra_lists) os << "lists        extra numerator / denominator parameters, length 0..2\n";
  os << "constraints  " << e.constraints_note << "\n";
  if (e.derived_params.empty()) {
    os << "derived      none\n";
  } else {
    os << "derived, in order:\n";
    for (const auto& [sym, formula] : e.derived_params) os << "  " << sym << " = " << formula << "\n";
  }
  return emit(o, os.str(), out, err) ? kOk : kUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of hypergeometric summation and transformation identities", "hyperxf"};
  app.require_subcommand(1);
  Options o;

  auto* list = app.add_subcommand("list", "list catalog entries");
  add_format(list, o);
  list->add_option("--out", o.out_path, "write output to a file");

  auto* verify = app.add_subcommand("verify", "verify one entry or cross-check");
  verify->add_option("--id", o.id, "entry id")->required();
  add_config_flags(verify, o);
  add_format(verify, o);
  verify->add_option("--out", o.out_path, "write the report to a file");

  auto* verify_all_cmd = app.add_subcommand("verify-all", "verify every entry and run the cross-checks");
  add_config_flags(verify_all_cmd, o);
  add_format(verify_all_cmd, o);
  verify_all_cmd->add_option("--out", o.out_path, "write the report to a file");

  auto* eval = app.add_subcommand("eval", "evaluate a series spec given as JSON");
  eval->add_option("--spec", o.spec_path, "path to the series JSON")->required();
  o.format = "json";
  eval->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  eval->add_option("--out", o.out_path, "write output to a file");

  auto* explain = app.add_subcommand("explain", "show an entry's constraints and derived parameters");
  explain->add_option("--id", o.id, "entry id")->required();
  add_format(explain, o);
  explain->add_option("--out", o.out_path, "write output to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0; everything else is a usage error
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (list->parsed()) return cmd_list(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (verify_all_cmd->parsed()) return cmd_verify_all(o, out, err);
    if (eval->parsed()) return cmd_eval(o, out, err);
    if (explain->parsed()) return cmd_explain(o, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hyperxf

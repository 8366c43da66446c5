#include <string>

#include "hyperxf/error.hpp"
#include "hyperxf/series.hpp"

namespace hyperxf {

namespace {

using nlohmann::json;

constexpr const char* kQuadraticArg = "-4x/(1-x)^2";

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::Parse, "series spec: " + what);
}

Rat rat_field(const json& j, const std::string& where) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  bad(where + " must be a \"num/den\" string");
}

std::vector<Rat> rat_list(const json& j, const char* key) {
  std::vector<Rat> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) bad(std::string(key) + " must be an array");
  for (const auto& v : j.at(key)) out.push_back(rat_field(v, key));
  return out;
}

std::vector<ConjugatePair> pair_list(const json& j, const char* key) {
  std::vector<ConjugatePair> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) bad(std::string(key) + " must be an array");
  for (const auto& v : j.at(key)) {
    if (!v.is_array() || v.size() != 2) bad(std::string(key) + " entries must be [center, square]");
    out.push_back({rat_field(v[0], key), rat_field(v[1], key)});
  }
  return out;
}

std::size_t count_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("mode.") + key + " must be a non-negative integer");
  return v.get<std::size_t>();
}

json rats(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

json pairs(const std::vector<ConjugatePair>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(json::array({p.center.str(), p.square.str()}));
  return out;
}

}  // namespace

nlohmann::json to_json(const SeriesSpec& spec) {
  json j;
  j["upper"] = rats(spec.upper);
  j["lower"] = rats(spec.lower);
  j["upper_pairs"] = pairs(spec.upper_pairs);
  j["lower_pairs"] = pairs(spec.lower_pairs);
  if (const auto* z = std::get_if<Rat>(&spec.arg)) {
    j["arg"] = z->str();
  } else if (std::holds_alternative<FormalX>(spec.arg)) {
    j["arg"] = "x";
  } else {
    j["arg"] = kQuadraticArg;
  }
  if (const auto* t = std::get_if<Terminating>(&spec.mode)) {
    j["mode"] = {{"terminating", t->n}};
  } else if (const auto* p = std::get_if<Partial>(&spec.mode)) {
    j["mode"] = {{"partial", p->terms}};
  } else {
    j["mode"] = {{"formal", std::get<Formal>(spec.mode).order}};
  }
  return j;
}

SeriesSpec series_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("top level must be an object");
  SeriesSpec spec;
  spec.upper = rat_list(j, "upper");
  spec.lower = rat_list(j, "lower");
  spec.upper_pairs = pair_list(j, "upper_pairs");
  spec.lower_pairs = pair_list(j, "lower_pairs");

  if (!j.contains("arg")) bad("missing arg");
  const auto& arg = j.at("arg");
  if (arg.is_string() && arg.get<std::string>() == "x") {
    spec.arg = FormalX{};
  } else if (arg.is_string() && arg.get<std::string>() == kQuadraticArg) {
    spec.arg = QuadraticX{};
  } else {
    spec.arg = rat_field(arg, "arg");
  }

  if (!j.contains("mode") || !j.at("mode").is_object() || j.at("mode").size() != 1) {
    bad("mode must be one of {\"terminating\":n}, {\"partial\":M}, {\"formal\":N}");
  }
  const auto& mode = j.at("mode");
  if (mode.contains("terminating")) {
    spec.mode = Terminating{count_field(mode, "terminating")};
  } else if (mode.contains("partial")) {
    const std::size_t m = count_field(mode, "partial");
    if (m == 0) bad("mode.partial must be positive");
    spec.mode = Partial{m};
  } else if (mode.contains("formal")) {
    spec.mode = Formal{count_field(mode, "formal")};
  } else {
    bad("unknown mode");
  }
  const bool formal_mode = std::holds_alternative<Formal>(spec.mode);
  const bool formal_arg = !std::holds_alternative<Rat>(spec.arg);
  if (formal_mode != formal_arg) bad("formal mode goes with a formal argument and vice versa");
  return spec;
}

}  // namespace hyperxf

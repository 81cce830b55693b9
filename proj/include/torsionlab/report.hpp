#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "torsionlab/family.hpp"
#include "torsionlab/harness.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

/// Report trees use std::map-backed objects, so keys come out sorted.
using Json = nlohmann::json;

enum class ReportFormat { Text, Json };

inline Json prime_list(const PrimeSet& s, const std::string& var = "X") {
  Json out = Json::array();
  for (auto& p : s) out.push_back(p.to_string(var));
  return out;
}

inline Json to_json(const SetComparison& c, const std::string& var) {
  return {{"holds", c.holds}, {"left", prime_list(c.left, var)}, {"right", prime_list(c.right, var)}};
}

inline Json to_json(const FairnessReport& r) {
  const auto& v = r.a.ring()->var_name();
  const auto& s = r.sets;
  Json sets = {{"ass_module", prime_list(s.ass_module, v)},
               {"assf_module", prime_list(s.assf_module, v)},
               {"ass_small_torsion", prime_list(s.ass_small, v)},
               {"assf_small_torsion", prime_list(s.assf_small, v)},
               {"ass_large_torsion", prime_list(s.ass_large, v)},
               {"assf_large_torsion", prime_list(s.assf_large, v)},
               {"ass_small_quotient", prime_list(s.ass_small_quotient, v)},
               {"assf_small_quotient", prime_list(s.assf_small_quotient, v)},
               {"ass_large_quotient", prime_list(s.ass_large_quotient, v)},
               {"assf_large_quotient", prime_list(s.assf_large_quotient, v)},
               {"complete", s.complete}};
  Json verdicts = {{"weakly_quasifair", to_json(r.weakly_quasifair, v)},
                   {"fair", to_json(r.fair, v)},
                   {"weakly_fair", to_json(r.weakly_fair, v)},
                   {"weakly_large_quasifair", to_json(r.weakly_large_quasifair, v)},
                   {"large_fair", to_json(r.large_fair, v)},
                   {"weakly_large_fair", to_json(r.weakly_large_fair, v)}};
  return {{"gamma", r.torsion.gamma_small.to_string()},
          {"gammabar", r.torsion.gamma_large.to_string()},
          {"functors_agree", r.torsion.functors_agree},
          {"stabilized", r.torsion.small_stabilized && r.torsion.large_stabilized},
          {"assassins", sets},
          {"verdicts", verdicts},
          {"all_verdicts", r.all_verdicts()},
          {"centred_witness_ok", r.centred_witness_ok},
          {"half_centred_witness_ok", r.half_centred_witness_ok}};
}

inline Json to_json(const HarnessReport& r, std::size_t max_listed = 5) {
  Json checked = Json::object();
  for (auto& [k, n] : r.checked) checked[k] = n;
  Json listed = Json::array();
  for (std::size_t k = 0; k < r.violations.size() && k < max_listed; ++k) {
    const auto& v = r.violations[k];
    listed.push_back({{"instance", v.instance}, {"property", v.property}, {"detail", v.detail}, {"script", v.script}});
  }
  return {{"instances", r.instances},
          {"seed", r.seed},
          {"artinian_instances", r.artinian_instances},
          {"checked", checked},
          {"violation_count", r.violations.size()},
          {"violations", listed}};
}

inline Json to_json(const ExampleReport& r) {
  Json claims = Json::array();
  for (auto& c : r.claims) {
    Json values = Json::array();
    for (bool b : c.values) values.push_back(b);
    claims.push_back({{"name", c.name},
                      {"description", c.description},
                      {"values", values},
                      {"verdict", c.pass ? "PASS" : "FAIL"},
                      {"stable", c.stable}});
  }
  return {{"tag", r.tag},
          {"summary", r.summary},
          {"levels", r.schedule.levels},
          {"window", r.schedule.window},
          {"claims", claims},
          {"verdict", r.all_pass() ? "PASS" : "FAIL"}};
}

namespace detail {

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void flatten(const Json& j, const std::string& indent, std::string& out) {
  std::size_t index = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++index) {
    std::string key = j.is_object() ? it.key() : "[" + std::to_string(index) + "]";
    const Json& v = it.value();
    bool nested = (v.is_object() || v.is_array()) && !v.empty();
    bool scalar_array = v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& x) {
                          return x.is_object() || x.is_array();
                        });
    if (nested && !scalar_array) {
      out += indent + key + ":\n";
      flatten(v, indent + "  ", out);
    } else if (v.is_array()) {
      std::string s;
      for (auto& x : v) s += (s.empty() ? "" : ", ") + scalar_text(x);
      out += indent + key + ": [" + s + "]\n";
    } else if (v.is_object()) {
      out += indent + key + ": {}\n";
    } else {
      out += indent + key + ": " + scalar_text(v) + "\n";
    }
  }
}

}  // namespace detail

/// Indented `key: value` listing with sorted keys.
inline std::string render_text(const Json& j) {
  std::string out;
  detail::flatten(j, "", out);
  return out;
}

inline std::string render(const Json& j, ReportFormat f) {
  return f == ReportFormat::Json ? j.dump(2) + "\n" : render_text(j);
}

}  // namespace torsionlab

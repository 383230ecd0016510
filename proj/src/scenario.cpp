#include "logres/scenario.hpp"

#include <fstream>
#include <set>

namespace logres {

Scenario parse_scenario(const nlohmann::json& j) {
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
  if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
    throw ScenarioError("scenario needs a non-empty \"variables\" array");
  if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
    throw ScenarioError("scenario needs a non-empty \"components\" array");
  Scenario s;
  s.name = j.value("name", std::string());
  Chart chart;
  std::set<std::string> seen;
  for (const auto& v : j["variables"]) {
    std::string name;
    bool exc = false;
    if (v.is_string()) {
      name = v.get<std::string>();
    } else if (v.is_object() && v.contains("name")) {
      name = v["name"].get<std::string>();
      exc = v.value("exceptional", false);
    } else {
      throw ScenarioError("variables must be names or {\"name\",\"exceptional\"} objects");
    }
    if (name.empty() || !seen.insert(name).second) throw ScenarioError("duplicate or empty variable name '" + name + "'");
    chart.names.push_back(name);
    chart.exceptional.push_back(exc);
  }
  chart.truncation_degree = j.value("truncation_degree", 16u);
  s.probe_count = j.value("probes", 20u);
  s.seed = j.value("seed", std::uint64_t{1});
  s.step_cap = j.value("step_cap", 64u);
  s.round_cap = j.value("round_cap", 32u);
  s.morphism.chart = chart;
  for (const auto& c : j["components"]) {
    if (!c.is_string()) throw ScenarioError("components must be strings");
    std::string text = c.get<std::string>();
    try {
      s.morphism.components.push_back(parse_polynomial(text, chart.names));
    } catch (const std::exception& e) {
      throw ScenarioError("cannot parse component '" + text + "': " + e.what());
    }
    s.component_text.push_back(text);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(path + ": " + e.what());
  }
  return parse_scenario(j);
}

nlohmann::json scenario_json(const Scenario& s) {
  nlohmann::json vars = nlohmann::json::array();
  const Chart& c = s.morphism.chart;
  for (std::size_t i = 0; i < c.dim(); ++i) vars.push_back({{"name", c.names[i]}, {"exceptional", bool(c.exceptional[i])}});
  return {{"name", s.name},
          {"variables", vars},
          {"components", s.morphism.component_strings()},
          {"truncation_degree", c.truncation_degree},
          {"probes", s.probe_count},
          {"seed", s.seed}};
}

nlohmann::json natural_json(unsigned value) {
  if (value == kInfinity) return "inf";
  return value;
}

}  // namespace logres

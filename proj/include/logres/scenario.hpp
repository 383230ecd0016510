#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "logres/chart.hpp"

namespace logres {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name;
  std::vector<std::string> component_text;  // as written in the input
  MorphismChart morphism;
  unsigned probe_count = 20;
  std::uint64_t seed = 1;
  unsigned step_cap = 64;   // principalization blowups along one branch
  unsigned round_cap = 32;  // step1→step2→step3 rounds
};

// {"variables":[{"name":"u","exceptional":true},…],"components":["u^2",…],"truncation_degree":16}
// plus optional "name", "probes", "seed", "step_cap", "round_cap".
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

nlohmann::json scenario_json(const Scenario& s);

// kInfinity becomes the string "inf".
nlohmann::json natural_json(unsigned value);

}  // namespace logres

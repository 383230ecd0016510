#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "logres/hp.hpp"
#include "logres/invariants.hpp"
#include "logres/scenario.hpp"

namespace logres {

enum class RunStatus { ok, undecidable, error, refused };
std::string to_string(RunStatus s);
// 0 ok, 2 undecidable, 1 otherwise.
int exit_code(RunStatus s);

struct PipelineError : std::runtime_error {
  RunStatus status;
  PipelineError(RunStatus s, const std::string& what) : std::runtime_error(what), status(s) {}
};

struct PipelineConfig {
  unsigned probe_count = 20;        // final probes, spread round-robin over the leaves
  unsigned check_probes = 2;        // probes per new leaf in each post-check
  std::uint64_t seed = 1;
  unsigned step_cap = 64;
  unsigned round_cap = 32;
};

struct NodeInvariants {
  std::size_t log_rank = 0;
  unsigned rho = 0;
  std::optional<unsigned> d;  // when the σ_1 = u^α split exists at the origin
};

struct ProbeResult {
  std::string path;
  std::vector<Rational> point;
  bool skipped = false;
  std::string note;
  unsigned rho = 0;
  bool certified = false;
  std::string failure;
};

struct TraceEntry {
  unsigned round = 0;
  std::string step;    // step1, step2, step3
  std::string action;  // blowup, coordinate_change, postcheck
  std::string path;
  std::vector<std::string> center;
  std::string reason;
  unsigned rho_before = 0;
  std::vector<std::pair<std::string, unsigned>> rho_after;  // new leaf origins
  std::vector<ProbeResult> probes;                          // postcheck only
  bool admissible = true;
};

struct PipelineState {
  PipelineState(MorphismChart root, PipelineConfig config);

  ChartTree tree;
  PipelineConfig config;
  std::mt19937_64 rng;
  unsigned round = 0;
  std::vector<TraceEntry> trace;  // append-only
  std::vector<unsigned> descent;  // max leaf-origin ρ at the start of each round, then the final value
  std::map<std::size_t, PreparedData> prepared;  // filled by step2 for step3

  const NodeInvariants& invariants(std::size_t node);
  unsigned max_rho();

 private:
  std::map<std::size_t, NodeInvariants> cache_;
};

// A point of the leaf chart in the preimage of the origin of the nearest coordinate-change
// ancestor (or of the root): a random maximal set of coordinates is made nonzero.
std::vector<Rational> sample_probe(const ChartTree& tree, std::size_t leaf, std::mt19937_64& rng);
ProbeResult examine_probe(const ChartTree& tree, std::size_t leaf, const std::vector<Rational>& point, bool with_hp);

// Each returns true when it changed the tree.
bool step1_finite_rho(PipelineState& state);
bool step2_prepare(PipelineState& state);
bool step3_decrease(PipelineState& state);
void resolve3d(PipelineState& state);

struct FittingReport {
  unsigned k = 0;
  PrincipalCheck check;
};

struct Validation {
  bool ok = false;
  std::vector<FittingReport> fitting;  // k = 0..n−1 at the root origin
  std::string message;
};

Validation validate(const MorphismChart& m);

struct LeafResult {
  std::string path;
  unsigned rho = 0;
  std::optional<HPCertificate> certificate;
  std::vector<FittingExponentCheck> gammas;
  std::string failure;
};

struct Report {
  Scenario scenario;
  RunStatus status = RunStatus::error;
  std::string message;
  Validation validation;
  std::optional<PipelineState> state;
  std::vector<LeafResult> leaves;
  std::vector<ProbeResult> probes;

  nlohmann::json to_json();
};

Report run_scenario(const Scenario& scenario);

nlohmann::json certificate_json(const HPCertificate& cert, const std::vector<FittingExponentCheck>& gammas,
                                const Chart& chart);
nlohmann::json tree_json(PipelineState& state);

}  // namespace logres

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logres/pipeline.hpp"
#include "support.hpp"

using namespace logres;
using testing::Gen;
using testing::morphism;

namespace {
const std::vector<std::string> uvw{"u", "v", "w"};

Scenario data(const std::string& file) { return load_scenario(std::string(LOGRES_SOURCE_DIR) + "/tests/data/" + file); }

Scenario from_morphism(const MorphismChart& m) {
  nlohmann::json j;
  for (std::size_t i = 0; i < m.chart.dim(); ++i)
    j["variables"].push_back({{"name", m.chart.names[i]}, {"exceptional", static_cast<bool>(m.chart.exceptional[i])}});
  j["components"] = m.component_strings();
  j["truncation_degree"] = m.chart.truncation_degree;
  return parse_scenario(j);
}

std::vector<std::string> centers(const nlohmann::json& report) {
  std::vector<std::string> out;
  for (const auto& t : report["trace"])
    if (t["action"] == "blowup") {
      std::string c = t["path"].get<std::string>() + " [";
      for (const auto& x : t["center"]) c += x.get<std::string>() + ",";
      out.push_back(c.substr(0, c.size() - 1) + "]");
    }
  return out;
}
}  // namespace

TEST_CASE("scenario files parse and print back") {
  Scenario s = data("example1.json");
  CHECK(s.name == "example-1");
  CHECK(s.morphism.chart.exceptional == std::vector<bool>{true, false, false});
  CHECK(s.morphism.components[1] == testing::P("u^3*(v^2+u*w)", uvw));
  CHECK(s.probe_count == 20);
  CHECK(scenario_json(s)["components"][1] == "u^4*w + u^3*v^2");
  CHECK(natural_json(kInfinity) == "inf");
  CHECK(natural_json(3) == 3);
  CHECK_THROWS_AS(parse_scenario(nlohmann::json::parse(R"({"variables":["u"],"components":["q"]})")), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(nlohmann::json::parse(R"({"components":["u"]})")), ScenarioError);
}

TEST_CASE("Example 1 resolves with two blowups") {
  Report r = run_scenario(data("example1.json"));
  nlohmann::json j = r.to_json();
  CHECK(r.status == RunStatus::ok);
  CHECK(exit_code(r.status) == 0);
  CHECK(j["blowups"] == 2);
  CHECK(centers(j) == std::vector<std::string>{"/ [u,v]", "/v [u,v]"});
  CHECK(j["descent"] == nlohmann::json::array({1, 0}));
  REQUIRE(r.leaves.size() == 3);
  for (const auto& leaf : r.leaves) {
    INFO(leaf.path << ": " << leaf.failure);
    CHECK(leaf.rho == 0);
    REQUIRE(leaf.certificate);
    for (const auto& g : leaf.gammas) CHECK(g.matches);
  }
  CHECK(r.leaves[0].path == "/u");
  CHECK(r.leaves[0].certificate->coordinates == std::vector<std::string>{"w' = u*v^2 + w"});
  CHECK(r.probes.size() == 20);
  for (const auto& p : r.probes) {
    CHECK_FALSE(p.skipped);
    CHECK(p.rho == 0);
    CHECK(p.certified);
  }
  // The invariants along the way: ρ = ∞ at the v-chart origin comes from d = ∞.
  const auto& tree = r.state->tree;
  std::size_t v = tree.node(0).children[1];
  CHECK(tree.node(v).path == "/v");
  NodeInvariants inv = r.state->invariants(v);
  CHECK(inv.rho == kInfinity);
  REQUIRE(inv.d);
  CHECK(*inv.d == kInfinity);
}

TEST_CASE("reports are deterministic") {
  Scenario s = data("example1.json");
  CHECK(run_scenario(s).to_json().dump() == run_scenario(s).to_json().dump());
  s.seed = 7;
  nlohmann::json other = run_scenario(s).to_json();
  CHECK(other["status"] == "ok");
  CHECK(other["blowups"] == 2);
}

TEST_CASE("Example 2 is validated and refused") {
  Report r = run_scenario(data("example2.json"));
  CHECK(r.status == RunStatus::refused);
  CHECK(exit_code(r.status) == 1);
  REQUIRE(r.validation.fitting.size() == 5);
  CHECK(r.validation.fitting[0].check.principal);
  CHECK(r.validation.fitting[0].check.monomial == Monomial{20, 0, 0, 0, 0});
  CHECK(r.validation.fitting[4].check.principal);
  CHECK(r.validation.fitting[4].check.monomial == Monomial{2, 0, 0, 0, 0});
  CHECK_FALSE(r.validation.fitting[3].check.principal);
  CHECK_FALSE(r.validation.fitting[3].check.witness.empty());
  CHECK(r.to_json().contains("validation"));
}

TEST_CASE("inputs that already satisfy the target need no blowups") {
  Report r = run_scenario(from_morphism(morphism(uvw, {true, false, false}, {"u^2", "u^5*v^2 + u^4*w", "u^5*v"})));
  CHECK(r.status == RunStatus::ok);
  CHECK(r.to_json()["blowups"] == 0);
  CHECK(r.to_json()["descent"] == nlohmann::json::array({0}));
}

TEST_CASE("non-principal F_0 is refused") {
  Report r = run_scenario(from_morphism(morphism(uvw, {true, false, false}, {"u^2", "u^3*(v^3+u*w^2)", "u^4*v"})));
  CHECK(r.status == RunStatus::refused);
  CHECK_FALSE(r.validation.fitting[0].check.principal);
}

TEST_CASE("unprepared 1-point with ord T < d goes through the J ideal") {
  // a_21 = u(w + u) is not a monomial times a unit; ord T = 2 < d = 3.
  MorphismChart m = morphism(uvw, {true, false, false}, {"u^2", "u^3*(v^3+u*w+u*v*w+u^2*v)", "u^4*v"}, 8);
  PipelineState st(m, {});
  CHECK(st.max_rho() == 2);
  CHECK(step2_prepare(st));
  REQUIRE_FALSE(st.trace.empty());
  CHECK(st.trace[0].center == std::vector<std::string>{"u", "v", "w"});
  CHECK(st.trace[0].reason.find("ord T = 2 < d") != std::string::npos);
  resolve3d(st);
  CHECK(st.descent.back() == 0);
  for (std::size_t i = 1; i < st.descent.size(); ++i) CHECK(st.descent[i] <= st.descent[i - 1]);
  for (auto leaf : st.tree.leaves()) CHECK(rho(st.tree.node(leaf).morphism) == 0);
}

TEST_CASE("probes lie over the origin") {
  Report r = run_scenario(data("example1.json"));
  Gen g(81);
  for (const auto& p : r.probes) {
    const auto& tree = r.state->tree;
    std::size_t leaf = 0;
    for (auto l : tree.leaves())
      if (tree.node(l).path == p.path) leaf = l;
    auto map = tree.composite_map(0, leaf);
    for (const auto& f : map) CHECK(testing::eval(f, p.point) == 0);
  }
}

TEST_CASE("declared ideals drop rho on synthetic prepared points") {
  Gen g(82);
  int kinds[3] = {0, 0, 0};
  for (int t = 0; t < 24; ++t) {
    int kind = t % 3;
    testing::PreparedFixture f = testing::prepared_fixture(g, kind);
    INFO(f.morphism.component_strings()[1] << " / " << f.morphism.component_strings()[2]);
    PipelineState st(f.morphism, {});
    unsigned top = st.max_rho();
    CHECK(top == f.d - 1);
    CHECK_FALSE(step1_finite_rho(st));
    CHECK_FALSE(step2_prepare(st));
    REQUIRE(st.prepared.size() == 1);
    PointKind k = st.prepared.begin()->second.kind;
    CHECK(static_cast<int>(k) == std::vector<int>{1, 2, 0}[static_cast<std::size_t>(kind)]);
    CHECK(step3_decrease(st));
    for (auto leaf : st.tree.leaves()) {
      CHECK(rho(st.tree.node(leaf).morphism) < top);
      for (int p = 0; p < 2; ++p) {
        ProbeResult pr = examine_probe(st.tree, leaf, sample_probe(st.tree, leaf, st.rng), false);
        if (!pr.skipped) CHECK(pr.rho < top);
      }
    }
    ++kinds[kind];
  }
  for (int c : kinds) CHECK(c >= 8);
}

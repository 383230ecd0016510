#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "logres/hp.hpp"
#include "logres/invariants.hpp"
#include "logres/logfit.hpp"
#include "logres/monomial.hpp"
#include "logres/pipeline.hpp"
#include "logres/scenario.hpp"

using namespace logres;
using nlohmann::json;

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

MorphismChart load_at(const std::string& path, const std::string& at) {
  MorphismChart m = load_scenario(path).morphism;
  if (at.empty()) return m;
  std::vector<Rational> point;
  for (const auto& s : split_list(at)) point.push_back(parse_rational(s));
  return recenter(m, point);
}

json generators_json(const std::vector<Polynomial>& gens, const Chart& chart) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(to_string(g, chart.names));
  return out;
}

int cmd_resolve(const std::string& path, const std::string& out) {
  Report r = run_scenario(load_scenario(path));
  std::string text = r.to_json().dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
    std::cout << to_string(r.status) << ": " << r.message << "\n";
  }
  return exit_code(r.status);
}

int cmd_fitting(const std::string& path, const std::string& at, unsigned k, bool as_json) {
  MorphismChart m = load_at(path, at);
  FittingIdeal f = fitting_ideal(m, k);
  std::vector<Polynomial> gens = f.generators;
  std::sort(gens.begin(), gens.end(), canonical_less);
  PrincipalCheck pc = principal_monomial(gens, m.chart.exceptional, m.chart.names);
  ResidualFactor rf = residual_factor(gens, m.chart.exceptional);
  if (as_json) {
    json j{{"k", k},
           {"generators", generators_json(gens, m.chart)},
           {"principal_monomial", pc.principal},
           {"monomial", monomial_to_string(pc.monomial, m.chart.names)},
           {"residual", generators_json(rf.residual, m.chart)}};
    if (!pc.principal) j["witness"] = pc.witness;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "F_" << k << " (" << gens.size() << " nonzero generators)\n";
  for (const auto& g : gens) std::cout << "  " << to_string(g, m.chart.names) << "\n";
  if (pc.principal)
    std::cout << "principal: (" << monomial_to_string(pc.monomial, m.chart.names) << ")\n";
  else
    std::cout << "not principal: " << pc.witness << "\n";
  return 0;
}

json weierstrass_json(const WeierstrassData& w) {
  const auto& names = w.morphism.chart.names;
  json T = json::array(), g = json::array();
  for (const auto& t : w.T) T.push_back(to_string(t, names));
  for (const auto& p : w.g) g.push_back(to_string(p, names));
  json j{{"components", w.morphism.component_strings()},
         {"alpha", monomial_to_string(w.alpha, names)},
         {"delta", monomial_to_string(w.delta, names)},
         {"g", g},
         {"T", T},
         {"d", natural_json(w.d)},
         {"coordinate_changes", w.notes}};
  if (w.weierstrass) {
    j["v"] = names[w.v];
    json a = json::array();
    for (const auto& row : w.a) {
      json r = json::array();
      for (const auto& c : row) r.push_back(to_string(c, names));
      a.push_back(r);
    }
    j["a"] = a;
  }
  return j;
}

int cmd_invariants(const std::string& path, const std::string& at) {
  MorphismChart m = load_at(path, at);
  std::size_t n = m.chart.dim();
  json rhos = json::object();
  for (unsigned k = 0; k < n; ++k) rhos[std::to_string(k)] = natural_json(rho(m, k));
  json j{{"log_rank", log_rank_at_origin(m)}, {"rho", natural_json(rho(m))}, {"rho_k", rhos}};
  try {
    WeierstrassData w = to_weierstrass(m);
    j["d"] = natural_json(w.d);
    j["weierstrass"] = weierstrass_json(w);
    PreparedCheck pc = check_prepared(w);
    j["prepared"] = pc.prepared;
    if (pc.prepared) {
      DeclaredData dd = declared_ideal(*pc.data);
      std::vector<std::string> dnames;
      for (std::size_t k = 0; k < n; ++k)
        if (dd.divisor[k]) dnames.push_back(m.chart.names[k]);
      j["kind"] = to_string(pc.data->kind);
      j["declared"] = {{"divisor", dnames}, {"ideal", dd.ideal.to_string(m.chart.names)}};
    } else {
      j["not_prepared"] = pc.reason;
    }
  } catch (const InvariantError& e) {
    j["d"] = nullptr;
    j["weierstrass"] = e.what();
    j["prepared"] = false;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_blowup(const std::string& path, const std::string& center_text) {
  MorphismChart m = load_scenario(path).morphism;
  BlowupCenter center = make_center(m.chart, split_list(center_text));
  BlowupStep step = blowup(m.chart, center);
  json charts = json::array();
  for (std::size_t c = 0; c < step.children.size(); ++c) {
    MorphismChart pulled = pullback_morphism(m, step, c);
    json vars = json::array();
    for (std::size_t k = 0; k < pulled.chart.dim(); ++k)
      vars.push_back({{"name", pulled.chart.names[k]}, {"exceptional", bool(pulled.chart.exceptional[k])}});
    charts.push_back({{"chart_variable", m.chart.names[step.children[c].chart_variable]},
                      {"substitution", substitution_to_string(step.children[c].substitution, m.chart, pulled.chart)},
                      {"variables", vars},
                      {"components", pulled.component_strings()},
                      {"rho", natural_json(rho(pulled))}});
  }
  json j{{"center", center_names(m.chart, center)}, {"combinatorial", is_combinatorial(m.chart, center)}, {"charts", charts}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify_hp(const std::string& path, const std::string& at, bool as_json) {
  MorphismChart m = load_at(path, at);
  HPResult r = hp_verify(m);
  if (!r.certificate) {
    if (as_json)
      std::cout << json{{"certified", false}, {"failure", r.failure}}.dump(2) << "\n";
    else
      std::cout << "not HP: " << r.failure << "\n";
    return 1;
  }
  auto gammas = check_fitting_exponents(m, *r.certificate);
  if (as_json) {
    json j = certificate_json(*r.certificate, gammas, m.chart);
    j["certified"] = true;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const auto& names = m.chart.names;
  auto full = r.certificate->full_exponents();
  std::cout << "HP certificate (verified through degree " << natural_or_infinity(r.certificate->verified_degree) << ")\n";
  for (std::size_t i = 0; i < full.size(); ++i)
    std::cout << "  " << (r.certificate->generators[i].is_alpha ? "alpha" : "beta ") << "  d(" << monomial_to_string(full[i], names)
              << ")\n";
  for (const auto& c : r.certificate->coordinates) std::cout << "  " << c << "\n";
  for (const auto& g : gammas)
    std::cout << "  gamma_" << g.m << " = " << monomial_to_string(g.gamma, names) << (g.matches ? "  matches " : "  differs from ")
              << g.actual << "\n";
  return 0;
}

int cmd_principalize(const std::string& ideal_text, const std::string& divisor_text, std::string vars_text) {
  std::vector<std::string> divisor = split_list(divisor_text);
  std::vector<std::string> names = vars_text.empty() ? std::vector<std::string>{} : split_list(vars_text);
  if (names.empty()) {
    names = divisor;
    std::string token;
    for (char ch : ideal_text + " ") {
      if (std::isalpha(static_cast<unsigned char>(ch)) || (!token.empty() && std::isdigit(static_cast<unsigned char>(ch)))) {
        token += ch;
      } else if (!token.empty()) {
        if (std::find(names.begin(), names.end(), token) == names.end()) names.push_back(token);
        token.clear();
      }
    }
  }
  std::vector<Monomial> gens;
  for (const auto& g : split_list(ideal_text)) {
    Polynomial p = parse_polynomial(g, names);
    if (p.terms().size() != 1) throw std::invalid_argument("generator '" + g + "' is not a monomial");
    gens.push_back(p.terms().begin()->first);
  }
  std::vector<bool> allowed(names.size(), false);
  for (const auto& d : divisor) {
    auto it = std::find(names.begin(), names.end(), d);
    if (it == names.end()) throw std::invalid_argument("unknown divisor variable " + d);
    allowed[static_cast<std::size_t>(it - names.begin())] = true;
  }
  MonomialIdeal ideal = MonomialIdeal::from_generators(names.size(), gens);
  PrincipalizationTree t = newton_principalize(ideal, allowed);
  std::function<json(std::size_t, std::string)> walk = [&](std::size_t i, std::string path) {
    const auto& node = t.nodes[i];
    json j{{"path", display_path(path)}, {"ideal", node.ideal.to_string(names)}};
    if (node.children.empty()) {
      j["monomial"] = node.ideal.to_string(names);
      return j;
    }
    std::vector<std::string> c;
    for (auto k : node.center.coordinates) c.push_back(names[k]);
    j["center"] = c;
    json kids = json::array();
    for (auto k : node.children) kids.push_back(walk(k, path + "/" + names[t.nodes[k].chart_variable]));
    j["children"] = kids;
    return j;
  };
  json out{{"variables", names}, {"divisor", divisor}, {"blowups", t.blowups()}, {"rounds", t.rounds()}, {"tree", walk(0, "")}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic Fitting ideals, blowups and resolution of the cotangent image"};
  app.require_subcommand(1);

  std::string scenario, out, at, center, ideal, divisor, variables;
  unsigned k = 0;
  bool as_json = false;

  auto* resolve = app.add_subcommand("resolve", "run the three-step resolution and write a report");
  resolve->add_option("scenario", scenario, "scenario JSON")->required()->check(CLI::ExistingFile);
  resolve->add_option("--out", out, "report path (stdout when omitted)");

  auto* fitting = app.add_subcommand("fitting", "logarithmic Fitting ideal F_k at the origin");
  fitting->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  fitting->add_option("--k", k, "index k")->required();
  fitting->add_option("--at", at, "comma-separated rational point to recenter at");
  fitting->add_flag("--json", as_json);

  auto* inv = app.add_subcommand("invariants", "rho, d, Weierstrass and prepared data at the origin");
  inv->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  inv->add_option("--at", at, "comma-separated rational point to recenter at");

  auto* bl = app.add_subcommand("blowup", "pull the morphism back along one blowup");
  bl->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  bl->add_option("--center", center, "comma-separated center coordinates")->required();

  auto* hp = app.add_subcommand("verify-hp", "Hsiang-Pati certificate at the origin");
  hp->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  hp->add_option("--at", at, "comma-separated rational point to recenter at");
  hp->add_flag("--json", as_json);

  auto* pr = app.add_subcommand("principalize", "principalize a monomial ideal by combinatorial blowups");
  pr->add_option("--ideal", ideal, "comma-separated monomial generators")->required();
  pr->add_option("--divisor", divisor, "coordinates allowed in centers")->required();
  pr->add_option("--variables", variables, "variable order (default: order of appearance)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*resolve) return cmd_resolve(scenario, out);
    if (*fitting) return cmd_fitting(scenario, at, k, as_json);
    if (*inv) return cmd_invariants(scenario, at);
    if (*bl) return cmd_blowup(scenario, center);
    if (*hp) return cmd_verify_hp(scenario, at, as_json);
    if (*pr) return cmd_principalize(ideal, divisor, variables);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#include "logres/pipeline.hpp"

#include <algorithm>
#include <functional>

#include "logres/logfit.hpp"
#include "logres/monomial.hpp"

namespace logres {

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::ok: return "ok";
    case RunStatus::undecidable: return "undecidable";
    case RunStatus::error: return "error";
    case RunStatus::refused: return "refused";
  }
  return "?";
}

int exit_code(RunStatus s) {
  if (s == RunStatus::ok) return 0;
  if (s == RunStatus::undecidable) return 2;
  return 1;
}

namespace {

bool is_identity(const std::vector<Polynomial>& map) {
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] != Polynomial::variable(map.size(), i)) return false;
  return true;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t k = 0; k < m.size() && t != 0; ++k)
      for (unsigned e = 0; e < m[k]; ++e) t *= point[k];
    total += t;
  }
  return total;
}

// Small nonzero rational ±a/b with 1 ≤ a ≤ 9, 1 ≤ b ≤ 4. Plain modulo keeps the draw identical
// across standard libraries.
Rational random_rational(std::mt19937_64& rng) {
  long a = static_cast<long>(1 + rng() % 9);
  long b = static_cast<long>(1 + rng() % 4);
  if (rng() % 2) a = -a;
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::size_t reference_ancestor(const ChartTree& tree, std::size_t node) {
  std::size_t k = node;
  while (k != 0 && tree.node(k).kind != NodeKind::coordinate_change) k = static_cast<std::size_t>(tree.node(k).parent);
  return k;
}

std::string path_of(const ChartTree& tree, std::size_t node) { return display_path(tree.node(node).path); }

// At most one A point per leaf; 2-points and non-generic 1-points before generic ones.
int kind_rank(PointKind k) { return k == PointKind::generic_one_point ? 1 : 0; }

}  // namespace

PipelineState::PipelineState(MorphismChart root, PipelineConfig cfg)
    : tree(std::move(root)), config(cfg), rng(cfg.seed) {}

const NodeInvariants& PipelineState::invariants(std::size_t node) {
  auto it = cache_.find(node);
  if (it != cache_.end()) return it->second;
  const MorphismChart& m = tree.node(node).morphism;
  NodeInvariants inv;
  inv.log_rank = log_rank_at_origin(m);
  inv.rho = rho(m);
  if (inv.log_rank == 0) {
    try {
      inv.d = to_weierstrass(m).d;
    } catch (const InvariantError&) {
    }
  }
  return cache_.emplace(node, inv).first->second;
}

unsigned PipelineState::max_rho() {
  unsigned best = 0;
  for (auto leaf : tree.leaves()) best = std::max(best, invariants(leaf).rho);
  return best;
}

std::vector<Rational> sample_probe(const ChartTree& tree, std::size_t leaf, std::mt19937_64& rng) {
  std::size_t ref = reference_ancestor(tree, leaf);
  std::vector<Polynomial> map = tree.composite_map(ref, leaf);
  std::size_t n = map.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  std::vector<Rational> point(n, Rational(0));
  for (auto k : order) {
    point[k] = random_rational(rng);
    bool vanishes = std::all_of(map.begin(), map.end(), [&](const Polynomial& p) { return evaluate(p, point) == 0; });
    if (!vanishes) point[k] = 0;
  }
  return point;
}

ProbeResult examine_probe(const ChartTree& tree, std::size_t leaf, const std::vector<Rational>& point, bool with_hp) {
  ProbeResult out;
  out.path = path_of(tree, leaf);
  out.point = point;
  const MorphismChart& m = tree.node(leaf).morphism;
  bool at_origin = std::all_of(point.begin(), point.end(), [](const Rational& q) { return q == 0; });
  if (m.precision != kInfinity && !at_origin) {
    out.skipped = true;
    out.note = "chart is known only through degree " + std::to_string(m.precision) + "; points off the origin are not examined";
    return out;
  }
  MorphismChart here = recenter(m, point);
  out.rho = rho(here);
  if (with_hp) {
    HPResult hp = hp_verify(here);
    out.certified = hp.certificate.has_value();
    out.failure = hp.failure;
  }
  return out;
}

namespace {

TraceEntry blowup_entry(PipelineState& st, std::size_t node, const BlowupCenter& center,
                        const std::vector<std::size_t>& created, std::string step, std::string reason, bool admissible) {
  TraceEntry e;
  e.round = st.round;
  e.step = std::move(step);
  e.action = "blowup";
  e.path = path_of(st.tree, node);
  e.center = center_names(st.tree.node(node).morphism.chart, center);
  e.reason = std::move(reason);
  e.rho_before = st.invariants(node).rho;
  for (auto c : created) e.rho_after.emplace_back(path_of(st.tree, c), st.invariants(c).rho);
  e.admissible = admissible;
  return e;
}

std::vector<std::size_t> do_blowup(PipelineState& st, std::size_t node, const BlowupCenter& center,
                                   const std::string& step, const std::string& reason, bool admissible) {
  auto created = st.tree.blowup(node, center);
  st.trace.push_back(blowup_entry(st, node, center, created, step, reason, admissible));
  return created;
}

// Replays a principalization tree below node, one chart-tree blowup per interior node.
void apply_principalization(PipelineState& st, std::size_t node, const PrincipalizationTree& pt,
                            const std::string& step, const std::string& reason, bool admissible) {
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pi, std::size_t ci) {
    const auto& pn = pt.nodes[pi];
    if (pn.children.empty()) return;
    auto created = do_blowup(st, ci, pn.center, step, reason, admissible);
    for (std::size_t k = 0; k < pn.children.size(); ++k) walk(pn.children[k], created[k]);
  };
  walk(0, node);
}

// Inserts a coordinate-change node when the normal form moved the coordinates.
std::size_t normalized_node(PipelineState& st, std::size_t leaf, const WeierstrassData& w, const std::string& step) {
  if (is_identity(w.old_in_new)) return leaf;
  const MorphismChart& m = st.tree.node(leaf).morphism;
  MorphismChart moved = change_coordinates(m, w.old_in_new, w.morphism.precision);
  std::string note;
  for (const auto& n : w.notes) note += (note.empty() ? "" : "; ") + n;
  std::size_t child = st.tree.change_coordinates(leaf, w.old_in_new, moved, note);
  TraceEntry e;
  e.round = st.round;
  e.step = step;
  e.action = "coordinate_change";
  e.path = path_of(st.tree, leaf);
  e.reason = note;
  e.rho_before = st.invariants(leaf).rho;
  e.rho_after.emplace_back(path_of(st.tree, child), st.invariants(child).rho);
  st.trace.push_back(std::move(e));
  return child;
}

WeierstrassData weierstrass_at(PipelineState& st, std::size_t leaf) {
  try {
    return to_weierstrass(st.tree.node(leaf).morphism);
  } catch (const InvariantError& e) {
    throw PipelineError(RunStatus::undecidable, path_of(st.tree, leaf) + ": " + e.what());
  }
}

PrincipalizationTree principalize_or_throw(PipelineState& st, std::size_t node, const MonomialIdeal& ideal,
                                           const std::vector<bool>& allowed) {
  try {
    return newton_principalize(ideal, allowed, st.config.step_cap);
  } catch (const StepCapExceeded& e) {
    throw PipelineError(RunStatus::error, path_of(st.tree, node) + ": " + e.what());
  }
}

std::string iota_text(const WeierstrassData& w) {
  try {
    auto hg = H_G_ideals(w);
    auto i = iota(hg.G, w.morphism.chart.exceptional);
    return i ? std::to_string(*i) : "undecidable";
  } catch (const InvariantError&) {
    return "undecidable";
  }
}

}  // namespace

bool step1_finite_rho(PipelineState& st) {
  bool changed = false;
  for (unsigned pass = 0;; ++pass) {
    if (pass > st.config.step_cap)
      throw PipelineError(RunStatus::error, "rho stayed infinite after " + std::to_string(st.config.step_cap) + " rounds of 2-curve blowups");
    std::vector<std::size_t> todo;
    for (auto leaf : st.tree.leaves())
      if (st.invariants(leaf).rho == kInfinity) todo.push_back(leaf);
    if (todo.empty()) return changed;
    for (auto leaf : todo) {
      const Chart& chart = st.tree.node(leaf).morphism.chart;
      auto exc = chart.exceptional_indices();
      if (exc.size() < 2)
        throw PipelineError(RunStatus::undecidable,
                            path_of(st.tree, leaf) + ": rho is infinite at a point on fewer than two divisor components");
      BlowupCenter center{exc};
      do_blowup(st, leaf, center, "step1", "rho is infinite at a " + std::to_string(exc.size()) + "-point", true);
      changed = true;
    }
  }
}

bool step2_prepare(PipelineState& st) {
  unsigned top = st.max_rho();
  st.prepared.clear();
  if (top == 0) return false;
  bool changed = false;
  for (auto leaf : st.tree.leaves()) {
    if (st.invariants(leaf).rho != top) continue;
    WeierstrassData w = weierstrass_at(st, leaf);
    PreparedCheck pc = check_prepared(w);
    if (pc.prepared) {
      st.prepared.emplace(leaf, std::move(*pc.data));
      continue;
    }
    changed = true;
    const Chart& chart = st.tree.node(leaf).morphism.chart;
    auto exc = chart.exceptional_indices();
    std::string why = "not prepared (" + pc.reason + "); iota = " + iota_text(w);
    if (exc.size() == 2 && chart.dim() == 3) {
      do_blowup(st, leaf, BlowupCenter{exc}, "step2", why + "; 2-curve blowup", true);
    } else if (exc.size() == 1 && chart.dim() == 3 && w.weierstrass) {
      unsigned mu = kInfinity;
      for (const auto& t : w.T) mu = std::min(mu, t.order());
      BlowupCenter origin{{0, 1, 2}};
      if (mu >= w.d) {
        do_blowup(st, leaf, origin, "step2", why + "; ord T = d, point blowup", true);
      } else {
        JIdealData j;
        try {
          j = J_ideal(w);
        } catch (const InvariantError& e) {
          throw PipelineError(RunStatus::undecidable, path_of(st.tree, leaf) + ": " + e.what());
        }
        std::size_t node = normalized_node(st, leaf, w, "step2");
        auto created = do_blowup(st, node, origin, "step2",
                                 why + "; ord T = " + std::to_string(mu) + " < d, point blowup then J = " +
                                     j.ideal.to_string(chart.names),
                                 true);
        std::vector<bool> all(chart.dim(), true);
        for (std::size_t c = 0; c < created.size(); ++c) {
          MonomialIdeal pulled = pullback(j.ideal, origin, origin.coordinates[c]);
          auto pt = principalize_or_throw(st, created[c], pulled, all);
          apply_principalization(st, created[c], pt, "step2", "principalize the transform of J", true);
        }
      }
    } else {
      throw PipelineError(RunStatus::undecidable, path_of(st.tree, leaf) + ": " + pc.reason);
    }
    for (auto k : st.tree.leaves_under(leaf))
      if (st.invariants(k).rho > top)
        throw PipelineError(RunStatus::error, path_of(st.tree, k) + ": rho rose above " + std::to_string(top) + " in step2");
  }
  if (changed) st.prepared.clear();
  return changed;
}

bool step3_decrease(PipelineState& st) {
  unsigned top = st.max_rho();
  if (top == 0 || st.prepared.empty()) return false;
  std::vector<std::pair<std::size_t, PreparedData>> points(st.prepared.begin(), st.prepared.end());
  std::vector<std::size_t> path_order = st.tree.leaves();
  auto position = [&](std::size_t n) { return std::find(path_order.begin(), path_order.end(), n) - path_order.begin(); };
  std::stable_sort(points.begin(), points.end(), [&](const auto& a, const auto& b) {
    int ka = kind_rank(a.second.kind), kb = kind_rank(b.second.kind);
    if (ka != kb) return ka < kb;
    return position(a.first) < position(b.first);
  });
  st.prepared.clear();
  for (auto& [leaf, pd] : points) {
    const Chart& chart = pd.weierstrass.morphism.chart;
    DeclaredData dd = declared_ideal(pd);
    if (dd.ideal.is_principal() || dd.ideal.is_zero())
      throw PipelineError(RunStatus::error, path_of(st.tree, leaf) + ": declared ideal " + dd.ideal.to_string(chart.names) +
                                                " is already principal although rho = " + std::to_string(top));
    std::size_t node = normalized_node(st, leaf, pd.weierstrass, "step3");
    auto pt = principalize_or_throw(st, node, dd.ideal, dd.divisor);
    std::string d_names;
    for (std::size_t k = 0; k < chart.dim(); ++k)
      if (dd.divisor[k]) d_names += (d_names.empty() ? "" : ",") + chart.names[k];
    std::string why = to_string(pd.kind) + ", I = " + dd.ideal.to_string(chart.names) + " over D = {" + d_names + "}";
    apply_principalization(st, node, pt, "step3", why, true);

    TraceEntry check;
    check.round = st.round;
    check.step = "step3";
    check.action = "postcheck";
    check.path = path_of(st.tree, leaf);
    check.reason = "rho below " + std::to_string(top) + " at every new chart origin and probe";
    check.rho_before = top;
    for (auto k : st.tree.leaves_under(node)) {
      unsigned r = st.invariants(k).rho;
      check.rho_after.emplace_back(path_of(st.tree, k), r);
      if (r >= top) check.admissible = false;
      for (unsigned p = 0; p < st.config.check_probes; ++p) {
        ProbeResult pr = examine_probe(st.tree, k, sample_probe(st.tree, k, st.rng), false);
        if (!pr.skipped && pr.rho >= top) check.admissible = false;
        check.probes.push_back(std::move(pr));
      }
    }
    bool ok = check.admissible;
    st.trace.push_back(std::move(check));
    if (!ok) throw PipelineError(RunStatus::error, path_of(st.tree, leaf) + ": rho did not drop below " + std::to_string(top));
  }
  return true;
}

void resolve3d(PipelineState& st) {
  for (st.round = 1; st.round <= st.config.round_cap; ++st.round) {
    step1_finite_rho(st);
    unsigned top = st.max_rho();
    if (!st.descent.empty() && top > st.descent.back())
      throw PipelineError(RunStatus::error, "maximum rho rose from " + natural_or_infinity(st.descent.back()) + " to " +
                                                natural_or_infinity(top));
    st.descent.push_back(top);
    if (top == 0) return;
    if (step2_prepare(st)) continue;
    step3_decrease(st);
  }
  throw PipelineError(RunStatus::error, "no descent to rho = 0 within " + std::to_string(st.config.round_cap) + " rounds");
}

Validation validate(const MorphismChart& m) {
  Validation v;
  std::size_t n = m.chart.dim();
  for (unsigned k = 0; k < n; ++k)
    v.fitting.push_back({k, principal_monomial(fitting_ideal(m, k).generators, m.chart.exceptional, m.chart.names)});
  if (n > 3) {
    v.message = "resolution is implemented for charts of dimension at most 3; this chart has dimension " + std::to_string(n);
    return v;
  }
  for (unsigned k : {0u, static_cast<unsigned>(n - 1)})
    if (!v.fitting[k].check.principal) {
      v.message = "F_" + std::to_string(k) + " is not a principal monomial ideal at the origin: " + v.fitting[k].check.witness;
      return v;
    }
  v.ok = true;
  return v;
}

Report run_scenario(const Scenario& scenario) {
  Report r;
  r.scenario = scenario;
  r.validation = validate(scenario.morphism);
  if (!r.validation.ok) {
    r.status = RunStatus::refused;
    r.message = r.validation.message;
    return r;
  }
  PipelineConfig cfg;
  cfg.probe_count = scenario.probe_count;
  cfg.seed = scenario.seed;
  cfg.step_cap = scenario.step_cap;
  cfg.round_cap = scenario.round_cap;
  r.state.emplace(scenario.morphism, cfg);
  PipelineState& st = *r.state;
  try {
    resolve3d(st);
  } catch (const PipelineError& e) {
    r.status = e.status;
    r.message = e.what();
    return r;
  }

  r.status = RunStatus::ok;
  std::vector<std::size_t> leaves = st.tree.leaves();
  for (auto leaf : leaves) {
    LeafResult lr;
    lr.path = path_of(st.tree, leaf);
    lr.rho = st.invariants(leaf).rho;
    const MorphismChart& m = st.tree.node(leaf).morphism;
    HPResult hp = hp_verify(m);
    if (hp.certificate) {
      lr.gammas = check_fitting_exponents(m, *hp.certificate);
      lr.certificate = std::move(hp.certificate);
    } else {
      lr.failure = hp.failure;
    }
    r.leaves.push_back(std::move(lr));
  }
  std::vector<std::size_t> examinable;
  for (auto leaf : leaves)
    if (st.tree.node(leaf).morphism.precision == kInfinity) examinable.push_back(leaf);
  for (unsigned p = 0; p < cfg.probe_count; ++p) {
    if (examinable.empty()) {
      ProbeResult pr;
      pr.skipped = true;
      pr.note = "every leaf chart is truncated; probes off the origins are not examined";
      r.probes.push_back(std::move(pr));
      break;
    }
    std::size_t leaf = examinable[p % examinable.size()];
    r.probes.push_back(examine_probe(st.tree, leaf, sample_probe(st.tree, leaf, st.rng), true));
  }

  std::string uncertified;
  for (const auto& lr : r.leaves) {
    if (lr.rho != 0) {
      r.status = RunStatus::error;
      r.message = lr.path + ": rho = " + natural_or_infinity(lr.rho) + " at a final leaf";
      return r;
    }
    bool gammas = std::all_of(lr.gammas.begin(), lr.gammas.end(), [](const auto& g) { return g.matches; });
    if (!lr.certificate || !gammas) uncertified += (uncertified.empty() ? "" : ", ") + lr.path;
  }
  for (const auto& pr : r.probes) {
    if (pr.skipped) continue;
    if (pr.rho != 0) {
      r.status = RunStatus::error;
      r.message = pr.path + ": rho = " + natural_or_infinity(pr.rho) + " at a probe point";
      return r;
    }
    if (!pr.certified) uncertified += (uncertified.empty() ? "" : ", ") + pr.path + " (probe)";
  }
  if (!uncertified.empty()) {
    r.status = RunStatus::undecidable;
    r.message = "no HP certificate at " + uncertified;
    return r;
  }
  r.message = "rho = 0 at every leaf origin and probe; HP certificates issued";
  return r;
}

nlohmann::json certificate_json(const HPCertificate& cert, const std::vector<FittingExponentCheck>& gammas,
                                const Chart& chart) {
  nlohmann::json gens = nlohmann::json::array();
  auto full = cert.full_exponents();
  for (std::size_t i = 0; i < cert.generators.size(); ++i) {
    const auto& g = cert.generators[i];
    gens.push_back({{"kind", g.is_alpha ? "alpha" : "beta"},
                    {"exponent", monomial_to_string(g.exponent, chart.names)},
                    {"variable", g.variable ? nlohmann::json(chart.names[*g.variable]) : nlohmann::json(nullptr)},
                    {"differential", "d(" + monomial_to_string(full[i], chart.names) + ")"},
                    {"component", g.component + 1}});
  }
  nlohmann::json gj = nlohmann::json::array();
  for (const auto& g : gammas)
    gj.push_back({{"m", g.m}, {"gamma", monomial_to_string(g.gamma, chart.names)}, {"matches", g.matches}, {"fitting", g.actual}});
  return {{"generators", gens},
          {"verified_degree", natural_json(cert.verified_degree)},
          {"coordinate_precision", natural_json(cert.coordinate_precision)},
          {"coordinates", cert.coordinates},
          {"betas_follow_alphas", cert.betas_follow_alphas},
          {"gammas", gj}};
}

namespace {

std::string kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::root: return "root";
    case NodeKind::blowup: return "blowup";
    case NodeKind::coordinate_change: return "coordinate_change";
  }
  return "?";
}

nlohmann::json rationals_json(const std::vector<Rational>& point) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : point) out.push_back(to_string(q));
  return out;
}

nlohmann::json probe_json(const ProbeResult& p, bool with_hp) {
  nlohmann::json j{{"path", p.path}, {"point", rationals_json(p.point)}};
  if (p.skipped) {
    j["skipped"] = true;
    j["note"] = p.note;
    return j;
  }
  j["rho"] = natural_json(p.rho);
  if (with_hp) {
    j["hp"] = p.certified;
    if (!p.certified) j["failure"] = p.failure;
  }
  return j;
}

nlohmann::json trace_json(const TraceEntry& e) {
  nlohmann::json after = nlohmann::json::array();
  for (const auto& [p, r] : e.rho_after) after.push_back({{"path", p}, {"rho", natural_json(r)}});
  nlohmann::json j{{"round", e.round},   {"step", e.step},     {"action", e.action}, {"path", e.path},
                   {"center", e.center}, {"reason", e.reason}, {"rho_before", natural_json(e.rho_before)},
                   {"rho_after", after}, {"admissible", e.admissible}};
  if (e.action == "postcheck") {
    nlohmann::json probes = nlohmann::json::array();
    for (const auto& p : e.probes) probes.push_back(probe_json(p, false));
    j["probes"] = probes;
  }
  return j;
}

}  // namespace

nlohmann::json tree_json(PipelineState& st) {
  std::function<nlohmann::json(std::size_t)> walk = [&](std::size_t i) {
    const ChartNode& n = st.tree.node(i);
    const Chart& chart = n.morphism.chart;
    nlohmann::json vars = nlohmann::json::array();
    for (std::size_t k = 0; k < chart.dim(); ++k) vars.push_back({{"name", chart.names[k]}, {"exceptional", bool(chart.exceptional[k])}});
    nlohmann::json j{{"path", display_path(n.path)}, {"kind", kind_name(n.kind)}};
    if (n.kind != NodeKind::root) {
      const Chart& parent = st.tree.node(static_cast<std::size_t>(n.parent)).morphism.chart;
      j["substitution"] = substitution_to_string(n.substitution, parent, chart);
      if (n.kind == NodeKind::blowup) {
        j["center"] = center_names(parent, n.center);
        j["chart_variable"] = chart.names[n.chart_variable];
      } else {
        j["note"] = n.note;
      }
    }
    const NodeInvariants& inv = st.invariants(i);
    j["variables"] = vars;
    j["components"] = n.morphism.component_strings();
    j["precision"] = natural_json(n.morphism.precision);
    j["invariants"] = {{"log_rank", inv.log_rank},
                       {"rho", natural_json(inv.rho)},
                       {"d", inv.d ? natural_json(*inv.d) : nlohmann::json(nullptr)}};
    nlohmann::json kids = nlohmann::json::array();
    for (auto c : n.children) kids.push_back(walk(c));
    j["children"] = kids;
    return j;
  };
  return walk(0);
}

nlohmann::json Report::to_json() {
  nlohmann::json fit = nlohmann::json::array();
  for (const auto& f : validation.fitting)
    fit.push_back({{"k", f.k},
                   {"principal", f.check.principal},
                   {"monomial", monomial_to_string(f.check.monomial, scenario.morphism.chart.names)},
                   {"witness", f.check.witness}});
  nlohmann::json j{{"scenario", scenario_json(scenario)},
                   {"status", to_string(status)},
                   {"message", message},
                   {"validation", {{"ok", validation.ok}, {"fitting", fit}, {"message", validation.message}}}};
  if (!state) return j;
  PipelineState& st = *state;
  nlohmann::json descent = nlohmann::json::array();
  for (auto d : st.descent) descent.push_back(natural_json(d));
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& e : st.trace) trace.push_back(trace_json(e));
  j["blowups"] = st.tree.blowup_count();
  j["descent"] = descent;
  j["trace"] = trace;
  j["tree"] = tree_json(st);
  nlohmann::json leaves_j = nlohmann::json::array();
  std::vector<std::size_t> ids = st.tree.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto& lr = leaves[i];
    nlohmann::json l{{"path", lr.path}, {"rho", natural_json(lr.rho)}};
    if (lr.certificate)
      l["certificate"] = certificate_json(*lr.certificate, lr.gammas, st.tree.node(ids[i]).morphism.chart);
    else
      l["failure"] = lr.failure;
    leaves_j.push_back(std::move(l));
  }
  j["leaves"] = leaves_j;
  nlohmann::json probes_j = nlohmann::json::array();
  for (const auto& p : probes) probes_j.push_back(probe_json(p, true));
  j["probes"] = probes_j;
  return j;
}

}  // namespace logres

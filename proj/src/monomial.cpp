#include "logres/monomial.hpp"

#include <algorithm>
#include <functional>

namespace logres {

MonomialIdeal MonomialIdeal::from_generators(std::size_t nvars, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal I{nvars, {}};
  for (const auto& g : gens) {
    if (g.size() != nvars) throw std::invalid_argument("generator arity mismatch");
    bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Monomial& h) { return h != g && divides(h, g); });
    if (!redundant) I.generators.push_back(g);
  }
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators.begin(), generators.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const Polynomial& p) const {
  for (const auto& [m, c] : p.terms())
    if (!contains(m)) return false;
  return true;
}

MonomialIdeal MonomialIdeal::times(const Monomial& m) const {
  std::vector<Monomial> g;
  for (const auto& x : generators) g.push_back(monomial_product(x, m));
  return from_generators(nvars, g);
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  if (generators.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += monomial_to_string(generators[i], names);
  }
  return out + ")";
}

MonomializeResult monomialize(const std::vector<Polynomial>& generators, std::size_t nvars) {
  MonomializeResult r;
  std::vector<Monomial> staircase;
  for (const auto& g : generators) {
    MonomializeResult::Entry e{g.gcd_monomial(), Polynomial(nvars), false};
    if (!g.is_zero()) {
      Polynomial q = monomial_divide(g, e.monomial).quotient;
      if (q.is_unit_at_origin()) {
        e.unit = q;
        staircase.push_back(e.monomial);
      }
    }
    r.entries.push_back(std::move(e));
  }
  r.ideal = MonomialIdeal::from_generators(nvars, staircase);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto& e = r.entries[i];
    if (generators[i].is_zero() || !e.unit.is_zero()) continue;
    if (!r.ideal.contains(generators[i])) {
      r.decided = false;
      r.reason = "generator " + std::to_string(i) + " is not a monomial times a unit and not in the staircase";
      return r;
    }
    e.absorbed = true;
  }
  r.decided = true;
  return r;
}

PrincipalCheck principal_monomial(const std::vector<Polynomial>& generators, const std::vector<bool>& divisor,
                                  const std::vector<std::string>& names) {
  std::size_t n = divisor.size();
  PrincipalCheck r{false, Monomial(n, 0), ""};
  bool any = false;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    r.monomial = any ? monomial_min(r.monomial, g.gcd_monomial()) : g.gcd_monomial();
    any = true;
  }
  if (!any) {
    r.witness = "zero ideal";
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!divisor[i]) r.monomial[i] = 0;
  std::string lows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial q = monomial_divide(g, r.monomial).quotient;
    if (q.is_unit_at_origin()) {
      r.principal = true;
      r.witness = "generator " + to_string(g, names) + " = " + monomial_to_string(r.monomial, names) + " * unit";
      return r;
    }
    if (lows.size() < 200) {
      if (!lows.empty()) lows += ", ";
      lows += to_string(q.homogeneous_part(q.order()), names);
    }
  }
  r.witness = "no generator is " + monomial_to_string(r.monomial, names) +
              " times a unit; lowest parts of cofactors: " + lows;
  return r;
}

ResidualFactor residual_factor(const std::vector<Polynomial>& generators, const std::vector<bool>& divisor) {
  std::size_t n = divisor.size();
  ResidualFactor r{Monomial(n, 0), {}};
  bool any = false;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    r.monomial = any ? monomial_min(r.monomial, g.gcd_monomial()) : g.gcd_monomial();
    any = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!divisor[i]) r.monomial[i] = 0;
  for (const auto& g : generators) r.residual.push_back(monomial_divide(g, r.monomial).quotient);
  return r;
}

ResidualFactor residual_factor(const MonomialIdeal& ideal, const std::vector<bool>& divisor) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators) gens.push_back(Polynomial::term(g));
  return residual_factor(gens, divisor);
}

namespace {

Monomial pull_exponent(const Monomial& a, const BlowupCenter& center, std::size_t w) {
  Monomial b(a);
  for (auto z : center.coordinates)
    if (z != w) b[w] += a[z];
  return b;
}

}  // namespace

MonomialIdeal pullback(const MonomialIdeal& ideal, const BlowupCenter& center, std::size_t chart_variable) {
  std::vector<Monomial> g;
  for (const auto& a : ideal.generators) g.push_back(pull_exponent(a, center, chart_variable));
  return MonomialIdeal::from_generators(ideal.nvars, g);
}

MonomialIdeal weak_transform(const MonomialIdeal& ideal, const BlowupCenter& center, std::size_t chart_variable) {
  MonomialIdeal p = pullback(ideal, center, chart_variable);
  if (p.is_zero()) return p;
  unsigned common = p.generators.front()[chart_variable];
  for (const auto& g : p.generators) common = std::min(common, g[chart_variable]);
  for (auto& g : p.generators) g[chart_variable] -= common;
  return MonomialIdeal::from_generators(p.nvars, p.generators);
}

std::size_t PrincipalizationTree::blowups() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const PrincipalizationNode& n) { return !n.children.empty(); }));
}

unsigned PrincipalizationTree::rounds() const {
  unsigned r = 0;
  for (const auto& n : nodes) r = std::max(r, n.depth);
  return r;
}

std::vector<std::size_t> PrincipalizationTree::leaves() const {
  std::vector<std::size_t> out;
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (nodes[k].children.empty()) {
      out.push_back(k);
      return;
    }
    for (auto c : nodes[k].children) walk(c);
  };
  if (!nodes.empty()) walk(0);
  return out;
}

namespace {

// Drops generators divisible by an earlier or smaller one, keeping the original order.
std::vector<Monomial> prune(const std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !divides(gens[j], gens[i])) continue;
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

PrincipalizationTree newton_principalize(const MonomialIdeal& ideal, const std::vector<bool>& allowed,
                                         unsigned step_cap) {
  if (allowed.size() != ideal.nvars) throw std::invalid_argument("allowed-coordinate mask has wrong size");
  for (const auto& g : ideal.generators)
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0 && !allowed[i]) throw std::invalid_argument("generator uses a coordinate outside the divisor");
  PrincipalizationTree tree;
  std::function<void(std::vector<Monomial>, int, std::size_t, unsigned)> grow =
      [&](std::vector<Monomial> gens, int parent, std::size_t chart_var, unsigned depth) {
        gens = prune(gens);
        std::size_t id = tree.nodes.size();
        PrincipalizationNode node;
        node.parent = parent;
        node.chart_variable = chart_var;
        node.ideal = MonomialIdeal::from_generators(ideal.nvars, gens);
        node.depth = depth;
        tree.nodes.push_back(node);
        if (parent >= 0) tree.nodes[static_cast<std::size_t>(parent)].children.push_back(id);
        if (gens.size() <= 1) return;
        if (depth >= step_cap)
          throw StepCapExceeded("principalization exceeded " + std::to_string(step_cap) + " blowups on one path");
        std::size_t i = 0, j = 0;
        bool found = false;
        for (std::size_t p = 0; p < gens.size() && !found; ++p) {
          for (std::size_t q = p + 1; q < gens.size() && !found; ++q) {
            if (divides(gens[p], gens[q]) || divides(gens[q], gens[p])) continue;
            std::vector<long> d(ideal.nvars);
            for (std::size_t k = 0; k < d.size(); ++k) d[k] = long(gens[p][k]) - long(gens[q][k]);
            i = static_cast<std::size_t>(std::max_element(d.begin(), d.end()) - d.begin());
            j = static_cast<std::size_t>(std::min_element(d.begin(), d.end()) - d.begin());
            found = true;
          }
        }
        BlowupCenter center{{std::min(i, j), std::max(i, j)}};
        tree.nodes[id].center = center;
        for (std::size_t w : center.coordinates) {
          std::vector<Monomial> next;
          for (const auto& a : gens) next.push_back(pull_exponent(a, center, w));
          grow(next, static_cast<int>(id), w, depth + 1);
        }
      };
  std::vector<Monomial> start = ideal.generators;
  grow(start, -1, 0, 0);
  return tree;
}

}  // namespace logres

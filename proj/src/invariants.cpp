#include "logres/invariants.hpp"

#include <algorithm>
#include <functional>

#include "logres/linalg.hpp"
#include "logres/series.hpp"

namespace logres {

namespace {

std::vector<Polynomial> identity_map(std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Polynomial::variable(n, i));
  return out;
}

// outer(inner): both are "old in new" maps, applied right to left.
std::vector<Polynomial> compose_maps(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner,
                                     unsigned precision) {
  std::vector<Polynomial> out;
  for (const auto& p : outer) {
    if (precision == kInfinity)
      out.push_back(substitute(p, inner));
    else
      out.push_back(substitute(TruncatedSeries{p, kInfinity}, inner, precision).poly);
  }
  return out;
}

bool pure_in(const Monomial& m, const std::vector<bool>& mask) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0 && !mask[i]) return false;
  return true;
}

// β = q·α for some rational q, compared on the whole vector.
bool rational_multiple(const Monomial& beta, const Monomial& alpha) {
  return qlinear_rank({to_rvector(alpha), to_rvector(beta)}) <= 1;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned k) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (n == 0) return out;
  rec(0, k);
  return out;
}

Polynomial coefficient_in(const Polynomial& p, std::size_t var, unsigned power) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != power) continue;
    Monomial q = m;
    q[var] = 0;
    out.add_term(q, c);
  }
  return out;
}

Polynomial tail_over(const Polynomial& p, std::size_t var, unsigned power) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] < power) continue;
    Monomial q = m;
    q[var] -= power;
    out.add_term(q, c);
  }
  return out;
}

struct Working {
  MorphismChart morphism;
  std::vector<std::size_t> order;
  std::vector<Rational> scale;
  std::vector<Rational> constants;
  std::vector<Polynomial> old_in_new;
  std::vector<std::string> notes;
};

void apply_change(Working& w, const std::vector<Polynomial>& old_in_new, unsigned precision, std::string note) {
  w.morphism = change_coordinates(w.morphism, old_in_new, precision);
  unsigned p = std::min(precision, w.morphism.precision);
  w.old_in_new = compose_maps(w.old_in_new, old_in_new, p);
  w.notes.push_back(std::move(note));
}

// g/T split of components 2..N around σ_1 = u^α.
void split(const MorphismChart& m, const Monomial& alpha, WeierstrassData& out) {
  const auto& exc = m.chart.exceptional;
  std::size_t n = m.chart.dim();
  out.g.clear();
  out.T.clear();
  std::vector<Polynomial> rest;
  bool any = false;
  Monomial delta(n, 0);
  for (std::size_t i = 1; i < m.components.size(); ++i) {
    Polynomial g(n), r(n);
    for (const auto& [mono, c] : m.components[i].terms()) {
      if (!divides(alpha, mono))
        throw InvariantError("u^alpha does not divide component " + std::to_string(i + 1));
      if (pure_in(mono, exc) && rational_multiple(mono, alpha))
        g.add_term(mono, c);
      else
        r.add_term(mono, c);
    }
    for (const auto& [mono, c] : r.terms()) {
      Monomial e = mono;
      for (std::size_t k = 0; k < n; ++k)
        if (!exc[k]) e[k] = 0;
      delta = any ? monomial_min(delta, e) : e;
      any = true;
    }
    out.g.push_back(std::move(g));
    rest.push_back(std::move(r));
  }
  out.delta = any ? delta : Monomial(n, 0);
  for (auto& r : rest) out.T.push_back(monomial_divide(r, out.delta).quotient);
}

void expand(WeierstrassData& out) {
  out.T_tilde.clear();
  out.a.clear();
  for (const auto& t : out.T) {
    out.T_tilde.push_back(tail_over(t, out.v, out.d));
    std::vector<Polynomial> row;
    for (unsigned j = 0; j < out.d; ++j) row.push_back(coefficient_in(t, out.v, j));
    out.a.push_back(std::move(row));
  }
}

void finish(const Working& w, WeierstrassData& out) {
  out.morphism = w.morphism;
  out.order = w.order;
  out.scale = w.scale;
  out.constants = w.constants;
  out.old_in_new = w.old_in_new;
  out.notes = w.notes;
}

}  // namespace

unsigned rho(const MorphismChart& m, unsigned k) {
  FittingIdeal f = fitting_ideal(m, k);
  std::vector<Polynomial> gens = f.generators;
  // Entries lose one degree of precision under ∂/∂v.
  if (m.precision != kInfinity)
    for (auto& g : gens) g = g.truncated(m.precision == 0 ? 0 : m.precision - 1);
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }), gens.end());
  if (gens.empty()) return kInfinity;
  ResidualFactor rf = residual_factor(gens, m.chart.exceptional);
  unsigned best = kInfinity;
  for (const auto& r : rf.residual) best = std::min(best, r.restrict_to_zero(m.chart.exceptional).order());
  return best;
}

unsigned rho(const MorphismChart& m) {
  std::size_t n = m.chart.dim();
  if (n < 2) return 0;
  return rho(m, static_cast<unsigned>(n - 2));
}

unsigned d_invariant(const WeierstrassData& w) {
  const auto& exc = w.morphism.chart.exceptional;
  unsigned best = kInfinity;
  for (const auto& t : w.T)
    for (const auto& [m, c] : t.terms()) {
      bool pure_free = true;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (exc[k] && m[k] > 0) pure_free = false;
      if (pure_free) best = std::min(best, total_degree(m));
    }
  return best;
}

WeierstrassData to_weierstrass(const MorphismChart& m) {
  std::size_t n = m.chart.dim();
  std::size_t N = m.components.size();
  if (N == 0) throw InvariantError("morphism has no components");
  if (log_rank_at_origin(m) != 0) throw InvariantError("log rank at the origin is not 0");
  const auto& exc = m.chart.exceptional;
  unsigned trunc = m.chart.truncation_degree;

  Working w;
  w.morphism = m;
  w.old_in_new = identity_map(n);
  for (std::size_t i = 0; i < N; ++i) {
    Rational c = m.components[i].constant_term();
    w.constants.push_back(c);
    w.morphism.components[i].add_term(Monomial(n, 0), -c);
  }

  // σ_p = u^α·unit with u^α dividing every component.
  std::optional<std::size_t> p;
  Monomial alpha;
  for (std::size_t i = 0; i < N && !p; ++i) {
    const Polynomial& c = w.morphism.components[i];
    if (c.is_zero()) continue;
    Monomial gm = c.gcd_monomial();
    if (!pure_in(gm, exc)) continue;
    if (!monomial_divide(c, gm).quotient.is_unit_at_origin()) continue;
    bool divides_all = true;
    for (const auto& other : w.morphism.components)
      if (!other.is_zero() && !divides(gm, other.gcd_monomial())) divides_all = false;
    if (divides_all) {
      p = i;
      alpha = gm;
    }
  }
  if (!p) throw InvariantError("no component is u^alpha times a unit dividing all others");

  w.order.push_back(*p);
  for (std::size_t i = 0; i < N; ++i)
    if (i != *p) w.order.push_back(i);
  {
    MorphismChart permuted{w.morphism.chart, {}, w.morphism.precision};
    std::vector<Rational> consts;
    for (auto i : w.order) {
      permuted.components.push_back(w.morphism.components[i]);
      consts.push_back(w.constants[i]);
    }
    w.morphism = std::move(permuted);
    w.constants = std::move(consts);
  }
  w.scale.assign(N, Rational(1));

  Polynomial unit = monomial_divide(w.morphism.components[0], alpha).quotient;
  Rational c0 = unit.constant_term();
  if (c0 != 1) {
    w.scale[0] = 1 / c0;
    w.morphism.components[0] *= w.scale[0];
    unit *= w.scale[0];
  }
  if (unit != Polynomial::constant(n, 1)) {
    // ū_h = U^{ε_h} u_h with ⟨α, ε⟩ = 1 makes ū^α = U u^α.
    auto eps = least_norm_solution({to_rvector(alpha)}, {Rational(1)}, n);
    std::vector<Polynomial> forward = identity_map(n);
    for (std::size_t h = 0; h < n; ++h)
      if ((*eps)[h] != 0)
        forward[h] = multiply_truncated(unit_fractional_power(unit, (*eps)[h], trunc), Polynomial::variable(n, h), trunc);
    std::vector<Polynomial> inv = invert_map(forward, trunc);
    apply_change(w, inv, trunc, "normalized the first component to a monomial");
    Polynomial target = Polynomial::term(alpha);
    if ((w.morphism.components[0] - target).truncated(trunc) != Polynomial(n))
      throw InvariantError("internal: monomial normalization failed");
    w.morphism.components[0] = target;
  }

  WeierstrassData out;
  out.morphism.chart = m.chart;
  out.alpha = alpha;
  split(w.morphism, alpha, out);
  out.d = d_invariant(out);
  std::vector<std::size_t> free = m.chart.free_indices();
  if (out.d < 2 || out.d == kInfinity || free.empty()) {
    finish(w, out);
    return out;
  }

  // Bring a component with a degree-d pure free monomial to position 2.
  std::size_t i2 = 0;
  auto degree_d_free_part = [&](const Polynomial& t) {
    Polynomial q(n);
    for (const auto& [mono, c] : t.terms()) {
      bool free_only = true;
      for (std::size_t k = 0; k < n; ++k)
        if (exc[k] && mono[k] > 0) free_only = false;
      if (free_only && total_degree(mono) == out.d) q.add_term(mono, c);
    }
    return q;
  };
  for (std::size_t i = 0; i < out.T.size(); ++i)
    if (!degree_d_free_part(out.T[i]).is_zero()) {
      i2 = i;
      break;
    }
  if (i2 != 0) {
    std::size_t from = i2 + 1;
    std::rotate(w.order.begin() + 1, w.order.begin() + static_cast<long>(from), w.order.begin() + static_cast<long>(from) + 1);
    auto rot = [&](auto& vec) { std::rotate(vec.begin() + 1, vec.begin() + static_cast<long>(from), vec.begin() + static_cast<long>(from) + 1); };
    rot(w.morphism.components);
    rot(w.scale);
    rot(w.constants);
    split(w.morphism, alpha, out);
  }

  // Distinguished variable: first free v with v^d in T_2, else an integer shear w ↦ w + c·v.
  Polynomial P = degree_d_free_part(out.T[0]);
  std::optional<std::size_t> v;
  for (auto f : free)
    if (P.coefficient(unit_monomial(n, f, out.d)) != 0) {
      v = f;
      break;
    }
  if (!v) {
    static const int kShear[] = {0, 1, -1, 2, -2, 3, -3};
    for (auto cand : free) {
      std::vector<std::size_t> others;
      for (auto f : free)
        if (f != cand) others.push_back(f);
      std::vector<std::size_t> idx(others.size(), 0);
      bool found = false;
      while (!found) {
        // advance idx like an odometer; the all-zero shear is skipped
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == std::size(kShear)) idx[k++] = 0;
        if (k == idx.size()) break;
        std::vector<Polynomial> map = identity_map(n);
        std::string note;
        for (std::size_t o = 0; o < others.size(); ++o) {
          int c = kShear[idx[o]];
          if (c == 0) continue;
          map[others[o]] = map[others[o]] + Polynomial::variable(n, cand) * Rational(c);
          if (!note.empty()) note += ", ";
          note += m.chart.names[others[o]] + " = " + to_string(map[others[o]], m.chart.names);
        }
        if (substitute(P, map).coefficient(unit_monomial(n, cand, out.d)) != 0) {
          apply_change(w, map, kInfinity, "linear change " + note);
          split(w.morphism, alpha, out);
          v = cand;
          found = true;
        }
      }
      if (found) break;
    }
  }
  if (!v) throw InvariantError("no linear change makes the degree-d part monic");
  out.v = *v;

  // Tschirnhaus: v ↦ v − a_{2,d−1}/(d·T̃_2) until the v^{d−1} coefficient of T_2 vanishes.
  for (unsigned iter = 0;; ++iter) {
    Polynomial a = coefficient_in(out.T[0], *v, out.d - 1);
    if (a.is_zero()) break;
    if (iter > trunc + 1) throw InvariantError("Tschirnhaus iteration did not converge");
    Polynomial tt = tail_over(out.T[0], *v, out.d);
    Polynomial shift = multiply_truncated(a, series_inverse(tt * Rational(out.d), trunc), trunc);
    std::vector<Polynomial> map = identity_map(n);
    map[*v] = map[*v] - shift;
    apply_change(w, map, trunc, "completed the d-th power in " + m.chart.names[*v]);
    split(w.morphism, alpha, out);
  }
  out.weierstrass = true;
  expand(out);
  finish(w, out);
  return out;
}

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::two_point: return "2-point";
    case PointKind::generic_one_point: return "generic 1-point";
    case PointKind::nongeneric_one_point: return "non-generic 1-point";
  }
  return "?";
}

PreparedCheck check_prepared(const WeierstrassData& w) {
  PreparedCheck out;
  if (!w.weierstrass) {
    out.reason = "not in Weierstrass form (d = " + natural_or_infinity(w.d) + ")";
    return out;
  }
  const Chart& chart = w.morphism.chart;
  std::size_t n = chart.dim();
  PreparedData pd;
  pd.weierstrass = w;
  pd.exceptional = chart.exceptional_indices();
  pd.v = w.v;
  std::size_t s = pd.exceptional.size();
  if (n != 3 || (s != 1 && s != 2)) {
    out.reason = "prepared normal form is defined at 1- and 2-points of a 3-dimensional chart";
    return out;
  }
  std::vector<bool> allowed = chart.exceptional;
  if (s == 1) {
    for (auto f : chart.free_indices())
      if (f != w.v) pd.w = f;
    allowed[*pd.w] = true;
  }
  const auto& names = chart.names;
  for (std::size_t i = 1; i < w.ncomponents(); ++i) {
    for (unsigned j = 1; j < w.d; ++j) {
      const Polynomial& a = w.coefficient(i, j);
      if (a.is_zero()) continue;
      Monomial gm = a.gcd_monomial();
      if (!pure_in(gm, allowed) || !monomial_divide(a, gm).quotient.is_unit_at_origin()) {
        out.reason = "a_" + std::to_string(i + 1) + std::to_string(j) + " = " + to_string(a, names) +
                     " is not a monomial times a unit";
        return out;
      }
      pd.coefficients.push_back({i + 1, j, gm});
    }
  }
  std::string first_reason;
  for (std::size_t i = 1; i < w.ncomponents(); ++i) {
    const Polynomial& a0 = w.coefficient(i, 0);
    std::string label = "a_" + std::to_string(i + 1) + "0";
    if (a0.is_zero()) continue;
    Monomial gm = a0.gcd_monomial();
    auto fail = [&](std::string why) {
      if (first_reason.empty()) first_reason = label + " = " + to_string(a0, names) + ": " + why;
    };
    if (!pure_in(gm, allowed) || !monomial_divide(a0, gm).quotient.is_unit_at_origin()) {
      fail("not a monomial times a unit");
      continue;
    }
    Monomial beta = gm;
    if (s == 1) {
      if (gm[*pd.w] != 1) {
        fail("w does not occur to the first power");
        continue;
      }
      beta[*pd.w] = 0;
    }
    bool divides_all = true;
    for (std::size_t k = 1; k < w.ncomponents(); ++k)
      for (const auto& [mono, c] : w.coefficient(k, 0).terms()) {
        Monomial e = mono;
        for (std::size_t q = 0; q < n; ++q)
          if (!chart.exceptional[q]) e[q] = 0;
        if (!divides(beta, e)) divides_all = false;
      }
    if (!divides_all) {
      fail("u^beta does not divide every a_i0");
      continue;
    }
    if (s == 2) {
      Monomial db = monomial_product(w.delta, beta);
      if (qlinear_rank({to_rvector(w.alpha), to_rvector(db)}) < 2) {
        fail("delta + beta is linearly dependent on alpha");
        continue;
      }
    }
    pd.i0 = i + 1;
    pd.beta = beta;
    break;
  }
  if (pd.i0 == 0) {
    out.reason = first_reason.empty() ? "every a_i0 vanishes" : first_reason;
    return out;
  }
  if (s == 2)
    pd.kind = PointKind::two_point;
  else {
    bool generic = true;
    for (const auto& c : pd.coefficients)
      if (c.monomial[*pd.w] > 0) generic = false;
    pd.kind = generic ? PointKind::generic_one_point : PointKind::nongeneric_one_point;
  }
  out.prepared = true;
  out.data = std::move(pd);
  return out;
}

HGIdeals H_G_ideals(const WeierstrassData& w) {
  if (!w.weierstrass) throw InvariantError("H and G need the Weierstrass expansion");
  const Chart& chart = w.morphism.chart;
  std::size_t n = chart.dim();
  auto exc = chart.exceptional_indices();
  std::optional<std::size_t> wvar;
  for (auto f : chart.free_indices())
    if (f != w.v) wvar = f;
  HGIdeals out;
  Polynomial ua = Polynomial::term(w.alpha);
  for (std::size_t i = 1; i < w.ncomponents(); ++i) {
    Polynomial f = w.coefficient(i, 0).times_monomial(w.delta);
    Polynomial h(n);
    if (exc.size() == 2) {
      std::size_t u1 = exc[0], u2 = exc[1];
      h = ua * (f.euler_derivative(u2) * Rational(w.alpha[u1]) - f.euler_derivative(u1) * Rational(w.alpha[u2]));
    } else if (exc.size() == 1 && wvar) {
      h = ua * f.derivative(*wvar) * Rational(w.alpha[exc[0]]);
    } else {
      throw InvariantError("H is defined at 1- and 2-points");
    }
    out.H.push_back(std::move(h));
  }
  Polynomial prod = Polynomial::constant(n, 1);
  for (std::size_t i = 1; i < w.ncomponents(); ++i)
    for (unsigned j = 1; j < w.d; ++j)
      if (!w.coefficient(i, j).is_zero()) prod = prod * w.coefficient(i, j);
  for (const auto& h : out.H)
    if (!h.is_zero()) out.G.push_back(prod * h);
  return out;
}

std::optional<unsigned> iota(const std::vector<Polynomial>& G, const std::vector<bool>& divisor) {
  if (G.empty()) return std::nullopt;
  MonomializeResult mr = monomialize(G, G.front().nvars());
  if (!mr.decided || mr.ideal.is_zero()) return std::nullopt;
  try {
    return newton_principalize(mr.ideal, divisor).rounds();
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

JIdealData J_ideal(const WeierstrassData& w) {
  const Chart& chart = w.morphism.chart;
  std::size_t n = chart.dim();
  auto exc = chart.exceptional_indices();
  if (exc.size() != 1) throw InvariantError("J is defined at 1-points");
  if (w.d == kInfinity || w.d < 2) throw InvariantError("J needs 2 <= d < infinity");
  std::size_t u = exc[0];
  JIdealData out;
  out.mu = kInfinity;
  for (const auto& t : w.T) out.mu = std::min(out.mu, t.order());
  if (out.mu >= w.d) throw InvariantError("ord T = d; J needs ord T < d");
  std::vector<Monomial> gens = monomials_of_degree(n, w.d);
  for (unsigned k = out.mu; k < w.d; ++k)
    for (const auto& t : w.T) {
      Polynomial h = t.homogeneous_part(k);
      if (h.is_zero()) continue;
      unsigned a = h.gcd_monomial()[u];
      if (a == 0 || a >= k) throw InvariantError("homogeneous part of degree " + std::to_string(k) + " has u-order outside (0, k)");
      out.alpha_k.emplace_back(a, k);
      for (auto mono : monomials_of_degree(n, k - a)) {
        mono[u] += a;
        gens.push_back(mono);
      }
    }
  out.ideal = MonomialIdeal::from_generators(n, gens);
  return out;
}

DeclaredData declared_ideal(const PreparedData& p) {
  const WeierstrassData& w = p.weierstrass;
  std::size_t n = w.morphism.chart.dim();
  DeclaredData out;
  out.divisor = w.morphism.chart.exceptional;
  out.divisor[p.v] = true;
  bool nongeneric = p.kind == PointKind::nongeneric_one_point;
  if (nongeneric) out.divisor[*p.w] = true;
  std::vector<Monomial> gens{unit_monomial(n, p.v, w.d)};
  for (const auto& c : p.coefficients) {
    Monomial m = c.monomial;
    m[p.v] += static_cast<unsigned>(c.j);
    gens.push_back(m);
  }
  Monomial b = p.beta;
  if (nongeneric) b[*p.w] += 1;
  gens.push_back(b);
  out.ideal = MonomialIdeal::from_generators(n, gens);
  return out;
}

}  // namespace logres

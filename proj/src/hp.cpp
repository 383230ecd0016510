#include "logres/hp.hpp"

#include <algorithm>
#include <map>

#include "logres/linalg.hpp"
#include "logres/logfit.hpp"
#include "logres/monomial.hpp"
#include "logres/series.hpp"

namespace logres {

namespace {

std::vector<Polynomial> identity_map(std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Polynomial::variable(n, i));
  return out;
}

Monomial exceptional_part(const Monomial& m, const std::vector<bool>& exc) {
  Monomial e = m;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (!exc[k]) e[k] = 0;
  return e;
}

// x^m is a dependent monomial: m ∈ span{e_i : e_i ≤ m}, so d(x^m) is in the module.
bool dependent(const Monomial& m, const std::vector<Monomial>& gens) {
  std::vector<RVector> basis;
  for (const auto& e : gens)
    if (divides(e, m)) basis.push_back(to_rvector(e));
  return in_qlinear_span(basis, to_rvector(m));
}

std::string hp_monomial(const Monomial& m, const Chart& chart) { return monomial_to_string(m, chart.names); }

}  // namespace

LogForm differential(const Polynomial& f, const Chart& chart) {
  LogForm out;
  for (std::size_t k = 0; k < chart.dim(); ++k)
    out.coefficients.push_back(chart.exceptional[k] ? f.euler_derivative(k) : f.derivative(k));
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non-member";
    case Membership::inconclusive: return "inconclusive";
  }
  return "?";
}

MembershipResult membership_in_module(const LogForm& form, const std::vector<Monomial>& generators,
                                      const Chart& chart, unsigned precision) {
  std::size_t n = chart.dim();
  if (form.coefficients.size() != n) throw std::invalid_argument("form arity mismatch");
  // All-logarithmic coefficients: dv_j = v_j·dv_j/v_j.
  std::map<Monomial, RVector, GrlexGreater> by_monomial;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial c = chart.exceptional[k] ? form.coefficients[k] : form.coefficients[k].times_monomial(unit_monomial(n, k));
    for (const auto& [m, q] : c.terms()) {
      if (precision != kInfinity && total_degree(m) > precision) continue;
      auto& vec = by_monomial[m];
      if (vec.empty()) vec.assign(n, Rational(0));
      vec[k] += q;
    }
  }
  MembershipResult out;
  out.verified_degree = precision;
  for (std::size_t i = 0; i < generators.size(); ++i) out.combination.emplace_back(n);
  bool any = false;
  for (auto it = by_monomial.rbegin(); it != by_monomial.rend(); ++it) {
    const auto& [m, r] = *it;
    if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; })) continue;
    any = true;
    std::vector<std::size_t> idx;
    std::vector<RVector> basis;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (divides(generators[i], m)) {
        idx.push_back(i);
        basis.push_back(to_rvector(generators[i]));
      }
    auto x = solve_in_span(basis, r);
    if (!x) {
      out.verdict = Membership::non_member;
      out.obstruction = m;
      out.reason = "coefficient of " + hp_monomial(m, chart) + " (degree " + std::to_string(total_degree(m)) +
                   ") is outside the span of the generator exponents below it";
      out.combination.clear();
      return out;
    }
    for (std::size_t j = 0; j < idx.size(); ++j)
      if ((*x)[j] != 0) out.combination[idx[j]].add_term(monomial_quotient(m, generators[idx[j]]), (*x)[j]);
  }
  if (!any && precision != kInfinity) {
    out.verdict = Membership::inconclusive;
    out.reason = "form vanishes through degree " + std::to_string(precision);
    return out;
  }
  out.verdict = Membership::member;
  return out;
}

Resplit remainder_split(const Polynomial& sigma, const Monomial& delta, bool delta_dependent) {
  MonomialDivision qr = monomial_divide(sigma, delta);
  Resplit out{qr.remainder, qr.quotient, false};
  Rational c = qr.quotient.constant_term();
  if (delta_dependent && c != 0) {
    out.corner = true;
    out.g.add_term(delta, c);
    out.S.add_term(Monomial(sigma.nvars(), 0), -c);
  }
  return out;
}

std::vector<Monomial> HPCertificate::full_exponents() const {
  std::vector<Monomial> out;
  for (const auto& g : generators) {
    Monomial e = g.exponent;
    if (g.variable) e[*g.variable] += 1;
    out.push_back(e);
  }
  return out;
}

HPState HPState::start(const MorphismChart& m) {
  HPState s;
  s.morphism = m;
  s.new_in_old = identity_map(m.chart.dim());
  s.used.assign(m.components.size(), false);
  s.scale.assign(m.components.size(), Rational(1));
  return s;
}

namespace {

std::vector<Monomial> state_exponents(const HPState& s) {
  HPCertificate c;
  c.generators = s.generators;
  return c.full_exponents();
}

// Re-expresses the state in coordinates y = forward(x); forward is known through `known`.
void apply_forward(HPState& s, const std::vector<Polynomial>& forward, unsigned known) {
  const Chart& chart = s.morphism.chart;
  unsigned trunc = chart.truncation_degree;
  std::vector<Polynomial> inverse = invert_map(forward, trunc);
  // An inverse reaching the truncation degree is a genuine series; otherwise a bounded-degree
  // round trip decides whether the polynomial inverse is exact.
  unsigned fdeg = 0, ideg = 0;
  for (const auto& f : forward) fdeg = std::max(fdeg, f.degree());
  for (const auto& f : inverse) ideg = std::max(ideg, f.degree());
  bool exact = s.morphism.precision == kInfinity && ideg < trunc && fdeg * ideg <= 2 * trunc;
  if (exact) {
    std::vector<Polynomial> roundtrip;
    for (const auto& f : forward) roundtrip.push_back(substitute(f, inverse));
    exact = roundtrip == identity_map(chart.dim());
  }
  s.coordinate_precision = std::min(s.coordinate_precision, exact ? known : std::min(known, trunc));
  s.morphism = change_coordinates(s.morphism, inverse, exact ? kInfinity : trunc);
  unsigned p = s.morphism.precision;
  std::vector<Polynomial> next;
  for (const auto& f : forward) {
    if (p == kInfinity)
      next.push_back(substitute(f, s.new_in_old));
    else
      next.push_back(substitute(TruncatedSeries{f, kInfinity}, s.new_in_old, p).poly);
  }
  s.new_in_old = std::move(next);
}

}  // namespace

HPStepResult hp_extract_step(HPState& s) {
  HPStepResult out;
  const Chart& chart = s.morphism.chart;
  const auto& exc = chart.exceptional;
  std::size_t n = chart.dim();
  std::size_t N = s.morphism.components.size();
  unsigned trunc = chart.truncation_degree;
  std::vector<Monomial> gens = state_exponents(s);

  std::vector<std::optional<Monomial>> deltas(N);
  for (std::size_t m = 0; m < N; ++m) {
    if (s.used[m]) continue;
    for (const auto& [mono, c] : s.morphism.components[m].terms()) {
      if (dependent(mono, gens)) continue;
      Monomial e = exceptional_part(mono, exc);
      deltas[m] = deltas[m] ? monomial_min(*deltas[m], e) : e;
    }
  }
  std::optional<std::size_t> m0;
  for (std::size_t m = 0; m < N; ++m) {
    if (!deltas[m]) continue;
    bool least = true;
    for (std::size_t k = 0; k < N; ++k)
      if (deltas[k] && !divides(*deltas[m], *deltas[k])) least = false;
    if (least) {
      m0 = m;
      break;
    }
  }
  bool any = std::any_of(deltas.begin(), deltas.end(), [](const auto& d) { return d.has_value(); });
  if (!any) {
    out.done = true;
    return out;
  }
  std::size_t k = s.generators.size();
  std::string fitting = "F_" + std::to_string(n >= k + 1 ? n - k - 1 : 0);
  if (!m0) {
    out.ok = false;
    out.failure = "leading exponents of the remaining components are incomparable; " + fitting + " is not principal";
    return out;
  }
  Monomial delta = *deltas[*m0];
  if (k >= n) {
    out.ok = false;
    out.failure = "more than n independent differentials";
    return out;
  }
  for (const auto& g : s.generators)
    if (!divides(g.exponent, delta)) {
      out.ok = false;
      out.failure = "exponent " + hp_monomial(delta, chart) + " is not above " + hp_monomial(g.exponent, chart) +
                    "; the exponents are not totally ordered";
      return out;
    }

  // S = σ/u^δ is known δ degrees less precisely than σ.
  unsigned s_known = s.morphism.precision == kInfinity ? kInfinity
                     : s.morphism.precision > total_degree(delta) ? s.morphism.precision - total_degree(delta) : 0;
  std::vector<bool> taken(n, false);
  for (const auto& g : s.generators)
    if (g.variable) taken[*g.variable] = true;

  std::string last_reason;
  for (std::size_t m = 0; m < N; ++m) {
    if (!deltas[m] || *deltas[m] != delta) continue;
    bool dep = dependent(delta, gens);
    Resplit rs = remainder_split(s.morphism.components[m], delta, dep);
    Polynomial S = rs.S;
    Rational c = S.constant_term();
    if (c != 0 && !dep) {
      // d(u^δ) case: ū_h = S^{ε_h} u_h, v̄_j = S^{−⟨β_j,ε⟩} v_j with ⟨α_i,ε⟩ = 0, ⟨δ,ε⟩ = 1.
      Rational inv = 1 / c;
      s.scale[m] *= inv;
      s.morphism.components[m] *= inv;
      S *= inv;
      std::vector<RVector> rows;
      RVector rhs;
      for (const auto& g : s.generators)
        if (g.is_alpha) {
          rows.push_back(to_rvector(g.exponent));
          rhs.push_back(0);
        }
      rows.push_back(to_rvector(delta));
      rhs.push_back(1);
      auto eps = least_norm_solution(rows, rhs, n);
      if (!eps) {
        out.ok = false;
        out.failure = "internal: no epsilon for an independent exponent";
        return out;
      }
      if (S != Polynomial::constant(n, 1)) {
        std::vector<Polynomial> forward = identity_map(n);
        for (std::size_t h = 0; h < n; ++h)
          if (exc[h] && (*eps)[h] != 0)
            forward[h] = multiply_truncated(unit_fractional_power(S, (*eps)[h], trunc), forward[h], trunc);
        for (const auto& g : s.generators)
          if (!g.is_alpha) {
            Rational q = -dot(to_rvector(g.exponent), *eps);
            if (q != 0)
              forward[*g.variable] = multiply_truncated(unit_fractional_power(S, q, trunc), forward[*g.variable], trunc);
          }
        apply_forward(s, forward, s_known);
      }
      s.generators.push_back({true, delta, std::nullopt, m});
      s.used[m] = true;
      return out;
    }
    if (c == 0) {
      for (std::size_t q = 0; q < n; ++q) {
        if (exc[q] || taken[q]) continue;
        if (S.coefficient(unit_monomial(n, q)) == 0) continue;
        std::vector<Polynomial> forward = identity_map(n);
        forward[q] = S;
        apply_forward(s, forward, s_known);
        s.generators.push_back({false, delta, q, m});
        s.used[m] = true;
        return out;
      }
    }
    last_reason = "component " + std::to_string(m + 1) + " = u^delta * (" + to_string(S, chart.names) +
                  ") with delta = " + hp_monomial(delta, chart) +
                  " has neither an independent unit part nor a new free coordinate";
  }
  out.ok = false;
  out.failure = last_reason + "; " + fitting + " is not principal";
  return out;
}

HPResult hp_verify(const MorphismChart& m) {
  HPResult out;
  HPState s = HPState::start(m);
  std::size_t n = m.chart.dim();
  for (std::size_t step = 0; step <= n + 1; ++step) {
    HPStepResult r = hp_extract_step(s);
    if (!r.ok) {
      out.failure = r.failure;
      return out;
    }
    if (r.done) break;
  }
  const Chart& chart = s.morphism.chart;
  unsigned precision = s.morphism.precision;
  std::vector<Monomial> gens = state_exponents(s);
  for (std::size_t k = 0; k < s.generators.size(); ++k) {
    std::size_t c = s.generators[k].component;
    Polynomial rest = s.morphism.components[c] - Polynomial::term(gens[k]);
    std::vector<Monomial> before(gens.begin(), gens.begin() + static_cast<long>(k));
    MembershipResult mr = membership_in_module(differential(rest, chart), before, chart, precision);
    if (mr.verdict == Membership::non_member) {
      out.failure = "component " + std::to_string(c + 1) + " minus its generator is not in the earlier module: " + mr.reason;
      return out;
    }
  }
  for (std::size_t c = 0; c < s.used.size(); ++c) {
    if (s.used[c]) continue;
    MembershipResult mr = membership_in_module(differential(s.morphism.components[c], chart), gens, chart, precision);
    if (mr.verdict == Membership::non_member) {
      out.failure = "d(component " + std::to_string(c + 1) + ") is not in the module: " + mr.reason;
      return out;
    }
    // A component with nothing known cannot be called dependent; the rank is undetermined.
    if (mr.verdict == Membership::inconclusive) {
      out.failure = "component " + std::to_string(c + 1) + ": " + mr.reason + "; raise the truncation degree";
      return out;
    }
  }
  HPCertificate cert;
  cert.generators = s.generators;
  cert.verified_degree = precision;
  cert.coordinate_precision = s.coordinate_precision;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial c = s.coordinate_precision == kInfinity ? s.new_in_old[i] : s.new_in_old[i].truncated(s.coordinate_precision);
    if (c == Polynomial::variable(n, i) && s.new_in_old[i] == c) continue;
    std::string line = chart.names[i] + "' = " + to_string(c, chart.names);
    if (s.coordinate_precision != kInfinity) line += " mod deg > " + std::to_string(s.coordinate_precision);
    cert.coordinates.push_back(line);
  }
  cert.betas_follow_alphas = true;
  std::vector<RVector> alphas;
  for (const auto& g : cert.generators) {
    if (g.is_alpha)
      alphas.push_back(to_rvector(g.exponent));
    else if (!in_qlinear_span(alphas, to_rvector(g.exponent)))
      cert.betas_follow_alphas = false;
  }
  out.certificate = std::move(cert);
  return out;
}

std::vector<Monomial> hp_fitting_exponents(const HPCertificate& cert) {
  std::vector<Monomial> out;
  for (const auto& g : cert.generators)
    out.push_back(out.empty() ? g.exponent : monomial_product(out.back(), g.exponent));
  return out;
}

std::vector<FittingExponentCheck> check_fitting_exponents(const MorphismChart& m, const HPCertificate& cert) {
  std::vector<FittingExponentCheck> out;
  std::size_t n = m.chart.dim();
  auto gammas = hp_fitting_exponents(cert);
  for (std::size_t i = 0; i < gammas.size() && i < n; ++i) {
    unsigned k = static_cast<unsigned>(n - i - 1);
    FittingIdeal f = fitting_ideal(m, k);
    PrincipalCheck pc = principal_monomial(f.generators, m.chart.exceptional, m.chart.names);
    FittingExponentCheck c;
    c.m = static_cast<unsigned>(i + 1);
    c.gamma = gammas[i];
    c.matches = pc.principal && pc.monomial == gammas[i];
    c.actual = pc.principal ? monomial_to_string(pc.monomial, m.chart.names) : "not principal (" + pc.witness + ")";
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace logres

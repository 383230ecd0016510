#pragma once

// Shared fixtures, seeded generators and brute-force oracles for the test suites. Oracles here
// deliberately avoid the library's own algorithms (Leibniz expansion instead of cofactors,
// pointwise evaluation instead of composition).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "logres/chart.hpp"
#include "logres/logfit.hpp"
#include "logres/monomial.hpp"
#include "logres/polynomial.hpp"

namespace testing {

using namespace logres;

inline MorphismChart morphism(const std::vector<std::string>& names, const std::vector<bool>& exc,
                              const std::vector<std::string>& comps, unsigned trunc = 16) {
  MorphismChart m;
  m.chart = Chart{names, exc, trunc};
  for (const auto& c : comps) m.components.push_back(parse_polynomial(c, m.chart.names));
  return m;
}

inline MorphismChart example1() {
  return morphism({"u", "v", "w"}, {true, false, false}, {"u^2", "u^3*(v^2+u*w)", "u^4*v"});
}

inline MorphismChart example2() {
  return morphism({"u", "v", "w", "x", "y"}, {true, false, false, false, false},
                  {"u^2", "u^3*(v^3+(y^2+u*x^2)*u*v+u^3*w)", "u^4*v", "u^4*y", "u^4*x"});
}

inline Polynomial P(const std::string& text, const std::vector<std::string>& names) {
  return parse_polynomial(text, names);
}

// Seeded generator; draws use plain modulo so sequences do not depend on the standard library.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }
  // Uniform-ish in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return rng_() % 2 == 0; }
  Rational rational(long num = 5, long den = 3) {
    Rational q(integer(-num, num), integer(1, den));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long num = 5, long den = 3) {
    Rational q = 0;
    while (q == 0) q = rational(num, den);
    return q;
  }
  Monomial monomial(std::size_t n, unsigned max_exp) {
    Monomial m(n);
    for (auto& e : m) e = static_cast<unsigned>(integer(0, max_exp));
    return m;
  }
  Polynomial polynomial(std::size_t n, std::size_t terms, unsigned max_exp) {
    Polynomial p(n);
    for (std::size_t t = 0; t < terms; ++t) p.add_term(monomial(n, max_exp), nonzero_rational());
    return p;
  }
  // 1 + (terms of positive degree).
  Polynomial unit(std::size_t n, std::size_t terms, unsigned max_exp) {
    Polynomial p = polynomial(n, terms, max_exp);
    p.add_term(Monomial(n, 0), -p.constant_term() + nonzero_rational());
    return p;
  }
  std::vector<Rational> point(std::size_t n) {
    std::vector<Rational> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(rational(7, 4));
    return x;
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_() % i]);
  }

 private:
  std::mt19937_64 rng_;
};

inline Rational eval(const Polynomial& p, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (unsigned e = 0; e < m[k]; ++e) t *= x[k];
    total += t;
  }
  return total;
}

// Leibniz expansion: Σ_π sgn(π) Π a[i][π(i)].
inline Polynomial leibniz_det(const std::vector<std::vector<Polynomial>>& a, std::size_t nvars) {
  std::size_t n = a.size();
  Polynomial det(nvars);
  if (n == 0) return Polynomial::constant(nvars, 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Polynomial t = Polynomial::constant(nvars, sign);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t = t * a[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, n)), true);
  if (k > n) return out;
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Log Jacobian built directly from the definition, independent of log_jacobian().
inline std::vector<std::vector<Polynomial>> oracle_log_jacobian(const MorphismChart& m) {
  std::size_t n = m.chart.dim();
  std::vector<std::vector<Polynomial>> a;
  for (const auto& f : m.components) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial e(n);
      for (const auto& [mono, c] : f.terms()) {
        if (mono[j] == 0) continue;
        Monomial d = mono;
        if (!m.chart.exceptional[j]) d[j] -= 1;
        e.add_term(d, c * Rational(mono[j]));
      }
      row.push_back(e);
    }
    a.push_back(row);
  }
  return a;
}

// All nonzero size-s minors via Leibniz.
inline std::vector<Polynomial> oracle_minors(const MorphismChart& m, std::size_t s) {
  auto a = oracle_log_jacobian(m);
  std::size_t n = m.chart.dim();
  std::vector<Polynomial> out;
  if (s == 0) return {Polynomial::constant(n, 1)};
  for (const auto& rows : subsets(a.size(), s))
    for (const auto& cols : subsets(n, s)) {
      std::vector<std::vector<Polynomial>> sub;
      for (auto r : rows) {
        std::vector<Polynomial> line;
        for (auto c : cols) line.push_back(a[r][c]);
        sub.push_back(line);
      }
      Polynomial d = leibniz_det(sub, n);
      if (!d.is_zero()) out.push_back(d);
    }
  return out;
}

// Staircase spanned by the generators that are (monomial)·(unit); nullopt when undecided.
// Generators that are not of that shape must lie term-wise in the staircase of the others.
inline std::optional<std::vector<Monomial>> oracle_staircase(const std::vector<Polynomial>& gens) {
  std::vector<Monomial> mons;
  std::vector<const Polynomial*> rest;
  for (const auto& g : gens) {
    Monomial gm = g.gcd_monomial();
    if (monomial_divide(g, gm).quotient.constant_term() == 0)
      rest.push_back(&g);
    else
      mons.push_back(gm);
  }
  for (const auto* g : rest)
    for (const auto& [t, c] : g->terms())
      if (std::none_of(mons.begin(), mons.end(), [&](const Monomial& m) { return divides(m, t); })) return std::nullopt;
  std::vector<Monomial> minimal;
  for (const auto& a : mons) {
    bool redundant = false;
    for (const auto& b : mons)
      if (b != a && divides(b, a)) redundant = true;
    if (!redundant && std::find(minimal.begin(), minimal.end(), a) == minimal.end()) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

// Exponent of the pullback of x^a along the chart with chart variable w of a coordinate center.
inline Monomial oracle_pull(const Monomial& a, const std::vector<std::size_t>& center, std::size_t w) {
  Monomial b = a;
  for (auto c : center)
    if (c != w) b[w] += a[c];
  return b;
}

// Transform law on one blowup, all children, through Leibniz minors and exponent pullback:
// F_0 picks up x_w^l with l the number of free center coordinates; for combinatorial centers
// every F_k is compared. `decided` is false when some side is not a staircase.
struct TransformOutcome {
  bool decided = true;
  bool holds = true;
  std::string detail;
};

inline TransformOutcome oracle_transform_law(const MorphismChart& m, const BlowupCenter& center) {
  TransformOutcome out;
  std::size_t n = m.chart.dim();
  unsigned l = 0;
  for (auto c : center.coordinates)
    if (!m.chart.exceptional[c]) ++l;
  BlowupStep step = blowup(m.chart, center);
  unsigned kmax = l == 0 ? static_cast<unsigned>(n) - 1 : 0;
  for (std::size_t child = 0; child < step.children.size(); ++child) {
    MorphismChart pulled = pullback_morphism(m, step, child);
    std::size_t w = step.children[child].chart_variable;
    for (unsigned k = 0; k <= kmax; ++k) {
      auto before = oracle_staircase(oracle_minors(m, n - k));
      auto after = oracle_staircase(oracle_minors(pulled, n - k));
      if (!before || !after) {
        out.decided = false;
        return out;
      }
      std::vector<Monomial> expected;
      for (const auto& a : *before) {
        Monomial b = oracle_pull(a, center.coordinates, w);
        if (k == 0) b[w] += l;
        expected.push_back(b);
      }
      if (MonomialIdeal::from_generators(n, expected) != MonomialIdeal::from_generators(n, *after)) {
        out.holds = false;
        out.detail = "child " + std::to_string(child) + " k " + std::to_string(k);
      }
    }
  }
  return out;
}

// σ_1 = u^α, σ_i = u^δ T_i with random T_i vanishing at the origin.
inline MorphismChart weierstrass_fixture(Gen& g, bool two_point) {
  std::vector<bool> exc{true, two_point, false};
  Monomial alpha{static_cast<unsigned>(g.integer(1, 3)), two_point ? static_cast<unsigned>(g.integer(0, 2)) : 0u, 0};
  Monomial delta = monomial_product(alpha, {static_cast<unsigned>(g.integer(1, 2)), two_point ? 1u : 0u, 0});
  MorphismChart m{Chart{{"u", "v", "w"}, exc, 16}, {Polynomial::term(alpha)}, kInfinity};
  for (int i = 0; i < 2; ++i) {
    Polynomial t = g.polynomial(3, static_cast<std::size_t>(g.integer(1, 3)), 3);
    t.add_term(Monomial(3, 0), -t.constant_term());
    if (t.is_zero()) t = Polynomial::variable(3, 0);
    m.components.push_back(t.times_monomial(delta));
  }
  return m;
}

// σ = (u^α, u^{α+(1,1)} p_2, u^{α+(1,1)} p_3) on (u1, u2, v) with u1, u2 exceptional.
inline MorphismChart two_point_fixture(Gen& g) {
  MorphismChart m{Chart{{"u1", "u2", "v"}, {true, true, false}, 16}, {}, kInfinity};
  Monomial alpha{static_cast<unsigned>(g.integer(1, 3)), static_cast<unsigned>(g.integer(0, 2)), 0};
  m.components.push_back(Polynomial::term(alpha));
  for (int i = 0; i < 2; ++i) {
    Polynomial p = g.polynomial(3, 3, 3);
    p.add_term(Monomial(3, 0), -p.constant_term());
    m.components.push_back(p.times_monomial(monomial_product(alpha, {1, 1, 0})));
  }
  return m;
}

// A morphism already in HP shape: components u^{α_1}·unit, …, u^{α_s}·unit followed by
// u^{β_j}·(v_j + c u^k), with the exponents forming a componentwise chain and the α's
// independent. `exponents` is the construction order.
struct HPFixture {
  MorphismChart morphism;
  std::vector<Monomial> exponents;
};

// The chart truncation degree is the largest component degree plus `margin`.
inline HPFixture hp_fixture(Gen& g, unsigned margin = 2) {
  std::size_t n = static_cast<std::size_t>(g.integer(2, 3));
  std::size_t s = n == 3 ? static_cast<std::size_t>(g.integer(1, 2)) : 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i < s ? "u" + std::to_string(i + 1) : "v" + std::to_string(i - s + 1));
  std::vector<bool> exc(n, false);
  std::fill(exc.begin(), exc.begin() + static_cast<long>(s), true);

  HPFixture f;
  f.morphism = MorphismChart{Chart{names, exc, 0}, {}, kInfinity};
  auto bump = [&](const Monomial& from, std::optional<std::size_t> at_least) {
    Monomial step(n, 0);
    for (std::size_t h = 0; h < s; ++h) step[h] = static_cast<unsigned>(g.integer(0, 2));
    if (at_least) step[*at_least] += 1 + static_cast<unsigned>(g.integer(0, 1));
    return monomial_product(from, step);
  };
  Monomial cur(n, 0);
  for (std::size_t i = 0; i < s; ++i) {
    cur = bump(cur, i);
    f.exponents.push_back(cur);
  }
  if (s == 2 && f.exponents[0][0] * f.exponents[1][1] == f.exponents[0][1] * f.exponents[1][0]) f.exponents[1][1] += 1;
  for (const auto& a : f.exponents) {
    Polynomial unit = Polynomial::constant(n, 1);
    if (g.coin()) unit.add_term(unit_monomial(n, static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1))), g.nonzero_rational());
    f.morphism.components.push_back(Polynomial::term(a) * unit);
  }
  Monomial b = f.exponents.back();
  for (std::size_t j = s; j < n; ++j) {
    b = bump(b, std::nullopt);
    Polynomial p = Polynomial::variable(n, j);
    if (g.coin()) p.add_term(unit_monomial(n, 0, static_cast<unsigned>(g.integer(1, 2))), g.nonzero_rational());
    f.morphism.components.push_back(p.times_monomial(b));
    f.exponents.push_back(b);
  }
  for (const auto& c : f.morphism.components) f.morphism.chart.truncation_degree = std::max(f.morphism.chart.truncation_degree, c.degree() + margin);
  return f;
}

// σ = (u^α, u^δ T_2, u^δ T_3) in prepared normal form at the origin.
//   generic 1-point:     T_2 = v^d + u^b w (+ u^c v when d = 3), T_3 = u^r v
//   non-generic 1-point: T_2 = v^3 + u^c v w + u^b w with b ≤ c, T_3 = u^r v
//   2-point (u1, u2, v): T_2 = v^d + u^β, T_3 = u^γ v, δ + β independent of α
struct PreparedFixture {
  MorphismChart morphism;
  unsigned d = 0;
};

inline PreparedFixture prepared_fixture(Gen& g, int kind) {
  auto e = [&](long lo, long hi) { return static_cast<unsigned>(g.integer(lo, hi)); };
  PreparedFixture f;
  if (kind < 2) {
    std::vector<std::string> names{"u", "v", "w"};
    unsigned a = e(1, 3), delta = a + e(1, 2), b = e(1, 2), r = e(1, 2);
    f.d = kind == 0 ? e(2, 3) : 3;
    std::string t2 = "v^" + std::to_string(f.d) + " + u^" + std::to_string(b) + "*w";
    if (kind == 0 && f.d == 3 && g.coin()) t2 += " + u^" + std::to_string(e(1, 3)) + "*v";
    if (kind == 1) t2 += " + u^" + std::to_string(b + e(0, 1)) + "*v*w";
    std::string ud = "u^" + std::to_string(delta);
    f.morphism = morphism(names, {true, false, false},
                          {"u^" + std::to_string(a), ud + "*(" + t2 + ")", ud + "*u^" + std::to_string(r) + "*v"});
    return f;
  }
  std::vector<std::string> names{"u1", "u2", "v"};
  auto mono = [](unsigned p, unsigned q) { return "u1^" + std::to_string(p) + "*u2^" + std::to_string(q); };
  // Small exponents keep the principalization shallow; deep charts make probe expansion slow.
  unsigned a1 = e(1, 2), a2 = e(1, 2), d1 = a1 + e(0, 1), d2 = a2 + 1, b1 = e(0, 1), b2 = e(1, 2);
  if (a1 * (d2 + b2) == a2 * (d1 + b1)) b1 += 1;
  f.d = e(2, 3);
  f.morphism = morphism(names, {true, true, false},
                        {mono(a1, a2), mono(d1, d2) + "*(v^" + std::to_string(f.d) + " + " + mono(b1, b2) + ")",
                         mono(d1, d2) + "*" + mono(e(0, 1), 1) + "*v"});
  return f;
}

}  // namespace testing

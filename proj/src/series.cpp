#include "logres/series.hpp"

#include <algorithm>

#include "logres/linalg.hpp"

namespace logres {

namespace {

// Composite with optional truncation; powers of each image are cached.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images, unsigned max_degree) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitution arity mismatch");
  std::size_t m = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != m) throw std::invalid_argument("substitution image arity mismatch");
  Polynomial result(m);
  if (p.is_zero()) return result;
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(m, 1));
    while (cache.size() <= e) cache.push_back(multiply_truncated(cache.back(), images[i], max_degree));
    return cache[e];
  };
  for (const auto& [mono, c] : p.terms()) {
    Polynomial t = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < mono.size() && !t.is_zero(); ++i)
      if (mono[i] > 0) t = multiply_truncated(t, power_of(i, mono[i]), max_degree);
    result += t;
  }
  return result;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  return compose(p, images, kInfinity);
}

TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<Polynomial>& images, unsigned max_degree) {
  bool local = std::all_of(images.begin(), images.end(), [](const Polynomial& q) { return q.constant_term() == 0; });
  if (!local && s.truncation_degree != kInfinity)
    throw std::invalid_argument("cannot translate a truncated series");
  unsigned known = std::min(max_degree, s.truncation_degree);
  return {compose(s.poly, images, known), known};
}

Polynomial substitute_within(const Polynomial& p, const std::vector<Polynomial>& images, unsigned bound) {
  Polynomial r = compose(p, images, kInfinity);
  if (!r.is_zero() && r.degree() > bound)
    throw TruncationOverflow("composite has degree " + std::to_string(r.degree()) + " > " + std::to_string(bound));
  return r;
}

Polynomial series_inverse(const Polynomial& s, unsigned n) {
  return unit_fractional_power(s, Rational(-1), n);
}

Polynomial unit_fractional_power(const Polynomial& s, const Rational& q, unsigned n) {
  Rational c = s.constant_term();
  if (c == 0) throw std::domain_error("fractional power of a non-unit");
  Rational cq = rational_power(c, q);
  // s = c(1 + h), s^q = c^q Σ binom(q, k) h^k with ord h ≥ 1.
  Polynomial h = s * Rational(1 / c);
  h.add_term(Monomial(s.nvars(), 0), -1);
  h = h.truncated(n);
  Polynomial result = Polynomial::constant(s.nvars(), 1);
  Polynomial hk = Polynomial::constant(s.nvars(), 1);
  Rational binom = 1;
  for (unsigned k = 1; k <= n; ++k) {
    hk = multiply_truncated(hk, h, n);
    if (hk.is_zero()) break;
    binom *= (q - (k - 1));
    binom /= k;
    if (binom == 0) break;
    result += hk * binom;
  }
  return result * cq;
}

TruncatedSeries unit_fractional_power(const TruncatedSeries& s, const Rational& q) {
  if (s.truncation_degree == kInfinity) {
    // Exact only for non-negative integer powers.
    if (q.get_den() == 1 && q >= 0) return {s.poly.pow(static_cast<unsigned>(q.get_num().get_ui())), kInfinity};
    throw std::invalid_argument("fractional power of an exact polynomial needs a truncation degree");
  }
  return {unit_fractional_power(s.poly, q, s.truncation_degree), s.truncation_degree};
}

std::vector<Polynomial> invert_map(const std::vector<Polynomial>& forward, unsigned n) {
  std::size_t k = forward.size();
  RMatrix lin(k, RVector(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (forward[i].nvars() != k) throw std::invalid_argument("map must be square");
    if (forward[i].constant_term() != 0) throw std::invalid_argument("map must fix the origin");
    for (std::size_t j = 0; j < k; ++j) lin[i][j] = forward[i].coefficient(unit_monomial(k, j));
  }
  RMatrix inv = inverse(lin);
  // Nonlinear parts H with F = L x + H(x).
  std::vector<Polynomial> nonlinear(k, Polynomial(k));
  for (std::size_t i = 0; i < k; ++i) {
    nonlinear[i] = forward[i];
    for (std::size_t j = 0; j < k; ++j) nonlinear[i].add_term(unit_monomial(k, j), -lin[i][j]);
  }
  // x = L^{-1}(y - H(x)); each pass fixes one more degree.
  std::vector<Polynomial> x(k, Polynomial(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) x[i].add_term(unit_monomial(k, j), inv[i][j]);
  for (unsigned pass = 1; pass < n; ++pass) {
    std::vector<Polynomial> hx(k, Polynomial(k));
    for (std::size_t i = 0; i < k; ++i) hx[i] = compose(nonlinear[i], x, n);
    std::vector<Polynomial> next(k, Polynomial(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (inv[i][j] == 0) continue;
        Polynomial yj = Polynomial::variable(k, j) - hx[j];
        next[i] += yj * inv[i][j];
      }
    }
    if (next == x) break;
    x = std::move(next);
  }
  return x;
}

}  // namespace logres

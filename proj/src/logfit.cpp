#include "logres/logfit.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "logres/linalg.hpp"
#include "logres/monomial.hpp"

namespace logres {

PolyMatrix log_jacobian(const MorphismChart& m) {
  std::size_t n = m.chart.dim();
  PolyMatrix jac;
  for (const auto& s : m.components) {
    if (s.nvars() != n) throw std::invalid_argument("component arity differs from chart dimension");
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(m.chart.exceptional[j] ? s.euler_derivative(j) : s.derivative(j));
    jac.push_back(std::move(row));
  }
  return jac;
}

namespace {

class MinorEngine {
 public:
  explicit MinorEngine(const PolyMatrix& a) : a_(a) {}

  // Rows and columns given as bitmasks of equal popcount.
  const Polynomial& det(std::uint64_t rows, std::uint64_t cols) {
    std::uint64_t key = (rows << 32) | cols;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::size_t n = a_.empty() ? 0 : a_.front().size();
    Polynomial result(a_.empty() ? 0 : a_.front().front().nvars());
    if (rows == 0) {
      result = Polynomial::constant(result.nvars(), 1);
    } else {
      auto r = static_cast<std::size_t>(std::countr_zero(rows));
      std::uint64_t rest = rows & (rows - 1);
      int sign = 1;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(cols >> c & 1u)) continue;
        const Polynomial& entry = a_[r][c];
        if (!entry.is_zero()) {
          const Polynomial& sub = det(rest, cols & ~(std::uint64_t(1) << c));
          if (!sub.is_zero()) {
            Polynomial t = entry * sub;
            if (sign > 0)
              result += t;
            else
              result -= t;
          }
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const PolyMatrix& a_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

void subsets(std::size_t n, std::size_t k, std::size_t start, std::uint64_t mask, std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) subsets(n, k - 1, i + 1, mask | (std::uint64_t(1) << i), out);
}

// Masks in lexicographic order of their index lists.
std::vector<std::uint64_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  subsets(n, k, 0, 0, out);
  return out;
}

}  // namespace

std::vector<Polynomial> nonzero_minors(const PolyMatrix& a, std::size_t size) {
  std::vector<Polynomial> out;
  if (a.empty()) return out;
  std::size_t rows = a.size(), cols = a.front().size();
  if (rows > 32 || cols > 32) throw std::invalid_argument("matrix too large for minor enumeration");
  if (size == 0 || size > rows || size > cols) return out;
  MinorEngine engine(a);
  for (auto r : subsets(rows, size))
    for (auto c : subsets(cols, size)) {
      const Polynomial& d = engine.det(r, c);
      if (!d.is_zero()) out.push_back(d);
    }
  return out;
}

Polynomial determinant(const PolyMatrix& a) {
  if (a.empty() || a.size() != a.front().size()) throw std::invalid_argument("determinant of a non-square matrix");
  MinorEngine engine(a);
  std::uint64_t all = (std::uint64_t(1) << a.size()) - 1;
  return engine.det(all, all);
}

FittingIdeal fitting_ideal(const MorphismChart& m, unsigned k) {
  std::size_t n = m.chart.dim();
  if (k >= n) throw std::out_of_range("Fitting index must satisfy 0 <= k <= n-1");
  return {k, nonzero_minors(log_jacobian(m), n - k)};
}

std::size_t log_rank_at_origin(const MorphismChart& m) {
  RMatrix c;
  for (const auto& row : log_jacobian(m)) {
    RVector r;
    for (const auto& e : row) r.push_back(e.constant_term());
    c.push_back(std::move(r));
  }
  return c.empty() ? 0 : qlinear_rank(c);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecidable: return "undecidable";
  }
  return "?";
}

std::vector<TransformCheck> verify_fitting_transform(const MorphismChart& m, const BlowupStep& step) {
  std::vector<TransformCheck> out;
  std::size_t n = m.chart.dim();
  bool combinatorial = is_combinatorial(m.chart, step.center);
  auto l = static_cast<unsigned>(free_codimension(m.chart, step.center));
  for (std::size_t c = 0; c < step.children.size(); ++c) {
    MorphismChart pulled = pullback_morphism(m, step, c);
    const auto& child = step.children[c];
    for (unsigned k = 0; k < n; ++k) {
      if (k > 0 && !combinatorial) continue;
      TransformCheck check{c, k, Verdict::undecidable, "", ""};
      auto before = monomialize(fitting_ideal(m, k).generators, n);
      auto after = monomialize(fitting_ideal(pulled, k).generators, n);
      if (before.decided && after.decided) {
        MonomialIdeal expected = pullback(before.ideal, step.center, child.chart_variable);
        if (k == 0) expected = expected.times(unit_monomial(n, child.chart_variable, l));
        check.expected = expected.to_string(child.chart.names);
        check.actual = after.ideal.to_string(child.chart.names);
        check.verdict = expected == after.ideal ? Verdict::pass : Verdict::fail;
      }
      out.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace logres

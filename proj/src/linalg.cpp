#include "logres/linalg.hpp"

#include <stdexcept>

namespace logres {

RVector to_rvector(const std::vector<unsigned>& v) {
  RVector r;
  r.reserve(v.size());
  for (unsigned x : v) r.emplace_back(x);
  return r;
}

Rational dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> row_reduce(RMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m.front().size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t qlinear_rank(const std::vector<RVector>& vectors) {
  RMatrix m(vectors);
  return row_reduce(m).size();
}

std::optional<RVector> solve_in_span(const std::vector<RVector>& basis, const RVector& target) {
  std::size_t k = basis.size(), n = target.size();
  // Augmented system with the basis vectors as columns.
  RMatrix m(n, RVector(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j].at(i);
    m[i][k] = target[i];
  }
  auto pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RVector x(k, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][k];
  return x;
}

bool in_qlinear_span(const std::vector<RVector>& basis, const RVector& target) {
  return solve_in_span(basis, target).has_value();
}

std::optional<RVector> least_norm_solution(const std::vector<RVector>& rows, const RVector& rhs, std::size_t ncols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("dimension mismatch");
  // ε = Aᵀy with (AAᵀ) y = rhs; any solution y yields the same ε.
  std::size_t k = rows.size();
  RMatrix gram(k, RVector(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("dimension mismatch");
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(rows[i], rows[j]);
    gram[i][k] = rhs[i];
  }
  auto pivots = row_reduce(gram);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RVector y(k, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = gram[r][k];
  RVector eps(ncols, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ncols; ++j) eps[j] += y[i] * rows[i][j];
  for (std::size_t i = 0; i < k; ++i)
    if (dot(rows[i], eps) != rhs[i]) return std::nullopt;
  return eps;
}

RMatrix inverse(const RMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return {};
  RMatrix m(n, RVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("matrix not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  auto pivots = row_reduce(m);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  RMatrix inv(n, RVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace logres

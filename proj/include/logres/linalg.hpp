#pragma once

#include <optional>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

RVector to_rvector(const std::vector<unsigned>& v);

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RMatrix& m);

std::size_t qlinear_rank(const std::vector<RVector>& vectors);
bool in_qlinear_span(const std::vector<RVector>& basis, const RVector& target);

// Some x with Σ x_i basis_i = target, or nullopt.
std::optional<RVector> solve_in_span(const std::vector<RVector>& basis, const RVector& target);

// Minimum Euclidean norm ε with ⟨rows_i, ε⟩ = rhs_i; nullopt if inconsistent.
std::optional<RVector> least_norm_solution(const std::vector<RVector>& rows, const RVector& rhs, std::size_t ncols);

// Throws std::domain_error if singular.
RMatrix inverse(const RMatrix& m);

Rational dot(const RVector& a, const RVector& b);

}  // namespace logres

#pragma once

#include <string>
#include <vector>

#include "logres/chart.hpp"

namespace logres {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Entry (i, j) is u_j ∂σ_i/∂u_j for exceptional u_j and ∂σ_i/∂v_j otherwise.
PolyMatrix log_jacobian(const MorphismChart& m);

// Nonzero size×size minors, enumerated by row subset then column subset (lexicographic).
std::vector<Polynomial> nonzero_minors(const PolyMatrix& a, std::size_t size);
Polynomial determinant(const PolyMatrix& a);

struct FittingIdeal {
  unsigned k = 0;
  std::vector<Polynomial> generators;
};

FittingIdeal fitting_ideal(const MorphismChart& m, unsigned k);
std::size_t log_rank_at_origin(const MorphismChart& m);

enum class Verdict { pass, fail, undecidable };
std::string to_string(Verdict v);

struct TransformCheck {
  std::size_t child = 0;
  unsigned k = 0;
  Verdict verdict = Verdict::undecidable;
  std::string expected;  // pulled-back side, as a staircase
  std::string actual;    // Fitting ideal of the composite, as a staircase
};

// F_0(σ∘β) = exc^l · β*F_0(σ) on every child, and F_k(σ∘β) = β*F_k(σ) for all k when β is combinatorial.
std::vector<TransformCheck> verify_fitting_transform(const MorphismChart& m, const BlowupStep& step);

}  // namespace logres

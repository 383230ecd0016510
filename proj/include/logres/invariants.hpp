#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logres/logfit.hpp"
#include "logres/monomial.hpp"

namespace logres {

// Order, inside the stratum of the origin, of the residual ideal of F_k. kInfinity when the
// residual vanishes on the stratum.
unsigned rho(const MorphismChart& m, unsigned k);
// ρ_{n−2}; the invariant the resolution loop drives to zero. Charts of dimension < 2 give 0.
unsigned rho(const MorphismChart& m);

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// σ_1 = u^α, σ_i = g_i + u^δ T_i (i ≥ 2), optionally with T_i expanded in a distinguished free
// variable v: T_i = T̃_i v^d + Σ_{j<d} a_ij v^j.
struct WeierstrassData {
  MorphismChart morphism;             // components in the normalized coordinates and target order
  std::vector<std::size_t> order;     // order[i] = index of the input component placed at position i
  std::vector<Rational> scale;        // normalized component i = scale[i]·(input component − constant)
  std::vector<Rational> constants;    // constant terms removed, per normalized position
  std::vector<Polynomial> old_in_new; // input coordinates as series in the normalized coordinates
  std::vector<std::string> notes;     // coordinate changes performed, in order

  Monomial alpha;                     // on the whole chart, zero off the exceptional coordinates
  Monomial delta;
  std::vector<Polynomial> g;          // index i−1 for σ_i, i ≥ 2
  std::vector<Polynomial> T;
  unsigned d = kInfinity;

  bool weierstrass = false;           // true when the v-expansion below is filled in
  std::size_t v = 0;
  std::vector<Polynomial> T_tilde;
  std::vector<std::vector<Polynomial>> a;  // a[i−1][j], j < d

  std::size_t ncomponents() const { return morphism.components.size(); }
  const Polynomial& coefficient(std::size_t i, std::size_t j) const { return a.at(i - 1).at(j); }
};

// min |γ| over pure free-variable monomials v^γ occurring in some T_i.
unsigned d_invariant(const WeierstrassData& w);

// Splits σ into the σ_1 = u^α, g_i + u^δ T_i shape. When 2 ≤ d < ∞ also produces the
// Weierstrass expansion with a_{2,d−1} = 0. Throws InvariantError when a precondition fails.
WeierstrassData to_weierstrass(const MorphismChart& m);

enum class PointKind { two_point, generic_one_point, nongeneric_one_point };
std::string to_string(PointKind k);

struct PreparedCoefficient {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial monomial;  // u^r (2-point) or u^r w^s (1-point)
};

struct PreparedData {
  WeierstrassData weierstrass;
  PointKind kind = PointKind::generic_one_point;
  std::vector<std::size_t> exceptional;  // u coordinates, in chart order
  std::size_t v = 0;
  std::optional<std::size_t> w;          // the remaining free coordinate at a 1-point
  std::vector<PreparedCoefficient> coefficients;  // nonzero a_ij, 1 ≤ j ≤ d−1
  std::size_t i0 = 0;
  Monomial beta;                         // on the whole chart; u^β (times w at a 1-point) is a_{i0,0}
};

struct PreparedCheck {
  bool prepared = false;
  std::optional<PreparedData> data;
  std::string reason;
};

PreparedCheck check_prepared(const WeierstrassData& w);

struct HGIdeals {
  std::vector<Polynomial> H;  // H_i for i = 2..N (zero entries kept)
  std::vector<Polynomial> G;
};

// H_i is the coefficient of d(u^α) ∧ d(u^δ a_{i0}) against du_1/u_1 ∧ du_2/u_2 (2-point) or
// du/u ∧ dw (1-point); G = (Π_{(i,j)∈J} a_ij)·H.
HGIdeals H_G_ideals(const WeierstrassData& w);

// Blowup rounds needed to make G principal with centers in the divisor coordinates; nullopt when
// G is not monomial-times-unit.
std::optional<unsigned> iota(const std::vector<Polynomial>& G, const std::vector<bool>& divisor);

struct JIdealData {
  unsigned mu = 0;
  std::vector<std::pair<unsigned, unsigned>> alpha_k;  // (α_ik, k) pairs with P_ik ≠ 0
  MonomialIdeal ideal;
};

// m^d + Σ u^{α_ik} m^{k−α_ik} at a 1-point with μ = ord T < d.
JIdealData J_ideal(const WeierstrassData& w);

struct DeclaredData {
  std::vector<bool> divisor;  // D as a coordinate mask
  MonomialIdeal ideal;
};

DeclaredData declared_ideal(const PreparedData& p);

}  // namespace logres

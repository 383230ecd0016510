#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logres/chart.hpp"
#include "logres/polynomial.hpp"

namespace logres {

// Coefficients against du_i/u_i (exceptional i) and dv_j (free j), indexed by chart variable.
struct LogForm {
  std::vector<Polynomial> coefficients;
};

LogForm differential(const Polynomial& f, const Chart& chart);

enum class Membership { member, non_member, inconclusive };
std::string to_string(Membership m);

struct MembershipResult {
  Membership verdict = Membership::inconclusive;
  std::vector<Polynomial> combination;  // c_i with Σ c_i d(x^{e_i}) = form through verified_degree
  unsigned verified_degree = kInfinity;
  std::optional<Monomial> obstruction;  // lowest monomial whose coefficient vector is out of reach
  std::string reason;
};

// Membership of form in the module generated by the differential monomials d(x^{e_i}).
// The form is known through total degree `precision` (kInfinity = exact). Coefficients of x^m in
// the all-logarithmic basis must lie in span{e_i : e_i ≤ m}; each monomial is an independent
// linear system, so the first failure is a definite obstruction.
MembershipResult membership_in_module(const LogForm& form, const std::vector<Monomial>& generators,
                                      const Chart& chart, unsigned precision = kInfinity);

// Quotient/remainder split of σ by u^δ. When σ contains c·u^δ with δ dependent on the earlier
// exponents, that corner term moves back to g: g = R + c·u^δ, S = Q − c.
struct Resplit {
  Polynomial g;
  Polynomial S;
  bool corner = false;
};
Resplit remainder_split(const Polynomial& sigma, const Monomial& delta, bool delta_dependent);

struct HPGenerator {
  bool is_alpha = true;
  Monomial exponent;                    // u-exponent on the whole chart (free entries zero)
  std::optional<std::size_t> variable;  // the free coordinate v_j of a d(u^β v_j) generator
  std::size_t component = 0;            // input component that produced it
};

struct HPCertificate {
  std::vector<HPGenerator> generators;  // merged order
  unsigned verified_degree = kInfinity;
  unsigned coordinate_precision = kInfinity;
  std::vector<std::string> coordinates;  // changed coordinates as functions of the chart coordinates
  bool betas_follow_alphas = false;      // each β_j dependent on the α_i preceding it
  std::vector<Monomial> full_exponents() const;
};

struct HPState {
  MorphismChart morphism;                // components in the current coordinates
  std::vector<Polynomial> new_in_old;    // current coordinates as functions of the chart coordinates
  std::vector<HPGenerator> generators;
  std::vector<bool> used;
  std::vector<Rational> scale;           // normalization applied to each component
  unsigned coordinate_precision = kInfinity;  // new_in_old is known through this degree

  static HPState start(const MorphismChart& m);
};

struct HPStepResult {
  bool done = false;  // every remaining component is dependent; no step taken
  bool ok = true;
  std::string failure;
};

// One extraction step: picks the component with the smallest non-dependent exponent and turns it
// into d(u^α) (unit case, via a fractional-power change of the u's) or d(u^β v_q) (v̄_q := S).
HPStepResult hp_extract_step(HPState& state);

struct HPResult {
  std::optional<HPCertificate> certificate;
  std::string failure;
};

HPResult hp_verify(const MorphismChart& m);

// γ_m = sum of the first m exponents of the merged order.
std::vector<Monomial> hp_fitting_exponents(const HPCertificate& cert);

struct FittingExponentCheck {
  unsigned m = 0;
  Monomial gamma;
  bool matches = false;
  std::string actual;
};

// Compares F_{n−m}(σ) with (u^{γ_m}) in the local ring, m = 1..number of generators.
std::vector<FittingExponentCheck> check_fitting_exponents(const MorphismChart& m, const HPCertificate& cert);

}  // namespace logres

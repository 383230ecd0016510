#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "logres/rational.hpp"

namespace logres {

// Exponent vector, one entry per chart variable.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_product(const Monomial& a, const Monomial& b);
// Requires divides(b, a).
Monomial monomial_quotient(const Monomial& a, const Monomial& b);
Monomial monomial_min(const Monomial& a, const Monomial& b);
Monomial unit_monomial(std::size_t n, std::size_t i, unsigned power = 1);

// Descending graded lex with the variable order as given; this is the print order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool is_unit_at_origin() const { return constant_term() != 0; }

  // Adds c·x^m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  // Highest total degree (0 for the zero polynomial).
  unsigned degree() const;
  // Lowest total degree; kInfinity for zero.
  unsigned order() const;
  // Componentwise minimum exponent over all terms (zeros for the zero polynomial).
  Monomial gcd_monomial() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Variables that occur in some term.
  std::vector<bool> support_variables() const;

  Polynomial truncated(unsigned max_degree) const;
  Polynomial derivative(std::size_t i) const;
  // x_i · ∂/∂x_i
  Polynomial euler_derivative(std::size_t i) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  // Sets the listed variables to zero.
  Polynomial restrict_to_zero(const std::vector<bool>& vanish) const;
  // Part of total degree exactly k.
  Polynomial homogeneous_part(unsigned k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  std::size_t nvars_;
  Terms terms_;
};

// Product with all terms of degree > max_degree discarded.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, unsigned max_degree);

// Term-wise division: p = m·quotient + remainder, remainder holds the terms not divisible by m.
struct MonomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};
MonomialDivision monomial_divide(const Polynomial& p, const Monomial& m);

unsigned order_at_origin(const Polynomial& p);
bool is_unit_at_origin(const Polynomial& p);

std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

// Canonical total order on polynomials (used to sort generator lists).
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace logres

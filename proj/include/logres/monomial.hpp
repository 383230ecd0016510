#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "logres/chart.hpp"

namespace logres {

struct MonomialIdeal {
  std::size_t nvars = 0;
  std::vector<Monomial> generators;  // minimal, sorted lexicographically; empty = zero ideal

  static MonomialIdeal from_generators(std::size_t nvars, std::vector<Monomial> gens);

  bool is_zero() const { return generators.empty(); }
  bool is_principal() const { return generators.size() == 1; }
  bool contains(const Monomial& m) const;
  // Term-wise membership, exact for monomial ideals.
  bool contains(const Polynomial& p) const;
  MonomialIdeal times(const Monomial& m) const;
  bool operator==(const MonomialIdeal& o) const { return nvars == o.nvars && generators == o.generators; }
  std::string to_string(const std::vector<std::string>& names) const;
};

struct MonomializeResult {
  bool decided = false;
  MonomialIdeal ideal;
  struct Entry {
    Monomial monomial;  // gcd monomial of the generator
    Polynomial unit;    // cofactor; zero polynomial when the generator is absorbed by the staircase
    bool absorbed = false;
  };
  std::vector<Entry> entries;
  std::string reason;
};

// Generators that are monomial × unit form a staircase; the remaining ones must lie in it
// term-wise. Anything else is undecidable.
MonomializeResult monomialize(const std::vector<Polynomial>& generators, std::size_t nvars);

struct PrincipalCheck {
  bool principal = false;
  Monomial monomial;  // largest divisor monomial dividing every generator
  std::string witness;
};

// Decides whether the ideal generated at the origin is (x^γ) with x^γ supported on divisor coordinates.
PrincipalCheck principal_monomial(const std::vector<Polynomial>& generators, const std::vector<bool>& divisor,
                                  const std::vector<std::string>& names);

struct ResidualFactor {
  Monomial monomial;
  std::vector<Polynomial> residual;
};

ResidualFactor residual_factor(const std::vector<Polynomial>& generators, const std::vector<bool>& divisor);
ResidualFactor residual_factor(const MonomialIdeal& ideal, const std::vector<bool>& divisor);

MonomialIdeal pullback(const MonomialIdeal& ideal, const BlowupCenter& center, std::size_t chart_variable);
MonomialIdeal weak_transform(const MonomialIdeal& ideal, const BlowupCenter& center, std::size_t chart_variable);

struct PrincipalizationNode {
  int parent = -1;
  BlowupCenter center;             // empty at leaves
  std::size_t chart_variable = 0;  // meaningful below the root
  MonomialIdeal ideal;             // total transform in this chart
  std::vector<std::size_t> children;
  unsigned depth = 0;
};

struct PrincipalizationTree {
  std::vector<PrincipalizationNode> nodes;

  std::size_t blowups() const;
  // Longest chain of blowups from the root.
  unsigned rounds() const;
  std::vector<std::size_t> leaves() const;
};

struct StepCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Codimension-2 blowups with centers in the allowed coordinates until every chart is principal.
// Generators keep a stable order; the first incomparable pair (a, b) is separated by blowing up
// {argmax (a−b), argmin (a−b)}.
PrincipalizationTree newton_principalize(const MonomialIdeal& ideal, const std::vector<bool>& allowed,
                                         unsigned step_cap = 64);

}  // namespace logres

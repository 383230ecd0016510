#pragma once

#include <stdexcept>
#include <vector>

#include "logres/polynomial.hpp"

namespace logres {

// Polynomial known modulo terms of total degree > truncation_degree.
// truncation_degree == kInfinity marks an exact polynomial.
struct TruncatedSeries {
  Polynomial poly;
  unsigned truncation_degree = kInfinity;
};

struct TruncationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact composite p(images).
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

// Composite truncated at max_degree. When every image has zero constant term the
// known precision of s is preserved; otherwise s must be exact.
TruncatedSeries substitute(const TruncatedSeries& s, const std::vector<Polynomial>& images, unsigned max_degree);

// Exact composite, throwing TruncationOverflow if its degree exceeds bound.
Polynomial substitute_within(const Polynomial& p, const std::vector<Polynomial>& images, unsigned bound);

// 1/s modulo degree > n; s must be a unit.
Polynomial series_inverse(const Polynomial& s, unsigned n);

// s^q modulo degree > n; s must be a unit whose constant term has a rational q-th power.
Polynomial unit_fractional_power(const Polynomial& s, const Rational& q, unsigned n);
TruncatedSeries unit_fractional_power(const TruncatedSeries& s, const Rational& q);

// Inverse of a map y = F(x) with invertible linear part and F(0) = 0, as x = G(y) modulo degree > n.
// Returns the images of the old variables in terms of the new ones.
std::vector<Polynomial> invert_map(const std::vector<Polynomial>& forward, unsigned n);

}  // namespace logres

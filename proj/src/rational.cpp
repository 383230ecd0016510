#include "logres/rational.hpp"

#include <stdexcept>

namespace logres {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string natural_or_infinity(unsigned value) {
  return value == kInfinity ? std::string("inf") : std::to_string(value);
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  q.canonicalize();
  return q;
}

namespace {

std::optional<Integer> integer_root(const Integer& x, unsigned k) {
  if (x < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_root(-x, k);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& x, unsigned k) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  auto n = integer_root(x.get_num(), k);
  auto d = integer_root(x.get_den(), k);
  if (!n || !d) return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

Rational rational_power(const Rational& x, const Rational& q) {
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!den.fits_uint_p() || !num.fits_slong_p()) throw std::domain_error("exponent too large");
  auto root = rational_root(x, static_cast<unsigned>(den.get_ui()));
  if (!root) throw std::domain_error("irrational power of " + to_string(x));
  long e = num.get_si();
  if (e < 0 && *root == 0) throw std::domain_error("negative power of zero");
  Rational base = e < 0 ? Rational(1 / *root) : *root;
  Rational result = 1;
  for (unsigned long i = 0, n = static_cast<unsigned long>(e < 0 ? -e : e); i < n; ++i) result *= base;
  return result;
}

}  // namespace logres

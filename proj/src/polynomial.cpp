#include "logres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace logres {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Monomial monomial_min(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Monomial unit_monomial(std::size_t n, std::size_t i, unsigned power) {
  Monomial m(n, 0);
  m[i] = power;
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  p.add_term(unit_monomial(nvars, index), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

unsigned Polynomial::order() const {
  return terms_.empty() ? kInfinity : total_degree(terms_.rbegin()->first);
}

Monomial Polynomial::gcd_monomial() const {
  if (terms_.empty()) return Monomial(nvars_, 0);
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) g = monomial_min(g, m);
  return g;
}

std::vector<bool> Polynomial::support_variables() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] > 0) used[i] = true;
  return used;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  if (max_degree == kInfinity) return *this;
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial e(m);
    --e[i];
    r.add_term(e, c * m[i]);
  }
  return r;
}

Polynomial Polynomial::euler_derivative(std::size_t i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m[i] > 0) r.terms_.emplace_hint(r.terms_.end(), m, c * m[i]);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(monomial_product(e, m), c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::restrict_to_zero(const std::vector<bool>& vanish) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < nvars_ && keep; ++i)
      if (vanish[i] && m[i] > 0) keep = false;
    if (keep) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(unsigned k) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == k) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return multiply_truncated(a, b, kInfinity);
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, unsigned max_degree) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial r(a.nvars());
  if (a.is_zero() || b.is_zero()) return r;
  // b in ascending degree, so the inner loop stops at the first product past max_degree.
  std::vector<std::tuple<const Monomial*, const Rational*, unsigned>> bd;
  bd.reserve(b.size());
  for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) bd.emplace_back(&it->first, &it->second, total_degree(it->first));
  Monomial e(a.nvars());
  Rational prod;
  for (const auto& [ma, ca] : a.terms()) {
    unsigned da = total_degree(ma);
    if (max_degree != kInfinity && da > max_degree) continue;
    for (const auto& [mb, cb, db] : bd) {
      if (max_degree != kInfinity && da + db > max_degree) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma[i] + (*mb)[i];
      prod = ca * *cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

MonomialDivision monomial_divide(const Polynomial& p, const Monomial& m) {
  MonomialDivision d{Polynomial(p.nvars()), Polynomial(p.nvars())};
  for (const auto& [e, c] : p.terms()) {
    if (divides(m, e))
      d.quotient.add_term(monomial_quotient(e, m), c);
    else
      d.remainder.add_term(e, c);
  }
  return d;
}

unsigned order_at_origin(const Polynomial& p) { return p.order(); }
bool is_unit_at_origin(const Polynomial& p) { return p.is_unit_at_origin(); }

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool constant = total_degree(m) == 0;
    if (constant) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += monomial_to_string(m, names);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + why + " in \"" +
                                std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc(names_.size());
    bool neg = eat('-');
    if (!neg) eat('+');
    Polynomial t = term();
    acc += neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (eat('^')) {
      Integer e = integer();
      if (!e.fits_uint_p()) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(integer());
      if (eat('/')) {
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        q /= Rational(den);
      }
      return Polynomial::constant(names_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == id) return Polynomial::variable(names_.size(), i);
      fail("unknown variable '" + std::string(id) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  GrlexGreater gt;
  auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
  // Compare from the lowest term up: lower leading order sorts first.
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return gt(ib->first, ia->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

}  // namespace logres

#include "novalg/novikov.hpp"

#include <cctype>
#include <sstream>

namespace novalg {

std::string to_string(Subring s) {
  switch (s) {
    case Subring::lambda0_unit: return "Lambda0_unit";
    case Subring::lambda_plus: return "Lambda_plus";
    case Subring::lambda0_nonunit_zero: return "Lambda0_nonunit_zero";
    case Subring::field_only: return "field_only";
  }
  return "?";
}

NovikovScalar NovikovScalar::constant(const Rational& c) {
  return monomial(c, Rational(0));
}

NovikovScalar NovikovScalar::monomial(const Rational& coeff, const Rational& exponent) {
  NovikovScalar a;
  if (coeff != 0) a.terms_[exponent] = coeff;
  a.normalize();
  return a;
}

void NovikovScalar::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool drop = it->second == 0;
    if (!drop && truncation_ && it->first >= *truncation_) drop = true;
    it = drop ? terms_.erase(it) : std::next(it);
  }
  long l = 1;
  for (const auto& [e, c] : terms_) l = lcm_long(l, denominator(e).get_si());
  if (truncation_) l = lcm_long(l, denominator(*truncation_).get_si());
  lattice_ = l;
}

std::optional<Rational> NovikovScalar::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Rational> NovikovScalar::cohomological_degree(const GradingContext& ctx) const {
  if (terms_.empty()) return Rational(0);
  std::optional<Rational> deg;
  for (const auto& [e, c] : terms_) {
    Rational d = ctx.t_degree() * e;
    if (!deg) {
      deg = d;
    } else if (*deg != d) {
      return std::nullopt;  // mixed
    }
  }
  return deg;
}

Subring NovikovScalar::classify_subring() const {
  auto v = valuation();
  if (!v) return Subring::lambda0_nonunit_zero;
  if (*v == 0) return Subring::lambda0_unit;
  if (*v > 0) return Subring::lambda_plus;
  return Subring::field_only;
}

NovikovScalar NovikovScalar::truncated(const Rational& order) const {
  NovikovScalar r = *this;
  if (!r.truncation_ || order < *r.truncation_) r.truncation_ = order;
  r.normalize();
  return r;
}

NovikovScalar NovikovScalar::without_truncation() const {
  NovikovScalar r = *this;
  r.truncation_.reset();
  r.normalize();
  return r;
}

NovikovScalar NovikovScalar::operator-() const {
  NovikovScalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b) {
  NovikovScalar r;
  r.terms_ = a.terms_;
  for (const auto& [e, c] : b.terms_) {
    auto [it, fresh] = r.terms_.emplace(e, c);
    if (!fresh) it->second += c;
  }
  if (a.truncation_ && b.truncation_)
    r.truncation_ = std::min(*a.truncation_, *b.truncation_);
  else if (a.truncation_)
    r.truncation_ = a.truncation_;
  else if (b.truncation_)
    r.truncation_ = b.truncation_;
  r.normalize();
  return r;
}

NovikovScalar operator-(const NovikovScalar& a, const NovikovScalar& b) { return a + (-b); }

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
  NovikovScalar r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Rational e = ea + eb;
      auto [it, fresh] = r.terms_.emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  // Truncation contract: min of the inputs' orders, exact absorbing.
  if (a.truncation_ && b.truncation_)
    r.truncation_ = std::min(*a.truncation_, *b.truncation_);
  else if (a.truncation_)
    r.truncation_ = a.truncation_;
  else if (b.truncation_)
    r.truncation_ = b.truncation_;
  r.normalize();
  return r;
}

bool operator<(const NovikovScalar& a, const NovikovScalar& b) {
  if (a.terms_ != b.terms_) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }
  if (a.truncation_.has_value() != b.truncation_.has_value())
    return a.truncation_.has_value() < b.truncation_.has_value();
  if (a.truncation_ && b.truncation_) return *a.truncation_ < *b.truncation_;
  return false;
}

NovikovScalar NovikovScalar::invert(const Rational& order) const {
  if (terms_.empty()) throw zero_division("invert(0)");
  const Rational v = terms_.begin()->first;
  const Rational lead = terms_.begin()->second;

  NovikovScalar lead_inv = monomial(Rational(1) / lead, -v);
  if (terms_.size() == 1 && !truncation_) return lead_inv;  // monomials invert exactly

  // a = lead*t^v * (1 + eps) with val(eps) > 0; the inverse is
  // lead^-1 t^-v * sum (-eps)^j. A truncated input caps the attainable
  // precision: perturbing a by O(t^o) perturbs the inverse by O(t^(o-2v)).
  Rational series_bound = order;  // exponent bound before the t^-v shift
  if (truncation_) series_bound = std::min(series_bound, Rational(*truncation_ - v));

  NovikovScalar eps = (*this * lead_inv).without_truncation().truncated(series_bound) - one();
  NovikovScalar neg_eps = -eps;
  NovikovScalar sum = one();
  NovikovScalar term = one();
  while (true) {
    term = (term * neg_eps).truncated(series_bound);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  // The final monomial shift moves the certified window by -v; reapply the
  // marker explicitly rather than trusting the min-rule across the shift.
  return (lead_inv * sum.without_truncation()).truncated(Rational(series_bound - v));
}

NovikovScalar novikov_pow(const NovikovScalar& a, long e) {
  if (e < 0) throw malformed_input("novikov_pow: negative exponent; use invert");
  NovikovScalar acc = NovikovScalar::one();
  NovikovScalar b = a;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

std::string NovikovScalar::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.get_str();
    } else {
      os << c.get_str() << "*t^(" << e.get_str() << ")";
    }
  }
  if (terms_.empty() && !truncation_) os << "0";
  if (truncation_) {
    if (!terms_.empty()) os << " + ";
    os << "O(t^(" << truncation_->get_str() << "))";
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

Rational parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  while (c.i < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/')) {
    ++c.i;
  }
  if (c.i == start) throw parse_error("expected a rational at offset " + std::to_string(start));
  return parse_rational(c.s.substr(start, c.i - start));
}

// Accepts t, -t, t^(e), c, c*t, c*t^(e).
void parse_term(Cursor& c, NovikovScalar& acc) {
  c.skip_ws();
  Rational coeff(1);
  bool explicit_coeff = false;
  if (c.i < c.s.size() && c.s[c.i] == '-') {
    size_t j = c.i + 1;
    while (j < c.s.size() && std::isspace(static_cast<unsigned char>(c.s[j]))) ++j;
    if (j < c.s.size() && c.s[j] == 't') {
      coeff = -1;
      c.i = j;
    } else {
      coeff = parse_number(c);
      explicit_coeff = true;
    }
  } else if (c.i < c.s.size() && c.s[c.i] != 't') {
    coeff = parse_number(c);
    explicit_coeff = true;
  }
  if (explicit_coeff && !c.eat('*')) {
    acc += NovikovScalar::constant(coeff);
    return;
  }
  c.skip_ws();
  if (c.i >= c.s.size() || c.s[c.i] != 't')
    throw parse_error("expected 't' at offset " + std::to_string(c.i));
  ++c.i;
  Rational expo(1);
  if (c.eat('^')) {
    if (!c.eat('(')) throw parse_error("expected '(' after '^'");
    expo = parse_number(c);
    if (!c.eat(')')) throw parse_error("expected ')' closing exponent");
  }
  acc += NovikovScalar::monomial(coeff, expo);
}

}  // namespace

NovikovScalar NovikovScalar::parse(const std::string& text) {
  Cursor c{text};
  NovikovScalar acc;
  c.skip_ws();
  if (c.done()) throw parse_error("empty Novikov literal");
  bool any = false;
  while (!c.done()) {
    c.skip_ws();
    if (c.s.compare(c.i, 2, "O(") == 0) {
      c.i += 2;
      c.skip_ws();
      if (c.i >= c.s.size() || c.s[c.i] != 't') throw parse_error("expected t in O(...)");
      ++c.i;
      if (!c.eat('^')) throw parse_error("expected '^' in O(...)");
      if (!c.eat('(')) throw parse_error("expected '(' in O(...)");
      Rational ord = parse_number(c);
      if (!c.eat(')')) throw parse_error("expected ')' in O(...)");
      if (!c.eat(')')) throw parse_error("expected closing ')' of O(...)");
      acc = acc.truncated(ord);
      any = true;
      if (!c.done() ) throw parse_error("trailing input after truncation marker");
      break;
    }
    parse_term(c, acc);
    any = true;
    if (!c.eat('+')) break;
  }
  if (!any || !c.done())
    throw parse_error("could not parse Novikov literal: '" + text + "'");
  return acc;
}

}  // namespace novalg

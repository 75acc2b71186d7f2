#include "novalg/polyq.hpp"

#include <sstream>

namespace novalg {

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  if (c == 0) return PolyQ();
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::scaled(const Rational& c) const {
  if (c == 0) return PolyQ();
  PolyQ r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return PolyQ();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return PolyQ(std::move(v));
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void PolyQ::divrem(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
  if (b.is_zero()) throw zero_division("polynomial division by zero");
  q = PolyQ();
  r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rational c = r.leading() / b.leading();
    int d = r.degree() - b.degree();
    PolyQ m = PolyQ::monomial(c, d);
    q += m;
    r -= m * b;
  }
}

PolyQ PolyQ::divided_exactly_by(const PolyQ& b) const {
  PolyQ q, r;
  divrem(*this, b, q, r);
  if (!r.is_zero()) throw malformed_input("inexact polynomial division");
  return q;
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ q, r;
    divrem(a, b, q, r);
    a = b;
    b = r;
  }
  return a.monic();
}

PolyQ PolyQ::pow(long e) const {
  if (e < 0) throw malformed_input("PolyQ::pow: negative exponent");
  PolyQ acc(Rational(1));
  PolyQ base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string PolyQ::to_text(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational a = (!first && c < 0) ? Rational(-c) : c;
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace novalg

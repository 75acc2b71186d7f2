#include "novalg/ratfun.hpp"

namespace novalg {

RatFun::RatFun(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw zero_division("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = PolyQ(Rational(1));
    return;
  }
  PolyQ g = PolyQ::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divided_exactly_by(g);
    den_ = den_.divided_exactly_by(g);
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(Rational(1) / lead);
    den_ = den_.scaled(Rational(1) / lead);
  }
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw zero_division("rational function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFun::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw zero_division("rational function pole at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFun::to_text(const std::string& var) const {
  if (is_polynomial()) {
    Rational d = den_.coeff(0);
    return num_.scaled(Rational(1) / d).to_text(var);
  }
  return "(" + num_.to_text(var) + ")/(" + den_.to_text(var) + ")";
}

RatFun ratfun_from_novikov(const NovikovScalar& a, long lattice) {
  if (!a.is_exact())
    throw malformed_input("truncated Novikov scalar cannot enter exact linear algebra: " +
                          a.to_text());
  long shift = 0;  // clear negative exponents with a power of s
  for (const auto& [e, c] : a.terms()) {
    Rational se(e * Rational(lattice));
    se.canonicalize();
    if (!is_integer(se))
      throw malformed_input("exponent " + e.get_str() + " not in (1/" + std::to_string(lattice) +
                            ")Z");
    long k = se.get_num().get_si();
    if (k < shift) shift = k;
  }
  PolyQ num;
  for (const auto& [e, c] : a.terms()) {
    Rational se(e * Rational(lattice));
    se.canonicalize();
    long k = se.get_num().get_si();
    num += PolyQ::monomial(c, static_cast<int>(k - shift));
  }
  PolyQ den = PolyQ::monomial(Rational(1), static_cast<int>(-shift));
  return RatFun(num, den);
}

}  // namespace novalg

#pragma once

#include <string>

#include "novalg/novikov.hpp"
#include "novalg/polyq.hpp"

namespace novalg {

// Element of the fraction field Q(s). Always normalized: gcd(num,den) = 1,
// den monic and nonzero, zero is 0/1. Laurent polynomials in t^(1/N) embed
// via s = t^(1/N).
class RatFun {
public:
  RatFun() : num_(), den_(PolyQ(Rational(1))) {}
  explicit RatFun(const Rational& c) : num_(PolyQ(c)), den_(PolyQ(Rational(1))) {}
  explicit RatFun(PolyQ p) : num_(std::move(p)), den_(PolyQ(Rational(1))) {}
  RatFun(PolyQ num, PolyQ den);

  static RatFun s() { return RatFun(PolyQ::x()); }

  bool is_zero() const { return num_.is_zero(); }
  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
  RatFun& operator/=(const RatFun& b) { return *this = *this / b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Evaluation at a rational point (den must not vanish there).
  Rational eval(const Rational& x) const;

  std::string to_text(const std::string& var = "s") const;

private:
  void normalize();
  PolyQ num_, den_;
};

inline bool is_zero(const RatFun& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

// t^(a/N) with N the lattice denominator becomes s^a; requires an exact
// scalar whose exponents lie in (1/N)Z.
RatFun ratfun_from_novikov(const NovikovScalar& a, long lattice);

}  // namespace novalg

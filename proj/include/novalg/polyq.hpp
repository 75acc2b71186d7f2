#pragma once

#include <string>
#include <vector>

#include "novalg/rational.hpp"

namespace novalg {

// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
// representation is always normalized (no trailing zeros; zero poly = {}).
class PolyQ {
public:
  PolyQ() = default;
  explicit PolyQ(const Rational& c) {
    if (c != 0) coeffs_ = {c};
  }
  explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static PolyQ x() { return PolyQ({Rational(0), Rational(1)}); }
  static PolyQ monomial(const Rational& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
  }
  const Rational& leading() const { return coeffs_.back(); }

  PolyQ operator-() const;
  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ& operator+=(const PolyQ& b) { return *this = *this + b; }
  PolyQ& operator-=(const PolyQ& b) { return *this = *this - b; }
  PolyQ& operator*=(const PolyQ& b) { return *this = *this * b; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  PolyQ scaled(const Rational& c) const;
  PolyQ monic() const;
  PolyQ derivative() const;
  Rational eval(const Rational& x) const;

  // Quotient and remainder; divisor must be nonzero.
  static void divrem(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
  PolyQ divided_exactly_by(const PolyQ& b) const;  // throws if remainder nonzero
  static PolyQ gcd(PolyQ a, PolyQ b);              // monic gcd

  PolyQ pow(long e) const;

  std::string to_text(const std::string& var = "x") const;

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

}  // namespace novalg

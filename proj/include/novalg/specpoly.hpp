#pragma once

#include <string>
#include <vector>

#include "novalg/polyq.hpp"
#include "novalg/ratfun.hpp"

namespace novalg {

// Polynomial in an outer variable (lambda or w) with coefficients in Q[s].
class SpecPoly {
public:
  SpecPoly() = default;
  explicit SpecPoly(std::vector<PolyQ> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static SpecPoly outer_variable(int power = 1);
  static SpecPoly from_polyq(const PolyQ& p) { return SpecPoly({p}); }
  static SpecPoly constant(const Rational& c) { return SpecPoly({PolyQ(c)}); }
  // c * x^a * s^b
  static SpecPoly term(const Rational& c, int outer_power, int s_power);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  PolyQ coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : PolyQ();
  }
  const std::vector<PolyQ>& coeffs() const { return coeffs_; }
  const PolyQ& leading() const { return coeffs_.back(); }

  SpecPoly operator-() const;
  friend SpecPoly operator+(const SpecPoly& a, const SpecPoly& b);
  friend SpecPoly operator-(const SpecPoly& a, const SpecPoly& b);
  friend SpecPoly operator*(const SpecPoly& a, const SpecPoly& b);
  friend bool operator==(const SpecPoly& a, const SpecPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const SpecPoly& a, const SpecPoly& b) { return !(a == b); }

  SpecPoly scaled(const Rational& c) const;
  // divide by the rational leading coefficient when the leading coefficient
  // is a constant; throws otherwise
  SpecPoly monic() const;
  SpecPoly pow(long e) const;

  // substitute x -> c * x (for comparing spectra under unit rescaling)
  SpecPoly outer_rescaled(const Rational& c) const;

  // exact division; throws on nonzero remainder (divisor must have constant
  // leading coefficient)
  SpecPoly divided_exactly_by(const SpecPoly& b) const;
  bool divisible_by(const SpecPoly& b) const;

  std::string to_text(const std::string& outer, const std::string& svar) const;

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<PolyQ> coeffs_;  // index = outer power
};

struct SpecFactor {
  SpecPoly factor;
  int multiplicity = 1;
};

// Complete factorization into irreducibles over Q(s) for products of an
// outer-variable power with binomials x^d - C s^e (the class arising as
// characteristic polynomials of the shipped quantum-cohomology operators).
// Correctness rests on: Newton-polygon irreducibility for gcd(d, e) = 1,
// the quasi-homogeneous reduction x^d - C s^e = s^{ge'} (u^g - C) with
// u = x^{d'}/s^{e'}, and binomial factorization over Q (rational p-th roots,
// prime-degree cyclotomic cofactors, Sophie Germain quartics). Throws
// Error("FactorizationUnsupported") outside this class.
std::vector<SpecFactor> factor_spectral(const SpecPoly& p);

// Factorization of u^g - C over Q into irreducibles.
std::vector<PolyQ> factor_rational_binomial(int g, const Rational& c);

}  // namespace novalg

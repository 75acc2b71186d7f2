#pragma once

#include <map>
#include <optional>
#include <string>

#include "novalg/rational.hpp"

namespace novalg {

// Grading data for the Novikov variable: t sits in cohomological degree
// 2*lambda, where lambda is the monotonicity constant.
struct GradingContext {
  Rational monotonicity{1};

  Rational t_degree() const { return Rational(2) * monotonicity; }
};

enum class Subring {
  lambda0_unit,        // valuation 0: unit of the subring of nonnegative powers
  lambda_plus,         // strictly positive valuation: the maximal ideal
  lambda0_nonunit_zero,  // the zero element
  field_only,          // negative valuation: only lives in the field of fractions
};

std::string to_string(Subring s);

// An exact element of the Novikov field: a finite (or truncated) sum of
// rational multiples of rational powers of t. Exponents share the lattice
// (1/N)Z; a finite truncation order means the element is only known modulo
// O(t^order). Values are immutable in spirit: all operations return new
// values and never mutate their arguments.
class NovikovScalar {
public:
  NovikovScalar() = default;

  static NovikovScalar zero() { return NovikovScalar(); }
  static NovikovScalar one() { return constant(Rational(1)); }
  static NovikovScalar constant(const Rational& c);
  static NovikovScalar monomial(const Rational& coeff, const Rational& exponent);
  // t^exponent
  static NovikovScalar t_power(const Rational& exponent) { return monomial(Rational(1), exponent); }

  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return !truncation_.has_value(); }
  const std::map<Rational, Rational>& terms() const { return terms_; }
  const std::optional<Rational>& truncation_order() const { return truncation_; }
  long lattice_denominator() const { return lattice_; }

  // Lowest stored exponent; nullopt encodes +infinity (the zero element).
  std::optional<Rational> valuation() const;

  // Common cohomological degree of all terms under |t| = 2*lambda, or nullopt
  // when the terms sit in different degrees ("mixed"). The zero element
  // reports degree 0.
  std::optional<Rational> cohomological_degree(const GradingContext& ctx) const;

  Subring classify_subring() const;

  // b with a*b = 1 + O(t^order). Exact when *this is a single term.
  NovikovScalar invert(const Rational& order) const;

  // Drops terms with exponent >= order and tightens the truncation marker.
  NovikovScalar truncated(const Rational& order) const;

  // Same terms with the truncation marker removed (treats them as exact).
  NovikovScalar without_truncation() const;

  NovikovScalar operator-() const;
  friend NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b);
  friend NovikovScalar operator-(const NovikovScalar& a, const NovikovScalar& b);
  friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);
  NovikovScalar& operator+=(const NovikovScalar& b) { return *this = *this + b; }
  NovikovScalar& operator-=(const NovikovScalar& b) { return *this = *this - b; }
  NovikovScalar& operator*=(const NovikovScalar& b) { return *this = *this * b; }

  friend bool operator==(const NovikovScalar& a, const NovikovScalar& b) {
    return a.terms_ == b.terms_ && a.truncation_ == b.truncation_;
  }
  friend bool operator!=(const NovikovScalar& a, const NovikovScalar& b) { return !(a == b); }
  // Total order for use as a map key (term-wise lexicographic).
  friend bool operator<(const NovikovScalar& a, const NovikovScalar& b);

  // Text format: "3/2*t^(1/2) + -1*t^(2) + O(t^(3))"; parse/print round-trip
  // bit-exactly on canonical output.
  std::string to_text() const;
  static NovikovScalar parse(const std::string& text);

private:
  void normalize();

  // exponent -> nonzero coefficient, exponents strictly increasing.
  std::map<Rational, Rational> terms_;
  std::optional<Rational> truncation_;
  // Minimal common denominator of all exponents (and the truncation order).
  long lattice_ = 1;
};

NovikovScalar novikov_pow(const NovikovScalar& a, long e);

}  // namespace novalg

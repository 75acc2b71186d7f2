#pragma once

#include <string>
#include <vector>

#include "novalg/rational.hpp"

namespace novalg {

// Monomial in a fixed number of variables (exponent vector).
struct Monomial {
  std::vector<int> e;

  int total() const {
    int t = 0;
    for (int x : e) t += x;
    return t;
  }
  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
  }
  // quotient m / this (requires divisibility)
  Monomial quotient_of(const Monomial& m) const {
    Monomial r = m;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  bool coprime(const Monomial& b) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// degree-reverse-lexicographic order
bool degrevlex_less(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q; terms kept sorted descending in
// degrevlex with nonzero coefficients.
class MPoly {
public:
  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }
  int total_degree() const;

  void add_term(const Monomial& m, const Rational& c);

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  MPoly scaled(const Rational& c) const;
  // this * c * m
  MPoly times_term(const Rational& c, const Monomial& m) const;
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly monic() const;

  static MPoly constant(int nvars, const Rational& c);
  static MPoly variable(int nvars, int i, int power = 1);

  std::string to_text(const std::vector<std::string>& names) const;

private:
  int nvars_;
  std::vector<std::pair<Monomial, Rational>> terms_;
};

// Full normal form of f modulo the set G.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g);

// Reduced Groebner basis (Buchberger, sugar-strategy pair selection,
// coprime-lcm and chain criteria), monic and interreduced.
std::vector<MPoly> buchberger(std::vector<MPoly> gens);

struct QuotientBasis {
  bool finite = false;          // ideal is zero-dimensional
  bool unit_ideal = false;      // quotient is the zero ring
  std::vector<Monomial> basis;  // standard monomials when finite
};

// Standard monomial basis of Q[x]/I from a reduced Groebner basis.
QuotientBasis quotient_basis(const std::vector<MPoly>& gb, int nvars);

}  // namespace novalg

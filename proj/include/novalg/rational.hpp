#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "novalg/error.hpp"

namespace novalg {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", "p/q". Used by every JSON reader; rationals are always
// serialized as strings to keep reports exact.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

inline Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv) {
    if (b == 0) throw zero_division("0^negative");
    b = Rational(1) / b;
  }
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// Exact p-th root of an integer, if one exists.
inline std::optional<Integer> integer_nth_root(const Integer& a, unsigned long p) {
  if (p == 0) return std::nullopt;
  if (a < 0 && p % 2 == 0) return std::nullopt;
  Integer root;
  int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), p);
  if (!exact) return std::nullopt;
  return root;
}

// Exact p-th root of a rational, if one exists (for even p only the
// nonnegative root is reported).
inline std::optional<Rational> rational_nth_root(const Rational& a, unsigned long p) {
  auto num = integer_nth_root(numerator(a), p);
  if (!num) return std::nullopt;
  auto den = integer_nth_root(denominator(a), p);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

inline long lcm_long(long a, long b) {
  Integer l;
  Integer ia(a), ib(b);
  mpz_lcm(l.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  return l.get_si();
}

}  // namespace novalg

#include "novalg/novikov.hpp"

#include <random>

#include "doctest.h"

using namespace novalg;

namespace {

NovikovScalar mono(long p, long q, long ep, long eq) {
  return NovikovScalar::monomial(rat(p, q), rat(ep, eq));
}

// Small random exact elements for the property suites.
NovikovScalar random_scalar(std::mt19937_64& rng, bool allow_negative_exponents = true) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<long> expo(allow_negative_exponents ? -4 : 0, 6);
  NovikovScalar a;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    long c = num(rng);
    if (c == 0) c = 1;
    a += NovikovScalar::monomial(rat(c, den(rng)), rat(expo(rng), den(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("addition cancels terms exactly") {
  // (t^2 + 3t^5) + (-3t^5) = t^2
  NovikovScalar a = mono(1, 1, 2, 1) + mono(3, 1, 5, 1);
  NovikovScalar b = mono(-3, 1, 5, 1);
  CHECK(a + b == mono(1, 1, 2, 1));
}

TEST_CASE("difference of squares") {
  NovikovScalar one = NovikovScalar::one();
  NovikovScalar t = NovikovScalar::t_power(rat(1));
  CHECK((one + t) * (one - t) == one - t * t);
}

TEST_CASE("half-integer exponents multiply onto the coarser lattice") {
  NovikovScalar h = NovikovScalar::t_power(rat(1, 2));
  CHECK(h.lattice_denominator() == 2);
  NovikovScalar t = h * h;
  CHECK(t == NovikovScalar::t_power(rat(1)));
  CHECK(t.lattice_denominator() == 1);
}

TEST_CASE("valuation") {
  CHECK(*(mono(1, 1, 2, 1) + mono(3, 1, 5, 1)).valuation() == rat(2));
  CHECK(!NovikovScalar::zero().valuation().has_value());
  CHECK(*(mono(5, 1, -1, 2) + mono(1, 1, 1, 1)).valuation() == rat(-1, 2));
}

TEST_CASE("cohomological degree") {
  GradingContext ctx;  // lambda = 1, |t| = 2
  CHECK(*NovikovScalar::t_power(rat(1)).cohomological_degree(ctx) == rat(2));
  CHECK(*NovikovScalar::constant(rat(7)).cohomological_degree(ctx) == rat(0));
  CHECK(!(NovikovScalar::one() + NovikovScalar::t_power(rat(1)))
             .cohomological_degree(ctx)
             .has_value());  // mixed
}

TEST_CASE("subring classification") {
  CHECK((NovikovScalar::constant(rat(2)) + NovikovScalar::t_power(rat(1))).classify_subring() ==
        Subring::lambda0_unit);
  CHECK(NovikovScalar::t_power(rat(3)).classify_subring() == Subring::lambda_plus);
  CHECK(NovikovScalar::t_power(rat(-1)).classify_subring() == Subring::field_only);
  CHECK(NovikovScalar::zero().classify_subring() == Subring::lambda0_nonunit_zero);
}

TEST_CASE("geometric series inverse") {
  // invert(1 - t, order 4) = 1 + t + t^2 + t^3 + O(t^4)
  NovikovScalar a = NovikovScalar::one() - NovikovScalar::t_power(rat(1));
  NovikovScalar b = a.invert(rat(4));
  NovikovScalar expect = NovikovScalar::one() + NovikovScalar::t_power(rat(1)) +
                         NovikovScalar::t_power(rat(2)) + NovikovScalar::t_power(rat(3));
  expect = expect.truncated(rat(4));
  CHECK(b == expect);
}

TEST_CASE("monomial inverse is exact") {
  NovikovScalar a = NovikovScalar::t_power(rat(2));
  NovikovScalar b = a.invert(rat(100));
  CHECK(b == NovikovScalar::t_power(rat(-2)));
  CHECK(b.is_exact());
}

TEST_CASE("inverse of 2t + t^2 to order val+2") {
  // Independently derived: (2t + t^2)^-1 = 1/2 t^-1 - 1/4 + 1/8 t - ...,
  // and (2t + t^2)(1/2 t^-1 - 1/4 + 1/8 t) = 1 + t^3/8 = 1 + O(t^3).
  NovikovScalar a = mono(2, 1, 1, 1) + mono(1, 1, 2, 1);
  NovikovScalar b = a.invert(rat(3));
  NovikovScalar expect =
      (mono(1, 2, -1, 1) + mono(-1, 4, 0, 1) + mono(1, 8, 1, 1)).truncated(rat(2));
  CHECK(b == expect);
  NovikovScalar prod = a * b;
  // agreement with 1 on all exponents below the truncation window
  for (const auto& [e, c] : prod.terms()) {
    if (e == 0) {
      CHECK(c == 1);
    } else {
      CHECK(e >= rat(2));
    }
  }
}

TEST_CASE("invert throws on zero") {
  CHECK_THROWS_AS(NovikovScalar::zero().invert(rat(1)), Error);
}

TEST_CASE("text round-trip") {
  NovikovScalar a = mono(3, 2, 1, 2) + mono(-1, 1, 2, 1);
  CHECK(a.to_text() == "3/2*t^(1/2) + -1*t^(2)");
  CHECK(NovikovScalar::parse(a.to_text()) == a);

  NovikovScalar b = a.truncated(rat(3));
  CHECK(b.to_text() == "3/2*t^(1/2) + -1*t^(2) + O(t^(3))");
  CHECK(NovikovScalar::parse(b.to_text()) == b);

  CHECK(NovikovScalar::parse("0") == NovikovScalar::zero());
  CHECK(NovikovScalar::zero().to_text() == "0");
  CHECK(NovikovScalar::parse("t") == NovikovScalar::t_power(rat(1)));
  CHECK(NovikovScalar::parse("-t^(1/2)") == mono(-1, 1, 1, 2));
  CHECK(NovikovScalar::parse("5") == NovikovScalar::constant(rat(5)));
  CHECK_THROWS_AS(NovikovScalar::parse("t^^2"), Error);
  CHECK_THROWS_AS(NovikovScalar::parse(""), Error);
}

TEST_CASE("randomized ring axioms, inverse round-trips, valuation additivity") {
  std::mt19937_64 rng(20240817);
  int inj = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    NovikovScalar a = random_scalar(rng);
    NovikovScalar b = random_scalar(rng);
    NovikovScalar c = random_scalar(rng);
    // ring axioms
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // valuation additivity
    if (!a.is_zero() && !b.is_zero()) {
      CHECK(*(a * b).valuation() == *a.valuation() + *b.valuation());
    }
    // subring classifier consistent with valuation
    auto v = a.valuation();
    Subring s = a.classify_subring();
    if (!v) CHECK(s == Subring::lambda0_nonunit_zero);
    else if (*v == 0) CHECK(s == Subring::lambda0_unit);
    else if (*v > 0) CHECK(s == Subring::lambda_plus);
    else CHECK(s == Subring::field_only);
    // inverse round-trip: a * invert(a, o) = 1 on exponents < o - val(a)
    if (!a.is_zero()) {
      Rational o = *a.valuation() + rat(4);
      NovikovScalar inv = a.invert(o);
      NovikovScalar prod = a * inv;
      // a * invert(a, o) = 1 + O(t^o); stored terms past o are outside the
      // certified window (the marker tracks invert's own truncation).
      Rational window = o;
      for (const auto& [e, coeff] : prod.terms()) {
        if (e < window) {
          CHECK(e == 0);
          CHECK(coeff == 1);
        }
      }
      ++inj;
    }
    // parse/print round-trip
    CHECK(NovikovScalar::parse(a.to_text()) == a);
  }
  CHECK(inj > 500);  // the random family is rich enough
}

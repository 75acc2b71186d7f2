#include "novalg/qh.hpp"

#include "doctest.h"

using namespace novalg;

namespace {

FamilySpec proj(int m) { return {ToricFamily::projective, m, 0}; }
FamilySpec bundle(int m, int k) { return {ToricFamily::negative_line_bundle, m, k}; }

CriticalFamily crit_of(const FamilySpec& f) {
  return critical_points_closed(superpotential(family_polytope(f)));
}

}  // namespace

TEST_CASE("spectral polynomial arithmetic and division") {
  // (x^2 - 4s)(x + 1) expanded and divided back
  SpecPoly q = SpecPoly::outer_variable(2) - SpecPoly::term(Rational(4), 0, 1);
  SpecPoly l = SpecPoly::outer_variable(1) + SpecPoly::constant(Rational(1));
  SpecPoly prod = q * l;
  CHECK(prod.divisible_by(q));
  CHECK(prod.divided_exactly_by(q) == l);
  CHECK(!q.divisible_by(l));
  CHECK(q.to_text("x", "s") == "x^2 + -4*s");
}

TEST_CASE("binomial factorization over Q") {
  // u^2 - 4 = (u-2)(u+2)
  auto f1 = factor_rational_binomial(2, Rational(4));
  CHECK(f1.size() == 2);
  // u^2 + 4 irreducible
  auto f2 = factor_rational_binomial(2, Rational(-4));
  CHECK(f2.size() == 1);
  // u^3 - 8 = (u-2)(u^2+2u+4)
  auto f3 = factor_rational_binomial(3, Rational(8));
  REQUIRE(f3.size() == 2);
  PolyQ quad({Rational(4), Rational(2), Rational(1)});
  CHECK((f3[0] == quad || f3[1] == quad));
  // u^4 + 4 = (u^2-2u+2)(u^2+2u+2), Sophie Germain with h = 1
  auto f4 = factor_rational_binomial(4, Rational(-4));
  REQUIRE(f4.size() == 2);
  CHECK(f4[0].degree() == 2);
  CHECK(f4[1].degree() == 2);
  // u^4 - 4 = (u^2-2)(u^2+2)
  auto f5 = factor_rational_binomial(4, Rational(4));
  REQUIRE(f5.size() == 2);
  // product check
  CHECK(f5[0] * f5[1] == PolyQ::monomial(Rational(1), 4) - PolyQ(Rational(4)));
}

TEST_CASE("spectral factorization of lambda^a times binomials") {
  // lambda^2 (lambda^4 - 1024 s^2) -> lambda^2 (l^2 - 32 s)(l^2 + 32 s)
  SpecPoly p = SpecPoly::outer_variable(2) *
               (SpecPoly::outer_variable(4) - SpecPoly::term(Rational(1024), 0, 2));
  auto factors = factor_spectral(p);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0].factor.degree() == 1);
  CHECK(factors[0].multiplicity == 2);
  CHECK(factors[1].factor.degree() == 2);
  CHECK(factors[2].factor.degree() == 2);
  SpecPoly recon = factors[0].factor.pow(factors[0].multiplicity) * factors[1].factor *
                   factors[2].factor;
  CHECK(recon == p);

  // gcd(d, e) = 1 binomials stay irreducible
  SpecPoly q = SpecPoly::outer_variable(3) + SpecPoly::term(Rational(27), 0, 1);
  auto f2 = factor_spectral(q);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].factor == q);
}

TEST_CASE("presentations of the shipped families") {
  QuantumPresentation p2 = presentation(proj(2));
  CHECK(p2.rank == 3);
  CHECK(p2.relation.to_text("w", "T") == "w^3 + -1*T");
  CHECK(p2.c1_multiple == 3);

  QuantumPresentation b31 = presentation(bundle(3, 1));
  CHECK(b31.rank == 4);
  // w (w^3 - (-1) t) = w^4 + t w
  CHECK(b31.relation == SpecPoly::outer_variable(4) +
                            SpecPoly::term(Rational(1), 1, 1));
  CHECK(b31.c1_multiple == 3);

  CHECK_THROWS_AS(presentation(bundle(2, 2)), Error);  // k > m/2 refused
  CHECK_THROWS_AS(presentation(bundle(1, 1)), Error);  // outside Theorem window
}

TEST_CASE("c1 operator of P^1 in the basis {1, w}") {
  QuantumPresentation p = presentation(proj(1));
  C1Operator op = c1_operator(p);
  // c1 = 2w; matrix [[0, 2T], [2, 0]]
  CHECK(op.matrix.at(0, 0).is_zero());
  CHECK(op.matrix.at(0, 1) == RatFun(PolyQ::monomial(Rational(2), 1)));
  CHECK(op.matrix.at(1, 0) == RatFun(Rational(2)));
  CHECK(op.matrix.at(1, 1).is_zero());
  // commutes with w-multiplication
  Matrix<RatFun> w = w_operator(p);
  CHECK((op.matrix * w - w * op.matrix).is_zero());
}

TEST_CASE("spectrum of P^1: the single irreducible factor l^2 - 4T") {
  SpectrumDescriptor sd = spectrum(c1_operator(presentation(proj(1))));
  REQUIRE(sd.factors.size() == 1);
  CHECK(sd.factors[0].factor ==
        SpecPoly::outer_variable(2) - SpecPoly::term(Rational(4), 0, 1));
  CHECK(sd.zero_block_dim == 0);
}

TEST_CASE("spectrum of the bundle (2,1): zero block of dimension k") {
  SpectrumDescriptor sd = spectrum(c1_operator(presentation(bundle(2, 1))));
  CHECK(sd.rank == 3);
  CHECK(sd.zero_block_dim == 1);
  // nonzero part: l^2 - c t with 2 = 1+m-k eigenvalues
  int nonzero_eigenvalues = 0;
  for (size_t i = 0; i < sd.factors.size(); ++i) {
    bool zero = sd.factors[i].factor.degree() == 1 && sd.factors[i].factor.coeff(0).is_zero();
    if (!zero) nonzero_eigenvalues += sd.factors[i].factor.degree() * sd.factors[i].multiplicity;
  }
  CHECK(nonzero_eigenvalues == 2);
}

TEST_CASE("spectrum of (5,2) splits into two quadratics") {
  SpectrumDescriptor sd = spectrum(c1_operator(presentation(bundle(5, 2))));
  CHECK(sd.rank == 6);
  CHECK(sd.zero_block_dim == 2);
  int quads = 0;
  for (const auto& f : sd.factors)
    if (f.factor.degree() == 2) ++quads;
  CHECK(quads == 2);  // l^4 - 1024 t^2 = (l^2 - 32t)(l^2 + 32t)
}

TEST_CASE("identity-scaled operator has a single factor with full multiplicity") {
  C1Operator op;
  op.c1_multiple = 1;
  op.matrix = Matrix<RatFun>::identity(3).scaled(RatFun(PolyQ::monomial(Rational(2), 1)));
  SpectrumDescriptor sd = spectrum(op);
  REQUIRE(sd.factors.size() == 1);
  CHECK(sd.factors[0].multiplicity == 3);
  CHECK(sd.factors[0].factor.degree() == 1);
  CHECK(sd.factor_block_dims[0] == 3);
  CHECK(sd.zero_block_dim == 0);
}

TEST_CASE("squarefree decomposition feeds mixed products") {
  // x^2 (x^2 - 4s) (x - 1)^3
  SpecPoly p = SpecPoly::outer_variable(2) *
               (SpecPoly::outer_variable(2) - SpecPoly::term(Rational(4), 0, 1)) *
               (SpecPoly::outer_variable(1) - SpecPoly::constant(Rational(1))).pow(3);
  auto factors = factor_spectral(p);
  SpecPoly recon = SpecPoly::constant(Rational(1));
  for (const auto& f : factors) recon = recon * f.factor.pow(f.multiplicity);
  CHECK(recon == p);
  REQUIRE(factors.size() == 3);
}

TEST_CASE("sh quotient of the shipped bundles") {
  // (2,1): QH relation w(w^2+t) -> SH = Lambda[w]/(w^2 + t), rank 2
  ShQuotient sh = sh_quotient(presentation(bundle(2, 1)));
  CHECK(sh.presentation.rank == 2);
  CHECK(sh.presentation.relation ==
        SpecPoly::outer_variable(2) + SpecPoly::term(Rational(1), 0, 1));
  CHECK(sh.kernel_dim == 1);
  CHECK(sh.automorphism);
  CHECK(sh.stabilization_exponent == 1);

  // (3,1): SH rank 3, relation w^3 + t
  ShQuotient sh31 = sh_quotient(presentation(bundle(3, 1)));
  CHECK(sh31.presentation.rank == 3);
  CHECK(sh31.presentation.relation ==
        SpecPoly::outer_variable(3) + SpecPoly::term(Rational(1), 0, 1));
  CHECK(sh31.automorphism);

  CHECK_THROWS_AS(sh_quotient(presentation(proj(2))), Error);
}

TEST_CASE("jacobian comparison closes the triangle") {
  for (auto [m, k] : {std::pair{2, 1}, std::pair{4, 2}, std::pair{6, 3}}) {
    FamilySpec f = bundle(m, k);
    ShQuotient sh = sh_quotient(presentation(f));
    Superpotential w = superpotential(family_polytope(f));
    JacobianData jac = jacobian_rank(w, {Rational(1), rat(2, 3)});
    CriticalFamily crit = critical_points_closed(w);
    ComparisonReport rep = jacobian_comparison(sh, jac, crit);
    INFO("m=" << m << " k=" << k << " detail: " << rep.detail);
    CHECK(rep.rank_match);
    CHECK(rep.minpoly_match);
    CHECK(rep.spectrum_match);
  }
}

TEST_CASE("(4,2): ranks 3 and values 3w with w^3 = 4t^2") {
  FamilySpec f = bundle(4, 2);
  ShQuotient sh = sh_quotient(presentation(f));
  CHECK(sh.presentation.rank == 3);
  CriticalFamily crit = crit_of(f);
  CHECK(crit.value_scale == Rational(3));
  CHECK(crit.relation_coeff == Rational(4));  // (-2)^2
  CHECK(crit.relation_degree == 3);
}

TEST_CASE("minimal polynomial identity across every admissible window up to m = 6") {
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; 2 * k <= m; ++k) {
      FamilySpec f = bundle(m, k);
      ShQuotient sh = sh_quotient(presentation(f));
      Superpotential w = superpotential(family_polytope(f));
      JacobianData jac = jacobian_rank(w, {Rational(1), rat(3, 2)});
      CriticalFamily crit = critical_points_closed(w);
      ComparisonReport rep = jacobian_comparison(sh, jac, crit);
      INFO("m=" << m << " k=" << k << " " << rep.detail);
      CHECK(rep.rank_match);
      CHECK(rep.minpoly_match);
      CHECK(rep.spectrum_match);
      CHECK(sh.presentation.rank == 1 + m - k);
      CHECK(sh.kernel_dim == k);
      CHECK(sh.automorphism);  // the induced c1 action is invertible
    }
  }
}

TEST_CASE("perturbed relation produces a mismatch report") {
  FamilySpec f = bundle(2, 1);
  ShQuotient sh = sh_quotient(presentation(f));
  sh.presentation.relation =
      SpecPoly::outer_variable(2) + SpecPoly::term(Rational(2), 0, 1);  // w^2 + 2t
  Superpotential w = superpotential(family_polytope(f));
  JacobianData jac = jacobian_rank(w, {Rational(1), rat(2, 3)});
  CriticalFamily crit = critical_points_closed(w);
  ComparisonReport rep = jacobian_comparison(sh, jac, crit);
  CHECK(!rep.ok());
  CHECK(!rep.detail.empty());
}

TEST_CASE("generation report for O(-1)->P^m") {
  for (int m : {2, 3, 4}) {
    FamilySpec f = bundle(m, 1);
    SpectrumDescriptor sd = spectrum(c1_operator(presentation(f)));
    auto verdicts = generation_report(sd, crit_of(f));
    int split = 0, inconclusive_zero = 0;
    int split_eigen = 0;
    for (const auto& v : verdicts) {
      if (v.verdict == "split-generated") {
        ++split;
        split_eigen += v.eigenvalue_count;
        CHECK(v.summand_dim == 1);
        CHECK(v.matched_critical_points == 1);
      }
      if (v.zero_eigenvalue) {
        ++inconclusive_zero;
        CHECK(v.verdict == "inconclusive");
      }
    }
    INFO("m=" << m);
    CHECK(split_eigen == m);  // all 1+m-1 = m nonzero eigensummands
    CHECK(inconclusive_zero == 1);
  }
}

TEST_CASE("generation verdicts are invariant under common unit rescaling") {
  FamilySpec f = bundle(5, 2);
  SpectrumDescriptor sd = spectrum(c1_operator(presentation(f)));
  CriticalFamily crit = crit_of(f);
  auto base = generation_report(sd, crit);
  // rescale both the operator spectrum and the critical values by 3
  SpectrumDescriptor scaled = sd;
  scaled.char_poly = sd.char_poly.outer_rescaled(rat(1, 3)).monic();
  scaled.factors.clear();
  scaled.factor_block_dims.clear();
  scaled.factors = factor_spectral(scaled.char_poly);
  for (const auto& g : scaled.factors)
    scaled.factor_block_dims.push_back(g.factor.degree() * g.multiplicity);
  CriticalFamily crit2 = crit;
  crit2.value_scale *= Rational(3);
  auto rescaled = generation_report(scaled, crit2);
  REQUIRE(base.size() == rescaled.size());
  for (size_t i = 0; i < base.size(); ++i) CHECK(base[i].verdict == rescaled[i].verdict);
}

TEST_CASE("unmatched nonzero eigenvalue is inconclusive") {
  FamilySpec f = bundle(2, 1);
  SpectrumDescriptor sd = spectrum(c1_operator(presentation(f)));
  CriticalFamily crit = crit_of(f);
  crit.value_scale *= Rational(5);  // move the critical values away
  auto verdicts = generation_report(sd, crit);
  for (const auto& v : verdicts)
    if (!v.zero_eigenvalue) {
      CHECK(v.verdict == "inconclusive");
      CHECK(v.matched_critical_points == 0);
    }
}

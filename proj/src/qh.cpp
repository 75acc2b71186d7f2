#include "novalg/qh.hpp"

#include <algorithm>
#include <sstream>

namespace novalg {

namespace {

RatFun ratfun_of(const PolyQ& p) { return RatFun(p); }

// univariate polynomial over Q(s), low-to-high, for gcd/division work
using RPoly = std::vector<RatFun>;

RPoly rpoly_from_spec(const SpecPoly& p) {
  RPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.push_back(ratfun_of(p.coeff(i)));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

int rdeg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

void rtrim(RPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RPoly rmul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, RatFun());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  rtrim(r);
  return r;
}

void rdivrem(const RPoly& a, const RPoly& b, RPoly& q, RPoly& r) {
  if (b.empty()) throw zero_division("polynomial division by zero");
  q.assign(std::max<int>(0, rdeg(a) - rdeg(b) + 1), RatFun());
  r = a;
  rtrim(r);
  while (rdeg(r) >= rdeg(b)) {
    RatFun c = r.back() / b.back();
    int d = rdeg(r) - rdeg(b);
    q[d] += c;
    for (int i = 0; i <= rdeg(b); ++i) r[i + d] -= c * b[i];
    rtrim(r);
  }
}

RPoly rgcd(RPoly a, RPoly b) {
  rtrim(a);
  rtrim(b);
  while (!b.empty()) {
    RPoly q, r;
    rdivrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    RatFun lead = a.back();
    for (auto& c : a) c = c / lead;
  }
  return a;
}

// converts a monic RPoly with polynomial entries back to a SpecPoly
SpecPoly spec_from_rpoly(const RPoly& p) {
  // clear the common denominator; for our inputs entries are polynomial
  std::vector<PolyQ> coeffs;
  for (const auto& c : p) {
    if (!c.is_polynomial())
      throw malformed_input("expected polynomial coefficients in the spectral data");
    coeffs.push_back(c.num().scaled(Rational(1) / c.den().coeff(0)));
  }
  return SpecPoly(std::move(coeffs));
}

}  // namespace

QuantumPresentation presentation(const FamilySpec& f) {
  if (f.m < 1) throw parameter_out_of_range("m must be at least 1");
  QuantumPresentation p;
  p.family = f;
  if (f.family == ToricFamily::projective) {
    p.novikov_symbol = "T";
    // w^{1+m} - T
    p.relation = SpecPoly::outer_variable(1 + f.m) - SpecPoly::term(Rational(1), 0, 1);
    p.rank = 1 + f.m;
    p.c1_multiple = 1 + f.m;
    return p;
  }
  if (f.k < 1 || 2 * f.k > f.m)
    throw parameter_out_of_range(
        "the line-bundle presentation holds for 1 <= k <= m/2; larger k only has an "
        "unspecified relation shape and is refused");
  p.novikov_symbol = "t";
  // w^k (w^{1+m-k} - (-k)^k t^k)
  SpecPoly g = SpecPoly::outer_variable(1 + f.m - f.k) -
               SpecPoly::term(rational_pow(Rational(-f.k), f.k), 0, f.k);
  p.relation = SpecPoly::outer_variable(f.k) * g;
  p.rank = 1 + f.m;
  p.c1_multiple = 1 + f.m - f.k;
  return p;
}

Matrix<RatFun> w_operator(const QuantumPresentation& p) {
  int n = p.rank;
  if (p.relation.degree() != n) throw malformed_input("presentation rank/relation mismatch");
  Matrix<RatFun> m(n, n);
  // w * w^i = w^{i+1} for i < n-1; w * w^{n-1} = -sum relation_j w^j
  for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = RatFun(Rational(1));
  for (int j = 0; j < n; ++j) m.at(j, n - 1) = RatFun(-p.relation.coeff(j));
  return m;
}

C1Operator c1_operator(const QuantumPresentation& p) {
  C1Operator op;
  op.presentation = p;
  op.c1_multiple = p.c1_multiple;
  op.matrix = w_operator(p).scaled(RatFun(Rational(p.c1_multiple)));
  return op;
}

SpectrumDescriptor spectrum(const C1Operator& op) {
  SpectrumDescriptor out;
  out.rank = op.matrix.rows();
  auto cp = char_poly(op.matrix);
  out.char_poly = spec_from_rpoly(cp);
  out.factors = factor_spectral(out.char_poly);
  out.zero_block_dim = 0;
  for (const auto& f : out.factors) {
    bool is_outer = f.factor.degree() == 1 && f.factor.coeff(0).is_zero();
    int block = f.factor.degree() * f.multiplicity;
    out.factor_block_dims.push_back(block);
    if (is_outer) out.zero_block_dim = f.multiplicity;
  }
  // cross-check: per-factor generalized blocks via exact kernel ranks
  int n = out.rank;
  int total = 0;
  for (size_t i = 0; i < out.factors.size(); ++i) {
    // evaluate the factor at the operator
    Matrix<RatFun> value(n, n);
    Matrix<RatFun> power = Matrix<RatFun>::identity(n);
    const SpecPoly& f = out.factors[i].factor;
    for (int d = 0; d <= f.degree(); ++d) {
      if (!f.coeff(d).is_zero()) value = value + power.scaled(ratfun_of(f.coeff(d)));
      if (d < f.degree()) power = power * op.matrix;
    }
    Matrix<RatFun> pw = value.pow(n);
    int nullity = n - pw.rank();
    if (nullity != out.factor_block_dims[i])
      throw malformed_input("spectral block dimension disagrees with exact kernel rank");
    total += nullity;
  }
  if (total != n) throw malformed_input("spectral blocks do not fill the space");
  return out;
}

ShQuotient sh_quotient(const QuantumPresentation& p) {
  if (p.family.family != ToricFamily::negative_line_bundle)
    throw not_a_bundle_family("SH* is computed as a quotient only for the line-bundle family");
  C1Operator op = c1_operator(p);
  int n = p.rank;
  // ker(r^n): r is invertible iff relation(0) != 0; the kernel ideal is
  // generated by relation / gcd(relation, w^n)
  RPoly rel = rpoly_from_spec(p.relation);
  RPoly wn(n + 1, RatFun());
  wn[n] = RatFun(Rational(1));
  RPoly g = rgcd(rel, wn);
  RPoly quot, rem;
  rdivrem(rel, g, quot, rem);
  if (!rem.empty()) throw malformed_input("gcd division failure in sh_quotient");

  ShQuotient out;
  out.presentation = p;
  out.presentation.relation = spec_from_rpoly(quot).monic();
  out.presentation.rank = out.presentation.relation.degree();
  out.kernel_dim = n - out.presentation.rank;

  // exact kernel checks against the matrix route
  Matrix<RatFun> r = op.matrix;
  int prev = Matrix<RatFun>::identity(n).rank();
  out.stabilization_exponent = 0;
  Matrix<RatFun> power = Matrix<RatFun>::identity(n);
  for (int e = 1; e <= n + 1; ++e) {
    power = power * r;
    int rk = power.rank();
    if (rk == prev) {
      out.stabilization_exponent = e - 1;
      break;
    }
    prev = rk;
  }
  Matrix<RatFun> rn = r.pow(n);
  if (n - rn.rank() != out.kernel_dim)
    throw malformed_input("kernel dimension disagrees between the two routes");

  // the induced operator on the quotient is multiplication by
  // c1_multiple * w modulo the reduced relation
  C1Operator induced = c1_operator(out.presentation);
  out.automorphism = !induced.matrix.det().is_zero();
  return out;
}

SpecPoly critical_value_polynomial(const CriticalFamily& crit) {
  // values V u over u^D = C t^P: prod (x - V u) = x^D - V^D C t^P
  if (!is_integer(crit.relation_t_power))
    throw malformed_input("critical relation t-power must be integral here");
  int d = crit.relation_degree;
  long e = crit.relation_t_power.get_num().get_si();
  Rational c = rational_pow(crit.value_scale, d) * crit.relation_coeff;
  return SpecPoly::outer_variable(d) - SpecPoly::term(c, 0, static_cast<int>(e));
}

ComparisonReport jacobian_comparison(const ShQuotient& sh, const JacobianData& jac,
                                     const CriticalFamily& crit) {
  ComparisonReport rep;
  std::ostringstream detail;
  rep.sh_relation = sh.presentation.relation.to_text("w", sh.presentation.novikov_symbol);
  rep.rank_match = (jac.rank == sh.presentation.rank) && jac.stable;
  if (!rep.rank_match)
    detail << "rank mismatch: jacobian " << jac.rank << " vs SH " << sh.presentation.rank << "; ";

  // minimal polynomial of c1 on SH*, pulled back through lambda = c * w
  C1Operator induced = c1_operator(sh.presentation);
  auto mp = min_poly(induced.matrix);
  SpecPoly minpoly = spec_from_rpoly(mp);
  SpecPoly pulled = minpoly.outer_rescaled(Rational(induced.c1_multiple));
  // compare with the defining relation up to a unit
  SpecPoly normalized = pulled.monic();
  rep.minpoly_match = normalized == sh.presentation.relation;
  if (!rep.minpoly_match)
    detail << "min poly mismatch: " << normalized.to_text("w", sh.presentation.novikov_symbol)
           << " vs " << rep.sh_relation << "; ";

  // critical values vs the c1 spectrum on SH*, as exact polynomials
  SpectrumDescriptor spec_sh = spectrum(induced);
  SpecPoly critpoly = critical_value_polynomial(crit);
  rep.spectrum_match = spec_sh.char_poly == critpoly;
  if (!rep.spectrum_match)
    detail << "spectrum mismatch: char " << spec_sh.char_poly.to_text("x", "t") << " vs crit "
           << critpoly.to_text("x", "t") << "; ";
  rep.detail = detail.str();
  return rep;
}

std::vector<GenerationVerdict> generation_report(const SpectrumDescriptor& spec,
                                                 const CriticalFamily& crit) {
  SpecPoly critpoly = critical_value_polynomial(crit);
  std::vector<GenerationVerdict> out;
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    const SpecFactor& f = spec.factors[i];
    GenerationVerdict v;
    v.eigenvalue_factor = f.factor.to_text("x", "t");
    v.eigenvalue_count = f.factor.degree();
    v.summand_dim = f.multiplicity;
    v.zero_eigenvalue = f.factor.degree() == 1 && f.factor.coeff(0).is_zero();
    if (v.zero_eigenvalue) {
      v.verdict = "inconclusive";
      v.note = "zero eigenvalue: the criterion needs a non-zero critical value";
      out.push_back(std::move(v));
      continue;
    }
    // multiplicity of the factor inside the critical-value polynomial
    SpecPoly rest = critpoly;
    int mult = 0;
    while (rest.divisible_by(f.factor)) {
      rest = rest.divided_exactly_by(f.factor);
      ++mult;
    }
    v.matched_critical_points = mult;
    if (f.multiplicity == 1 && mult == 1) {
      v.verdict = "split-generated";
      v.note = "1-dimensional eigensummand matched by exactly one critical point";
    } else if (mult == 0) {
      v.verdict = "inconclusive";
      v.note = "no critical point at this eigenvalue";
    } else {
      v.verdict = "inconclusive";
      v.note = "eigensummand not 1-dimensional or multiply matched";
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace novalg

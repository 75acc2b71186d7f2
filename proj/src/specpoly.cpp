#include "novalg/specpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace novalg {

SpecPoly SpecPoly::outer_variable(int power) {
  std::vector<PolyQ> c(power + 1);
  c[power] = PolyQ(Rational(1));
  return SpecPoly(std::move(c));
}

SpecPoly SpecPoly::term(const Rational& c, int outer_power, int s_power) {
  std::vector<PolyQ> v(outer_power + 1);
  v[outer_power] = PolyQ::monomial(c, s_power);
  return SpecPoly(std::move(v));
}

SpecPoly SpecPoly::operator-() const {
  SpecPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

SpecPoly operator+(const SpecPoly& a, const SpecPoly& b) {
  std::vector<PolyQ> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return SpecPoly(std::move(v));
}

SpecPoly operator-(const SpecPoly& a, const SpecPoly& b) { return a + (-b); }

SpecPoly operator*(const SpecPoly& a, const SpecPoly& b) {
  if (a.is_zero() || b.is_zero()) return SpecPoly();
  std::vector<PolyQ> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return SpecPoly(std::move(v));
}

SpecPoly SpecPoly::scaled(const Rational& c) const {
  SpecPoly r = *this;
  for (auto& x : r.coeffs_) x = x.scaled(c);
  r.normalize();
  return r;
}

SpecPoly SpecPoly::monic() const {
  if (is_zero()) return *this;
  if (leading().degree() != 0)
    throw malformed_input("SpecPoly::monic with non-constant leading coefficient");
  return scaled(Rational(1) / leading().coeff(0));
}

SpecPoly SpecPoly::pow(long e) const {
  SpecPoly acc = constant(Rational(1));
  SpecPoly b = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  return acc;
}

SpecPoly SpecPoly::outer_rescaled(const Rational& c) const {
  SpecPoly r = *this;
  Rational p(1);
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] = r.coeffs_[i].scaled(p);
    p *= c;
  }
  r.normalize();
  return r;
}

SpecPoly SpecPoly::divided_exactly_by(const SpecPoly& b) const {
  if (b.is_zero()) throw zero_division("SpecPoly division by zero");
  if (b.leading().degree() != 0)
    throw malformed_input("SpecPoly division needs a constant leading coefficient");
  Rational lead = b.leading().coeff(0);
  SpecPoly q;
  SpecPoly r = *this;
  std::vector<PolyQ> qc(std::max<int>(0, degree() - b.degree() + 1));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    PolyQ c = r.leading().scaled(Rational(1) / lead);
    int d = r.degree() - b.degree();
    // r -= c x^d * b
    std::vector<PolyQ> mono(d + 1);
    mono[d] = c;
    SpecPoly m(std::move(mono));
    qc[d] += c;
    r = r - m * b;
  }
  if (!r.is_zero()) throw malformed_input("inexact SpecPoly division");
  return SpecPoly(std::move(qc));
}

bool SpecPoly::divisible_by(const SpecPoly& b) const {
  try {
    (void)divided_exactly_by(b);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string SpecPoly::to_text(const std::string& outer, const std::string& svar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool needs_parens = coeffs_[i].coeffs().size() > 1;
    std::string cs = coeffs_[i].to_text(svar);
    if (i == 0) {
      os << cs;
      continue;
    }
    if (cs == "1") {
    } else if (cs == "-1") {
      os << "-";
    } else if (needs_parens) {
      os << "(" << cs << ")*";
    } else {
      os << cs << "*";
    }
    os << outer;
    if (i != 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

std::vector<int> prime_divisors(int g) {
  std::vector<int> ps;
  for (int p = 2; p * p <= g; ++p) {
    if (g % p == 0) {
      ps.push_back(p);
      while (g % p == 0) g /= p;
    }
  }
  if (g > 1) ps.push_back(g);
  return ps;
}

PolyQ binomial_polyq(int g, const Rational& c) {
  // u^g - c
  PolyQ p = PolyQ::monomial(Rational(1), g);
  return p - PolyQ(c);
}

}  // namespace

std::vector<PolyQ> factor_rational_binomial(int g, const Rational& c) {
  if (c == 0) throw malformed_input("binomial with zero constant");
  if (g == 1) return {binomial_polyq(1, c)};
  for (int p : prime_divisors(g)) {
    if (p == 2) {
      if (c > 0) {
        auto root = rational_nth_root(c, 2);
        if (root) {
          auto left = factor_rational_binomial(g / 2, *root);
          auto right = factor_rational_binomial(g / 2, Rational(-*root));
          left.insert(left.end(), right.begin(), right.end());
          return left;
        }
      }
    } else {
      auto root = rational_nth_root(c, static_cast<unsigned long>(p));
      if (root) {
        if (g == p) {
          // u^p - D^p = (u - D) * D^{p-1} Phi_p(u/D); the cofactor is
          // irreducible (scaled prime cyclotomic)
          std::vector<Rational> cof(p, Rational(0));
          Rational pw(1);
          for (int j = p - 1; j >= 0; --j) {
            cof[j] = pw;
            pw *= *root;
          }
          return {binomial_polyq(1, *root), PolyQ(std::move(cof))};
        }
        throw Error("FactorizationUnsupported",
                    "odd prime-power split with composite cofactor (degree " + std::to_string(g) +
                        ")");
      }
    }
  }
  if (g % 4 == 0) {
    // x^g + 4h^4 splits (Sophie Germain); handled for g = 4 only
    Rational mc = Rational(-c) / Rational(4);
    auto h = rational_nth_root(mc, 4);
    if (h && mc > 0) {
      if (g == 4) {
        PolyQ u = PolyQ::x();
        PolyQ h2 = PolyQ(Rational(2) * *h * *h);
        return {u * u - u.scaled(Rational(2) * *h) + h2, u * u + u.scaled(Rational(2) * *h) + h2};
      }
      throw Error("FactorizationUnsupported", "Sophie-Germain split beyond degree 4");
    }
  }
  return {binomial_polyq(g, c)};  // irreducible by Vahlen-Capelli
}

namespace {

// univariate arithmetic over Q(s) for the squarefree step
using FPoly = std::vector<RatFun>;  // low to high

void ftrim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FPoly fpoly_of(const SpecPoly& p) {
  FPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.push_back(RatFun(p.coeff(i)));
  ftrim(out);
  return out;
}

SpecPoly spec_of(const FPoly& p) {
  std::vector<PolyQ> coeffs;
  PolyQ den(Rational(1));
  for (const auto& c : p) den = den * c.den();
  // clear denominators, then strip the overall content to keep leading 1
  std::vector<PolyQ> cleared;
  for (const auto& c : p) cleared.push_back(c.num() * den.divided_exactly_by(c.den()));
  // normalize monic via the leading coefficient when it is constant
  SpecPoly out{std::move(cleared)};
  if (!out.is_zero() && out.leading().degree() == 0) out = out.monic();
  return out;
}

void fdivrem(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) {
  if (b.empty()) throw zero_division("polynomial division by zero");
  q.assign(std::max<int>(0, static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1),
           RatFun());
  r = a;
  ftrim(r);
  while (r.size() >= b.size() && !r.empty()) {
    RatFun c = r.back() / b.back();
    size_t d = r.size() - b.size();
    q[d] += c;
    for (size_t i = 0; i < b.size(); ++i) r[i + d] -= c * b[i];
    ftrim(r);
  }
}

FPoly fgcd(FPoly a, FPoly b) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    FPoly q, r;
    fdivrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    RatFun lead = a.back();
    for (auto& c : a) c = c / lead;
  }
  return a;
}

FPoly fderivative(const FPoly& p) {
  FPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * RatFun(Rational(static_cast<long>(i))));
  ftrim(d);
  return d;
}

FPoly fdiv_exact(const FPoly& a, const FPoly& b) {
  FPoly q, r;
  fdivrem(a, b, q, r);
  if (!r.empty()) throw malformed_input("inexact division in squarefree decomposition");
  ftrim(q);
  return q;
}

// Yun's algorithm: p = prod part[i]^i (parts squarefree, pairwise coprime).
std::vector<std::pair<SpecPoly, int>> squarefree_decomposition(const SpecPoly& p) {
  FPoly f = fpoly_of(p);
  std::vector<std::pair<SpecPoly, int>> out;
  FPoly g = fgcd(f, fderivative(f));
  if (g.size() <= 1) {
    out.push_back({p, 1});
    return out;
  }
  FPoly w = fdiv_exact(f, g);
  FPoly y = fdiv_exact(fderivative(f), g);
  int i = 1;
  while (true) {
    FPoly wd = fderivative(w);
    FPoly z = y;
    if (z.size() < wd.size()) z.resize(wd.size(), RatFun());
    for (size_t j = 0; j < wd.size(); ++j) z[j] -= wd[j];
    ftrim(z);
    if (z.empty()) {
      if (w.size() > 1) out.push_back({spec_of(w), i});
      break;
    }
    FPoly a = fgcd(w, z);
    if (a.size() > 1) out.push_back({spec_of(a), i});
    w = fdiv_exact(w, a);
    y = fdiv_exact(z, a);
    ++i;
  }
  return out;
}

// Irreducible factorization of a squarefree monic polynomial: an optional
// outer-variable factor, a linear factor, or a binomial x^d - C s^e.
std::vector<SpecPoly> factor_squarefree(const SpecPoly& input) {
  std::vector<SpecPoly> out;
  SpecPoly rest = input;
  if (rest.coeff(0).is_zero()) {
    out.push_back(SpecPoly::outer_variable(1));
    rest = rest.divided_exactly_by(SpecPoly::outer_variable(1));
  }
  if (rest.degree() == 0) return out;
  if (rest.degree() == 1) {
    out.push_back(rest);
    return out;
  }
  int d = rest.degree();
  int nonzero = 0;
  for (int i = 0; i <= d; ++i)
    if (!rest.coeff(i).is_zero()) ++nonzero;
  if (nonzero != 2)
    throw Error("FactorizationUnsupported",
                "only outer powers, linear factors, and binomials x^d - C s^e are supported");
  PolyQ c0 = rest.coeff(0);
  int e = c0.degree();
  for (int i = 0; i < e; ++i)
    if (c0.coeff(i) != 0)
      throw Error("FactorizationUnsupported", "binomial constant term is not a monomial in s");
  Rational c = -c0.coeff(e);

  int g = (e == 0) ? d : std::gcd(d, e);
  int dp = d / g, ep = e / g;
  for (const auto& q : factor_rational_binomial(g, c)) {
    // lift q(u) to s^{ep*deg q} q(x^{dp} / s^{ep})
    int dq = q.degree();
    std::vector<PolyQ> lifted(dp * dq + 1);
    for (int j = 0; j <= dq; ++j) {
      if (q.coeff(j) == 0) continue;
      lifted[dp * j] = PolyQ::monomial(q.coeff(j), ep * (dq - j));
    }
    out.push_back(SpecPoly(std::move(lifted)));
  }
  return out;
}

}  // namespace

std::vector<SpecFactor> factor_spectral(const SpecPoly& p) {
  if (p.is_zero()) throw malformed_input("factoring the zero polynomial");
  if (p.leading().degree() != 0)
    throw Error("FactorizationUnsupported", "non-constant leading coefficient");
  SpecPoly monic = p.monic();
  std::vector<SpecFactor> out;
  if (monic.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(monic)) {
    for (const auto& f : factor_squarefree(part)) out.push_back({f, mult});
  }
  // canonical order: by degree, then by text (stable across runs)
  std::sort(out.begin(), out.end(), [](const SpecFactor& a, const SpecFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.to_text("x", "s") < b.factor.to_text("x", "s");
  });
  return out;
}

}  // namespace novalg

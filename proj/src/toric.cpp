#include "novalg/toric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "novalg/matrix.hpp"

namespace novalg {

namespace {

long vec_gcd(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::abs(x));
  return g;
}

// Fourier-Motzkin feasibility of { y : <y, e_i> >= lambda_i }.
bool feasible(std::vector<std::vector<Rational>> rows, int nvars) {
  // each row: (a_1..a_n | b) meaning sum a_j y_j >= b
  for (int var = 0; var < nvars; ++var) {
    std::vector<std::vector<Rational>> lower, upper, rest;
    for (auto& r : rows) {
      if (r[var] > 0) lower.push_back(r);       // y_var >= ...
      else if (r[var] < 0) upper.push_back(r);  // y_var <= ...
      else rest.push_back(r);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // normalize: lo gives y >= L, up gives y <= U; require L <= U
        std::vector<Rational> combined(rows.front().size(), Rational(0));
        Rational a = lo[var], b = -up[var];
        for (size_t j = 0; j < combined.size(); ++j) combined[j] = lo[j] * b + up[j] * a;
        combined[var] = 0;
        rest.push_back(std::move(combined));
      }
    rows = std::move(rest);
  }
  for (const auto& r : rows) {
    // 0 >= b must hold
    if (r.back() > 0) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> polytope_rows(const MomentPolytope& p) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : p.facets) {
    std::vector<Rational> r(p.dim + 1, Rational(0));
    for (int j = 0; j < p.dim; ++j) r[j] = Rational(f.normal[j]);
    r[p.dim] = f.constant;
    rows.push_back(std::move(r));
  }
  return rows;
}

bool delzant_check(const MomentPolytope& p) {
  int n = p.dim;
  int r = static_cast<int>(p.facets.size());
  if (r < n) return false;
  // enumerate candidate vertices: n-subsets of facets with invertible normal
  // matrix, solution feasible for all facets
  std::vector<int> idx(n);
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == n) {
      Matrix<Rational> a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Rational(p.facets[idx[i]].normal[j]);
      if (a.rank() < n) return true;  // not a vertex candidate
      Matrix<Rational> ainv = a.inverse();
      std::vector<Rational> y(n, Rational(0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += ainv.at(i, j) * p.facets[idx[j]].constant;
      // feasibility and active set
      std::vector<int> active;
      for (int f = 0; f < r; ++f) {
        Rational v(0);
        for (int j = 0; j < n; ++j) v += Rational(p.facets[f].normal[j]) * y[j];
        if (v < p.facets[f].constant) return true;  // outside: not a vertex
        if (v == p.facets[f].constant) active.push_back(f);
      }
      if (static_cast<int>(active.size()) != n) return false;  // not simple
      // edge directions: drop one active facet at a time
      Matrix<Rational> normals(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) normals.at(i, j) = Rational(p.facets[active[i]].normal[j]);
      // rows of normals^{-T} are the edge directions up to sign/scale
      Matrix<Rational> dirs = normals.inverse();  // columns: d_i with <d_i, e_j> = delta_ij
      Matrix<Rational> lattice(n, n);
      for (int c = 0; c < n; ++c) {
        // direction for dropping facet c points inward: <d, e_c> = 1 > 0
        std::vector<Rational> d(n);
        Integer den(1);
        for (int i = 0; i < n; ++i) {
          d[i] = dirs.at(i, c);
          Integer dd = denominator(d[i]);
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dd.get_mpz_t());
        }
        std::vector<long> integral(n);
        long g = 0;
        for (int i = 0; i < n; ++i) {
          Rational scaled_v = d[i] * Rational(den);
          integral[i] = scaled_v.get_num().get_si();
          g = std::gcd(g, std::abs(integral[i]));
        }
        if (g == 0) return false;
        for (int i = 0; i < n; ++i) lattice.at(i, c) = rat(integral[i] / g);
      }
      Rational det = lattice.det();
      if (det != 1 && det != -1) return false;
      return true;
    }
    for (int f = start; f < r; ++f) {
      idx[pos] = f;
      if (!rec(pos + 1, f + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace

PolytopeCheck check_polytope(const MomentPolytope& p, bool run_delzant) {
  PolytopeCheck out;
  out.normals_primitive = true;
  for (const auto& f : p.facets) {
    if (static_cast<int>(f.normal.size()) != p.dim)
      throw malformed_input("facet normal dimension mismatch");
    if (vec_gcd(f.normal) != 1) out.normals_primitive = false;
  }
  out.feasible = feasible(polytope_rows(p), p.dim);
  if (run_delzant) {
    out.delzant_checked = true;
    out.delzant = out.feasible && delzant_check(p);
  }
  return out;
}

MomentPolytope family_polytope(const FamilySpec& f) {
  if (f.m < 1) throw parameter_out_of_range("m must be at least 1");
  MomentPolytope p;
  if (f.family == ToricFamily::projective) {
    p.dim = f.m;
    for (int j = 0; j < f.m; ++j) {
      Facet fc;
      fc.normal.assign(f.m, 0);
      fc.normal[j] = 1;
      fc.constant = Rational(0);
      p.facets.push_back(std::move(fc));
    }
    Facet last;
    last.normal.assign(f.m, -1);
    last.constant = Rational(-1);
    p.facets.push_back(std::move(last));
    return p;
  }
  // negative line bundle O(-k) -> P^m, monotone for 1 <= k <= m
  if (f.k < 1 || f.k > f.m)
    throw parameter_out_of_range("O(-k)->P^m is monotone only for 1 <= k <= m");
  p.dim = f.m + 1;
  for (int j = 0; j < f.m; ++j) {
    Facet fc;
    fc.normal.assign(f.m + 1, 0);
    fc.normal[j] = 1;
    fc.constant = Rational(0);
    p.facets.push_back(std::move(fc));
  }
  Facet mixed;  // sum_{j<=m} y_j - k y_{m+1} <= k
  mixed.normal.assign(f.m + 1, -1);
  mixed.normal[f.m] = f.k;
  mixed.constant = Rational(-f.k);
  p.facets.push_back(std::move(mixed));
  Facet fiber;  // y_{m+1} >= 0
  fiber.normal.assign(f.m + 1, 0);
  fiber.normal[f.m] = 1;
  fiber.constant = Rational(0);
  p.facets.push_back(std::move(fiber));
  return p;
}

Superpotential superpotential(const MomentPolytope& p) {
  Superpotential w;
  w.nvars = p.dim;
  for (const auto& f : p.facets) {
    Superpotential::Term t;
    t.exponents = f.normal;
    t.coeff = NovikovScalar::t_power(Rational(-f.constant));
    w.terms.push_back(std::move(t));
  }
  return w;
}

std::optional<FamilySpec> recognize_family(const Superpotential& w) {
  auto matches = [&](const FamilySpec& f) {
    Superpotential model = superpotential(family_polytope(f));
    if (model.nvars != w.nvars || model.terms.size() != w.terms.size()) return false;
    auto key = [](const Superpotential::Term& t) { return std::make_pair(t.exponents, t.coeff); };
    std::set<std::pair<std::vector<long>, NovikovScalar>> a, b;
    for (const auto& t : model.terms) a.insert(key(t));
    for (const auto& t : w.terms) b.insert(key(t));
    return a == b;
  };
  FamilySpec f;
  f.family = ToricFamily::projective;
  f.m = w.nvars;
  f.k = 0;
  if (f.m >= 1 && matches(f)) return f;
  f.family = ToricFamily::negative_line_bundle;
  f.m = w.nvars - 1;
  if (f.m >= 1) {
    for (int k = 1; k <= f.m; ++k) {
      f.k = k;
      if (matches(f)) return f;
    }
  }
  return std::nullopt;
}

namespace {

// Verifies symbolically that z_i dW/dz_i vanishes on the family
// z_j = scale_j * u with u^D = C t^P: every monomial becomes a rational
// multiple of t^{a} u^{b}; u-powers reduce modulo the relation and the
// total must cancel exactly.
void verify_gradient(const Superpotential& w, const CriticalFamily& fam) {
  int n = w.nvars;
  for (int i = 0; i < n; ++i) {
    // accumulate coefficients per u-residue class
    std::map<int, NovikovScalar> acc;
    for (const auto& term : w.terms) {
      long ei = term.exponents[i];
      if (ei == 0) continue;
      // z^e -> (prod scale_j^{e_j}) u^{sum e_j}
      Rational scale(1);
      long upow = 0;
      for (int j = 0; j < n; ++j) {
        scale *= rational_pow(fam.scale[j], term.exponents[j]);
        upow += term.exponents[j];
      }
      NovikovScalar c = term.coeff * NovikovScalar::constant(Rational(ei) * scale);
      // reduce u^upow into [0, D): u^D = C t^P
      long d = fam.relation_degree;
      while (upow < 0) {
        upow += d;
        c = c * NovikovScalar::monomial(Rational(1) / fam.relation_coeff,
                                        Rational(-fam.relation_t_power));
      }
      while (upow >= d) {
        upow -= d;
        c = c * NovikovScalar::monomial(fam.relation_coeff, fam.relation_t_power);
      }
      auto [it, fresh] = acc.emplace(static_cast<int>(upow), c);
      if (!fresh) it->second += c;
    }
    for (const auto& [residue, c] : acc)
      if (!c.is_zero())
        throw malformed_input("closed-form critical point fails the gradient check");
  }
}

}  // namespace

CriticalFamily critical_points_closed(const Superpotential& w) {
  auto spec = recognize_family(w);
  if (!spec)
    throw malformed_input(
        "superpotential is not in a shipped closed-form family; use the numerical branch");
  CriticalFamily fam;
  fam.family = *spec;
  int m = spec->m;
  if (spec->family == ToricFamily::projective) {
    // z = (u,...,u), u^{1+m} = t
    fam.scale.assign(m, Rational(1));
    fam.relation_degree = 1 + m;
    fam.relation_coeff = Rational(1);
    fam.relation_t_power = Rational(1);
    fam.value_scale = Rational(1 + m);
    fam.coordinate_valuation = rat(1, 1 + m);
  } else {
    // z = (u,...,u,-k u), u^{1+m-k} = (-k)^k t^k
    int k = spec->k;
    fam.scale.assign(m, Rational(1));
    fam.scale.push_back(Rational(-k));
    fam.relation_degree = 1 + m - k;
    fam.relation_coeff = rational_pow(Rational(-k), k);
    fam.relation_t_power = Rational(k);
    fam.value_scale = Rational(1 + m - k);
    fam.coordinate_valuation = rat(k, 1 + m - k);
  }
  verify_gradient(w, fam);
  // interior condition: the valuation point (v, ..., v) must satisfy every
  // facet inequality strictly
  MomentPolytope p = family_polytope(*spec);
  fam.interior = true;
  for (const auto& f : p.facets) {
    Rational lhs(0);
    for (int j = 0; j < p.dim; ++j) lhs += Rational(f.normal[j]) * fam.coordinate_valuation;
    if (!(lhs > f.constant)) fam.interior = false;
  }
  fam.value_nonzero = fam.value_scale != 0 && fam.relation_coeff != 0;
  return fam;
}

// ---------------------------------------------------------------------------
// Numerical branch

namespace {
using Cplx = std::complex<double>;
}  // namespace

std::vector<NumericalCriticalPoint> critical_points_numerical(const Superpotential& w,
                                                              const Rational& t_value,
                                                              unsigned long seed,
                                                              const MomentPolytope& p,
                                                              int starts) {
  double t0 = t_value.get_d();
  if (!(t0 > 0.0 && t0 < 1.0))
    throw parameter_out_of_range("numerical branch needs a rational t with 0 < t < 1");
  int n = w.nvars;
  // specialize coefficients
  struct STerm {
    std::vector<long> e;
    double c;
  };
  std::vector<STerm> terms;
  for (const auto& term : w.terms) {
    if (!term.coeff.is_exact()) throw malformed_input("truncated coefficient in superpotential");
    double c = 0.0;
    for (const auto& [expo, coeff] : term.coeff.terms())
      c += coeff.get_d() * std::pow(t0, expo.get_d());
    terms.push_back({term.exponents, c});
  }
  auto eval_f = [&](const std::vector<Cplx>& z) {
    std::vector<Cplx> f(n, Cplx(0, 0));
    for (const auto& term : terms) {
      Cplx mono(term.c, 0);
      for (int j = 0; j < n; ++j) mono *= std::pow(z[j], static_cast<double>(term.e[j]));
      for (int i = 0; i < n; ++i)
        if (term.e[i] != 0) f[i] += static_cast<double>(term.e[i]) * mono;
    }
    return f;
  };
  auto eval_jac = [&](const std::vector<Cplx>& z) {
    std::vector<std::vector<Cplx>> jac(n, std::vector<Cplx>(n, Cplx(0, 0)));
    for (const auto& term : terms) {
      Cplx mono(term.c, 0);
      for (int j = 0; j < n; ++j) mono *= std::pow(z[j], static_cast<double>(term.e[j]));
      for (int i = 0; i < n; ++i) {
        if (term.e[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (term.e[j] == 0) continue;
          jac[i][j] += static_cast<double>(term.e[i]) * static_cast<double>(term.e[j]) * mono / z[j];
        }
      }
    }
    return jac;
  };
  auto eval_w = [&](const std::vector<Cplx>& z) {
    Cplx val(0, 0);
    for (const auto& term : terms) {
      Cplx mono(term.c, 0);
      for (int j = 0; j < n; ++j) mono *= std::pow(z[j], static_cast<double>(term.e[j]));
      val += mono;
    }
    return val;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(-1.2, 1.2);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.14159265358979323846);

  std::vector<NumericalCriticalPoint> found;
  const double kResidualTol = 1e-12;
  const double kDedup = 1e-6;
  int unconverged = 0;
  for (int s = 0; s < starts; ++s) {
    std::vector<Cplx> z(n);
    for (int j = 0; j < n; ++j) {
      double r = std::pow(t0, mag(rng));
      z[j] = std::polar(r, phase(rng));
    }
    bool ok = true;
    for (int iter = 0; iter < 80; ++iter) {
      std::vector<Cplx> f = eval_f(z);
      double res = 0;
      for (const auto& v : f) res += std::norm(v);
      res = std::sqrt(res);
      if (res < kResidualTol) break;
      auto jac = eval_jac(z);
      // solve jac * dz = -f by Gaussian elimination
      std::vector<std::vector<Cplx>> a = jac;
      std::vector<Cplx> b(n);
      for (int i = 0; i < n; ++i) b[i] = -f[i];
      for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 1e-14;
        for (int i = col; i < n; ++i)
          if (std::abs(a[i][col]) > best) {
            best = std::abs(a[i][col]);
            piv = i;
          }
        if (piv < 0) {
          ok = false;
          break;
        }
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int i = 0; i < n; ++i) {
          if (i == col) continue;
          Cplx f2 = a[i][col] / a[col][col];
          for (int j = col; j < n; ++j) a[i][j] -= f2 * a[col][j];
          b[i] -= f2 * b[col];
        }
      }
      if (!ok) break;
      double step = 0;
      for (int i = 0; i < n; ++i) {
        Cplx dz = b[i] / a[i][i];
        z[i] += dz;
        step += std::abs(dz);
        if (std::abs(z[i]) < 1e-14) ok = false;  // fell into a pole
      }
      if (!ok || step < 1e-16) break;
    }
    if (!ok) {
      ++unconverged;
      continue;
    }
    std::vector<Cplx> f = eval_f(z);
    double res = 0;
    for (const auto& v : f) res += std::norm(v);
    res = std::sqrt(res);
    if (res >= kResidualTol) {
      ++unconverged;
      continue;
    }
    bool dup = false;
    for (const auto& q : found) {
      double d = 0;
      for (int j = 0; j < n; ++j) d += std::abs(z[j] - q.z[j]);
      if (d < kDedup) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    NumericalCriticalPoint pt;
    pt.z = z;
    pt.residual = res;
    pt.valuation_estimate.resize(n);
    double logt = std::log(t0);
    pt.interior = true;
    for (int j = 0; j < n; ++j) pt.valuation_estimate[j] = std::log(std::abs(z[j])) / logt;
    for (const auto& fc : p.facets) {
      double lhs = 0;
      for (int j = 0; j < n; ++j) lhs += static_cast<double>(fc.normal[j]) * pt.valuation_estimate[j];
      if (lhs <= fc.constant.get_d() + 1e-6) pt.interior = false;
    }
    pt.value = eval_w(z);
    pt.value_nonzero = std::abs(pt.value) > 1e-9;
    found.push_back(std::move(pt));
  }
  if (found.empty() && unconverged == starts)
    throw numerical_nonconvergence(
        "no start converged (" + std::to_string(unconverged) + "/" + std::to_string(starts) +
        "); the critical set may be empty or the system degenerate");
  // canonical order for determinism
  std::sort(found.begin(), found.end(), [](const NumericalCriticalPoint& a,
                                           const NumericalCriticalPoint& b) {
    for (size_t j = 0; j < a.z.size(); ++j) {
      if (std::abs(a.z[j].real() - b.z[j].real()) > 1e-9) return a.z[j].real() < b.z[j].real();
      if (std::abs(a.z[j].imag() - b.z[j].imag()) > 1e-9) return a.z[j].imag() < b.z[j].imag();
    }
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Jacobian rank

JacobianData jacobian_rank(const Superpotential& w, const std::vector<Rational>& t_values) {
  if (t_values.size() < 2)
    throw malformed_input("jacobian_rank needs at least 2 distinct nonzero specializations");
  for (const auto& t : t_values)
    if (t == 0) throw malformed_input("t = 0 is not an admissible specialization");
  JacobianData out;
  out.specializations = t_values;
  int n = w.nvars;
  int nv = 2 * n;  // z_1..z_n, u_1..u_n
  for (size_t sidx = 0; sidx < t_values.size(); ++sidx) {
    const Rational& t0 = t_values[sidx];
    std::vector<MPoly> gens;
    for (int i = 0; i < n; ++i) {
      // clear Laurent denominators of z_i dW/dz_i individually
      std::vector<long> shift(n, 0);
      for (const auto& term : w.terms) {
        if (term.exponents[i] == 0) continue;
        for (int j = 0; j < n; ++j) shift[j] = std::max(shift[j], -term.exponents[j]);
      }
      MPoly g(nv);
      for (const auto& term : w.terms) {
        if (term.exponents[i] == 0) continue;
        Rational c(0);
        for (const auto& [expo, coeff] : term.coeff.terms()) {
          if (!is_integer(expo))
            throw malformed_input("jacobian specialization needs integer t-exponents");
          c += coeff * rational_pow(t0, expo.get_num().get_si());
        }
        c *= Rational(term.exponents[i]);
        Monomial m;
        m.e.assign(nv, 0);
        for (int j = 0; j < n; ++j) m.e[j] = static_cast<int>(term.exponents[j] + shift[j]);
        g.add_term(m, c);
      }
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    for (int i = 0; i < n; ++i) {
      // z_i u_i - 1
      MPoly g(nv);
      Monomial m;
      m.e.assign(nv, 0);
      m.e[i] = 1;
      m.e[n + i] = 1;
      g.add_term(m, Rational(1));
      Monomial one;
      one.e.assign(nv, 0);
      g.add_term(one, Rational(-1));
      gens.push_back(std::move(g));
    }
    std::vector<MPoly> gb = buchberger(std::move(gens));
    QuotientBasis qb = quotient_basis(gb, nv);
    if (!qb.finite)
      throw non_zero_dimensional_ideal("specialized Jacobian ideal is not zero-dimensional at t=" +
                                       t0.get_str());
    out.ranks.push_back(static_cast<int>(qb.basis.size()));
    if (sidx == 0) {
      std::vector<std::string> names;
      for (int j = 0; j < n; ++j) names.push_back("z" + std::to_string(j + 1));
      for (int j = 0; j < n; ++j) names.push_back("z" + std::to_string(j + 1) + "^-1");
      for (const auto& m : qb.basis) {
        MPoly mono(nv);
        mono.add_term(m, Rational(1));
        out.basis.push_back(mono.to_text(names));
      }
    }
  }
  out.stable = std::adjacent_find(out.ranks.begin(), out.ranks.end(), std::not_equal_to<>()) ==
               out.ranks.end();
  out.rank = *std::max_element(out.ranks.begin(), out.ranks.end());
  return out;
}

}  // namespace novalg

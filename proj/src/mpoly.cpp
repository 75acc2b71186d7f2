#include "novalg/mpoly.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace novalg {

bool degrevlex_less(const Monomial& a, const Monomial& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  // a < b iff the rightmost nonzero entry of a-b is positive
  for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d > 0;
  }
  return false;
}

int MPoly::total_degree() const {
  int t = -1;
  for (const auto& [m, c] : terms_) t = std::max(t, m.total());
  return t;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const std::pair<Monomial, Rational>& t, const Monomial& mm) {
        return degrevlex_less(mm, t.first);  // descending order
      });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, Rational(-c));
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::times_term(const Rational& c, const Monomial& m) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [mm, v] : r.terms_) {
    mm = mm * m;
    v *= c;
  }
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_);
  for (const auto& [m, c] : b.terms_) r = r + a.times_term(c, m);
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly r(nvars);
  Monomial one;
  one.e.assign(nvars, 0);
  r.add_term(one, c);
  return r;
}

MPoly MPoly::variable(int nvars, int i, int power) {
  MPoly r(nvars);
  Monomial m;
  m.e.assign(nvars, 0);
  m.e[i] = power;
  r.add_term(m, Rational(1));
  return r;
}

std::string MPoly::to_text(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rational a = (!first && c < 0) ? Rational(-c) : c;
    first = false;
    bool printed = false;
    if (a != 1 || m.total() == 0) {
      os << a.get_str();
      printed = true;
    }
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (m.e[i] != 1) os << "^" << m.e[i];
      printed = true;
    }
  }
  return os.str();
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g) {
  MPoly r(f.nvars());
  MPoly h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& gi : g) {
      if (gi.is_zero()) continue;
      if (gi.leading_monomial().divides(h.leading_monomial())) {
        Rational c = h.leading_coeff() / gi.leading_coeff();
        Monomial q = gi.leading_monomial().quotient_of(h.leading_monomial());
        h = h - gi.times_term(c, q);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.add_term(h.leading_monomial(), h.leading_coeff());
      MPoly lt(h.nvars());
      lt.add_term(h.leading_monomial(), h.leading_coeff());
      h = h - lt;
    }
  }
  return r;
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;  // smaller sugar first
    if (!(a.lcm == b.lcm)) return degrevlex_less(b.lcm, a.lcm);
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

}  // namespace

std::vector<MPoly> buchberger(std::vector<MPoly> gens) {
  std::vector<MPoly> g;
  std::vector<int> sugar;
  for (auto& f : gens) {
    if (f.is_zero()) continue;
    g.push_back(f.monic());
    sugar.push_back(f.total_degree());
  }
  std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const Monomial& a = g[i].leading_monomial();
      const Monomial& b = g[j].leading_monomial();
      if (a.coprime(b)) continue;  // product criterion
      Pair p;
      p.i = i;
      p.j = j;
      p.lcm = Monomial::lcm(a, b);
      p.sugar = std::max(sugar[i] + p.lcm.total() - a.total(),
                         sugar[j] + p.lcm.total() - b.total());
      queue.push(std::move(p));
    }
  };
  for (int j = 0; j < static_cast<int>(g.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    // chain criterion: some other leading monomial strictly divides the lcm
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (g[k].leading_monomial().divides(p.lcm)) {
        Monomial l1 = Monomial::lcm(g[p.i].leading_monomial(), g[k].leading_monomial());
        Monomial l2 = Monomial::lcm(g[p.j].leading_monomial(), g[k].leading_monomial());
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) skip = true;
      }
    }
    if (skip) continue;
    const MPoly& fi = g[p.i];
    const MPoly& fj = g[p.j];
    MPoly s = fi.times_term(Rational(1), fi.leading_monomial().quotient_of(p.lcm)) -
              fj.times_term(Rational(1), fj.leading_monomial().quotient_of(p.lcm));
    MPoly r = normal_form(s, g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    sugar.push_back(std::max(
        {p.sugar, r.total_degree()}));
    push_pairs(static_cast<int>(g.size()) - 1);
  }

  // minimalize: drop anything whose leading monomial is divisible by another
  std::vector<MPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j].leading_monomial().divides(g[i].leading_monomial())) {
        if (!(g[j].leading_monomial() == g[i].leading_monomial()) || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // interreduce tails
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
    return degrevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

QuotientBasis quotient_basis(const std::vector<MPoly>& gb, int nvars) {
  QuotientBasis out;
  for (const auto& f : gb) {
    if (!f.is_zero() && f.leading_monomial().total() == 0) {
      out.finite = true;
      out.unit_ideal = true;
      return out;  // quotient is the zero ring
    }
  }
  // zero-dimensionality: every variable has a pure power among the leading
  // monomials
  std::vector<int> cap(nvars, -1);
  for (const auto& f : gb) {
    const Monomial& m = f.leading_monomial();
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (m.e[i] > 0) {
        if (nz >= 0) {
          pure = false;
          break;
        }
        nz = i;
      }
    }
    if (pure && nz >= 0) {
      if (cap[nz] < 0 || m.e[nz] < cap[nz]) cap[nz] = m.e[nz];
    }
  }
  for (int i = 0; i < nvars; ++i)
    if (cap[i] < 0) return out;  // not zero-dimensional
  out.finite = true;
  // enumerate monomials below the caps, keeping those not divisible by any
  // leading monomial
  std::vector<Monomial> lead;
  for (const auto& f : gb) lead.push_back(f.leading_monomial());
  Monomial m;
  m.e.assign(nvars, 0);
  std::function<void(int)> rec = [&](int var) {
    if (var == nvars) {
      for (const auto& l : lead)
        if (l.divides(m)) return;
      out.basis.push_back(m);
      return;
    }
    for (int k = 0; k < cap[var]; ++k) {
      m.e[var] = k;
      rec(var + 1);
    }
    m.e[var] = 0;
  };
  rec(0);
  std::sort(out.basis.begin(), out.basis.end(), degrevlex_less);
  return out;
}

}  // namespace novalg

#pragma once

// Shared test fixtures: small graded associative algebras, random graded
// base changes, and builders for the morphism/functor test cases.

#include <random>
#include <string>
#include <vector>

#include "novalg/ainf.hpp"
#include "novalg/matrix.hpp"

namespace fixtures {

using novalg::BasisElement;
using novalg::Rational;

// table[i][j] = expansion of b_i * b_j
using MulTable = std::vector<std::vector<std::vector<std::pair<int, Rational>>>>;

struct Algebra {
  std::string name;
  std::vector<BasisElement> basis;
  MulTable table;
};

inline MulTable empty_table(int n) {
  return MulTable(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
}

inline Algebra truncated_polynomial(int n, int xdeg) {
  // Q[x]/x^n with |x| = xdeg
  Algebra a;
  a.name = "Q[x]/x^" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    a.basis.push_back({i == 0 ? "e" : "x" + std::to_string(i), i * xdeg});
  a.table = empty_table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) a.table[i][j] = {{i + j, Rational(1)}};
  return a;
}

inline Algebra group_algebra_cyclic(int n) {
  Algebra a;
  a.name = "Q[Z/" + std::to_string(n) + "]";
  for (int i = 0; i < n; ++i) a.basis.push_back({"g" + std::to_string(i), 0});
  a.table = empty_table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.table[i][j] = {{(i + j) % n, Rational(1)}};
  return a;
}

inline Algebra exterior_one() {
  // e (deg 0), theta (deg 1), theta^2 = 0
  Algebra a;
  a.name = "Lambda[theta]";
  a.basis = {{"e", 0}, {"th", 1}};
  a.table = empty_table(2);
  a.table[0][0] = {{0, Rational(1)}};
  a.table[0][1] = {{1, Rational(1)}};
  a.table[1][0] = {{1, Rational(1)}};
  return a;
}

inline Algebra exterior_two() {
  // e, th1, th2 (deg 1), w = th1 th2 (deg 2), th2 th1 = -w
  Algebra a;
  a.name = "Lambda[th1,th2]";
  a.basis = {{"e", 0}, {"th1", 1}, {"th2", 1}, {"w", 2}};
  a.table = empty_table(4);
  for (int i = 0; i < 4; ++i) {
    a.table[0][i] = {{i, Rational(1)}};
    a.table[i][0] = {{i, Rational(1)}};
  }
  a.table[1][2] = {{3, Rational(1)}};
  a.table[2][1] = {{3, Rational(-1)}};
  return a;
}

inline Algebra upper_triangular_2x2() {
  // span{e11, u = e12, e22}: path algebra of the A2 quiver
  Algebra a;
  a.name = "UT2";
  a.basis = {{"e11", 0}, {"u", 0}, {"e22", 0}};
  a.table = empty_table(3);
  a.table[0][0] = {{0, Rational(1)}};  // e11 e11
  a.table[0][1] = {{1, Rational(1)}};  // e11 u = u
  a.table[1][2] = {{1, Rational(1)}};  // u e22 = u
  a.table[2][2] = {{2, Rational(1)}};  // e22 e22
  return a;
}

inline Algebra dual_numbers() { return truncated_polynomial(2, 0); }

inline Algebra matrix_2x2() {
  Algebra a;
  a.name = "M2(Q)";
  a.basis = {{"e11", 0}, {"e12", 0}, {"e21", 0}, {"e22", 0}};
  a.table = empty_table(4);
  auto unit = [](int i, int j) { return i * 2 + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) a.table[unit(i, j)][unit(k, l)] = {{unit(i, l), Rational(1)}};
  return a;
}

// Permutes basis labels and rescales basis vectors by nonzero rationals.
// These transports commute with single-entry sign flips, so they randomize
// structures without creating undetectable flip directions.
inline Algebra permuted_scaled(const Algebra& a, std::mt19937_64& rng) {
  int n = static_cast<int>(a.basis.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  // degree-preserving permutation
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    int j = pick(rng);
    if (a.basis[perm[i]].degree == a.basis[perm[j]].degree) std::swap(perm[i], perm[j]);
  }
  std::uniform_int_distribution<long> num(-3, 3);
  std::vector<Rational> scale(n);
  for (auto& s : scale) {
    long v = num(rng);
    if (v == 0) v = 1;
    s = Rational(v);
  }
  Algebra out;
  out.name = a.name + "+scaled";
  out.basis.resize(n);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  for (int i = 0; i < n; ++i) out.basis[i] = a.basis[perm[i]];
  out.table = empty_table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.table[perm[i]][perm[j]])
        out.table[i][j].push_back({inv[k], c * scale[i] * scale[j] / scale[inv[k]]});
  return out;
}

// Rigid fixtures: every single-entry sign flip breaks the relations (checked
// in the acceptance suite); randomized via permuted_scaled.
inline Algebra random_rigid_algebra(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 4);
  Algebra a;
  switch (pick(rng)) {
    case 0: a = dual_numbers(); break;
    case 1: a = exterior_one(); break;
    case 2: a = upper_triangular_2x2(); break;
    case 3: a = matrix_2x2(); break;
    default: a = group_algebra_cyclic(3); break;
  }
  return permuted_scaled(a, rng);
}

// Transports the table through an invertible graded change of basis
// b'_i = sum_j g(j,i) b_j. Grading blocks are respected by only mixing basis
// elements of equal degree.
inline Algebra base_changed(const Algebra& a, std::mt19937_64& rng) {
  int n = static_cast<int>(a.basis.size());
  novalg::Matrix<Rational> g(n, n);
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g.at(i, j) = (a.basis[i].degree == a.basis[j].degree) ? Rational(entry(rng)) : Rational(0);
    if (g.rank() == n) break;
  }
  novalg::Matrix<Rational> ginv = g.inverse();
  Algebra out;
  out.name = a.name + "+basechange";
  out.basis = a.basis;
  for (auto& b : out.basis) b.label += "'";
  out.table = empty_table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> acc(n, Rational(0));
      for (int p = 0; p < n; ++p) {
        if (g.at(p, i) == 0) continue;
        for (int q = 0; q < n; ++q) {
          if (g.at(q, j) == 0) continue;
          for (const auto& [k, c] : a.table[p][q]) {
            Rational w = g.at(p, i) * g.at(q, j) * c;
            for (int l = 0; l < n; ++l) acc[l] += w * ginv.at(l, k);
          }
        }
      }
      for (int l = 0; l < n; ++l)
        if (acc[l] != 0) out.table[i][j].push_back({l, acc[l]});
    }
  return out;
}

inline Algebra random_algebra(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 6);
  Algebra a;
  switch (pick(rng)) {
    case 0: a = truncated_polynomial(2, 0); break;
    case 1: a = truncated_polynomial(3, 0); break;
    case 2: a = truncated_polynomial(4, 2); break;
    case 3: a = group_algebra_cyclic(2); break;
    case 4: a = group_algebra_cyclic(3); break;
    case 5: a = exterior_one(); break;
    default: a = exterior_two(); break;
  }
  return base_changed(a, rng);
}

inline novalg::AInfStructure to_structure(const Algebra& a) {
  return novalg::from_associative("o", a.basis, a.table);
}

}  // namespace fixtures

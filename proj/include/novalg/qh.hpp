#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novalg/matrix.hpp"
#include "novalg/specpoly.hpp"
#include "novalg/toric.hpp"

namespace novalg {

// Quantum cohomology presentation Lambda[w]/(relation) with the monomial
// basis {1, w, ..., w^{rank-1}} and the first-Chern-class multiple.
struct QuantumPresentation {
  FamilySpec family;
  std::string novikov_symbol;  // "T" for P^m, "t" for the line bundles
  SpecPoly relation;           // monic in w, coefficients in Q[symbol]
  int rank = 0;                // = deg relation
  int c1_multiple = 0;         // c1 acts as c1_multiple * w
  int generator_degree = 2;    // |w|
};

// P^m: Lambda[w]/(w^{1+m} - T), c1 = (1+m) w.
// O(-k)->P^m (1 <= k <= m/2): Lambda[w]/(w^k (w^{1+m-k} - (-k)^k t^k)),
// c1(TE) = (1+m-k) w. The window m/2 < k <= m is refused.
QuantumPresentation presentation(const FamilySpec& f);

struct C1Operator {
  Matrix<RatFun> matrix;  // quantum product by c1 in the monomial basis
  int c1_multiple = 0;
  QuantumPresentation presentation;
};

C1Operator c1_operator(const QuantumPresentation& p);

// Matrix of multiplication by w (for the commutation property test).
Matrix<RatFun> w_operator(const QuantumPresentation& p);

struct SpectrumDescriptor {
  SpecPoly char_poly;               // of the c1 operator
  std::vector<SpecFactor> factors;  // irreducible over Q[s], with multiplicity
  // generalized eigensummand dimension of each root of the factor
  // (= multiplicity); the total block of the factor is deg * multiplicity
  std::vector<int> factor_block_dims;
  int zero_block_dim = 0;  // generalized 0-eigenvalue block
  int rank = 0;
};

// Exact factored spectrum; the per-factor block dimensions are cross-checked
// against exact kernel-power ranks.
SpectrumDescriptor spectrum(const C1Operator& op);

struct ShQuotient {
  QuantumPresentation presentation;  // induced presentation of SH*
  int kernel_dim = 0;                // dim ker(r^n) (= k for the bundles)
  int stabilization_exponent = 0;    // minimal n with ker r^n = ker r^{n+1}
  bool automorphism = false;         // induced c1 action invertible
};

// SH*(E) = QH*(E)/ker(r^n) with n = rank (a safe bound >= rank H*(B)).
// Refused for the projective family (NotABundleFamily).
ShQuotient sh_quotient(const QuantumPresentation& p);

struct ComparisonReport {
  bool rank_match = false;
  bool minpoly_match = false;   // min poly of c1 on SH* = relation under
                                // lambda = (1+m-k) w, up to a unit
  bool spectrum_match = false;  // critical values of W_E = spectrum of c1 on
                                // SH* as a polynomial identity
  std::string sh_relation;
  std::string detail;           // human-readable diff when something fails
  bool ok() const { return rank_match && minpoly_match && spectrum_match; }
};

ComparisonReport jacobian_comparison(const ShQuotient& sh, const JacobianData& jac,
                                     const CriticalFamily& crit);

struct GenerationVerdict {
  std::string eigenvalue_factor;  // irreducible factor of the char poly
  int eigenvalue_count = 0;       // number of eigenvalues it carries (= deg)
  int summand_dim = 0;            // generalized summand dim per eigenvalue
  bool zero_eigenvalue = false;
  int matched_critical_points = 0;  // per eigenvalue
  std::string verdict;              // "split-generated" | "inconclusive"
  std::string note;
};

// Bookkeeping of the split-generation criterion: a nonzero eigenvalue whose
// generalized summand is 1-dimensional and which is hit by exactly one
// critical value of W gets "split-generated"; the zero block and anything
// unmatched stay "inconclusive".
std::vector<GenerationVerdict> generation_report(const SpectrumDescriptor& spec,
                                                 const CriticalFamily& crit);

// The multiset of critical values as a polynomial: prod (x - V u) over
// u^D = C t^P, i.e. x^D - V^D C t^P.
SpecPoly critical_value_polynomial(const CriticalFamily& crit);

}  // namespace novalg

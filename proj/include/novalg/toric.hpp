#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "novalg/mpoly.hpp"
#include "novalg/novikov.hpp"

namespace novalg {

// ---------------------------------------------------------------------------
// Moment polytopes { y : <y, e_i> >= lambda_i }

struct Facet {
  std::vector<long> normal;  // primitive inward normal e_i
  Rational constant;         // lambda_i
};

struct MomentPolytope {
  int dim = 0;
  std::vector<Facet> facets;
};

struct PolytopeCheck {
  bool normals_primitive = false;
  bool feasible = false;  // the polytope is nonempty
  bool delzant_checked = false;
  bool delzant = false;  // every vertex is smooth (n edges forming a Z-basis)
};

PolytopeCheck check_polytope(const MomentPolytope& p, bool run_delzant = true);

enum class ToricFamily { projective, negative_line_bundle };

struct FamilySpec {
  ToricFamily family = ToricFamily::projective;
  int m = 1;
  int k = 0;  // only for the line bundle
};

// Delta_{P^m} = {y >= 0, sum y_j <= 1};
// O(-k)->P^m: {y_1..y_m >= 0, sum_{j<=m} y_j - k y_{m+1} <= k, y_{m+1} >= 0},
// monotone for 1 <= k <= m. Throws ParameterOutOfRange.
MomentPolytope family_polytope(const FamilySpec& f);

// ---------------------------------------------------------------------------
// Superpotential W = sum t^{-lambda_i} z^{e_i}

struct Superpotential {
  int nvars = 0;
  struct Term {
    std::vector<long> exponents;
    NovikovScalar coeff;
  };
  std::vector<Term> terms;
};

Superpotential superpotential(const MomentPolytope& p);

// Recognizes the two shipped families from the exact shape of W.
std::optional<FamilySpec> recognize_family(const Superpotential& w);

// ---------------------------------------------------------------------------
// Critical points

// The closed-form critical locus of a shipped family: the points are
// z_j = scale_j * u where u ranges over the roots of
// u^relation_degree = relation_coeff * t^relation_t_power, and the critical
// value is value_scale * u.
struct CriticalFamily {
  FamilySpec family;
  std::vector<Rational> scale;   // per coordinate
  int relation_degree = 1;       // number of critical points
  Rational relation_coeff;       // e.g. (-k)^k
  Rational relation_t_power;     // e.g. k
  Rational value_scale;          // W(z_crit) = value_scale * u
  Rational coordinate_valuation; // val_t of every coordinate
  bool interior = false;         // valuation point lies strictly inside Delta
  bool value_nonzero = false;
};

// Exact critical points for a recognized family; the gradient residual is
// verified symbolically in Q[u, t^{+-}]/(u^D - C t^P) and the valuation
// condition is checked against the family polytope. EmptyCriticalSet cannot
// occur for these families.
CriticalFamily critical_points_closed(const Superpotential& w);

struct NumericalCriticalPoint {
  std::vector<std::complex<double>> z;
  double residual = 0.0;
  std::vector<double> valuation_estimate;  // log|z_j| / log t
  bool interior = false;
  std::complex<double> value;              // W(z)
  bool value_nonzero = false;
};

// Multistart Newton on z_i dW/dz_i = 0 at a rational specialization of t
// (0 < t < 1 so valuations can be estimated). Deterministic given the seed.
// Residual certification threshold 1e-12, deduplication radius 1e-6.
std::vector<NumericalCriticalPoint> critical_points_numerical(const Superpotential& w,
                                                              const Rational& t_value,
                                                              unsigned long seed,
                                                              const MomentPolytope& p,
                                                              int starts = 200);

// ---------------------------------------------------------------------------
// Jacobian ring

struct JacobianData {
  std::vector<Rational> specializations;
  std::vector<int> ranks;          // per specialization
  int rank = 0;                    // agreed (or max, flagged)
  bool stable = false;             // all specializations agree
  std::vector<std::string> basis;  // standard monomials at the first value
};

// Rank of Lambda[z^{+-}]/(z_i dW/dz_i) at rational specializations of t:
// Laurent denominators cleared, inverses adjoined via z_i*u_i = 1, reduced
// Groebner basis over Q in degrevlex. Throws NonZeroDimensionalIdeal when
// the specialized ideal is not zero-dimensional; the unit ideal yields
// rank 0 with an empty basis.
JacobianData jacobian_rank(const Superpotential& w, const std::vector<Rational>& t_values);

}  // namespace novalg

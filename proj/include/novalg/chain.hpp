#pragma once

#include <map>
#include <string>
#include <vector>

#include "novalg/matrix.hpp"
#include "novalg/novikov.hpp"
#include "novalg/ratfun.hpp"

namespace novalg {

// Finite chain complex over the fraction field Q(s), s = t^(1/N), with
// integer-graded spaces and a differential of fixed degree (+1 or -1).
// d o d = 0 is checked exactly at finalize.
class ChainComplex {
public:
  explicit ChainComplex(int d_degree = -1) : d_degree_(d_degree) {}

  int d_degree() const { return d_degree_; }
  void set_basis(int degree, std::vector<std::string> labels);
  void set_differential(int degree, Matrix<RatFun> m);
  void finalize();
  bool finalized() const { return finalized_; }

  const std::map<int, std::vector<std::string>>& spaces() const { return spaces_; }
  int dim(int degree) const;
  bool has_differential(int degree) const { return diffs_.count(degree) > 0; }
  // The block C_degree -> C_{degree + d_degree}; a zero matrix if absent.
  Matrix<RatFun> differential(int degree) const;

  // Exact homology ranks per degree, over Q(s).
  std::map<int, int> homology_ranks() const;
  // Fast cross-check: ranks after specializing s to a rational value
  // (generic values give the same answer; poles/degeneration throw or
  // produce a differing rank caught by the caller).
  std::map<int, int> homology_ranks_specialized(const Rational& s0) const;

private:
  int d_degree_;
  std::map<int, std::vector<std::string>> spaces_;
  std::map<int, Matrix<RatFun>> diffs_;
  bool finalized_ = false;
};

// den must divide num * s^k for export; entries of complexes built from
// Novikov data are always Laurent.
NovikovScalar novikov_from_ratfun(const RatFun& f, long lattice);

}  // namespace novalg

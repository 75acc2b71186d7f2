#include "novalg/chain.hpp"

namespace novalg {

void ChainComplex::set_basis(int degree, std::vector<std::string> labels) {
  if (labels.empty()) return;
  spaces_[degree] = std::move(labels);
}

void ChainComplex::set_differential(int degree, Matrix<RatFun> m) {
  if (m.rows() == 0 || m.cols() == 0) return;
  if (m.is_zero()) return;
  diffs_[degree] = std::move(m);
}

int ChainComplex::dim(int degree) const {
  auto it = spaces_.find(degree);
  return it == spaces_.end() ? 0 : static_cast<int>(it->second.size());
}

Matrix<RatFun> ChainComplex::differential(int degree) const {
  auto it = diffs_.find(degree);
  if (it != diffs_.end()) return it->second;
  return Matrix<RatFun>(dim(degree + d_degree_), dim(degree));
}

void ChainComplex::finalize() {
  for (const auto& [deg, m] : diffs_) {
    if (m.cols() != dim(deg) || m.rows() != dim(deg + d_degree_))
      throw malformed_input("differential block at degree " + std::to_string(deg) +
                            " has inconsistent shape");
  }
  for (const auto& [deg, m] : diffs_) {
    auto it = diffs_.find(deg + d_degree_);
    if (it == diffs_.end()) continue;
    if (!(it->second * m).is_zero())
      throw malformed_input("d o d != 0 at degree " + std::to_string(deg));
  }
  finalized_ = true;
}

std::map<int, int> ChainComplex::homology_ranks() const {
  std::map<int, int> ranks;
  for (const auto& [deg, basis] : spaces_) {
    int n = static_cast<int>(basis.size());
    int rank_out = differential(deg).rank();
    int rank_in = differential(deg - d_degree_).rank();
    ranks[deg] = n - rank_out - rank_in;
  }
  return ranks;
}

std::map<int, int> ChainComplex::homology_ranks_specialized(const Rational& s0) const {
  auto specialize = [&](const Matrix<RatFun>& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).eval(s0);
    return out;
  };
  std::map<int, int> ranks;
  for (const auto& [deg, basis] : spaces_) {
    int n = static_cast<int>(basis.size());
    int rank_out = specialize(differential(deg)).rank();
    int rank_in = specialize(differential(deg - d_degree_)).rank();
    ranks[deg] = n - rank_out - rank_in;
  }
  return ranks;
}

NovikovScalar novikov_from_ratfun(const RatFun& f, long lattice) {
  if (f.is_zero()) return NovikovScalar::zero();
  const PolyQ& den = f.den();
  // require den = s^k
  int k = den.degree();
  for (int i = 0; i < k; ++i)
    if (den.coeff(i) != 0)
      throw malformed_input("entry is not a Laurent polynomial: " + f.to_text());
  NovikovScalar out;
  for (int i = 0; i <= f.num().degree(); ++i) {
    Rational c = f.num().coeff(i);
    if (c == 0) continue;
    out += NovikovScalar::monomial(c / den.coeff(k), rat(i - k, lattice));
  }
  return out;
}

}  // namespace novalg

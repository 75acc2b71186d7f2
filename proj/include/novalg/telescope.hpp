#pragma once

#include <map>
#include <vector>

#include "novalg/chain.hpp"

namespace novalg {

// Degree-0 map between cohomological complexes, one block per degree.
struct DegreeMap {
  std::map<int, Matrix<RatFun>> blocks;

  Matrix<RatFun> block(int degree, const ChainComplex& from, const ChainComplex& to) const {
    auto it = blocks.find(degree);
    if (it != blocks.end()) return it->second;
    return Matrix<RatFun>(to.dim(degree), from.dim(degree));
  }
};

bool is_chain_map(const DegreeMap& k, const ChainComplex& from, const ChainComplex& to);

// Stages C_1..C_W (cohomological) and connecting chain maps K_w: C_w -> C_{w+1}.
struct TelescopeData {
  std::vector<ChainComplex> stages;
  std::vector<DegreeMap> maps;  // maps[w]: stages[w] -> stages[w+1]

  int width() const { return static_cast<int>(stages.size()); }
};

// The finite telescope on stages a..b (1-based, inclusive): the direct sum of
// C_w[q] for w = a..b-1 plus C_b, q of degree -1 with q^2 = 0, and the
// differential mu^1(x + qy) = (-1)^{|x|} dx + (-1)^{|y|}(q dy + Ky - y)
// in unreduced degrees. d^2 = 0 holds exactly iff every K is a chain map;
// throws ConnectingMapNotChainMap otherwise.
ChainComplex telescope_range(const TelescopeData& t, int a, int b);
ChainComplex telescope(const TelescopeData& t);

struct FiltrationItem {
  int b = 0;
  std::map<int, int> stage_ranks;   // H(C_b) of the bare stage
  std::map<int, int> top_ranks;     // H(C^b_b)
  std::map<int, int> full_ranks;    // H(C^1_b)
  bool top_equals_stage = false;    // item (2) analog
  bool top_equals_full = false;     // item (4): C^b_b into C^1_b is rank-equal
};

struct FiltrationReport {
  std::vector<FiltrationItem> items;
  std::map<int, int> telescope_ranks;  // H(C^1_W)
};

FiltrationReport telescope_filtration_report(const TelescopeData& t);

}  // namespace novalg

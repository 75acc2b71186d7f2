#include "novalg/telescope.hpp"

#include <string>

namespace novalg {

bool is_chain_map(const DegreeMap& k, const ChainComplex& from, const ChainComplex& to) {
  if (from.d_degree() != to.d_degree()) return false;
  int dd = from.d_degree();
  // degrees where anything lives
  std::map<int, bool> degrees;
  for (const auto& [d, b] : from.spaces()) degrees[d] = true;
  for (const auto& [d, m] : k.blocks) degrees[d] = true;
  for (const auto& [d, used] : degrees) {
    Matrix<RatFun> lhs = to.differential(d) * k.block(d, from, to);
    Matrix<RatFun> rhs = k.block(d + dd, from, to) * from.differential(d);
    if (!(lhs - rhs).is_zero()) return false;
  }
  return true;
}

namespace {

struct TelescopeIndex {
  // per telescope degree: list of (stage w 1-based, is_q, stage index)
  std::map<int, std::vector<std::tuple<int, bool, int>>> gens;
  std::map<int, std::map<std::tuple<int, bool, int>, int>> pos;

  void add(int degree, int w, bool q, int idx) {
    pos[degree][{w, q, idx}] = static_cast<int>(gens[degree].size());
    gens[degree].push_back({w, q, idx});
  }
};

}  // namespace

ChainComplex telescope_range(const TelescopeData& t, int a, int b) {
  if (a < 1 || b > t.width() || a > b) throw malformed_input("telescope range out of bounds");
  for (int w = a; w < b; ++w) {
    if (!is_chain_map(t.maps[w - 1], t.stages[w - 1], t.stages[w]))
      throw connecting_map_not_chain_map("connecting map " + std::to_string(w) +
                                         " fails to commute with the differentials");
  }
  // collect degrees
  int lo = 0, hi = 0;
  bool any = false;
  for (int w = a; w <= b; ++w)
    for (const auto& [d, basis] : t.stages[w - 1].spaces()) {
      if (!any) {
        lo = hi = d;
        any = true;
      }
      lo = std::min(lo, d - 1);  // q shifts down by one
      hi = std::max(hi, d);
    }
  ChainComplex total(+1);
  if (!any) {
    total.finalize();
    return total;
  }

  TelescopeIndex index;
  for (int d = lo; d <= hi; ++d) {
    std::vector<std::string> labels;
    for (int w = a; w <= b; ++w) {
      const auto& sp = t.stages[w - 1].spaces();
      auto it = sp.find(d);
      if (it != sp.end()) {
        for (int i = 0; i < static_cast<int>(it->second.size()); ++i) {
          index.add(d, w, false, i);
          labels.push_back("w" + std::to_string(w) + ":" + it->second[i]);
        }
      }
      if (w < b) {
        auto qt = sp.find(d + 1);
        if (qt != sp.end()) {
          for (int i = 0; i < static_cast<int>(qt->second.size()); ++i) {
            index.add(d, w, true, i);
            labels.push_back("w" + std::to_string(w) + ":q" + qt->second[i]);
          }
        }
      }
    }
    total.set_basis(d, std::move(labels));
  }

  for (int d = lo; d <= hi; ++d) {
    auto src = index.gens.find(d);
    if (src == index.gens.end()) continue;
    int rows = 0;
    auto tgt = index.gens.find(d + 1);
    if (tgt != index.gens.end()) rows = static_cast<int>(tgt->second.size());
    Matrix<RatFun> block(rows, static_cast<int>(src->second.size()));
    if (rows > 0) {
      auto& tpos = index.pos[d + 1];
      for (int col = 0; col < static_cast<int>(src->second.size()); ++col) {
        auto [w, isq, i] = src->second[col];
        const ChainComplex& stage = t.stages[w - 1];
        if (!isq) {
          // mu^1(x) = (-1)^{|x|} dx
          Matrix<RatFun> dm = stage.differential(d);
          bool neg = ((d % 2) + 2) % 2 != 0;
          for (int rp = 0; rp < dm.rows(); ++rp) {
            if (novalg::is_zero(dm.at(rp, i))) continue;
            auto it = tpos.find({w, false, rp});
            if (it == tpos.end()) throw malformed_input("telescope index inconsistency");
            block.at(it->second, col) += neg ? (RatFun() - dm.at(rp, i)) : dm.at(rp, i);
          }
        } else {
          // y lives in stage degree d+1; mu^1(qy) = (-1)^{|y|}(q dy + Ky - y)
          bool neg = (((d + 1) % 2) + 2) % 2 != 0;
          auto sgn = [&](const RatFun& v) { return neg ? (RatFun() - v) : v; };
          Matrix<RatFun> dm = stage.differential(d + 1);
          for (int rp = 0; rp < dm.rows(); ++rp) {
            if (novalg::is_zero(dm.at(rp, i))) continue;
            auto it = tpos.find({w, true, rp});
            if (it == tpos.end()) throw malformed_input("telescope index inconsistency");
            block.at(it->second, col) += sgn(dm.at(rp, i));
          }
          Matrix<RatFun> km = t.maps[w - 1].block(d + 1, stage, t.stages[w]);
          for (int rp = 0; rp < km.rows(); ++rp) {
            if (novalg::is_zero(km.at(rp, i))) continue;
            auto it = tpos.find({w + 1, false, rp});
            if (it == tpos.end()) throw malformed_input("telescope index inconsistency");
            block.at(it->second, col) += sgn(km.at(rp, i));
          }
          auto self = tpos.find({w, false, i});
          if (self == tpos.end()) throw malformed_input("telescope index inconsistency");
          block.at(self->second, col) += sgn(RatFun(Rational(-1)));
        }
      }
    }
    total.set_differential(d, std::move(block));
  }
  total.finalize();  // d^2 = 0, exact
  return total;
}

ChainComplex telescope(const TelescopeData& t) {
  if (t.width() == 0) {
    ChainComplex empty(+1);
    empty.finalize();
    return empty;
  }
  return telescope_range(t, 1, t.width());
}

FiltrationReport telescope_filtration_report(const TelescopeData& t) {
  FiltrationReport report;
  if (t.width() == 0) return report;
  for (int b = 1; b <= t.width(); ++b) {
    FiltrationItem item;
    item.b = b;
    item.stage_ranks = t.stages[b - 1].homology_ranks();
    item.top_ranks = telescope_range(t, b, b).homology_ranks();
    item.full_ranks = telescope_range(t, 1, b).homology_ranks();
    auto nonzero = [](const std::map<int, int>& m) {
      std::map<int, int> out;
      for (const auto& [d, r] : m)
        if (r != 0) out[d] = r;
      return out;
    };
    item.top_equals_stage = nonzero(item.top_ranks) == nonzero(item.stage_ranks);
    item.top_equals_full = nonzero(item.top_ranks) == nonzero(item.full_ranks);
    report.items.push_back(std::move(item));
  }
  report.telescope_ranks = telescope(t).homology_ranks();
  return report;
}

}  // namespace novalg

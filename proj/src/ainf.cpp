#include "novalg/ainf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace novalg {

void add_term(Combination& acc, int idx, const NovikovScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void add_scaled(Combination& acc, const Combination& inc, const NovikovScalar& c, bool negate) {
  for (const auto& [idx, v] : inc) {
    NovikovScalar w = v * c;
    if (negate) w = -w;
    add_term(acc, idx, w);
  }
}

bool combination_is_zero(const Combination& c) { return c.empty(); }

long long sigma(const std::vector<int>& degrees, int i, int j) {
  if (i == j + 1) return 0;  // empty slice
  if (i < 1 || j > static_cast<int>(degrees.size()) || i > j + 1)
    throw index_out_of_range("sigma indices (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for " + std::to_string(degrees.size()) + " letters");
  long long acc = 0;
  for (int l = i; l <= j; ++l) acc += degrees[l - 1] - 1;
  return acc;
}

namespace {

std::string join_key(const std::vector<std::string>& chain, const std::vector<int>& letters) {
  std::string k;
  for (const auto& o : chain) {
    k += o;
    k += '\x01';
  }
  k += '\x02';
  for (int i : letters) {
    k += std::to_string(i);
    k += ',';
  }
  return k;
}

std::string bimod_key(const std::vector<std::string>& lc, const std::vector<int>& ll,
                      const std::vector<std::string>& rc, const std::vector<int>& rl, int m) {
  std::string k = join_key(lc, ll);
  k += '\x03';
  k += join_key(rc, rl);
  k += '\x03';
  k += std::to_string(m);
  return k;
}

std::string print_combination(const Combination& c, const std::vector<BasisElement>& basis) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, v] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.to_text() << ")*" << basis[idx].label;
  }
  return os.str();
}

// Requires an exact scalar of well-defined even integer cohomological degree;
// returns that degree.
Rational checked_coeff_degree(const NovikovScalar& c, const GradingContext& g,
                              const std::string& where) {
  if (!c.is_exact())
    throw malformed_structure(where + ": truncated coefficient " + c.to_text());
  if (c.is_zero()) throw malformed_structure(where + ": zero coefficient stored");
  auto d = c.cohomological_degree(g);
  if (!d) throw malformed_structure(where + ": mixed-degree coefficient " + c.to_text());
  if (!is_integer(*d) || numerator(*d) % 2 != 0)
    throw malformed_structure(where + ": odd-degree coefficient unsupported: " + c.to_text());
  return *d;
}

}  // namespace

// ---------------------------------------------------------------------------
// AInfStructure

void AInfStructure::add_object(const std::string& name) {
  if (std::find(objects_.begin(), objects_.end(), name) != objects_.end())
    throw malformed_structure("duplicate object " + name);
  objects_.push_back(name);
}

void AInfStructure::set_hom(const std::string& src, const std::string& dst,
                            std::vector<BasisElement> basis) {
  homs_[HomKey{src, dst}] = std::move(basis);
}

const std::vector<BasisElement>& AInfStructure::hom(const std::string& src,
                                                    const std::string& dst) const {
  static const std::vector<BasisElement> kEmpty;
  auto it = homs_.find(HomKey{src, dst});
  return it == homs_.end() ? kEmpty : it->second;
}

bool AInfStructure::has_hom(const std::string& src, const std::string& dst) const {
  return !hom(src, dst).empty();
}

int AInfStructure::degree_of(const std::string& src, const std::string& dst, int idx) const {
  const auto& h = hom(src, dst);
  if (idx < 0 || idx >= static_cast<int>(h.size()))
    throw index_out_of_range("basis index " + std::to_string(idx) + " in hom(" + src + "," + dst +
                             ")");
  return h[idx].degree;
}

std::string AInfStructure::label_of(const std::string& src, const std::string& dst,
                                    int idx) const {
  const auto& h = hom(src, dst);
  if (idx < 0 || idx >= static_cast<int>(h.size()))
    throw index_out_of_range("basis index " + std::to_string(idx));
  return h[idx].label;
}

void AInfStructure::finalize() {
  lookup_.clear();
  max_arity_ = 0;
  for (const auto& e : mu_) {
    int r = e.arity();
    if (r < 1) throw malformed_structure("mu^0 entry present; only non-curved structures");
    if (static_cast<int>(e.objects.size()) != r + 1)
      throw malformed_structure("mu entry object chain length mismatch");
    // input i lies in hom(X_{i-1}, X_i)
    Rational total_in(0);
    for (int i = 1; i <= r; ++i) {
      const auto& h = hom(e.objects[i - 1], e.objects[i]);
      if (e.inputs[i - 1] < 0 || e.inputs[i - 1] >= static_cast<int>(h.size()))
        throw malformed_structure("mu entry input out of range");
      total_in += h[e.inputs[i - 1]].degree - 1;
    }
    const auto& hout = hom(e.objects.front(), e.objects.back());
    if (e.output < 0 || e.output >= static_cast<int>(hout.size()))
      throw malformed_structure("mu entry output out of range");
    Rational cdeg = checked_coeff_degree(e.coeff, grading_, "mu entry");
    // mu^r has reduced degree +1: |out| - 1 + deg(coeff) = 1 + sum ||in||
    if (Rational(hout[e.output].degree - 1) + cdeg != Rational(1) + total_in)
      throw malformed_structure("mu entry violates degree bookkeeping");
    lookup_[join_key(e.objects, e.inputs)].emplace_back(e.output, e.coeff);
    max_arity_ = std::max(max_arity_, r);
  }
  finalized_ = true;
}

Combination AInfStructure::apply_mu(const std::vector<std::string>& chain,
                                    const std::vector<int>& letters) const {
  Combination out;
  auto it = lookup_.find(join_key(chain, letters));
  if (it == lookup_.end()) return out;
  for (const auto& [idx, c] : it->second) add_term(out, idx, c);
  return out;
}

// ---------------------------------------------------------------------------
// BimoduleData

void BimoduleData::set_space(const std::string& x, const std::string& y,
                             std::vector<BasisElement> basis) {
  spaces_[BimodKey{x, y}] = std::move(basis);
}

const std::vector<BasisElement>& BimoduleData::space(const std::string& x,
                                                     const std::string& y) const {
  static const std::vector<BasisElement> kEmpty;
  auto it = spaces_.find(BimodKey{x, y});
  return it == spaces_.end() ? kEmpty : it->second;
}

bool BimoduleData::has_space(const std::string& x, const std::string& y) const {
  return !space(x, y).empty();
}

int BimoduleData::degree_of(const BimodKey& k, int idx) const {
  const auto& sp = space(k.left, k.right);
  if (idx < 0 || idx >= static_cast<int>(sp.size()))
    throw index_out_of_range("bimodule basis index");
  return sp[idx].degree;
}

void BimoduleData::finalize() {
  if (!base_ || !base_->finalized()) throw malformed_structure("bimodule without finalized base");
  lookup_.clear();
  for (const auto& e : entries_) {
    int r = e.r(), s = e.s();
    if (static_cast<int>(e.left_objects.size()) != r + 1 ||
        static_cast<int>(e.right_objects.size()) != s + 1)
      throw malformed_structure("mu^{r|s} entry chain length mismatch");
    Rational total(0);
    for (int i = 1; i <= r; ++i) {
      const auto& h = base_->hom(e.left_objects[i - 1], e.left_objects[i]);
      if (e.left_inputs[i - 1] < 0 || e.left_inputs[i - 1] >= static_cast<int>(h.size()))
        throw malformed_structure("mu^{r|s} left input out of range");
      total += h[e.left_inputs[i - 1]].degree - 1;
    }
    for (int j = 1; j <= s; ++j) {
      const auto& h = base_->hom(e.right_objects[j], e.right_objects[j - 1]);
      if (e.right_inputs[j - 1] < 0 || e.right_inputs[j - 1] >= static_cast<int>(h.size()))
        throw malformed_structure("mu^{r|s} right input out of range");
      total += h[e.right_inputs[j - 1]].degree - 1;
    }
    const auto& min_sp = space(e.left_objects.front(), e.right_objects.front());
    const auto& mout_sp = space(e.left_objects.back(), e.right_objects.back());
    if (e.module_in < 0 || e.module_in >= static_cast<int>(min_sp.size()))
      throw malformed_structure("mu^{r|s} module input out of range");
    if (e.module_out < 0 || e.module_out >= static_cast<int>(mout_sp.size()))
      throw malformed_structure("mu^{r|s} module output out of range");
    Rational cdeg = checked_coeff_degree(e.coeff, base_->grading(), "mu^{r|s} entry");
    // mu^{r|s} has degree +1 with unreduced module degrees:
    // |m_out| + deg(coeff) = 1 + sum ||x|| + |m_in| + sum ||y||
    if (Rational(mout_sp[e.module_out].degree) + cdeg !=
        Rational(1 + min_sp[e.module_in].degree) + total)
      throw malformed_structure("mu^{r|s} entry violates degree bookkeeping");
    lookup_[bimod_key(e.left_objects, e.left_inputs, e.right_objects, e.right_inputs,
                      e.module_in)]
        .emplace_back(e.module_out, e.coeff);
  }
  finalized_ = true;
}

Combination BimoduleData::apply(const std::vector<std::string>& left_chain,
                                const std::vector<int>& left_letters,
                                const std::vector<std::string>& right_chain,
                                const std::vector<int>& right_letters, int module_idx) const {
  Combination out;
  auto it = lookup_.find(bimod_key(left_chain, left_letters, right_chain, right_letters,
                                   module_idx));
  if (it == lookup_.end()) return out;
  for (const auto& [idx, c] : it->second) add_term(out, idx, c);
  return out;
}

// ---------------------------------------------------------------------------
// BimoduleMorphism

void BimoduleMorphism::finalize() {
  lookup_.clear();
  for (const auto& e : entries_) {
    lookup_[bimod_key(e.left_objects, e.left_inputs, e.right_objects, e.right_inputs,
                      e.module_in)]
        .emplace_back(e.module_out, e.coeff);
  }
  finalized_ = true;
}

Combination BimoduleMorphism::apply(const std::vector<std::string>& left_chain,
                                    const std::vector<int>& left_letters,
                                    const std::vector<std::string>& right_chain,
                                    const std::vector<int>& right_letters,
                                    int module_idx) const {
  Combination out;
  auto it = lookup_.find(bimod_key(left_chain, left_letters, right_chain, right_letters,
                                   module_idx));
  if (it == lookup_.end()) return out;
  for (const auto& [idx, c] : it->second) add_term(out, idx, c);
  return out;
}

// ---------------------------------------------------------------------------
// FunctorData

const std::string& FunctorData::object_image(const std::string& obj) const {
  auto it = object_map_.find(obj);
  if (it == object_map_.end()) throw malformed_structure("functor has no image for " + obj);
  return it->second;
}

void FunctorData::finalize() {
  lookup_.clear();
  for (const auto& e : entries_) {
    int n = e.arity();
    if (n < 1) throw malformed_structure("Phi^0 entry present");
    if (static_cast<int>(e.objects.size()) != n + 1)
      throw malformed_structure("Phi entry chain length mismatch");
    Rational total(0);
    for (int i = 1; i <= n; ++i) {
      const auto& h = domain_->hom(e.objects[i - 1], e.objects[i]);
      if (e.inputs[i - 1] < 0 || e.inputs[i - 1] >= static_cast<int>(h.size()))
        throw malformed_structure("Phi entry input out of range");
      total += h[e.inputs[i - 1]].degree - 1;
    }
    const auto& hout =
        codomain_->hom(object_image(e.objects.front()), object_image(e.objects.back()));
    if (e.output < 0 || e.output >= static_cast<int>(hout.size()))
      throw malformed_structure("Phi entry output out of range");
    Rational cdeg = checked_coeff_degree(e.coeff, domain_->grading(), "Phi entry");
    // grading-preserving in reduced degrees: ||out|| + deg(coeff) = sum ||in||
    if (Rational(hout[e.output].degree - 1) + cdeg != total)
      throw malformed_structure("Phi entry violates degree bookkeeping");
    lookup_[join_key(e.objects, e.inputs)].emplace_back(e.output, e.coeff);
  }
  finalized_ = true;
}

Combination FunctorData::apply(const std::vector<std::string>& chain,
                               const std::vector<int>& letters) const {
  Combination out;
  auto it = lookup_.find(join_key(chain, letters));
  if (it == lookup_.end()) return out;
  for (const auto& [idx, c] : it->second) add_term(out, idx, c);
  return out;
}

// ---------------------------------------------------------------------------
// Word enumeration helpers

namespace {

template <class Fn>
void for_each_chain(const AInfStructure& a, int n, Fn&& fn) {
  // chains X_0..X_n with every hom(X_{i-1}, X_i) nonzero
  std::vector<std::string> chain;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(chain.size()) == n + 1) {
      fn(chain);
      return;
    }
    for (const auto& o : a.objects()) {
      if (!chain.empty() && !a.has_hom(chain.back(), o)) continue;
      chain.push_back(o);
      rec();
      chain.pop_back();
    }
  };
  rec();
}

// chains Y_0..Y_s with every hom(Y_j, Y_{j-1}) nonzero (right-module side)
template <class Fn>
void for_each_reverse_chain(const AInfStructure& a, int s, Fn&& fn) {
  std::vector<std::string> chain;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(chain.size()) == s + 1) {
      fn(chain);
      return;
    }
    for (const auto& o : a.objects()) {
      if (!chain.empty() && !a.has_hom(o, chain.back())) continue;
      chain.push_back(o);
      rec();
      chain.pop_back();
    }
  };
  rec();
}

template <class Fn>
void for_each_tuple(const std::vector<int>& dims, Fn&& fn) {
  std::vector<int> idx(dims.size(), 0);
  if (dims.empty()) {
    fn(idx);
    return;
  }
  for (int d : dims)
    if (d == 0) return;
  while (true) {
    fn(idx);
    int pos = 0;
    while (pos < static_cast<int>(dims.size())) {
      if (++idx[pos] < dims[pos]) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == static_cast<int>(dims.size())) break;
  }
}

std::vector<std::string> slice_chain(const std::vector<std::string>& chain, int from, int to) {
  return std::vector<std::string>(chain.begin() + from, chain.begin() + to + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// verify_ainf

VerifyReport verify_ainf(const AInfStructure& a, int bound) {
  if (!a.finalized()) throw malformed_structure("verify_ainf on non-finalized structure");
  VerifyReport report;
  report.bound = bound;
  for (int n = 1; n <= bound; ++n) {
    for_each_chain(a, n, [&](const std::vector<std::string>& chain) {
      std::vector<int> dims(n);
      for (int i = 1; i <= n; ++i)
        dims[i - 1] = static_cast<int>(a.hom(chain[i - 1], chain[i]).size());
      for_each_tuple(dims, [&](const std::vector<int>& letters) {
        std::vector<int> degrees(n);
        for (int i = 1; i <= n; ++i) degrees[i - 1] = a.degree_of(chain[i - 1], chain[i], letters[i - 1]);
        Combination residual;
        for (int S = 1; S <= n; ++S) {
          for (int R = S; R <= n; ++R) {
            Combination inner = a.apply_mu(
                slice_chain(chain, S - 1, R),
                std::vector<int>(letters.begin() + (S - 1), letters.begin() + R));
            if (inner.empty()) continue;
            bool neg = sigma(degrees, 1, S - 1) % 2 != 0;
            for (const auto& [mid, c] : inner) {
              std::vector<std::string> ochain;
              ochain.insert(ochain.end(), chain.begin(), chain.begin() + S);
              ochain.insert(ochain.end(), chain.begin() + R, chain.end());
              std::vector<int> oletters(letters.begin(), letters.begin() + (S - 1));
              oletters.push_back(mid);
              oletters.insert(oletters.end(), letters.begin() + R, letters.end());
              Combination outer = a.apply_mu(ochain, oletters);
              add_scaled(residual, outer, c, neg);
            }
          }
        }
        if (!combination_is_zero(residual)) {
          report.ok = false;
          Violation v;
          v.relation = "ainf";
          v.objects = chain;
          for (int i = n; i >= 1; --i) v.word.push_back(a.label_of(chain[i - 1], chain[i], letters[i - 1]));
          v.residual = print_combination(residual, a.hom(chain.front(), chain.back()));
          report.violations.push_back(std::move(v));
        }
      });
    });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Bimodule relation machinery (shared by verify_bimodule and the morphism
// verifier). Evaluates the relation residual for the word
// (x_r..x_1, m, y_1..y_s).

namespace {

struct ModuleWord {
  std::vector<std::string> left_chain;   // X_0..X_r
  std::vector<int> left_letters;         // x_1..x_r
  std::vector<std::string> right_chain;  // Y_0..Y_s
  std::vector<int> right_letters;        // y_1..y_s
  int module_idx = 0;
  std::vector<int> xdeg, ydeg;           // letter degrees
  int mdeg = 0;
};

// Applies "op" to every (inner op, outer op) split of the word. OuterM and
// OuterB are callables with the BimoduleData::apply signature; f_degree only
// matters for the morphism relation's last sum.
template <class Outer>
void accumulate_bimodule_relation(const AInfStructure& base, const BimoduleData& m,
                                  const ModuleWord& w, const Outer& outer, Combination& residual,
                                  bool include_inner_module_sum = true) {
  int r = static_cast<int>(w.left_letters.size());
  int s = static_cast<int>(w.right_letters.size());
  long long sig_y_all = sigma(w.ydeg, 1, s);
  // Sum 1: inner mu_B on a block x_S..x_R of the left letters;
  // star = sigma(y)_1^s + deg(m) + sigma(x)_1^{S-1} (module degree reduced).
  for (int S = 1; S <= r; ++S) {
    for (int R = S; R <= r; ++R) {
      Combination inner = base.apply_mu(
          slice_chain(w.left_chain, S - 1, R),
          std::vector<int>(w.left_letters.begin() + (S - 1), w.left_letters.begin() + R));
      if (inner.empty()) continue;
      long long star = sig_y_all + module_sign_degree(w.mdeg) + sigma(w.xdeg, 1, S - 1);
      bool neg = star % 2 != 0;
      for (const auto& [mid, c] : inner) {
        std::vector<std::string> lchain;
        lchain.insert(lchain.end(), w.left_chain.begin(), w.left_chain.begin() + S);
        lchain.insert(lchain.end(), w.left_chain.begin() + R, w.left_chain.end());
        std::vector<int> lletters(w.left_letters.begin(), w.left_letters.begin() + (S - 1));
        lletters.push_back(mid);
        lletters.insert(lletters.end(), w.left_letters.begin() + R, w.left_letters.end());
        Combination out =
            outer(lchain, lletters, w.right_chain, w.right_letters, w.module_idx);
        add_scaled(residual, out, c, neg);
      }
    }
  }
  // Sum 2: inner mu_M^{R|S} consuming (x_R..x_1, m, y_1..y_S);
  // diamond = sigma(y)_{S+1}^s.
  if (include_inner_module_sum) {
    for (int R = 0; R <= r; ++R) {
      for (int S = 0; S <= s; ++S) {
        Combination inner = m.apply(
            slice_chain(w.left_chain, 0, R),
            std::vector<int>(w.left_letters.begin(), w.left_letters.begin() + R),
            slice_chain(w.right_chain, 0, S),
            std::vector<int>(w.right_letters.begin(), w.right_letters.begin() + S),
            w.module_idx);
        if (inner.empty()) continue;
        bool neg = sigma(w.ydeg, S + 1, s) % 2 != 0;
        for (const auto& [mid, c] : inner) {
          Combination out = outer(
              slice_chain(w.left_chain, R, r),
              std::vector<int>(w.left_letters.begin() + R, w.left_letters.end()),
              slice_chain(w.right_chain, S, s),
              std::vector<int>(w.right_letters.begin() + S, w.right_letters.end()), mid);
          add_scaled(residual, out, c, neg);
        }
      }
    }
  }
  // Sum 3: inner mu_B on a block y_a..y_b of the right letters; the block in
  // composition order is (y_b, ..., y_a); diamond = sigma(y)_{b+1}^s.
  for (int a = 1; a <= s; ++a) {
    for (int b = a; b <= s; ++b) {
      std::vector<std::string> bchain;  // Y_b, Y_{b-1}, ..., Y_{a-1}
      for (int j = b; j >= a - 1; --j) bchain.push_back(w.right_chain[j]);
      std::vector<int> bletters;  // w_i = y_{b+1-i}
      for (int j = b; j >= a; --j) bletters.push_back(w.right_letters[j - 1]);
      Combination inner = base.apply_mu(bchain, bletters);
      if (inner.empty()) continue;
      bool neg = sigma(w.ydeg, b + 1, s) % 2 != 0;
      for (const auto& [mid, c] : inner) {
        std::vector<std::string> rchain;
        rchain.insert(rchain.end(), w.right_chain.begin(), w.right_chain.begin() + a);
        rchain.insert(rchain.end(), w.right_chain.begin() + b, w.right_chain.end());
        std::vector<int> rletters(w.right_letters.begin(), w.right_letters.begin() + (a - 1));
        rletters.push_back(mid);
        rletters.insert(rletters.end(), w.right_letters.begin() + b, w.right_letters.end());
        Combination out = outer(w.left_chain, w.left_letters, rchain, rletters, w.module_idx);
        add_scaled(residual, out, c, neg);
      }
    }
  }
}

template <class Fn>
void for_each_module_word(const AInfStructure& base, const BimoduleData& m, int bound, Fn&& fn) {
  for (int r = 0; r <= bound; ++r) {
    for (int s = 0; r + s <= bound; ++s) {
      for_each_chain(base, r, [&](const std::vector<std::string>& lchain) {
        for_each_reverse_chain(base, s, [&](const std::vector<std::string>& rchain) {
          const auto& msp = m.space(lchain.front(), rchain.front());
          if (msp.empty()) return;
          std::vector<int> dims(r + s);
          for (int i = 1; i <= r; ++i)
            dims[i - 1] = static_cast<int>(base.hom(lchain[i - 1], lchain[i]).size());
          for (int j = 1; j <= s; ++j)
            dims[r + j - 1] = static_cast<int>(base.hom(rchain[j], rchain[j - 1]).size());
          for_each_tuple(dims, [&](const std::vector<int>& letters) {
            for (int mi = 0; mi < static_cast<int>(msp.size()); ++mi) {
              ModuleWord w;
              w.left_chain = lchain;
              w.right_chain = rchain;
              w.left_letters.assign(letters.begin(), letters.begin() + r);
              w.right_letters.assign(letters.begin() + r, letters.end());
              w.module_idx = mi;
              w.mdeg = msp[mi].degree;
              w.xdeg.resize(r);
              for (int i = 1; i <= r; ++i)
                w.xdeg[i - 1] = base.degree_of(lchain[i - 1], lchain[i], w.left_letters[i - 1]);
              w.ydeg.resize(s);
              for (int j = 1; j <= s; ++j)
                w.ydeg[j - 1] = base.degree_of(rchain[j], rchain[j - 1], w.right_letters[j - 1]);
              fn(w);
            }
          });
        });
      });
    }
  }
}

Violation module_violation(const AInfStructure& base, const BimoduleData& m, const ModuleWord& w,
                           const Combination& residual, const std::string& relation,
                           const std::vector<BasisElement>& out_basis) {
  Violation v;
  v.relation = relation;
  v.objects = w.left_chain;
  v.objects.insert(v.objects.end(), w.right_chain.begin(), w.right_chain.end());
  int r = static_cast<int>(w.left_letters.size());
  int s = static_cast<int>(w.right_letters.size());
  for (int i = r; i >= 1; --i)
    v.word.push_back(base.label_of(w.left_chain[i - 1], w.left_chain[i], w.left_letters[i - 1]));
  v.word.push_back("[" + m.space(w.left_chain.front(), w.right_chain.front())[w.module_idx].label +
                   "]");
  for (int j = 1; j <= s; ++j)
    v.word.push_back(base.label_of(w.right_chain[j], w.right_chain[j - 1], w.right_letters[j - 1]));
  v.residual = print_combination(residual, out_basis);
  return v;
}

}  // namespace

VerifyReport verify_bimodule(const BimoduleData& m, int bound) {
  const AInfStructure& base = m.base();
  VerifyReport report;
  report.bound = bound;
  for_each_module_word(base, m, bound, [&](const ModuleWord& w) {
    Combination residual;
    auto outer = [&](const std::vector<std::string>& lc, const std::vector<int>& ll,
                     const std::vector<std::string>& rc, const std::vector<int>& rl, int mi) {
      return m.apply(lc, ll, rc, rl, mi);
    };
    accumulate_bimodule_relation(base, m, w, outer, residual);
    if (!combination_is_zero(residual)) {
      report.ok = false;
      report.violations.push_back(
          module_violation(base, m, w, residual, "bimodule",
                           m.space(w.left_chain.back(), w.right_chain.back())));
    }
  });
  return report;
}

VerifyReport verify_bimodule_morphism(const BimoduleMorphism& f, int bound) {
  const BimoduleData& src = f.source();
  const BimoduleData& tgt = f.target();
  const AInfStructure& base = src.base();
  VerifyReport report;
  report.bound = bound;
  for_each_module_word(base, src, bound, [&](const ModuleWord& w) {
    int r = static_cast<int>(w.left_letters.size());
    int s = static_cast<int>(w.right_letters.size());
    Combination residual;
    // Sums 1-3 with f outermost (signs as in the bimodule relation).
    auto outer_f = [&](const std::vector<std::string>& lc, const std::vector<int>& ll,
                       const std::vector<std::string>& rc, const std::vector<int>& rl, int mi) {
      return f.apply(lc, ll, rc, rl, mi);
    };
    accumulate_bimodule_relation(base, src, w, outer_f, residual);
    // Sum 4: inner f^{R|S}, outer mu_N, sign diamond*deg(f) plus a relative
    // minus (for even deg(f)) pinning the identity morphism as a cycle.
    for (int R = 0; R <= r; ++R) {
      for (int S = 0; S <= s; ++S) {
        Combination inner = f.apply(
            slice_chain(w.left_chain, 0, R),
            std::vector<int>(w.left_letters.begin(), w.left_letters.begin() + R),
            slice_chain(w.right_chain, 0, S),
            std::vector<int>(w.right_letters.begin(), w.right_letters.begin() + S),
            w.module_idx);
        if (inner.empty()) continue;
        long long e = sigma(w.ydeg, S + 1, s) * f.degree() + 1 + f.degree();
        bool neg = ((e % 2) + 2) % 2 != 0;
        for (const auto& [mid, c] : inner) {
          Combination out = tgt.apply(
              slice_chain(w.left_chain, R, r),
              std::vector<int>(w.left_letters.begin() + R, w.left_letters.end()),
              slice_chain(w.right_chain, S, s),
              std::vector<int>(w.right_letters.begin() + S, w.right_letters.end()), mid);
          add_scaled(residual, out, c, neg);
        }
      }
    }
    if (!combination_is_zero(residual)) {
      report.ok = false;
      report.violations.push_back(
          module_violation(base, src, w, residual, "bimodule-morphism",
                           tgt.space(w.left_chain.back(), w.right_chain.back())));
    }
  });
  return report;
}

// ---------------------------------------------------------------------------
// verify_functor

namespace {

// Distributes Phi over an ordered partition of the word into blocks and
// feeds the images to mu_E. Calls fn(image chain, image letters, coeff) for
// every term of the product of block combinations.
void expand_partition_blocks(const FunctorData& phi, const std::vector<std::string>& chain,
                             const std::vector<int>& letters, const std::vector<int>& blocks,
                             const std::function<void(const std::vector<std::string>&,
                                                      const std::vector<int>&,
                                                      const NovikovScalar&)>& fn) {
  int nblocks = static_cast<int>(blocks.size());
  std::vector<Combination> images(nblocks);
  std::vector<std::string> image_chain;
  int pos = 0;
  image_chain.push_back(phi.object_image(chain[0]));
  for (int b = 0; b < nblocks; ++b) {
    int len = blocks[b];
    images[b] = phi.apply(slice_chain(chain, pos, pos + len),
                          std::vector<int>(letters.begin() + pos, letters.begin() + pos + len));
    if (images[b].empty()) return;
    pos += len;
    image_chain.push_back(phi.object_image(chain[pos]));
  }
  std::vector<Combination::const_iterator> its(nblocks);
  std::function<void(int, NovikovScalar)> rec = [&](int b, NovikovScalar acc) {
    if (b == nblocks) {
      std::vector<int> image_letters(nblocks);
      for (int i = 0; i < nblocks; ++i) image_letters[i] = its[i]->first;
      fn(image_chain, image_letters, acc);
      return;
    }
    for (auto it = images[b].begin(); it != images[b].end(); ++it) {
      its[b] = it;
      rec(b + 1, acc * it->second);
    }
  };
  rec(0, NovikovScalar::one());
}

template <class Fn>
void for_each_composition(int n, Fn&& fn) {
  std::vector<int> blocks;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      fn(blocks);
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      blocks.push_back(k);
      rec(rest - k);
      blocks.pop_back();
    }
  };
  rec(n);
}

}  // namespace

VerifyReport verify_functor(const FunctorData& phi, int bound) {
  const AInfStructure& dom = phi.domain();
  const AInfStructure& cod = phi.codomain();
  VerifyReport report;
  report.bound = bound;
  for (int n = 1; n <= bound; ++n) {
    for_each_chain(dom, n, [&](const std::vector<std::string>& chain) {
      std::vector<int> dims(n);
      for (int i = 1; i <= n; ++i)
        dims[i - 1] = static_cast<int>(dom.hom(chain[i - 1], chain[i]).size());
      for_each_tuple(dims, [&](const std::vector<int>& letters) {
        std::vector<int> degrees(n);
        for (int i = 1; i <= n; ++i)
          degrees[i - 1] = dom.degree_of(chain[i - 1], chain[i], letters[i - 1]);
        Combination residual;
        // First sum: mu_E over Phi-images of ordered partitions; no signs.
        for_each_composition(n, [&](const std::vector<int>& blocks) {
          expand_partition_blocks(
              phi, chain, letters, blocks,
              [&](const std::vector<std::string>& ichain, const std::vector<int>& iletters,
                  const NovikovScalar& c) {
                Combination out = cod.apply_mu(ichain, iletters);
                add_scaled(residual, out, c, false);
              });
        });
        // Second sum: -(-1)^{sigma_1^{S-1}} Phi(.. mu_B(x_R..x_S) ..).
        for (int S = 1; S <= n; ++S) {
          for (int R = S; R <= n; ++R) {
            Combination inner = dom.apply_mu(
                slice_chain(chain, S - 1, R),
                std::vector<int>(letters.begin() + (S - 1), letters.begin() + R));
            if (inner.empty()) continue;
            bool neg = sigma(degrees, 1, S - 1) % 2 == 0;  // overall minus sign
            for (const auto& [mid, c] : inner) {
              std::vector<std::string> ochain;
              ochain.insert(ochain.end(), chain.begin(), chain.begin() + S);
              ochain.insert(ochain.end(), chain.begin() + R, chain.end());
              std::vector<int> oletters(letters.begin(), letters.begin() + (S - 1));
              oletters.push_back(mid);
              oletters.insert(oletters.end(), letters.begin() + R, letters.end());
              Combination outer = phi.apply(ochain, oletters);
              add_scaled(residual, outer, c, neg);
            }
          }
        }
        if (!combination_is_zero(residual)) {
          report.ok = false;
          Violation v;
          v.relation = "functor";
          v.objects = chain;
          for (int i = n; i >= 1; --i)
            v.word.push_back(dom.label_of(chain[i - 1], chain[i], letters[i - 1]));
          v.residual = print_combination(
              residual,
              cod.hom(phi.object_image(chain.front()), phi.object_image(chain.back())));
          report.violations.push_back(std::move(v));
        }
      });
    });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Constructors

AInfStructure from_associative(
    const std::string& object, const std::vector<BasisElement>& basis,
    const std::vector<std::vector<std::vector<std::pair<int, Rational>>>>& table,
    const GradingContext& grading) {
  int n = static_cast<int>(basis.size());
  if (static_cast<int>(table.size()) != n)
    throw malformed_input("multiplication table shape mismatch");
  // associativity check on the raw table
  auto prod = [&](const std::vector<std::pair<int, Rational>>& a,
                  int j) {  // (sum a) * b_j
    std::map<int, Rational> acc;
    for (const auto& [i, c] : a)
      for (const auto& [k, d] : table[i][j]) acc[k] += c * d;
    return acc;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::map<int, Rational> left;  // (b_i b_j) b_k
        for (const auto& [m, c] : table[i][j])
          for (const auto& [l, d] : table[m][k]) left[l] += c * d;
        std::map<int, Rational> right;  // b_i (b_j b_k)
        for (const auto& [m, c] : table[j][k])
          for (const auto& [l, d] : table[i][m]) right[l] += c * d;
        for (auto& [l, c] : right) left[l] -= c;
        for (const auto& [l, c] : left)
          if (c != 0)
            throw not_associative("(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
                                  std::to_string(k) + " != associator zero");
      }
  AInfStructure a;
  a.set_grading(grading);
  a.add_object(object);
  a.set_hom(object, object, basis);
  // mu^2(x_2, x_1) = (-1)^{|x_1|} x_2 * x_1: inputs[0] = x_1, inputs[1] = x_2.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : table[i][j]) {
        if (c == 0) continue;
        MuEntry e;
        e.objects = {object, object, object};
        e.inputs = {j, i};  // x_1 = b_j (right factor), x_2 = b_i (left factor)
        e.output = k;
        Rational v = (basis[j].degree % 2 != 0) ? Rational(-c) : c;
        e.coeff = NovikovScalar::constant(v);
        a.add_mu(std::move(e));
      }
  a.finalize();
  return a;
}

BimoduleData diagonal_bimodule(const AInfStructure& a) {
  BimoduleData m(&a);
  // M(X, Y) = hom(Y, X)
  for (const auto& x : a.objects())
    for (const auto& y : a.objects())
      if (a.has_hom(y, x)) m.set_space(x, y, a.hom(y, x));
  // mu^{r|s} = mu^{r+1+s}: each mu entry contributes once per module slot.
  for (const auto& e : a.mu()) {
    int c = e.arity();
    for (int p = 1; p <= c; ++p) {
      MuRSEntry b;
      int r = c - p, s = p - 1;
      b.left_objects = slice_chain(e.objects, p, c);
      b.right_objects.reserve(s + 1);
      for (int j = p - 1; j >= 0; --j) b.right_objects.push_back(e.objects[j]);
      b.left_inputs = std::vector<int>(e.inputs.begin() + p, e.inputs.end());
      b.right_inputs.clear();
      for (int j = p - 1; j >= 1; --j) b.right_inputs.push_back(e.inputs[j - 1]);
      b.module_in = e.inputs[p - 1];
      b.module_out = e.output;
      b.coeff = e.coeff;
      (void)r;
      m.add_mu(std::move(b));
    }
  }
  m.finalize();
  return m;
}

BimoduleMorphism identity_morphism(const BimoduleData& m) {
  BimoduleMorphism f(&m, &m, 0);
  for (const auto& [key, basis] : m.spaces()) {
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
      MuRSEntry e;
      e.left_objects = {key.left};
      e.right_objects = {key.right};
      e.module_in = i;
      e.module_out = i;
      e.coeff = NovikovScalar::one();
      f.add_component(std::move(e));
    }
  }
  f.finalize();
  return f;
}

FunctorData identity_functor(const AInfStructure& a) {
  FunctorData phi(&a, &a);
  for (const auto& o : a.objects()) phi.map_object(o, o);
  for (const auto& o : a.objects())
    for (const auto& p : a.objects()) {
      const auto& h = a.hom(o, p);
      for (int i = 0; i < static_cast<int>(h.size()); ++i) {
        PhiEntry e;
        e.objects = {o, p};
        e.inputs = {i};
        e.output = i;
        e.coeff = NovikovScalar::one();
        phi.add_component(std::move(e));
      }
    }
  phi.finalize();
  return phi;
}

}  // namespace novalg

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novalg/novikov.hpp"

namespace novalg {

struct BasisElement {
  std::string label;
  int degree = 0;
};

struct HomKey {
  std::string src, dst;
  bool operator<(const HomKey& o) const {
    if (src != o.src) return src < o.src;
    return dst < o.dst;
  }
  bool operator==(const HomKey& o) const { return src == o.src && dst == o.dst; }
};

// Formal linear combination of basis indices with Novikov coefficients.
using Combination = std::map<int, NovikovScalar>;

void add_term(Combination& acc, int idx, const NovikovScalar& c);
void add_scaled(Combination& acc, const Combination& inc, const NovikovScalar& c, bool negate);
bool combination_is_zero(const Combination& c);

// Reduced-degree slice sum: sigma_i^j = sum_{l=i..j} (deg_l - 1) over 1-based
// letters. The empty slice (i = j+1) is 0; anything else out of range throws.
long long sigma(const std::vector<int>& degrees, int i, int j);

// Contribution of a module letter to a sign exponent. The conventions of the
// relation signs treat the underlined element with its reduced degree; this
// is the unique choice under which the diagonal bimodule of an associative
// algebra satisfies the bimodule relations.
inline long long module_sign_degree(int degree) { return degree - 1; }

// One structure constant of mu^r. Letters are indexed as x_1..x_r with
// x_i in hom(X_{i-1}, X_i) and x_1 the rightmost tensor factor; inputs[i-1]
// is the basis index of x_i.
struct MuEntry {
  std::vector<std::string> objects;  // X_0..X_r
  std::vector<int> inputs;
  int output = 0;  // basis index in hom(X_0, X_r)
  NovikovScalar coeff;

  int arity() const { return static_cast<int>(inputs.size()); }
};

struct Violation {
  std::string relation;                 // which relation family
  std::vector<std::string> objects;     // object chain of the offending word
  std::vector<std::string> word;        // letter labels, underlined slot marked
  std::string residual;                 // nonzero residual, printed exactly
};

struct VerifyReport {
  bool ok = true;
  int bound = 0;  // total number of letters checked up to
  std::vector<Violation> violations;
};

class AInfStructure {
public:
  void set_grading(const GradingContext& g) { grading_ = g; }
  const GradingContext& grading() const { return grading_; }

  void add_object(const std::string& name);
  void set_hom(const std::string& src, const std::string& dst, std::vector<BasisElement> basis);
  void add_mu(MuEntry e) { mu_.push_back(std::move(e)); }

  // Validates shapes and degree bookkeeping, builds the lookup table.
  // Throws MalformedStructure on any inconsistency.
  void finalize();
  bool finalized() const { return finalized_; }

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<BasisElement>& hom(const std::string& src, const std::string& dst) const;
  bool has_hom(const std::string& src, const std::string& dst) const;
  const std::vector<MuEntry>& mu() const { return mu_; }
  int max_arity() const { return max_arity_; }

  int degree_of(const std::string& src, const std::string& dst, int idx) const;
  std::string label_of(const std::string& src, const std::string& dst, int idx) const;

  // mu applied to the word x_n..x_1 along the chain X_0..X_n
  // (letters[i-1] = x_i). Result lives in hom(X_0, X_n).
  Combination apply_mu(const std::vector<std::string>& chain,
                       const std::vector<int>& letters) const;

private:
  GradingContext grading_;
  std::vector<std::string> objects_;
  std::map<HomKey, std::vector<BasisElement>> homs_;
  std::vector<MuEntry> mu_;
  std::map<std::string, std::vector<std::pair<int, NovikovScalar>>> lookup_;
  int max_arity_ = 0;
  bool finalized_ = false;

  friend std::string mu_key(const std::vector<std::string>& chain, const std::vector<int>& letters);
};

// ---------------------------------------------------------------------------
// Bimodules

struct BimodKey {
  std::string left, right;  // M(X, Y)
  bool operator<(const BimodKey& o) const {
    if (left != o.left) return left < o.left;
    return right < o.right;
  }
};

// One structure constant of mu^{r|s} (or of a morphism component f^{r|s}).
// Left letters x_i in hom(X_{i-1}, X_i), right letters y_j in hom(Y_j, Y_{j-1}).
struct MuRSEntry {
  std::vector<std::string> left_objects;   // X_0..X_r
  std::vector<int> left_inputs;            // x_1..x_r
  std::vector<std::string> right_objects;  // Y_0..Y_s
  std::vector<int> right_inputs;           // y_1..y_s
  int module_in = 0;                       // index in M(X_0, Y_0)
  int module_out = 0;                      // index in M(X_r, Y_s)
  NovikovScalar coeff;

  int r() const { return static_cast<int>(left_inputs.size()); }
  int s() const { return static_cast<int>(right_inputs.size()); }
};

class BimoduleData {
public:
  explicit BimoduleData(const AInfStructure* base = nullptr) : base_(base) {}

  const AInfStructure& base() const { return *base_; }
  void set_space(const std::string& x, const std::string& y, std::vector<BasisElement> basis);
  void add_mu(MuRSEntry e) { entries_.push_back(std::move(e)); }
  void finalize();

  const std::vector<BasisElement>& space(const std::string& x, const std::string& y) const;
  bool has_space(const std::string& x, const std::string& y) const;
  const std::map<BimodKey, std::vector<BasisElement>>& spaces() const { return spaces_; }
  const std::vector<MuRSEntry>& entries() const { return entries_; }
  int degree_of(const BimodKey& k, int idx) const;

  // mu^{r|s} applied to (x_r..x_1, m, y_1..y_s); result in M(X_r, Y_s).
  Combination apply(const std::vector<std::string>& left_chain,
                    const std::vector<int>& left_letters,
                    const std::vector<std::string>& right_chain,
                    const std::vector<int>& right_letters, int module_idx) const;

private:
  const AInfStructure* base_;
  std::map<BimodKey, std::vector<BasisElement>> spaces_;
  std::vector<MuRSEntry> entries_;
  std::map<std::string, std::vector<std::pair<int, NovikovScalar>>> lookup_;
  bool finalized_ = false;
};

class BimoduleMorphism {
public:
  BimoduleMorphism(const BimoduleData* source, const BimoduleData* target, int degree)
      : source_(source), target_(target), degree_(degree) {}

  const BimoduleData& source() const { return *source_; }
  const BimoduleData& target() const { return *target_; }
  int degree() const { return degree_; }
  void add_component(MuRSEntry e) { entries_.push_back(std::move(e)); }
  void finalize();
  const std::vector<MuRSEntry>& entries() const { return entries_; }

  Combination apply(const std::vector<std::string>& left_chain,
                    const std::vector<int>& left_letters,
                    const std::vector<std::string>& right_chain,
                    const std::vector<int>& right_letters, int module_idx) const;

private:
  const BimoduleData* source_;
  const BimoduleData* target_;
  int degree_;
  std::vector<MuRSEntry> entries_;
  std::map<std::string, std::vector<std::pair<int, NovikovScalar>>> lookup_;
  bool finalized_ = false;
};

// ---------------------------------------------------------------------------
// Functors

struct PhiEntry {
  std::vector<std::string> objects;  // X_0..X_n in the domain
  std::vector<int> inputs;           // x_1..x_n
  int output = 0;                    // basis index in hom_E(Phi X_0, Phi X_n)
  NovikovScalar coeff;

  int arity() const { return static_cast<int>(inputs.size()); }
};

class FunctorData {
public:
  FunctorData(const AInfStructure* domain, const AInfStructure* codomain)
      : domain_(domain), codomain_(codomain) {}

  const AInfStructure& domain() const { return *domain_; }
  const AInfStructure& codomain() const { return *codomain_; }
  void map_object(const std::string& from, const std::string& to) { object_map_[from] = to; }
  const std::string& object_image(const std::string& obj) const;
  void add_component(PhiEntry e) { entries_.push_back(std::move(e)); }
  void finalize();
  const std::vector<PhiEntry>& entries() const { return entries_; }

  // Phi^n applied to the word x_n..x_1; result in hom_E(Phi X_0, Phi X_n).
  Combination apply(const std::vector<std::string>& chain, const std::vector<int>& letters) const;

private:
  const AInfStructure* domain_;
  const AInfStructure* codomain_;
  std::map<std::string, std::string> object_map_;
  std::vector<PhiEntry> entries_;
  std::map<std::string, std::vector<std::pair<int, NovikovScalar>>> lookup_;
  bool finalized_ = false;
};

// ---------------------------------------------------------------------------
// Verifiers (exact; no tolerance anywhere)

VerifyReport verify_ainf(const AInfStructure& a, int bound = 6);
VerifyReport verify_bimodule(const BimoduleData& m, int bound = 6);
VerifyReport verify_bimodule_morphism(const BimoduleMorphism& f, int bound = 6);
VerifyReport verify_functor(const FunctorData& phi, int bound = 6);

// ---------------------------------------------------------------------------
// Constructors

// Packs an associative multiplication table as an A-infinity structure with
// only mu^2 (twisted by the Koszul convention mu^2(a,b) = (-1)^{|b|} a.b).
// table[i][j] lists (k, c): b_i * b_j = sum c * b_k. Throws NotAssociative.
AInfStructure from_associative(const std::string& object,
                               const std::vector<BasisElement>& basis,
                               const std::vector<std::vector<std::vector<std::pair<int, Rational>>>>& table,
                               const GradingContext& grading = {});

// The diagonal bimodule M(X,Y) = hom(Y,X), mu^{r|s} = mu^{r+1+s}.
BimoduleData diagonal_bimodule(const AInfStructure& a);

// Identity morphism of a bimodule (f^{0|0} = id, all higher terms zero).
BimoduleMorphism identity_morphism(const BimoduleData& m);

// Identity functor of a structure.
FunctorData identity_functor(const AInfStructure& a);

}  // namespace novalg

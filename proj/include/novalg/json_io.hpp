#pragma once

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "novalg/ainf.hpp"
#include "novalg/chain.hpp"
#include "novalg/hochschild.hpp"
#include "novalg/telescope.hpp"
#include "novalg/toric.hpp"

namespace novalg {

using Json = nlohmann::ordered_json;

// Strict parsers: schema version 1, unknown fields rejected, all rationals
// as strings "p/q", all Novikov scalars in the text format.

// {"version":1, "objects":[..], "homs":[{"src","dst","basis":[{"label","degree"}]}],
//  "mu":[{"arity","objects","inputs","output","coeff"}], "monotonicity":"p/q"?}
Json structure_to_json(const AInfStructure& a);
AInfStructure structure_from_json(const Json& j);

// {"spaces":[{"left","right","basis":[..]}],
//  "mu":[{"r","s","left_objects","right_objects","left_inputs","right_inputs",
//         "module_in","module_out","coeff"}]}
Json bimodule_to_json(const BimoduleData& m);
BimoduleData bimodule_from_json(const Json& j, const AInfStructure& base);

// {"degree":d, "components":[mu^{r|s}-shaped]} between bimodules given by
// index into the bundle's bimodule list
Json morphism_to_json(const BimoduleMorphism& f, int source_index, int target_index);

// {"object_map":{...}, "entries":[{"arity","objects","inputs","output","coeff"}]}
Json functor_to_json(const FunctorData& f);
FunctorData functor_from_json(const Json& j, const AInfStructure& domain,
                              const AInfStructure& codomain);

// A bundle file carries one or two structures plus optional module data:
// {"version":1, "structure":{...}, "structure2":{...}?, "bimodules":[..]?,
//  "morphisms":[{"source":i,"target":j,"degree":d,"components":[..]}]?,
//  "functors":[..]?}
struct Bundle {
  // heap-held so that the bimodules' and functors' back-pointers survive
  // moves of the Bundle itself
  std::unique_ptr<AInfStructure> structure;
  std::unique_ptr<AInfStructure> structure2;  // null unless present
  std::vector<BimoduleData> bimodules;        // over structure
  std::vector<BimoduleData> bimodules2;       // over structure2 ("over":"structure2")
  struct MorphismSpec {
    int source = 0, target = 0, degree = 0;
    std::vector<MuRSEntry> components;
  };
  std::vector<MorphismSpec> morphisms;
  std::vector<FunctorData> functors;
};
Bundle bundle_from_json(const Json& j);

// {"dim":n, "facets":[{"normal":[ints], "constant":"p/q"}]}
Json polytope_to_json(const MomentPolytope& p);
MomentPolytope polytope_from_json(const Json& j);

// {"version":1, "d_degree":+-1, "lattice":N,
//  "spaces":[{"degree":d,"basis":[..]}],
//  "differentials":[{"degree":d,"matrix":[["novikov text"]]}]}
Json chain_to_json(const ChainComplex& c, long lattice);
ChainComplex chain_from_json(const Json& j, long* lattice_out = nullptr);

// {"version":1, "stages":[chain..], "maps":[{"blocks":[{"degree","matrix"}]}]}
Json telescope_to_json(const TelescopeData& t, long lattice);
TelescopeData telescope_from_json(const Json& j);

// helpers
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
void reject_unknown_fields(const Json& j, const std::vector<std::string>& allowed,
                           const std::string& where);

}  // namespace novalg

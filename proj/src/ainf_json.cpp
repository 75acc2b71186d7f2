#include "novalg/json_io.hpp"

#include <algorithm>

namespace novalg {

namespace {

void require_version(const Json& j, const std::string& where) {
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != 1)
    throw parse_error(where + ": missing or unsupported schema version");
}

NovikovScalar coeff_from(const Json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where + ": coefficient must be a Novikov text string");
  return NovikovScalar::parse(j.get<std::string>());
}

std::vector<std::string> strings_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw parse_error(where + ": expected strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<int> ints_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw parse_error(where + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<BasisElement> basis_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected a basis array");
  std::vector<BasisElement> out;
  for (const auto& b : j) {
    reject_unknown_fields(b, {"label", "degree"}, where);
    if (!b.contains("label") || !b.contains("degree"))
      throw parse_error(where + ": basis element needs label and degree");
    out.push_back({b["label"].get<std::string>(), b["degree"].get<int>()});
  }
  return out;
}

Json basis_to(const std::vector<BasisElement>& basis) {
  Json out = Json::array();
  for (const auto& b : basis) out.push_back({{"label", b.label}, {"degree", b.degree}});
  return out;
}

}  // namespace

void reject_unknown_fields(const Json& j, const std::vector<std::string>& allowed,
                           const std::string& where) {
  if (!j.is_object()) throw parse_error(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw parse_error(where + ": unknown field '" + it.key() + "'");
  }
}

Json rational_to_json(const Rational& r) { return Json(r.get_str()); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw parse_error("rational values must be strings \"p/q\"");
  return parse_rational(j.get<std::string>());
}

// ---------------------------------------------------------------------------
// AInfStructure

Json structure_to_json(const AInfStructure& a) {
  Json j;
  j["version"] = 1;
  j["objects"] = a.objects();
  Json homs = Json::array();
  for (const auto& src : a.objects())
    for (const auto& dst : a.objects()) {
      if (!a.has_hom(src, dst)) continue;
      homs.push_back({{"src", src}, {"dst", dst}, {"basis", basis_to(a.hom(src, dst))}});
    }
  j["homs"] = std::move(homs);
  Json mu = Json::array();
  for (const auto& e : a.mu()) {
    mu.push_back({{"arity", e.arity()},
                  {"objects", e.objects},
                  {"inputs", e.inputs},
                  {"output", e.output},
                  {"coeff", e.coeff.to_text()}});
  }
  j["mu"] = std::move(mu);
  if (a.grading().monotonicity != 1) j["monotonicity"] = rational_to_json(a.grading().monotonicity);
  return j;
}

AInfStructure structure_from_json(const Json& j) {
  reject_unknown_fields(j, {"version", "objects", "homs", "mu", "monotonicity"}, "structure");
  require_version(j, "structure");
  AInfStructure a;
  if (j.contains("monotonicity")) a.set_grading({rational_from_json(j["monotonicity"])});
  if (!j.contains("objects") || !j.contains("homs") || !j.contains("mu"))
    throw parse_error("structure: objects, homs, and mu are required");
  for (const auto& o : strings_from(j["objects"], "structure.objects")) a.add_object(o);
  for (const auto& h : j["homs"]) {
    reject_unknown_fields(h, {"src", "dst", "basis"}, "structure.homs");
    a.set_hom(h["src"].get<std::string>(), h["dst"].get<std::string>(),
              basis_from(h["basis"], "structure.homs.basis"));
  }
  for (const auto& e : j["mu"]) {
    reject_unknown_fields(e, {"arity", "objects", "inputs", "output", "coeff"}, "structure.mu");
    MuEntry m;
    m.objects = strings_from(e["objects"], "mu.objects");
    m.inputs = ints_from(e["inputs"], "mu.inputs");
    m.output = e["output"].get<int>();
    m.coeff = coeff_from(e["coeff"], "mu.coeff");
    if (e.contains("arity") && e["arity"].get<int>() != m.arity())
      throw parse_error("mu entry arity disagrees with inputs length");
    a.add_mu(std::move(m));
  }
  a.finalize();
  return a;
}

// ---------------------------------------------------------------------------
// Bimodules / morphisms / functors

namespace {

MuRSEntry murs_from(const Json& e, const std::string& where) {
  reject_unknown_fields(e,
                        {"r", "s", "left_objects", "right_objects", "left_inputs", "right_inputs",
                         "module_in", "module_out", "coeff"},
                        where);
  MuRSEntry m;
  m.left_objects = strings_from(e["left_objects"], where);
  m.right_objects = strings_from(e["right_objects"], where);
  m.left_inputs = ints_from(e["left_inputs"], where);
  m.right_inputs = ints_from(e["right_inputs"], where);
  m.module_in = e["module_in"].get<int>();
  m.module_out = e["module_out"].get<int>();
  m.coeff = coeff_from(e["coeff"], where);
  if ((e.contains("r") && e["r"].get<int>() != m.r()) ||
      (e.contains("s") && e["s"].get<int>() != m.s()))
    throw parse_error(where + ": declared (r,s) disagrees with the input lists");
  return m;
}

Json murs_to(const MuRSEntry& e) {
  return {{"r", e.r()},
          {"s", e.s()},
          {"left_objects", e.left_objects},
          {"right_objects", e.right_objects},
          {"left_inputs", e.left_inputs},
          {"right_inputs", e.right_inputs},
          {"module_in", e.module_in},
          {"module_out", e.module_out},
          {"coeff", e.coeff.to_text()}};
}

}  // namespace

Json bimodule_to_json(const BimoduleData& m) {
  Json j;
  Json spaces = Json::array();
  for (const auto& [key, basis] : m.spaces())
    spaces.push_back({{"left", key.left}, {"right", key.right}, {"basis", basis_to(basis)}});
  j["spaces"] = std::move(spaces);
  Json mu = Json::array();
  for (const auto& e : m.entries()) mu.push_back(murs_to(e));
  j["mu"] = std::move(mu);
  return j;
}

BimoduleData bimodule_from_json(const Json& j, const AInfStructure& base) {
  reject_unknown_fields(j, {"spaces", "mu", "over"}, "bimodule");
  BimoduleData m(&base);
  for (const auto& s : j["spaces"]) {
    reject_unknown_fields(s, {"left", "right", "basis"}, "bimodule.spaces");
    m.set_space(s["left"].get<std::string>(), s["right"].get<std::string>(),
                basis_from(s["basis"], "bimodule.spaces.basis"));
  }
  for (const auto& e : j["mu"]) m.add_mu(murs_from(e, "bimodule.mu"));
  m.finalize();
  return m;
}

Json morphism_to_json(const BimoduleMorphism& f, int source_index, int target_index) {
  Json j;
  j["source"] = source_index;
  j["target"] = target_index;
  j["degree"] = f.degree();
  Json comps = Json::array();
  for (const auto& e : f.entries()) comps.push_back(murs_to(e));
  j["components"] = std::move(comps);
  return j;
}

Json functor_to_json(const FunctorData& f) {
  Json j;
  Json omap = Json::object();
  for (const auto& o : f.domain().objects()) omap[o] = f.object_image(o);
  j["object_map"] = std::move(omap);
  Json entries = Json::array();
  for (const auto& e : f.entries()) {
    entries.push_back({{"arity", e.arity()},
                       {"objects", e.objects},
                       {"inputs", e.inputs},
                       {"output", e.output},
                       {"coeff", e.coeff.to_text()}});
  }
  j["entries"] = std::move(entries);
  return j;
}

FunctorData functor_from_json(const Json& j, const AInfStructure& domain,
                              const AInfStructure& codomain) {
  reject_unknown_fields(j, {"object_map", "entries"}, "functor");
  FunctorData f(&domain, &codomain);
  for (auto it = j["object_map"].begin(); it != j["object_map"].end(); ++it)
    f.map_object(it.key(), it.value().get<std::string>());
  for (const auto& e : j["entries"]) {
    reject_unknown_fields(e, {"arity", "objects", "inputs", "output", "coeff"}, "functor.entries");
    PhiEntry p;
    p.objects = strings_from(e["objects"], "functor.objects");
    p.inputs = ints_from(e["inputs"], "functor.inputs");
    p.output = e["output"].get<int>();
    p.coeff = coeff_from(e["coeff"], "functor.coeff");
    f.add_component(std::move(p));
  }
  f.finalize();
  return f;
}

Bundle bundle_from_json(const Json& j) {
  reject_unknown_fields(
      j, {"version", "structure", "structure2", "bimodules", "morphisms", "functors"}, "bundle");
  require_version(j, "bundle");
  if (!j.contains("structure")) throw parse_error("bundle: structure is required");
  Bundle b;
  b.structure = std::make_unique<AInfStructure>(structure_from_json(j["structure"]));
  if (j.contains("structure2"))
    b.structure2 = std::make_unique<AInfStructure>(structure_from_json(j["structure2"]));
  if (j.contains("bimodules")) {
    for (const auto& bm : j["bimodules"]) {
      std::string over = bm.contains("over") ? bm["over"].get<std::string>() : "structure";
      if (over == "structure") {
        b.bimodules.push_back(bimodule_from_json(bm, *b.structure));
      } else if (over == "structure2") {
        if (!b.structure2) throw parse_error("bimodule over structure2 without a structure2");
        b.bimodules2.push_back(bimodule_from_json(bm, *b.structure2));
      } else {
        throw parse_error("bimodule 'over' must be structure or structure2");
      }
    }
  }
  if (j.contains("morphisms")) {
    for (const auto& mo : j["morphisms"]) {
      reject_unknown_fields(mo, {"source", "target", "degree", "components"}, "morphism");
      Bundle::MorphismSpec spec;
      spec.source = mo["source"].get<int>();
      spec.target = mo["target"].get<int>();
      spec.degree = mo["degree"].get<int>();
      for (const auto& c : mo["components"]) spec.components.push_back(murs_from(c, "morphism"));
      if (spec.source < 0 || spec.source >= static_cast<int>(b.bimodules.size()) ||
          spec.target < 0 || spec.target >= static_cast<int>(b.bimodules.size()))
        throw parse_error("morphism source/target index out of range");
      b.morphisms.push_back(std::move(spec));
    }
  }
  if (j.contains("functors")) {
    const AInfStructure& cod = b.structure2 ? *b.structure2 : *b.structure;
    for (const auto& fn : j["functors"])
      b.functors.push_back(functor_from_json(fn, *b.structure, cod));
  }
  return b;
}

// ---------------------------------------------------------------------------
// Polytopes

Json polytope_to_json(const MomentPolytope& p) {
  Json j;
  j["dim"] = p.dim;
  Json facets = Json::array();
  for (const auto& f : p.facets)
    facets.push_back({{"normal", f.normal}, {"constant", rational_to_json(f.constant)}});
  j["facets"] = std::move(facets);
  return j;
}

MomentPolytope polytope_from_json(const Json& j) {
  reject_unknown_fields(j, {"dim", "facets"}, "polytope");
  if (!j.contains("dim") || !j.contains("facets"))
    throw parse_error("polytope: dim and facets are required");
  MomentPolytope p;
  p.dim = j["dim"].get<int>();
  for (const auto& f : j["facets"]) {
    reject_unknown_fields(f, {"normal", "constant"}, "polytope.facets");
    Facet fc;
    for (const auto& x : f["normal"]) fc.normal.push_back(x.get<long>());
    fc.constant = rational_from_json(f["constant"]);
    p.facets.push_back(std::move(fc));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Chain complexes and telescopes

Json chain_to_json(const ChainComplex& c, long lattice) {
  Json j;
  j["version"] = 1;
  j["d_degree"] = c.d_degree();
  j["lattice"] = lattice;
  Json spaces = Json::array();
  for (const auto& [d, basis] : c.spaces()) spaces.push_back({{"degree", d}, {"basis", basis}});
  j["spaces"] = std::move(spaces);
  Json diffs = Json::array();
  for (const auto& [d, basis] : c.spaces()) {
    if (!c.has_differential(d)) continue;
    Matrix<RatFun> m = c.differential(d);
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < m.cols(); ++k)
        row.push_back(novikov_from_ratfun(m.at(i, k), lattice).to_text());
      rows.push_back(std::move(row));
    }
    diffs.push_back({{"degree", d}, {"matrix", std::move(rows)}});
  }
  j["differentials"] = std::move(diffs);
  return j;
}

namespace {

Matrix<RatFun> matrix_from_json(const Json& rows, long lattice, int nrows, int ncols,
                                const std::string& where) {
  if (!rows.is_array()) throw parse_error(where + ": matrix must be an array of rows");
  Matrix<RatFun> m(nrows, ncols);
  if (static_cast<int>(rows.size()) != nrows) throw parse_error(where + ": row count mismatch");
  for (int i = 0; i < nrows; ++i) {
    const auto& row = rows[i];
    if (static_cast<int>(row.size()) != ncols) throw parse_error(where + ": column count mismatch");
    for (int k = 0; k < ncols; ++k)
      m.at(i, k) = ratfun_from_novikov(NovikovScalar::parse(row[k].get<std::string>()), lattice);
  }
  return m;
}

}  // namespace

ChainComplex chain_from_json(const Json& j, long* lattice_out) {
  reject_unknown_fields(j, {"version", "d_degree", "lattice", "spaces", "differentials"}, "chain");
  require_version(j, "chain");
  int dd = j.contains("d_degree") ? j["d_degree"].get<int>() : -1;
  if (dd != 1 && dd != -1) throw parse_error("chain: d_degree must be +1 or -1");
  long lattice = j.contains("lattice") ? j["lattice"].get<long>() : 1;
  if (lattice_out) *lattice_out = lattice;
  ChainComplex c(dd);
  for (const auto& s : j["spaces"]) {
    reject_unknown_fields(s, {"degree", "basis"}, "chain.spaces");
    c.set_basis(s["degree"].get<int>(), strings_from(s["basis"], "chain.spaces.basis"));
  }
  if (j.contains("differentials")) {
    for (const auto& d : j["differentials"]) {
      reject_unknown_fields(d, {"degree", "matrix"}, "chain.differentials");
      int deg = d["degree"].get<int>();
      c.set_differential(
          deg, matrix_from_json(d["matrix"], lattice, c.dim(deg + dd), c.dim(deg), "chain"));
    }
  }
  c.finalize();
  return c;
}

Json telescope_to_json(const TelescopeData& t, long lattice) {
  Json j;
  j["version"] = 1;
  Json stages = Json::array();
  for (const auto& s : t.stages) {
    Json cj = chain_to_json(s, lattice);
    cj.erase("version");
    stages.push_back(std::move(cj));
  }
  j["stages"] = std::move(stages);
  Json maps = Json::array();
  for (size_t w = 0; w < t.maps.size(); ++w) {
    Json blocks = Json::array();
    for (const auto& [d, m] : t.maps[w].blocks) {
      Json rows = Json::array();
      for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols(); ++k)
          row.push_back(novikov_from_ratfun(m.at(i, k), lattice).to_text());
        rows.push_back(std::move(row));
      }
      blocks.push_back({{"degree", d}, {"matrix", std::move(rows)}});
    }
    maps.push_back({{"blocks", std::move(blocks)}});
  }
  j["maps"] = std::move(maps);
  return j;
}

TelescopeData telescope_from_json(const Json& j) {
  reject_unknown_fields(j, {"version", "stages", "maps"}, "telescope");
  require_version(j, "telescope");
  TelescopeData t;
  long lattice = 1;
  for (const auto& s : j["stages"]) {
    Json sj = s;
    sj["version"] = 1;
    long l = 1;
    t.stages.push_back(chain_from_json(sj, &l));
    lattice = std::max(lattice, l);
  }
  if (j.contains("maps")) {
    for (size_t w = 0; w < j["maps"].size(); ++w) {
      reject_unknown_fields(j["maps"][w], {"blocks"}, "telescope.maps");
      DegreeMap dm;
      for (const auto& b : j["maps"][w]["blocks"]) {
        reject_unknown_fields(b, {"degree", "matrix"}, "telescope.maps.blocks");
        int d = b["degree"].get<int>();
        int rows = w + 1 < t.stages.size() ? t.stages[w + 1].dim(d) : 0;
        int cols = t.stages[w].dim(d);
        dm.blocks[d] = matrix_from_json(b["matrix"], lattice, rows, cols, "telescope.map");
      }
      t.maps.push_back(std::move(dm));
    }
  }
  if (t.maps.size() + 1 != t.stages.size() && !t.stages.empty())
    throw parse_error("telescope: need exactly one connecting map between consecutive stages");
  return t;
}

}  // namespace novalg

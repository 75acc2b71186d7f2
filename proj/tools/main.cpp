// Command-line entry point: parses input files, dispatches to the library,
// and emits machine-readable reports (JSON is the contract format; text is
// for humans). Exit codes: 0 success, 1 verification failure, 2 malformed
// input, 64 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "novalg/json_io.hpp"
#include "novalg/qh.hpp"

using namespace novalg;

namespace {

struct Options {
  int bound = 5;
  std::vector<std::string> t_values;
  unsigned long long seed = 0;
  bool seed_set = false;
  std::string format = "json";
  std::string family;
  int m = 0;
  int k = 0;
  std::string input_path;
  std::string object_label;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_input("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Json ranks_to_json(const std::map<int, int>& ranks, const char* key) {
  Json arr = Json::array();
  for (const auto& [d, r] : ranks) arr.push_back({{key, d}, {"rank", r}});
  return arr;
}

FamilySpec family_from_options(const Options& opt) {
  FamilySpec f;
  if (opt.family == "projective") {
    f.family = ToricFamily::projective;
  } else if (opt.family == "bundle") {
    f.family = ToricFamily::negative_line_bundle;
  } else {
    throw malformed_input("--family must be projective or bundle");
  }
  f.m = opt.m;
  f.k = opt.k;
  return f;
}

std::vector<Rational> t_values_from(const Options& opt) {
  std::vector<Rational> out;
  for (const auto& s : opt.t_values) out.push_back(parse_rational(s));
  return out;
}

void emit(const Json& report, const Options& opt, const std::string& text) {
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

Json violations_to_json(const VerifyReport& rep) {
  Json v = Json::array();
  for (const auto& x : rep.violations) {
    v.push_back({{"relation", x.relation},
                 {"objects", x.objects},
                 {"word", x.word},
                 {"residual", x.residual}});
  }
  return v;
}

// ---------------------------------------------------------------------------
// subcommand bodies; each returns the process exit code

int run_ainf_verify(const Options& opt) {
  Bundle b = bundle_from_json(load_json(opt.input_path));
  Json report;
  report["bound"] = opt.bound;
  bool all_ok = true;
  {
    VerifyReport r = verify_ainf(*b.structure, opt.bound);
    all_ok = all_ok && r.ok;
    report["structure"] = {{"ok", r.ok}, {"violations", violations_to_json(r)}};
  }
  if (b.structure2) {
    VerifyReport r = verify_ainf(*b.structure2, opt.bound);
    all_ok = all_ok && r.ok;
    report["structure2"] = {{"ok", r.ok}, {"violations", violations_to_json(r)}};
  }
  Json bimods = Json::array();
  for (const auto& m : b.bimodules) {
    VerifyReport r = verify_bimodule(m, opt.bound);
    all_ok = all_ok && r.ok;
    bimods.push_back({{"ok", r.ok}, {"violations", violations_to_json(r)}});
  }
  for (const auto& m : b.bimodules2) {
    VerifyReport r = verify_bimodule(m, opt.bound);
    all_ok = all_ok && r.ok;
    bimods.push_back({{"ok", r.ok}, {"over", "structure2"}, {"violations", violations_to_json(r)}});
  }
  if (!bimods.empty()) report["bimodules"] = std::move(bimods);
  Json morphs = Json::array();
  for (const auto& spec : b.morphisms) {
    BimoduleMorphism f(&b.bimodules[spec.source], &b.bimodules[spec.target], spec.degree);
    for (const auto& c : spec.components) f.add_component(c);
    f.finalize();
    VerifyReport r = verify_bimodule_morphism(f, opt.bound);
    all_ok = all_ok && r.ok;
    morphs.push_back({{"ok", r.ok}, {"violations", violations_to_json(r)}});
  }
  if (!morphs.empty()) report["morphisms"] = std::move(morphs);
  Json functs = Json::array();
  for (const auto& f : b.functors) {
    VerifyReport r = verify_functor(f, opt.bound);
    all_ok = all_ok && r.ok;
    functs.push_back({{"ok", r.ok}, {"violations", violations_to_json(r)}});
  }
  if (!functs.empty()) report["functors"] = std::move(functs);
  report["ok"] = all_ok;

  std::ostringstream text;
  text << (all_ok ? "all relations hold" : "violations found") << " (bound " << opt.bound
       << ")\n";
  emit(report, opt, text.str());
  return all_ok ? 0 : 1;
}

int run_hh_ranks(const Options& opt) {
  Bundle b = bundle_from_json(load_json(opt.input_path));
  const AInfStructure& a = *b.structure;
  BimoduleData diag = b.bimodules.empty() ? diagonal_bimodule(a) : b.bimodules.front();
  if (!verify_ainf(a, std::min(opt.bound, 4)).ok)
    throw malformed_input("structure fails the relations; refusing to build the bar complex");
  BarComplex bar(&a, &diag, opt.bound);
  auto ranks = bar.complex().homology_ranks();
  Json report;
  report["bound"] = opt.bound;
  report["ranks"] = ranks_to_json(ranks, "length");
  report["top_length_truncated"] = true;
  std::ostringstream text;
  text << "Hochschild homology ranks by word length (bound " << opt.bound << ")\n";
  for (const auto& [n, r] : ranks) text << "  length " << n << ": " << r << "\n";
  text << "  (the top length misses boundaries from longer words)\n";
  emit(report, opt, text.str());
  return 0;
}

int run_hh_change_of_rings(const Options& opt) {
  Bundle b = bundle_from_json(load_json(opt.input_path));
  if (b.functors.empty()) throw malformed_input("change-of-rings needs a functor in the bundle");
  const FunctorData& phi = b.functors.front();
  if (!verify_functor(phi, opt.bound).ok)
    throw malformed_input("the functor fails its relations at the bound");
  const AInfStructure& codomain = b.structure2 ? *b.structure2 : *b.structure;
  BimoduleData n = [&]() {
    if (b.structure2)
      return b.bimodules2.empty() ? diagonal_bimodule(codomain) : b.bimodules2.front();
    return b.bimodules.empty() ? diagonal_bimodule(codomain) : b.bimodules.front();
  }();
  if (!verify_bimodule(n, opt.bound).ok)
    throw malformed_input("the coefficient bimodule fails its relations at the bound");
  BimoduleData pulled = pull_back_bimodule(phi, n, opt.bound);
  bool pulled_ok = verify_bimodule(pulled, opt.bound).ok;
  bool chain_map = tau_intertwines(phi, n, pulled, opt.bound);
  Json report;
  report["bound"] = opt.bound;
  report["pulled_back_ok"] = pulled_ok;
  report["tau_chain_map"] = chain_map;
  report["residual_norm"] = chain_map ? "0" : "nonzero";
  std::ostringstream text;
  text << "pulled-back bimodule " << (pulled_ok ? "verifies" : "FAILS") << "; tau "
       << (chain_map ? "intertwines" : "FAILS to intertwine") << " (bound " << opt.bound << ")\n";
  emit(report, opt, text.str());
  return (pulled_ok && chain_map) ? 0 : 1;
}

int run_hh_tensor_check(const Options& opt) {
  Bundle b = bundle_from_json(load_json(opt.input_path));
  const AInfStructure& a = *b.structure;
  std::string z = opt.object_label.empty() ? a.objects().front() : opt.object_label;
  LeftModule l = yoneda_left(a, z);
  RightModule r = yoneda_right(a, z);
  ReorderReport rep = reorder_iso(a, l, r, opt.bound);
  Json report;
  report["bound"] = opt.bound;
  report["object"] = z;
  report["intertwines"] = rep.intertwines;
  report["ranks_match"] = rep.ranks_match;
  report["residual_norm"] = rep.intertwines ? "0" : "nonzero";
  report["cc_ranks"] = ranks_to_json(rep.cc_ranks, "length");
  report["tensor_ranks"] = ranks_to_json(rep.tensor_ranks, "length");
  std::ostringstream text;
  text << "reordering map " << (rep.intertwines ? "intertwines" : "FAILS") << ", ranks "
       << (rep.ranks_match ? "match" : "DIFFER") << " (bound " << opt.bound << ")\n";
  emit(report, opt, text.str());
  return (rep.intertwines && rep.ranks_match) ? 0 : 1;
}

int run_telescope(const Options& opt) {
  TelescopeData t = telescope_from_json(load_json(opt.input_path));
  ChainComplex total = telescope(t);
  FiltrationReport fr = telescope_filtration_report(t);
  Json report;
  report["stages"] = static_cast<int>(t.stages.size());
  report["telescope_ranks"] = ranks_to_json(total.homology_ranks(), "degree");
  Json items = Json::array();
  for (const auto& item : fr.items) {
    items.push_back({{"b", item.b},
                     {"stage_ranks", ranks_to_json(item.stage_ranks, "degree")},
                     {"top_ranks", ranks_to_json(item.top_ranks, "degree")},
                     {"full_ranks", ranks_to_json(item.full_ranks, "degree")},
                     {"top_equals_stage", item.top_equals_stage},
                     {"top_equals_full", item.top_equals_full}});
  }
  report["filtration"] = std::move(items);
  std::ostringstream text;
  text << "telescope over " << t.stages.size() << " stages; homology ranks:\n";
  for (const auto& [d, r] : total.homology_ranks()) text << "  degree " << d << ": " << r << "\n";
  emit(report, opt, text.str());
  return 0;
}

MomentPolytope polytope_from_options(const Options& opt) {
  if (!opt.family.empty()) return family_polytope(family_from_options(opt));
  if (opt.input_path.empty())
    throw malformed_input("give either --family -m [-k] or a polytope JSON file");
  return polytope_from_json(load_json(opt.input_path));
}

int run_toric_potential(const Options& opt) {
  MomentPolytope p = polytope_from_options(opt);
  PolytopeCheck chk = check_polytope(p);
  Superpotential w = superpotential(p);
  Json report;
  report["polytope"] = polytope_to_json(p);
  report["check"] = {{"normals_primitive", chk.normals_primitive},
                     {"feasible", chk.feasible},
                     {"delzant_checked", chk.delzant_checked},
                     {"delzant", chk.delzant}};
  Json terms = Json::array();
  for (const auto& t : w.terms)
    terms.push_back({{"exponents", t.exponents}, {"coeff", t.coeff.to_text()}});
  report["superpotential"] = std::move(terms);
  auto fam = recognize_family(w);
  if (fam) {
    report["family"] = {{"name", fam->family == ToricFamily::projective ? "projective" : "bundle"},
                        {"m", fam->m},
                        {"k", fam->k}};
  }
  std::ostringstream text;
  text << "W = ";
  for (size_t i = 0; i < w.terms.size(); ++i) {
    if (i) text << " + ";
    text << "(" << w.terms[i].coeff.to_text() << ")*z^(";
    for (size_t j = 0; j < w.terms[i].exponents.size(); ++j) {
      if (j) text << ",";
      text << w.terms[i].exponents[j];
    }
    text << ")";
  }
  text << "\n";
  emit(report, opt, text.str());
  return chk.feasible ? 0 : 1;
}

int run_toric_crit(const Options& opt) {
  MomentPolytope p = polytope_from_options(opt);
  Superpotential w = superpotential(p);
  Json report;
  std::ostringstream text;
  if (recognize_family(w)) {
    CriticalFamily fam = critical_points_closed(w);
    report["branch"] = "closed-form";
    report["count"] = fam.relation_degree;
    report["relation"] = {{"degree", fam.relation_degree},
                          {"coeff", rational_to_json(fam.relation_coeff)},
                          {"t_power", rational_to_json(fam.relation_t_power)}};
    report["value_scale"] = rational_to_json(fam.value_scale);
    report["valuation"] = rational_to_json(fam.coordinate_valuation);
    report["interior"] = fam.interior;
    report["value_nonzero"] = fam.value_nonzero;
    // per-coordinate defining data: z_j = scale_j * u, and the unit part of
    // z_j has minimal polynomial dividing w^D - scale_j^D * C
    Json coords = Json::array();
    for (size_t jx = 0; jx < fam.scale.size(); ++jx) {
      PolyQ binom = PolyQ::monomial(Rational(1), fam.relation_degree) -
                    PolyQ(rational_pow(fam.scale[jx], fam.relation_degree) * fam.relation_coeff);
      coords.push_back({{"scale", rational_to_json(fam.scale[jx])},
                        {"min_poly", binom.to_text("w")},
                        {"exponent", rational_to_json(fam.coordinate_valuation)}});
    }
    report["coordinates"] = std::move(coords);
    // rational points get exact Novikov coordinates; the rest are grouped by
    // irreducible factor of the defining binomial
    Json points = Json::array();
    std::optional<Rational> t_refine;
    if (!opt.t_values.empty()) t_refine = parse_rational(opt.t_values.front());
    Rational val_exp = Rational(fam.relation_t_power / fam.relation_degree);
    auto factors = factor_rational_binomial(fam.relation_degree, fam.relation_coeff);
    for (const auto& f : factors) {
      Json pt;
      if (f.degree() == 1) {
        Rational root = -f.coeff(0);
        Json zs = Json::array();
        for (const auto& s : fam.scale) {
          NovikovScalar z = NovikovScalar::monomial(s * root, val_exp);
          Json coord;
          coord["exact"] = z.to_text();
          if (t_refine) {
            double u = std::pow(t_refine->get_d(), val_exp.get_d());
            coord["approx"] = fmt_double(Rational(s * root).get_d() * u);
          }
          zs.push_back(std::move(coord));
        }
        pt["coordinates"] = std::move(zs);
        NovikovScalar value = NovikovScalar::monomial(fam.value_scale * root, val_exp);
        pt["value"] = value.to_text();
        pt["m0_of_torus"] = value.to_text();
        pt["count"] = 1;
      } else {
        pt["unit_min_poly"] = f.to_text("u");
        pt["count"] = f.degree();
        std::string val = "(" + fam.value_scale.get_str() + ")*u*t^(" + val_exp.get_str() + ")";
        pt["value"] = val;
        pt["m0_of_torus"] = val;
        if (t_refine) {
          // all roots of the factor share this magnitude
          double mag = std::pow(std::abs(fam.relation_coeff.get_d()), 1.0 / fam.relation_degree) *
                       std::pow(t_refine->get_d(), val_exp.get_d());
          pt["unit_magnitude_approx"] = fmt_double(mag);
        }
      }
      pt["hf_nonvanishing"] = true;
      pt["displaceable"] = false;
      points.push_back(std::move(pt));
    }
    report["points"] = std::move(points);
    text << fam.relation_degree << " critical points; values (" << fam.value_scale.get_str()
         << ")*u with u^" << fam.relation_degree << " = " << fam.relation_coeff.get_str()
         << "*t^(" << fam.relation_t_power.get_str() << ")\n";
  } else {
    if (opt.t_values.empty() || !opt.seed_set)
      throw malformed_input("numerical branch needs --t and --seed");
    Rational t0 = parse_rational(opt.t_values.front());
    auto pts = critical_points_numerical(w, t0, opt.seed, p);
    report["branch"] = "numerical";
    report["t"] = rational_to_json(t0);
    report["seed"] = static_cast<long long>(opt.seed);
    Json points = Json::array();
    for (const auto& q : pts) {
      Json zs = Json::array();
      for (size_t j = 0; j < q.z.size(); ++j) {
        zs.push_back({{"re", fmt_double(q.z[j].real())},
                      {"im", fmt_double(q.z[j].imag())},
                      {"exponent", fmt_double(q.valuation_estimate[j])}});
      }
      points.push_back({{"coordinates", std::move(zs)},
                        {"residual", fmt_double(q.residual)},
                        {"interior", q.interior},
                        {"value", Json{{"re", fmt_double(q.value.real())},
                                       {"im", fmt_double(q.value.imag())}}},
                        {"hf_nonvanishing", q.interior},
                        {"displaceable", false}});
    }
    report["points"] = std::move(points);
    text << pts.size() << " certified numerical critical points at t = " << t0.get_str() << "\n";
  }
  emit(report, opt, text.str());
  return 0;
}

int run_toric_jac(const Options& opt) {
  MomentPolytope p = polytope_from_options(opt);
  Superpotential w = superpotential(p);
  std::vector<Rational> ts = t_values_from(opt);
  if (ts.empty()) ts = {Rational(1), rat(2, 3)};
  JacobianData j = jacobian_rank(w, ts);
  Json report;
  Json tv = Json::array();
  for (const auto& t : j.specializations) tv.push_back(rational_to_json(t));
  report["t_values"] = std::move(tv);
  report["ranks"] = j.ranks;
  report["rank"] = j.rank;
  report["stable"] = j.stable;
  report["basis"] = j.basis;
  if (!j.stable) report["warning"] = "ranks differ across specializations; reporting the maximum";
  std::ostringstream text;
  text << "Jacobian ring rank " << j.rank << (j.stable ? "" : " (UNSTABLE across specializations)")
       << "\n";
  emit(report, opt, text.str());
  return j.stable ? 0 : 1;
}

Json presentation_to_json(const QuantumPresentation& p) {
  return {{"family", p.family.family == ToricFamily::projective ? "projective" : "bundle"},
          {"m", p.family.m},
          {"k", p.family.k},
          {"symbol", p.novikov_symbol},
          {"rank", p.rank},
          {"relation", p.relation.to_text("w", p.novikov_symbol)},
          {"c1_multiple", p.c1_multiple},
          {"generator_degree", p.generator_degree}};
}

int run_qh_presentation(const Options& opt) {
  QuantumPresentation p = presentation(family_from_options(opt));
  Json report = presentation_to_json(p);
  std::ostringstream text;
  text << "QH* = Lambda[w]/(" << p.relation.to_text("w", p.novikov_symbol) << "), rank " << p.rank
       << ", c1 = " << p.c1_multiple << "w\n";
  emit(report, opt, text.str());
  return 0;
}

Json spectrum_to_json(const SpectrumDescriptor& sd, const std::string& symbol) {
  Json factors = Json::array();
  for (size_t i = 0; i < sd.factors.size(); ++i) {
    factors.push_back({{"factor", sd.factors[i].factor.to_text("x", symbol)},
                       {"multiplicity", sd.factors[i].multiplicity},
                       {"block_dim", sd.factor_block_dims[i]}});
  }
  return {{"char_poly", sd.char_poly.to_text("x", symbol)},
          {"factors", std::move(factors)},
          {"zero_block_dim", sd.zero_block_dim},
          {"rank", sd.rank}};
}

int run_qh_spectrum(const Options& opt) {
  QuantumPresentation p = presentation(family_from_options(opt));
  SpectrumDescriptor sd = spectrum(c1_operator(p));
  Json report = spectrum_to_json(sd, p.novikov_symbol);
  std::ostringstream text;
  text << "char poly " << sd.char_poly.to_text("x", p.novikov_symbol) << "; zero block dim "
       << sd.zero_block_dim << "\n";
  emit(report, opt, text.str());
  return 0;
}

int run_qh_sh(const Options& opt) {
  ShQuotient sh = sh_quotient(presentation(family_from_options(opt)));
  Json report;
  report["sh_rank"] = sh.presentation.rank;
  report["sh_relation"] = sh.presentation.relation.to_text("w", sh.presentation.novikov_symbol);
  report["kernel_dim"] = sh.kernel_dim;
  report["stabilization_exponent"] = sh.stabilization_exponent;
  report["automorphism"] = sh.automorphism;
  std::ostringstream text;
  text << "SH* = Lambda[w]/(" << report["sh_relation"].get<std::string>() << "), rank "
       << sh.presentation.rank << "\n";
  emit(report, opt, text.str());
  return 0;
}

Json generation_to_json(const std::vector<GenerationVerdict>& verdicts) {
  Json gen = Json::array();
  for (const auto& v : verdicts) {
    gen.push_back({{"eigenvalue_factor", v.eigenvalue_factor},
                   {"eigenvalue_count", v.eigenvalue_count},
                   {"summand_dim", v.summand_dim},
                   {"matched_crit_point", v.matched_critical_points},
                   {"verdict", v.verdict},
                   {"note", v.note}});
  }
  return gen;
}

int run_qh_compare(const Options& opt) {
  FamilySpec f = family_from_options(opt);
  if (f.family != ToricFamily::negative_line_bundle)
    throw malformed_input("qh compare runs on the bundle family");
  QuantumPresentation qp = presentation(f);
  SpectrumDescriptor sd = spectrum(c1_operator(qp));
  ShQuotient sh = sh_quotient(qp);
  Superpotential w = superpotential(family_polytope(f));
  std::vector<Rational> ts = t_values_from(opt);
  if (ts.empty()) ts = {Rational(1), rat(2, 3)};
  JacobianData jac = jacobian_rank(w, ts);
  CriticalFamily crit = critical_points_closed(w);
  ComparisonReport cmp = jacobian_comparison(sh, jac, crit);
  auto verdicts = generation_report(sd, crit);

  Json report;
  report["family"] = "bundle";
  report["m"] = f.m;
  report["k"] = f.k;
  report["qh_rank"] = qp.rank;
  report["sh_rank"] = sh.presentation.rank;
  report["zero_block_dim"] = sd.zero_block_dim;
  report["char_poly"] = sd.char_poly.to_text("x", qp.novikov_symbol);
  report["sh_relation"] = cmp.sh_relation;
  report["jacobian_rank"] = jac.rank;
  report["spectrum_match"] = cmp.spectrum_match;
  report["rank_match"] = cmp.rank_match;
  report["minpoly_match"] = cmp.minpoly_match;
  if (!cmp.detail.empty()) report["detail"] = cmp.detail;
  report["generation"] = generation_to_json(verdicts);

  std::ostringstream text;
  text << "QH rank " << qp.rank << ", SH rank " << sh.presentation.rank << ", Jacobian rank "
       << jac.rank << "; spectrum match: " << (cmp.spectrum_match ? "yes" : "NO") << "\n";
  emit(report, opt, text.str());
  return cmp.ok() ? 0 : 1;
}

int run_qh_generation(const Options& opt) {
  FamilySpec f = family_from_options(opt);
  if (f.family != ToricFamily::negative_line_bundle)
    throw malformed_input("qh generation runs on the bundle family");
  SpectrumDescriptor sd = spectrum(c1_operator(presentation(f)));
  CriticalFamily crit = critical_points_closed(superpotential(family_polytope(f)));
  auto verdicts = generation_report(sd, crit);
  Json report;
  report["generation"] = generation_to_json(verdicts);
  std::ostringstream text;
  for (const auto& v : verdicts)
    text << v.eigenvalue_factor << ": " << v.verdict << " (" << v.note << ")\n";
  emit(report, opt, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Novikov/A-infinity/Hochschild/toric-LG computer algebra"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    cmd->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--bound", opt.bound, "length/arity bound");
    cmd->add_option("--t", opt.t_values, "rational t specialization p/q (repeatable)");
    cmd->add_option("--seed", opt.seed, "seed for numerical branches")
        ->each([&](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--family", opt.family, "projective|bundle");
    cmd->add_option("-m", opt.m, "family parameter m");
    cmd->add_option("-k", opt.k, "family parameter k");
    if (with_input) cmd->add_option("input", opt.input_path, "input JSON file");
  };

  std::map<CLI::App*, std::function<int(const Options&)>> actions;

  CLI::App* ainf = app.add_subcommand("ainf", "A-infinity structure commands");
  CLI::App* ainf_verify = ainf->add_subcommand("verify", "verify the relations of a bundle file");
  add_common(ainf_verify, true);
  actions[ainf_verify] = run_ainf_verify;

  CLI::App* hh = app.add_subcommand("hh", "Hochschild homology commands");
  CLI::App* hh_ranks = hh->add_subcommand("ranks", "bar-complex homology ranks");
  add_common(hh_ranks, true);
  actions[hh_ranks] = run_hh_ranks;
  CLI::App* hh_cor = hh->add_subcommand("change-of-rings", "pull back a bimodule along a functor");
  add_common(hh_cor, true);
  actions[hh_cor] = run_hh_change_of_rings;
  CLI::App* hh_tensor = hh->add_subcommand("tensor-check", "reordering isomorphism check");
  add_common(hh_tensor, true);
  hh_tensor->add_option("--object", opt.object_label, "Yoneda object");
  actions[hh_tensor] = run_hh_tensor_check;

  CLI::App* tel = app.add_subcommand("telescope", "telescope complex of stages and maps");
  add_common(tel, true);
  actions[tel] = run_telescope;

  CLI::App* toric = app.add_subcommand("toric", "moment polytopes and superpotentials");
  CLI::App* toric_potential = toric->add_subcommand("potential", "superpotential of a polytope");
  add_common(toric_potential, true);
  actions[toric_potential] = run_toric_potential;
  CLI::App* toric_crit = toric->add_subcommand("crit", "critical points");
  add_common(toric_crit, true);
  actions[toric_crit] = run_toric_crit;
  CLI::App* toric_jac = toric->add_subcommand("jac", "Jacobian ring rank");
  add_common(toric_jac, true);
  actions[toric_jac] = run_toric_jac;

  CLI::App* qh = app.add_subcommand("qh", "quantum cohomology commands");
  CLI::App* qh_presentation = qh->add_subcommand("presentation", "ring presentation");
  add_common(qh_presentation, false);
  actions[qh_presentation] = run_qh_presentation;
  CLI::App* qh_spectrum = qh->add_subcommand("spectrum", "c1 spectrum");
  add_common(qh_spectrum, false);
  actions[qh_spectrum] = run_qh_spectrum;
  CLI::App* qh_sh = qh->add_subcommand("sh", "symplectic cohomology quotient");
  add_common(qh_sh, false);
  actions[qh_sh] = run_qh_sh;
  CLI::App* qh_compare = qh->add_subcommand("compare", "Jacobian/SH comparison report");
  add_common(qh_compare, false);
  actions[qh_compare] = run_qh_compare;
  CLI::App* qh_generation = qh->add_subcommand("generation", "split-generation bookkeeping");
  add_common(qh_generation, false);
  actions[qh_generation] = run_qh_generation;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 64;
  }

  try {
    for (auto& [cmd, fn] : actions) {
      if (cmd->parsed()) return fn(opt);
    }
    std::cerr << "no subcommand selected\n";
    return 64;
  } catch (const Error& e) {
    Json err;
    err["error"] = e.kind();
    err["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

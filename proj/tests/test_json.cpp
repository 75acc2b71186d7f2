#include "novalg/json_io.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace novalg;

TEST_CASE("structure JSON round-trips exactly") {
  AInfStructure a = fixtures::to_structure(fixtures::exterior_two());
  Json j = structure_to_json(a);
  AInfStructure back = structure_from_json(j);
  CHECK(structure_to_json(back) == j);
  CHECK(verify_ainf(back, 3).ok);
}

TEST_CASE("unknown fields and bad versions are rejected") {
  AInfStructure a = fixtures::to_structure(fixtures::dual_numbers());
  Json j = structure_to_json(a);
  Json extra = j;
  extra["surprise"] = 1;
  CHECK_THROWS_AS(structure_from_json(extra), Error);
  Json badver = j;
  badver["version"] = 2;
  CHECK_THROWS_AS(structure_from_json(badver), Error);
  Json nover = j;
  nover.erase("version");
  CHECK_THROWS_AS(structure_from_json(nover), Error);
}

TEST_CASE("bimodule JSON round-trips through a bundle") {
  AInfStructure a = fixtures::to_structure(fixtures::exterior_one());
  BimoduleData diag = diagonal_bimodule(a);
  Json j;
  j["version"] = 1;
  j["structure"] = structure_to_json(a);
  j["bimodules"] = Json::array({bimodule_to_json(diag)});
  Bundle b = bundle_from_json(j);
  REQUIRE(b.bimodules.size() == 1);
  CHECK(bimodule_to_json(b.bimodules[0]) == bimodule_to_json(diag));
  CHECK(verify_bimodule(b.bimodules[0], 3).ok);
}

TEST_CASE("chain complex JSON round-trips with fractional t-powers") {
  // 0 -> C^0 --(t^(1/2))--> C^1 -> 0 over the lattice (1/2)Z
  ChainComplex c(+1);
  c.set_basis(0, {"a"});
  c.set_basis(1, {"b"});
  Matrix<RatFun> d(1, 1);
  d.at(0, 0) = ratfun_from_novikov(NovikovScalar::t_power(rat(1, 2)), 2);
  c.set_differential(0, d);
  c.finalize();
  Json j = chain_to_json(c, 2);
  long lattice = 0;
  ChainComplex back = chain_from_json(j, &lattice);
  CHECK(lattice == 2);
  CHECK(chain_to_json(back, lattice) == j);
  // t^(1/2) is invertible in the fraction field: both homologies vanish
  auto ranks = back.homology_ranks();
  CHECK(ranks[0] == 0);
  CHECK(ranks[1] == 0);
}

TEST_CASE("polytope JSON round-trips") {
  MomentPolytope p = family_polytope({ToricFamily::negative_line_bundle, 3, 2});
  Json j = polytope_to_json(p);
  MomentPolytope back = polytope_from_json(j);
  CHECK(polytope_to_json(back) == j);
  Json bad = j;
  bad["extra"] = true;
  CHECK_THROWS_AS(polytope_from_json(bad), Error);
}

TEST_CASE("telescope JSON round-trips") {
  ChainComplex c(+1);
  c.set_basis(0, {"x", "y"});
  c.set_basis(1, {"z"});
  Matrix<RatFun> d(1, 2);
  d.at(0, 0) = RatFun(Rational(1));
  c.set_differential(0, d);
  c.finalize();
  DegreeMap id;
  id.blocks[0] = Matrix<RatFun>::identity(2);
  id.blocks[1] = Matrix<RatFun>::identity(1);
  TelescopeData t;
  t.stages = {c, c};
  t.maps = {id};
  Json j = telescope_to_json(t, 1);
  TelescopeData back = telescope_from_json(j);
  CHECK(telescope_to_json(back, 1) == j);
  CHECK(telescope(back).homology_ranks() == telescope(t).homology_ranks());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsg/cover.hpp"
#include "rsg/instances.hpp"
#include "rsg/verify.hpp"

using namespace rsg;
using cover::build_proper_cover;
using cover::enumerate_ytrees;

TEST_CASE("Y-tree enumeration") {
  act::FreeGroupAction fga{words::Alphabet::first(2)};
  auto t1 = enumerate_ytrees(fga, 1);
  CHECK(t1.size() == 1);
  auto t2 = enumerate_ytrees(fga, 2);
  CHECK(t2.size() == 5); // 𝟏 and its four one-edge extensions
  auto t3 = enumerate_ytrees(fga, 3);
  CHECK(t3.size() == 23); // 5 + C(4,2) + 4·3 paths/stars of size 3
  for (const auto& t : t3) CHECK(trees::in_ideal_Y(t));
}

TEST_CASE("cover pipeline on the trivial monoid") {
  auto rep = build_proper_cover(instances::trivial_monoid(), 3);
  CHECK(rep.morphism_ok);
  CHECK(rep.separation_ok);
  CHECK(rep.proper_ok);
  CHECK(rep.stabilized);
  CHECK(rep.projection_classes == 1); // everything maps to 1
  CHECK(rep.omega == "a");
}

TEST_CASE("cover pipeline on the 2-chain") {
  auto rep = build_proper_cover(instances::chain_semilattice(2), 3);
  CHECK(rep.all_ok());
  CHECK(rep.omega == "ab");
  CHECK(rep.projection_classes == 2); // trees with and without the e-letter
  CHECK(rep.fragment_size > 0);
  // JSON report carries the check block
  auto js = rep.to_json_text();
  CHECK(js.find("\"projection_separation\": true") != std::string::npos);
  CHECK(js.find("\"stabilized\": true") != std::string::npos);
}

TEST_CASE("rejects inputs that are not restriction semigroups") {
  auto bad = instances::diamond_semilattice();
  bad.plus_map[1] = 2;
  CHECK_THROWS_AS(build_proper_cover(bad, 3), instance_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  verify::VerifyConfig cfg;
  cfg.samples = 5;
  cfg.alpha_samples = 5;
  cfg.seed = 99;
  CHECK(verify::verify_yuck(cfg).to_json_text() == verify::verify_yuck(cfg).to_json_text());
  auto r1 = build_proper_cover(instances::chain_semilattice(2), 3);
  auto r2 = build_proper_cover(instances::chain_semilattice(2), 3);
  CHECK(r1.to_json_text() == r2.to_json_text());
}

TEST_CASE("identity-free input gets an identity adjoined for the morphism") {
  // 2-element left-zero-free example: a semilattice without top: {e, f, 0}
  // with e ∧ f = 0 has no identity
  std::vector<std::string> names{"e", "f", "0"};
  std::vector<std::size_t> meet{0, 2, 2, 2, 1, 2, 2, 2, 2};
  auto s = alg::FinAlg::semilattice(names, meet);
  CHECK_FALSE(s.identity().has_value());
  auto rep = build_proper_cover(s, 3);
  CHECK(rep.separation_ok);
  CHECK(rep.identity_class_singleton); // nothing else evaluates to the new 1
}

#include <doctest.h>

#include "lly/error.hpp"
#include "lly/families.hpp"
#include "lly/verify.hpp"

using namespace lly;

namespace {
Rational q(long long n, long long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("sharp family matching uses generator labels") {
  CHECK(match_sharp_family(johnson(6, 3))->label == "johnson(6,3)");
  CHECK(match_sharp_family(johnson(6, 3))->isomorphism_checked);
  CHECK(match_sharp_family(complete(7))->label == "complete(7)");
  CHECK(match_sharp_family(clebsch())->label == "demi_cube(5)");
  CHECK(match_sharp_family(gosset())->label == "gosset");
  CHECK(match_sharp_family(schlafli())->label == "schlafli");
  CHECK(match_sharp_family(hamming(3, 3))->label == "hamming(3,3)");
  // same intersection array as a family member, different graph
  CHECK_FALSE(match_sharp_family(shrikhande()).has_value());
  CHECK_FALSE(match_sharp_family(petersen()).has_value());
  CHECK_FALSE(match_sharp_family(doob(1, 1)).has_value());
  // above the isomorphism limit only the array is compared
  const auto big = match_sharp_family(hamming(7, 2));
  REQUIRE(big.has_value());
  CHECK_FALSE(big->isomorphism_checked);
}

TEST_CASE("sharpness verdicts") {
  const auto j = sharpness(johnson(6, 3));
  CHECK(j.sharp);
  CHECK(j.kappa_min == q(2, 3));
  CHECK(*j.exact_lambda1 == QuadSurd(q(2, 3)));
  CHECK(j.mode == SharpnessMode::exact_certified);
  CHECK(j.certificate_nullity == 5);
  CHECK(j.classification->label == "johnson(6,3)");

  const auto p = sharpness(petersen());
  CHECK_FALSE(p.sharp);
  CHECK(p.kappa_min == 0);
  CHECK(*p.exact_lambda1 == QuadSurd(q(2, 3)));
  CHECK_FALSE(p.classification.has_value());

  const auto ico = sharpness(icosahedron());
  CHECK_FALSE(ico.sharp);
  CHECK(ico.certificate_nullity == 0);
  CHECK(*ico.exact_lambda1 == QuadSurd(q(1), q(-1, 5), BigInt(5)));
  CHECK(ico.lower_bound_holds);

  const auto numeric = sharpness(johnson(6, 3), SharpnessOptions{1, false});
  CHECK(numeric.mode == SharpnessMode::numeric_tolerance);
  CHECK(numeric.sharp);

  // irregular graphs go through the Laplacian certificate
  const auto star = sharpness(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.lower_bound_holds);
  CHECK_THROWS_AS(sharpness(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("bounds report") {
  const auto ico = check_bounds(icosahedron());
  CHECK(ico.ok());
  REQUIRE(ico.find("amply_inequality"));
  CHECK(ico.find("amply_inequality")->status == ClauseStatus::pass);
  CHECK(ico.find("terwilliger_bound")->status == ClauseStatus::pass);
  CHECK(ico.find("srg_identity")->status == ClauseStatus::skipped);  // diameter 3
  CHECK(ico.find("no_such_clause") == nullptr);

  const auto pet = check_bounds(petersen());
  CHECK(pet.ok());
  CHECK(pet.find("srg_identity")->status == ClauseStatus::pass);
  CHECK(pet.find("srg_lambda1_bound")->status == ClauseStatus::pass);

  const auto pent = check_bounds(cycle(5));
  CHECK(pent.find("srg_lambda1_bound")->status == ClauseStatus::skipped);

  const auto star = check_bounds(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.ok());
  CHECK(star.find("common_neighbor_bound")->status == ClauseStatus::skipped);
}

TEST_CASE("line graph sign") {
  const auto dodeca = check_line_graph_sign(dodecahedron());
  CHECK(dodeca.status == LineGraphSign::yes);
  CHECK(dodeca.kappa_min == q(0));
  const auto heawood_r = check_line_graph_sign(heawood());
  CHECK(heawood_r.status == LineGraphSign::yes);
  CHECK(heawood_r.kappa_min == q(-1, 4));
  CHECK(check_line_graph_sign(petersen()).status == LineGraphSign::inapplicable);  // diameter 2
  CHECK(check_line_graph_sign(hamming(3, 2)).status == LineGraphSign::inapplicable);  // girth 4
}

TEST_CASE("ARTG classification") {
  const auto ico = classify_artg(icosahedron());
  CHECK(ico.status == ArtgStatus::member);
  CHECK(ico.member == "icosahedron");
  CHECK(ico.isomorphism_checked);
  CHECK(ico.kappa_min == q(2, 5));

  const auto lp = classify_artg(line_graph(petersen()));
  CHECK(lp.status == ArtgStatus::member);
  CHECK(lp.member == "line_graph(petersen)");

  const auto lh = classify_artg(line_graph(hoffman_singleton()));
  CHECK(lh.status == ArtgStatus::member);
  CHECK(lh.member == "line_graph(hoffman_singleton)");
  CHECK_FALSE(lh.isomorphism_checked);
  CHECK(lh.reason == "parameter-level match");

  CHECK(classify_artg(cycle(5)).status == ArtgStatus::member);
  CHECK(classify_artg(petersen()).status == ArtgStatus::non_positive);
  CHECK(classify_artg(hamming(2, 3)).status == ArtgStatus::not_artg);
  CHECK(classify_artg(complete(4)).status == ArtgStatus::not_artg);
}

TEST_CASE("table caps") {
  TableCaps caps;
  caps.set("cp", 3);
  caps.set("johnson_vertices", 20);
  CHECK(caps.cocktail_party_max == 3);
  CHECK(caps.johnson_vertices_max == 20);
  CHECK_THROWS_AS(caps.set("nope", 1), DomainError);
}

TEST_CASE("small table reproduction") {
  TableConfig config;
  config.caps.cocktail_party_max = 3;
  config.caps.hamming2_max = 3;
  config.caps.triangular_max = 5;
  config.caps.hamming_vertices_max = 16;
  config.caps.johnson_vertices_max = 10;
  config.caps.demi_cube_max = 4;
  config.threads = 2;
  const auto rows = reproduce_tables(config);
  for (const auto& r : rows) {
    CAPTURE(r.label);
    CHECK(r.match);
  }
  const auto text = format_tables(rows);
  CHECK(text.find("Table 1") != std::string::npos);
  CHECK(text.find("Table 2") != std::string::npos);
  CHECK(text.find("Icosahedron") != std::string::npos);

  config.table2 = false;
  for (const auto& r : reproduce_tables(config)) CHECK(r.table == 1);
}

TEST_CASE("an impostor row is reported as a mismatch") {
  TableConfig config;
  config.table1 = false;
  config.caps.hamming_vertices_max = 4;
  config.caps.johnson_vertices_max = 3;
  config.caps.demi_cube_max = 2;
  config.caps.doob_max = 0;
  config.conway_smith = petersen();  // wrong graph on purpose
  const auto rows = reproduce_tables(config);
  bool seen = false;
  for (const auto& r : rows) {
    if (r.label != "Conway-Smith") continue;
    seen = true;
    CHECK_FALSE(r.match);
    CHECK_FALSE(r.mismatches.empty());
  }
  CHECK(seen);
}

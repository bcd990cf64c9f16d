#include <catch2/catch_amalgamated.hpp>

#include "spechom/instances.hpp"
#include "spechom/json_io.hpp"

#include <string>

using namespace spechom;
using namespace spechom::instances;

namespace {

std::string rechew(const std::string& text) {
  return to_json_text(Json::parse(text));
}

}  // namespace

TEST_CASE("poset JSON round trips") {
  SECTION("structure survives") {
    Poset p = four_cycle_poset();
    Json j = poset_to_json(p);
    REQUIRE(j["kind"] == "poset");
    REQUIRE(j["elements"].size() == 4);
    REQUIRE(j["less_than"].size() == 4);
    REQUIRE(poset_from_json(j) == p);
  }

  SECTION("emitted text is a fixed point of parse and re-serialize") {
    for (const Poset& p : {four_cycle_poset(), chain(4), antichain(3), staircase(5),
                           fibre_square(), Poset::from_relations({}, {})}) {
      std::string text = to_json_text(poset_to_json(p));
      REQUIRE(rechew(text) == text);
      REQUIRE(poset_from_json(Json::parse(text)) == p);
    }
  }

  SECTION("partial relation lists are closed transitively") {
    Json j = {{"kind", "poset"},
              {"elements", {"a", "b", "c"}},
              {"less_than", {{0, 1}, {1, 2}}}};
    Poset p = poset_from_json(j);
    REQUIRE(p.less(0, 2));
    REQUIRE(is_order_isomorphic(p, chain(3)));
    // the canonical emission lists the closed relation
    REQUIRE(poset_to_json(p)["less_than"].size() == 3);
  }

  SECTION("schema violations carry the offending path") {
    auto fails_with = [](const Json& j, const std::string& needle) {
      try {
        poset_from_json(j);
        FAIL("expected a schema error");
      } catch (const JsonSchemaError& e) {
        INFO(e.what());
        REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
      }
    };
    fails_with(Json::array(), "poset");
    fails_with({{"kind", "digraph"}, {"elements", Json::array()}, {"less_than", Json::array()}},
               "kind");
    fails_with({{"kind", "poset"}, {"less_than", Json::array()}}, "elements");
    fails_with({{"kind", "poset"}, {"elements", {"a"}}, {"less_than", {{0, 5}}}}, "poset");
    fails_with({{"kind", "poset"}, {"elements", {"a", "b"}}, {"less_than", {{0, 1}, {1, 0}}}},
               "poset");
    fails_with({{"kind", "poset"}, {"elements", {"a", "a"}}, {"less_than", Json::array()}},
               "poset");
    fails_with({{"kind", "poset"}, {"elements", {"a", "b"}}, {"less_than", {{0}}}},
               "less_than[0]");
  }
}

TEST_CASE("digraph JSON canonicalizes to the loop-free closure") {
  SECTION("round trip") {
    TransitiveDigraph g = d4_digraph();
    std::string text = to_json_text(digraph_to_json(g));
    REQUIRE(rechew(text) == text);
    TransitiveDigraph back = digraph_from_json(Json::parse(text));
    REQUIRE(back.labels() == g.labels());
    REQUIRE(back.edges() == g.edges());
  }

  SECTION("closure edges appear, loops are dropped") {
    Json j = {{"kind", "digraph"},
              {"vertices", {"x", "y", "z"}},
              {"edges", {{0, 0}, {0, 1}, {1, 2}}}};
    TransitiveDigraph g = digraph_from_json(j);
    REQUIRE(g.edge(0, 2));
    Json out = digraph_to_json(g);
    REQUIRE(out["edges"] == Json({{0, 1}, {0, 2}, {1, 2}}));
  }

  SECTION("bad indices are reported") {
    Json j = {{"kind", "digraph"}, {"vertices", {"x"}}, {"edges", {{0, 3}}}};
    REQUIRE_THROWS_AS(digraph_from_json(j), JsonSchemaError);
  }
}

TEST_CASE("expression JSON flattens tensors and rebuilds the same space") {
  SECTION("a nested tensor flattens to one factor list") {
    auto e = tensor(tensor(continuous_nest(), digraph_algebra(d4_digraph())),
                    finite_poset(klein_poset()));
    Json j = expr_to_json(e);
    REQUIRE(j["kind"] == "tensor");
    REQUIRE(j["factors"].size() == 3);
    REQUIRE(j["factors"][0]["kind"] == "nest");
    auto back = expr_from_json(j);
    REQUIRE(back->key() == e->key());
    std::string text = to_json_text(j);
    REQUIRE(rechew(text) == text);
    REQUIRE(to_json_text(expr_to_json(back)) == text);
  }

  SECTION("join, suspension and stabilization round trip") {
    auto e = suspension(join(finite_poset(antichain(2)),
                             stabilize(tensor(continuous_nest(), finite_poset(chain(2))))));
    std::string text = to_json_text(expr_to_json(e));
    auto back = expr_from_json(Json::parse(text));
    REQUIRE(back->key() == e->key());
    REQUIRE(to_json_text(expr_to_json(back)) == text);
    REQUIRE(spectral_homology(back, 3) == spectral_homology(e, 3));
  }

  SECTION("schema violations carry the offending path") {
    auto fails_with = [](const Json& j, const std::string& needle) {
      try {
        expr_from_json(j);
        FAIL("expected a schema error");
      } catch (const JsonSchemaError& e) {
        INFO(e.what());
        REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
      }
    };
    fails_with({{"kind", "orbit"}}, "kind");
    fails_with({{"kind", "tensor"}, {"factors", {Json{{"kind", "nest"}}}}}, "factors");
    fails_with({{"kind", "join"}, {"bottom", {{"kind", "nest"}}}}, "top");
    fails_with({{"kind", "tensor"},
                {"factors", {Json{{"kind", "nest"}}, Json{{"kind", "orbit"}}}}},
               "factors[1]");
    fails_with({{"kind", "suspension"}, {"of", {{"kind", "poset"}, {"elements", {"a", "a"}},
                                                {"less_than", Json::array()}}}},
               "of");
  }
}

TEST_CASE("labeling JSON carries exact rationals") {
  Poset p = four_cycle_poset();

  SECTION("round trip with a perturbed pair") {
    EdgeLabeling e(p);
    e.set(1, 3, Rational(2));
    e.set(0, 2, Rational(-3, 4));
    Json j = labeling_to_json(e);
    REQUIRE(j["pairs"].size() == 4);
    EdgeLabeling back = labeling_from_json(p, j);
    REQUIRE(back == e);
    std::string text = to_json_text(j);
    REQUIRE(rechew(text) == text);
    REQUIRE(to_json_text(labeling_to_json(back)) == text);
  }

  SECTION("rational strings parse exactly") {
    REQUIRE(rational_from_string("3/4", "t") == Rational(3, 4));
    REQUIRE(rational_from_string("-5", "t") == Rational(-5));
    REQUIRE(rational_from_string("7/1", "t") == Rational(7));
    REQUIRE_THROWS_AS(rational_from_string("1/0", "t"), JsonSchemaError);
    REQUIRE_THROWS_AS(rational_from_string("abc", "t"), JsonSchemaError);
    REQUIRE_THROWS_AS(rational_from_string("", "t"), JsonSchemaError);
    REQUIRE_THROWS_AS(rational_from_string("1/", "t"), JsonSchemaError);
  }

  SECTION("labels on bad pairs are rejected with their position") {
    Json j = {{"pairs", {{2, 0, "1"}}}};
    try {
      labeling_from_json(p, j);
      FAIL("expected a schema error");
    } catch (const JsonSchemaError& e) {
      REQUIRE(std::string(e.what()).find("pairs[0]") != std::string::npos);
    }
    Json zero = {{"pairs", {{0, 2, "0"}}}};
    REQUIRE_THROWS_AS(labeling_from_json(p, zero), JsonSchemaError);
  }
}

TEST_CASE("complex JSON stores inclusion-maximal simplices") {
  SECTION("a pure triangulation lists only its top faces") {
    SimplicialComplex k = klein_complex();
    Json j = complex_to_json(k);
    REQUIRE(j["vertices"].size() == 9);
    REQUIRE(j["simplices"].size() == 18);
    SimplicialComplex back = complex_from_json(j);
    REQUIRE(back == k);
    std::string text = to_json_text(j);
    REQUIRE(rechew(text) == text);
    REQUIRE(to_json_text(complex_to_json(back)) == text);
  }

  SECTION("facets are listed dimension-major") {
    SimplicialComplex k = SimplicialComplex::from_simplices({"a", "b", "c"}, {{0, 1}});
    Json j = complex_to_json(k);
    REQUIRE(j["simplices"] == Json({{2}, {0, 1}}));
  }

  SECTION("bad simplices are rejected") {
    Json dup = {{"vertices", {"a", "b"}}, {"simplices", {{0, 0}}}};
    REQUIRE_THROWS_AS(complex_from_json(dup), JsonSchemaError);
    Json range = {{"vertices", {"a", "b"}}, {"simplices", {{0, 7}}}};
    REQUIRE_THROWS_AS(complex_from_json(range), JsonSchemaError);
  }
}

TEST_CASE("homology serializes by degree with the group grammar") {
  HomologySignature s = poset_homology(klein_poset(), 3);
  Json j = homology_to_json(s, 3);
  REQUIRE(j == Json({{"H0", "Z"}, {"H1", "Z + Z/2"}, {"H2", "0"}, {"H3", "0"}}));
  REQUIRE(group_to_json(FgAbGroup::of(2, {Int(2), Int(6)})) ==
          Json({{"rank", 2}, {"torsion", {2, 6}}}));
  REQUIRE(group_to_json(FgAbGroup::free(0)) == Json({{"rank", 0}, {"torsion", Json::array()}}));
}

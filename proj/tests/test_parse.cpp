#include <catch2/catch_amalgamated.hpp>

#include "e36/parse.hpp"
#include "e36/serialize.hpp"

#include <string>
#include <vector>

using namespace e36;

TEST_CASE("atoms and terms parse into the expected shapes") {
  ExpressionAST e = parse_expression("2/3*x1*d45 - dp2^3 + 5");
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0].coeff == Rational(2, 3));
  REQUIRE(e.terms[0].atoms.size() == 2);
  CHECK(e.terms[0].atoms[0].kind == ExprAtom::Var);
  CHECK(e.terms[0].atoms[0].i == 1);
  CHECK(e.terms[0].atoms[1].kind == ExprAtom::Form);
  CHECK(e.terms[0].atoms[1].i == 4);
  CHECK(e.terms[0].atoms[1].j == 5);
  CHECK(e.terms[1].coeff == Rational(-1));
  REQUIRE(e.terms[1].atoms.size() == 1);
  CHECK(e.terms[1].atoms[0].kind == ExprAtom::Field);
  CHECK(e.terms[1].atoms[0].i == 2);
  CHECK(e.terms[1].atoms[0].power == 3);
  CHECK(e.terms[2].coeff == Rational(5));
  CHECK(e.terms[2].atoms.empty());
}

TEST_CASE("identifiers that are not letter-digit shapes resolve as names") {
  ExpressionAST e = parse_expression("e0prime + h1 - e1'");
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[0].atoms[0].kind == ExprAtom::Named);
  CHECK(e.terms[0].atoms[0].name == "e0prime");
  CHECK(e.terms[1].atoms[0].name == "h1");
  CHECK(e.terms[2].atoms[0].name == "e1'");
}

TEST_CASE("powers compose and zero flattens") {
  CHECK(parse_expression("x1^2^3").terms[0].atoms[0].power == 6);
  CHECK(parse_expression("x1^0").terms[0].atoms[0].power == 0);
  ExpressionAST g = parse_expression("(x1 + x2)^2");
  REQUIRE(g.terms.size() == 1);
  CHECK(g.terms[0].atoms[0].kind == ExprAtom::Group);
  CHECK(g.terms[0].atoms[0].power == 2);
  CHECK(g.terms[0].atoms[0].sub.terms.size() == 2);
}

TEST_CASE("syntax errors carry the offending position") {
  auto pos_of = [](const std::string& s) {
    try {
      parse_expression(s);
    } catch (const ParseError& pe) {
      CHECK(std::string(pe.what()).find("at position") != std::string::npos);
      return pe.pos;
    }
    return size_t(-1);
  };
  CHECK(pos_of("x1 + ") == 5);
  CHECK(pos_of("x1 ^ x2") == 5);
  CHECK(pos_of("(x1 + x2") == 8);
  CHECK(pos_of("x1 x2") == 3);
  CHECK(pos_of("2/0*x1") == 3);
  CHECK(pos_of("x9") == 0);
  CHECK(pos_of("dp7") == 0);
  CHECK(pos_of("d33") == 0);
  CHECK(pos_of("d16") == 0);
  CHECK(pos_of("") == 0);
}

TEST_CASE("printing the tree gives back the canonical form") {
  for (const char* s : {
           "x3*d35",
           "-x1 + x2",
           "2/3*x1*dp2",
           "x1^2*dp3",
           "(x1 + x2)*d45",
           "dp3^2*x1",
           "e0prime - 2*h1",
           "5",
           "-1/2",
       }) {
    ExpressionAST ast = parse_expression(s);
    CHECK(ast_to_string(ast) == s);
    CHECK(ast_to_string(parse_expression(ast_to_string(ast))) == s);
  }
}

TEST_CASE("algebra evaluation meets the named basis") {
  CHECK(eval_algebra("x3*d35") == named_element("e0prime"));
  CHECK(eval_algebra("x3*d34") == named_element("e1prime"));
  CHECK(eval_algebra("d14") == named_element("f0"));
  CHECK(eval_algebra("d14") == named_element("dplus1"));
  CHECK(eval_algebra("d25") == named_element("dminus2"));
  CHECK(eval_algebra("x3*d25 - x2*d35 + 2*x5*d23") == named_element("e0"));
  CHECK(eval_algebra("x1*dp2") == named_element("e1"));
  CHECK(eval_algebra("e1") == named_element("e1"));
  CHECK(eval_algebra("2*e1 - x1*dp2") == named_element("e1"));
  CHECK(eval_algebra("x1*dp1 - x2*dp2") == named_element("h1"));
  CHECK(eval_algebra("(e1 + e2) - e2") == named_element("e1"));
  CHECK(eval_algebra("1/2*(2*d12)") == eval_algebra("d12"));
}

TEST_CASE("evaluation rejects what the algebra cannot hold") {
  CHECK_THROWS_WITH(eval_algebra("x5*d23"), "non-closed 2-form");
  CHECK_THROWS_WITH(eval_algebra("x1*dp1"), "vector field has nonzero divergence");
  CHECK_THROWS_WITH(eval_algebra("x1"),
                    "expression has a scalar part; it does not evaluate to an algebra element");
  CHECK_THROWS_WITH(eval_algebra("e1*e2"),
                    "cannot multiply two algebra elements; only scalar factors are allowed");
  CHECK_THROWS_WITH(eval_algebra("e1^2"), "cannot raise an algebra element to a power");
  CHECK_THROWS_WITH(eval_algebra("zzz"), "unknown element name: zzz");
  // scalar prefactors are fine, including through parentheses
  CHECK(eval_algebra("x1^2*dp2") == field_elem(2, Poly5::monomial({2, 0, 0, 0, 0}, 1)));
}

TEST_CASE("model evaluation works over the three variable ring") {
  CHECK(eval_model("dp3^2*x1") == ModelElement::monomial(hw_key(1, 2)));
  CHECK(eval_model("dp3*dp3*x1") == ModelElement::monomial(hw_key(1, 2)));
  ModelElement sq = eval_model("(dp1 + x1)^2");
  ModelElement expanded = eval_model("dp1^2 + 2*dp1*x1 + x1^2");
  CHECK(sq == expanded);
  CHECK(eval_model("0*dp1").is_zero());
  CHECK_THROWS_WITH(eval_model("x4"), "model variables range over x1..x3");
  CHECK_THROWS_WITH(eval_model("dp4"), "model generators range over dp1..dp3");
  CHECK_THROWS_WITH(eval_model("d12"), "2-forms are not model elements");
  CHECK_THROWS_WITH(eval_model("e1"), "named algebra elements are not model elements: e1");
}

TEST_CASE("search results serialize with exact coordinates") {
  SearchResult res = singular_search(build_irrep(0, 0, 0, Rational(0)), 1);
  json j = singular_json(res);
  CHECK(j["F"]["p"] == 0);
  CHECK(j["F"]["y"] == "0/1");
  CHECK(j["maxDepth"] == 1);
  REQUIRE(j["found"].size() == 1);
  const json& v = j["found"][0];
  CHECK(v["depth"] == 1);
  CHECK(v["weight"] == json::array({1, 0, 1, "-1/3"}));
  REQUIRE(v["terms"].size() == 1);
  const json& t = v["terms"][0];
  CHECK(t["alpha"] == json::array({0, 0, 0}));
  CHECK(t["dminus"] == json::array());
  CHECK(t["dplus"] == json::array({1}));
  CHECK(t["fIndex"] == 0);
  CHECK(t["coeff"] == "1/1");
}

TEST_CASE("the parametric condition serializes roots and the polynomial") {
  ParametricResult res = parametric_y_search(0, 0, 0, 1);
  json j = parametric_json(res);
  CHECK(j["F"]["y"] == "parametric");
  REQUIRE(j["conditions"].size() == 1);
  const json& c = j["conditions"][0];
  CHECK(c["poly-in-y"] == "y");
  CHECK(c["rational-roots"] == json::array({"0/1"}));
  CHECK(c["roots-complete"] == true);
  REQUIRE(c["at-roots"].size() == 1);
  CHECK(c["at-roots"][0]["y"] == "0/1");
  CHECK(c["at-roots"][0]["found"][0]["terms"][0]["dplus"] == json::array({1}));
}

TEST_CASE("identical inputs give byte-identical documents") {
  auto dump_parametric = [] {
    return dump_json(parametric_json(parametric_y_search(1, 0, 0, 1)), false);
  };
  CHECK(dump_parametric() == dump_parametric());
  auto dump_report = [] { return dump_json(report_json(verify_lemma("3.3")), false); };
  CHECK(dump_report() == dump_report());
  auto dump_rel = [] { return dump_json(relations_json(relation_suite()), false); };
  CHECK(dump_rel() == dump_rel());
  CHECK(dump_json(json::object(), true) == "{}\n");
}

TEST_CASE("the report document keeps claims in declaration order") {
  json j = report_json(verify_lemma("relations"));
  CHECK(j["lemma-id"] == "relations");
  CHECK(j["status"] == "deviation");
  bool saw_deviation = false;
  for (const json& d : j["details"]) {
    CHECK(d.contains("claim"));
    CHECK(d.contains("computed"));
    CHECK(d.contains("expected"));
    CHECK(d.contains("match"));
    if (d.contains("known-deviation")) saw_deviation = true;
  }
  CHECK(saw_deviation);
}

TEST_CASE("relation rows serialize the corrected value on deviations") {
  json j = relations_json(relation_suite());
  int dev = 0;
  for (const json& e : j) {
    if (!e.contains("deviation")) continue;
    ++dev;
    CHECK(e["ok"] == false);
    CHECK(e["corrected"] == to_string(named_element("f12")));
  }
  CHECK(dev == 1);
}

TEST_CASE("lambda lines serialize their family labels") {
  json j = lambda_lines_json(enumerate_hwv_lambda(1, 1, '+'));
  REQUIRE(j.size() == 8);
  for (const json& e : j) {
    CHECK(e["matched"] == true);
    CHECK(!e["family-tag"].get<std::string>().empty());
    CHECK(e["weight"].size() == 2);
  }
}

#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace culab;
using namespace culab::testing;

TEST_CASE("shipped fixtures round-trip bit-exactly") {
  for (const auto& f : shipped_fixtures()) {
    INFO(f);
    const std::string bytes = read_fixture(f);
    CHECK(emit_model(parse_model(bytes)) == bytes);
    // Through the validated model as well.
    CHECK(emit_model(parse_and_validate(bytes)) == bytes);
  }
}

TEST_CASE("emission format") {
  const std::string o2 = read_fixture("o2.json");
  CHECK(o2.find('\r') == std::string::npos);
  CHECK(o2.back() == '\n');
  CHECK(o2.rfind("{\n  \"add\": [\n    [\n      \"0\",", 0) == 0);
  // Keys appear sorted.
  CHECK(o2.find("\"add\"") < o2.find("\"elements\""));
  CHECK(o2.find("\"name\"") < o2.find("\"order\""));
  CHECK(o2.find("\"order\"") < o2.find("\"zero\""));
}

TEST_CASE("emit is deterministic and normalizes input layout") {
  const std::string compact =
      R"({"zero":"0","order":"algebraic","name":"O2","elements":["0","u"],"add":[["0","u"],["u","u"]]})";
  CHECK(emit_model(parse_model(compact)) == read_fixture("o2.json"));
  CHECK(emit_model(parse_model(compact)) == emit_model(parse_model(compact)));
}

TEST_CASE("parse errors") {
  try {
    parse_model(read_fixture("syntax_error.json"));
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 4"));
  }
  CHECK_THROWS_WITH(parse_model(read_fixture("dup_label.json")),
                    Catch::Matchers::ContainsSubstring("duplicate label \"a\""));
  CHECK_THROWS_AS(parse_model("[]"), ParseError);
  CHECK_THROWS_WITH(parse_model(R"({"name":"x","elements":["0"],"zero":"0","add":[["0"]]})"),
                    Catch::Matchers::ContainsSubstring("missing field \"order\""));
  CHECK_THROWS_WITH(parse_model(R"({"name":"x","elements":["0"],"zero":"0","add":[["0"]],"order":"algebraic","x":1})"),
                    Catch::Matchers::ContainsSubstring("unknown field"));
  CHECK_THROWS_AS(parse_model(R"({"name":"x","elements":["0"],"zero":"0","add":[["0"]],"order":"free"})"),
                  ParseError);
  CHECK_THROWS_AS(parse_model(R"({"name":"x","elements":[""],"zero":"","add":[[""]],"order":"algebraic"})"),
                  ParseError);
}

TEST_CASE("validation errors from documents") {
  CHECK_THROWS_AS(validate(parse_model(R"({"name":"x","elements":["0"],"zero":"z","add":[["0"]],"order":"algebraic"})")),
                  ValidationError);
  CHECK_THROWS_AS(validate(parse_model(R"({"name":"x","elements":["0","a"],"zero":"0","add":[["0","a"]],"order":"algebraic"})")),
                  ValidationError);
  CHECK_THROWS_AS(validate(parse_model(R"({"name":"x","elements":["0"],"zero":"0","add":[["0"]],"order":{"pairs":[["0","q"]]}})")),
                  ValidationError);
}

TEST_CASE("generated models survive emit, parse, validate") {
  auto P = sphere_model(1, 2);
  CHECK(P.size() == 10);
  auto back = parse_and_validate(emit_model(P));
  CHECK(is_isomorphic(P, back));
  CHECK(emit_model(back) == emit_model(P));

  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto S = random_model(rng);
    INFO(S.name());
    auto doc = to_document(S);
    REQUIRE(parse_model(emit_model(doc)) == doc);
    auto T = validate(doc);
    REQUIRE(T.labels() == S.labels());
    REQUIRE(T.order_mode() == S.order_mode());
    for (Element x : all(S))
      for (Element y : all(S)) {
        REQUIRE(T.add(x, y) == S.add(x, y));
        REQUIRE(T.leq(x, y) == S.leq(x, y));
      }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ftca/rules.hpp"

using namespace ftca;

TEST_CASE("rule names parse to trigger masks") {
  Rule r = parse_rule(Topology::Square, "24");
  CHECK(r.triggers(2));
  CHECK(r.triggers(4));
  CHECK_FALSE(r.triggers(3));
  CHECK(r.name == "24");
  Rule phi = parse_rule(Topology::Triangular, "phi");
  CHECK(phi.mask == 0);
  Rule z = parse_rule(Topology::Square, "024");
  CHECK(z.triggers(0));
}

TEST_CASE("rule names must be strictly increasing and in range") {
  CHECK_THROWS_AS(parse_rule(Topology::Square, "42"), BadRuleName);
  CHECK_THROWS_AS(parse_rule(Topology::Square, "22"), BadRuleName);
  CHECK_THROWS_AS(parse_rule(Topology::Triangular, "4"), BadRuleName);
  CHECK_THROWS_AS(parse_rule(Topology::Square, "5"), BadRuleName);
  CHECK_THROWS_AS(parse_rule(Topology::Square, ""), BadRuleName);
  CHECK_THROWS_AS(parse_rule(Topology::Square, "1a"), BadRuleName);
}

TEST_CASE("triangular classification") {
  auto cls = [](const char* n) { return classify(parse_rule(Topology::Triangular, n)); };
  CHECK(cls("phi") == RuleClass::Trivial);
  CHECK(cls("123") == RuleClass::Trivial);
  CHECK(cls("3") == RuleClass::Trivial);
  CHECK(cls("2") == RuleClass::Topological);
  CHECK(cls("23") == RuleClass::Topological);
  CHECK(cls("12") == RuleClass::Algebraic);
  CHECK(cls("1") == RuleClass::FractalGrowing);
  CHECK(cls("13") == RuleClass::FractalGrowing);
  CHECK(cls("02") == RuleClass::NonQuiescent);
}

TEST_CASE("square classification") {
  auto cls = [](const char* n) { return classify(parse_rule(Topology::Square, n)); };
  CHECK(cls("phi") == RuleClass::Trivial);
  CHECK(cls("1234") == RuleClass::Trivial);
  CHECK(cls("4") == RuleClass::Trivial);
  CHECK(cls("234") == RuleClass::Topological);
  CHECK(cls("3") == RuleClass::Topological);
  CHECK(cls("34") == RuleClass::Topological);
  CHECK(cls("12") == RuleClass::Algebraic);
  CHECK(cls("123") == RuleClass::Algebraic);
  CHECK(cls("124") == RuleClass::Algebraic);
  CHECK(cls("2") == RuleClass::TuringUniversal);
  CHECK(cls("24") == RuleClass::TuringUniversal);
  CHECK(cls("1") == RuleClass::FractalGrowing);
  CHECK(cls("13") == RuleClass::FractalGrowing);
  CHECK(cls("14") == RuleClass::FractalGrowing);
  CHECK(cls("134") == RuleClass::FractalGrowing);
  CHECK(cls("024") == RuleClass::NonQuiescent);
}

TEST_CASE("upward closed trigger sets") {
  CHECK(upward_closed(parse_rule(Topology::Square, "34")));
  CHECK(upward_closed(parse_rule(Topology::Square, "234")));
  CHECK(upward_closed(parse_rule(Topology::Square, "phi")));
  CHECK_FALSE(upward_closed(parse_rule(Topology::Square, "24")));
  CHECK_FALSE(upward_closed(parse_rule(Topology::Triangular, "12")));
  CHECK(upward_closed(parse_rule(Topology::Triangular, "23")));
}

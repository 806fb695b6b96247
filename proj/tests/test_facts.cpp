#include <doctest.h>

#include "bimclp/facts.hpp"

using namespace bimclp;

TEST_CASE("facts with comments, quoted atoms and numbers") {
  const auto facts = parse_facts(
      "% header\n"
      "object(ifcbeam, b1, point(0,0,0), point(4,0.3,0.3), arq).\n"
      "\n"
      "object('IfcDoor', '2O2Fr$t4X7', point(-1, -4.002, 1/3), point(1,2,3), point(1.5,2,1)). % trailing\n"
      "room(r1). size(r1, 25).\n"
      "data(1, ventilation(X)).\n");
  REQUIRE(facts.size() == 5);
  CHECK(facts[0].line == 2);
  CHECK(facts[0].term.is("object", 5));
  CHECK(facts[0].term.args[3].args[1].number == Rational(3, 10));
  CHECK(facts[1].line == 4);
  CHECK(facts[1].term.args[0].name == "IfcDoor");
  CHECK(facts[1].term.args[1].name == "2O2Fr$t4X7");
  CHECK(facts[1].term.args[2].args[1].number == Rational(-2001, 500));
  CHECK(facts[1].term.args[2].args[2].number == Rational(1, 3));
  CHECK(facts[2].term.is("room", 1));
  CHECK(facts[3].line == 5);
  CHECK(facts[4].term.args[1].args[0].is_var());
}

TEST_CASE("term printing quotes only when needed") {
  CHECK(Term::atom("ifcbeam").to_string() == "ifcbeam");
  CHECK(Term::atom("IfcDoor").to_string() == "'IfcDoor'");
  CHECK(Term::atom("a b").to_string() == "'a b'");
  CHECK(Term::compound("point", {Term::num(Rational(1, 2)), Term::num(3)}).to_string() == "point(0.5, 3)");
  CHECK(Term::num(Rational(1, 3)).to_string() == "1/3");
}

TEST_CASE("syntax errors carry the line") {
  try {
    parse_facts("room(r1).\nroom(r2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_facts("room(r1)"), ParseError);
  CHECK_THROWS_AS(parse_facts("room(r1)).\n"), ParseError);
  CHECK_THROWS_AS(parse_facts("'unterminated.\n"), ParseError);
}

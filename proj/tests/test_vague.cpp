#include <doctest.h>

#include <random>

#include "bimclp/vague.hpp"

using namespace bimclp;

namespace {

const char* kRooms8 =
    "room(r1).      room(r2).      room(r3).      room(r4).\n"
    "room(r5).      room(r6).      room(r7).      room(r8).\n"
    "size(r1, 25).        size(r2, 5).        size(r3, 15).\n";

using K = Determination::Kind;

}  // namespace

TEST_CASE("classification follows the evidence thresholds") {
  const EntityStore s = load_entities(kRooms8);
  const ThresholdRule rule;
  CHECK(classify(s, "r1", rule).kind == K::ProvenNot);
  CHECK(classify(s, "r2", rule).kind == K::Proven);
  CHECK(classify(s, "r3", rule).kind == K::Branch);
  CHECK(classify(s, "r4", rule).kind == K::Branch);
  CHECK(classify_value(Rational(10), rule).kind == K::Branch);
  CHECK(classify_value(Rational(20), rule).kind == K::Branch);
  CHECK(classify_value(Rational(199, 20), rule).kind == K::Proven);
  CHECK_THROWS_AS(classify(s, "r9", rule), std::out_of_range);
}

TEST_CASE("partial models per entity") {
  const EntityStore s = load_entities(kRooms8);
  const ThresholdRule rule;
  const auto m1 = models_for(s, "r1", rule);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].to_string() == "{-small(r1)}");
  const auto m3 = models_for(s, "r3", rule);
  REQUIRE(m3.size() == 2);
  CHECK(m3[0].to_string() == "{small(r3)?}");
  CHECK(m3[1].to_string() == "{-small(r3)?}");
  CHECK(models_for_value("e", Rational(10), rule).size() == 2);
}

TEST_CASE("answers and counts for the eight-room fixture") {
  const EntityStore s = load_entities(kRooms8);
  const ThresholdRule rule;
  const auto answers = query_room_is(s, rule);
  CHECK(answers.size() == 14);
  CHECK(answers[0].entity == "r1");
  CHECK(answers[0].label == "big");
  CHECK(answers[1].label == "small");
  CHECK(count_global_models(s, rule) == 64);
  CHECK(enumerate_global_models(s, rule).size() == 64);
  CHECK_THROWS_AS(enumerate_global_models(s, rule, 63), std::length_error);

  const auto single = query_room_is(s, "r1", rule);
  REQUIRE(single.size() == 1);
  CHECK(single[0].label == "big");
}

TEST_CASE("zero branching entities give one global model") {
  EntityStore s;
  s.declare("a");
  s.set("a", "size", 3);
  CHECK(count_global_models(s, ThresholdRule{}) == 1);
}

TEST_CASE("store errors") {
  EntityStore s;
  s.declare("a");
  CHECK_THROWS_AS(s.declare("a"), std::invalid_argument);
  CHECK_THROWS_AS(s.set("b", "size", 1), std::out_of_range);
  s.set("a", "size", 1);
  CHECK_NOTHROW(s.set("a", "size", 1));
  CHECK_THROWS_AS(s.set("a", "size", 2), std::invalid_argument);
  CHECK_THROWS_AS(load_entities("room(a).\nroom(a).\n"), ParseError);
  ThresholdRule bad;
  bad.evidence_below = 30;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("justifications") {
  const EntityStore s = load_entities(kRooms8);
  const ThresholdRule rule;
  CHECK(justify(query_room_is(s, "r1", rule)[0]) ==
        "room_is(r1, big)\n  room(r1)\n  -small(r1)\n    evidence: size(r1) = 25 > 20\n");
  CHECK(justify(query_room_is(s, "r2", rule)[0]) ==
        "room_is(r2, small)\n  room(r2)\n  small(r2)\n    evidence: size(r2) = 5 < 10\n");
  CHECK(justify(query_room_is(s, "r4", rule)[0]) ==
        "room_is(r4, small)\n  room(r4)\n  small(r4)\n"
        "    assumption: size unknown; no evidence for or against, branched; assumed small\n");
  CHECK(justify(query_room_is(s, "r3", rule)[1]) ==
        "room_is(r3, big)\n  room(r3)\n  -small(r3)\n"
        "    assumption: size(r3) = 15 within [10, 20]; no evidence for or against, branched; assumed big\n");
}

TEST_CASE("count formulas against explicit enumeration") {
  std::mt19937_64 rng(5);
  const ThresholdRule rule;
  for (int trial = 0; trial < 40; ++trial) {
    EntityStore s;
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    int determined = 0, branch = 0;
    for (int i = 0; i < n; ++i) {
      const std::string e = "e" + std::to_string(i);
      s.declare(e);
      const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
      if (kind == 0) continue;  // unknown
      const int v = std::uniform_int_distribution<int>(0, 30)(rng);
      s.set(e, "size", v);
    }
    for (const auto& e : s.entities()) {
      const auto v = e.value("size");
      const bool det = v && (*v < Rational(10) || *v > Rational(20));
      (det ? determined : branch)++;
    }
    CHECK(query_room_is(s, rule).size() == static_cast<std::size_t>(determined + 2 * branch));
    CHECK(count_global_models(s, rule) == Integer(1) << branch);
    if (branch <= 10) {
      const auto models = enumerate_global_models(s, rule);
      CHECK(models.size() == (std::size_t{1} << branch));
      for (const auto& m : models) {
        // no model holds a literal and its negation
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = i + 1; j < m.size(); ++j) {
            CHECK_FALSE((m[i].entity == m[j].entity && m[i].positive != m[j].positive));
          }
        }
        // evidence literals are the same in every model
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i].provenance == Provenance::Evidence) CHECK(m[i] == models.front()[i]);
        }
      }
    }
  }
}

TEST_CASE("new evidence only narrows the models of its own entity") {
  EntityStore s = load_entities(kRooms8);
  const ThresholdRule rule;
  const auto before = query_room_is(s, rule);
  s.set("r4", "size", 3);
  const auto after = query_room_is(s, rule);
  CHECK(after.size() == before.size() - 1);
  CHECK(models_for(s, "r4", rule).size() == 1);
  CHECK(models_for(s, "r1", rule) == models_for(load_entities(kRooms8), "r1", rule));
}

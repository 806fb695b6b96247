#include <doctest.h>

#include "bimclp/compliance.hpp"

using namespace bimclp;

namespace {

// One room of the given size with one window of the given width (X extent),
// 0.2 deep, 1.2 high.
struct Fixture {
  ModelStore store;
  EntityStore sizes;
};

Fixture room_with_window(std::optional<long> size, const Rational& width) {
  Fixture f{ModelStore({
                {"ifcspace", "r", Point::xyz(0, 0, 0), Point::xyz(5, 4, 3), std::string("arq")},
                {"ifcwindow", "w", Point::xyz(1, Rational(-1, 10), 1),
                 Point::xyz(Rational(1) + width, Rational(1, 10), Rational(22, 10)), std::string("arq")},
            }),
            {}};
  f.sizes.declare("r");
  if (size) f.sizes.set("r", "size", *size);
  return f;
}

const Rational w055 = Rational::parse("0.55");

}  // namespace

TEST_CASE("window width verdicts per smallness") {
  auto big = room_with_window(25, w055);
  CHECK(check_window_width("r", big.store, big.sizes).outcome == Outcome::Fail);

  auto small = room_with_window(5, w055);
  CHECK(check_window_width("r", small.store, small.sizes).outcome == Outcome::Pass);

  auto mid = room_with_window(15, w055);
  const auto v = check_window_width("r", mid.store, mid.sizes);
  CHECK(v.outcome == Outcome::Conditional);
  REQUIRE(v.branches.size() == 2);
  CHECK(v.branches[0].model.literals[0].positive);
  CHECK(v.branches[0].outcome == Outcome::Pass);
  CHECK(v.branches[1].outcome == Outcome::Fail);
  CHECK(v.to_string() == "window-width r conditional [model: small(r) -> pass] [model: -small(r) -> fail]");

  auto unknown = room_with_window(std::nullopt, w055);
  CHECK(check_window_width("r", unknown.store, unknown.sizes).outcome == Outcome::Conditional);
}

TEST_CASE("width thresholds are strict") {
  auto at60 = room_with_window(25, Rational::parse("0.60"));
  CHECK(check_window_width("r", at60.store, at60.sizes).outcome == Outcome::Fail);
  auto above60 = room_with_window(25, Rational::parse("0.601"));
  CHECK(check_window_width("r", above60.store, above60.sizes).outcome == Outcome::Pass);
  auto at50 = room_with_window(5, Rational::parse("0.50"));
  CHECK(check_window_width("r", at50.store, at50.sizes).outcome == Outcome::Fail);
}

TEST_CASE("branches differ only for widths in (0.50, 0.60]") {
  for (int k = 40; k <= 70; ++k) {
    const Rational w(k, 100);
    auto f = room_with_window(15, w);
    const auto v = check_window_width("r", f.store, f.sizes);
    REQUIRE(v.branches.size() == 2);
    const bool differ = v.branches[0].outcome != v.branches[1].outcome;
    CAPTURE(k);
    CHECK(differ == (w > Rational(1, 2) && w <= Rational(3, 5)));
  }
}

TEST_CASE("wider windows never turn a pass into a fail") {
  for (long size : {5L, 15L, 25L}) {
    Outcome prev_small = Outcome::Fail, prev_big = Outcome::Fail;
    for (int k = 30; k <= 80; k += 2) {
      auto f = room_with_window(size, Rational(k, 100));
      const auto v = check_window_width("r", f.store, f.sizes);
      const auto in_model = [&](bool small_model) {
        if (v.outcome != Outcome::Conditional) return v.outcome;
        return v.branches[small_model ? 0 : 1].outcome;
      };
      if (prev_small == Outcome::Pass) CHECK(in_model(true) == Outcome::Pass);
      if (prev_big == Outcome::Pass) CHECK(in_model(false) == Outcome::Pass);
      prev_small = in_model(true);
      prev_big = in_model(false);
    }
  }
}

TEST_CASE("rooms without windows fail and unknown rooms throw") {
  ModelStore store({{"ifcspace", "r", Point::xyz(0, 0, 0), Point::xyz(5, 4, 3), std::string("arq")}});
  EntityStore sizes;
  CHECK(check_window_width("r", store, sizes).outcome == Outcome::Conditional);
  const auto v = check_window_width("r", store, sizes);
  CHECK(v.branches[0].outcome == Outcome::Fail);
  CHECK(v.branches[1].outcome == Outcome::Fail);
  CHECK_THROWS_AS(check_window_width("x", store, sizes), std::out_of_range);
  CHECK_THROWS_AS(check_natural_ventilation("x", store), std::out_of_range);
  CHECK(check_natural_ventilation("r", store).outcome == Outcome::Fail);
}

TEST_CASE("width mode") {
  const BimObject w{"ifcwindow", "w", Point::xyz(0, 0, 0), Point::xyz(Rational(1, 5), Rational(3, 4), 1), std::string("a")};
  CHECK(window_width(w) == Rational(3, 4));
  CHECK(window_width(w, WidthMode::Smaller) == Rational(1, 5));
}

namespace {

ModelStore ventilated(const Rational& face_w, const Rational& face_h) {
  // room 5 x 4 (floor 20); window face_w wide, 0.2 deep, face_h high
  return ModelStore({
      {"ifcspace", "r", Point::xyz(0, 0, 0), Point::xyz(5, 4, 3), std::string("arq")},
      {"ifcwindow", "w", Point::xyz(1, Rational(-1, 10), Rational(1, 2)),
       Point::xyz(Rational(1) + face_w, Rational(1, 10), Rational(1, 2) + face_h), std::string("arq")},
  });
}

}  // namespace

TEST_CASE("natural ventilation needs a tenth of the floor area") {
  CHECK(window_face_area(ventilated(2, Rational(6, 5)).at("w")) == Rational(12, 5));
  CHECK(floor_area(ventilated(2, 1).at("r")) == Rational(20));
  CHECK(check_natural_ventilation("r", ventilated(2, Rational(6, 5))).outcome == Outcome::Pass);
  CHECK(check_natural_ventilation("r", ventilated(1, Rational(19, 10))).outcome == Outcome::Fail);
  CHECK(check_natural_ventilation("r", ventilated(2, 1)).outcome == Outcome::Pass);
  CHECK(check_natural_ventilation("r", ventilated(2, 1)).to_string() == "ventilation r pass");
}

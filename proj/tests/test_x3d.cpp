#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <sstream>

#include "bimclp/x3d.hpp"

using namespace bimclp;

namespace {

namespace pt = boost::property_tree;

pt::ptree parse_xml(const std::string& text) {
  std::istringstream is(text);
  pt::ptree tree;
  pt::read_xml(is, tree);
  return tree;
}

// Boxes under Scene/Group/Transform/Shape, with their translation and size.
struct BoxNode {
  std::string translation, size, color, transparency;
};

std::vector<BoxNode> boxes(const pt::ptree& doc) {
  std::vector<BoxNode> out;
  for (const auto& [gname, group] : doc.get_child("X3D.Scene")) {
    if (gname != "Group") continue;
    for (const auto& [tname, tr] : group) {
      if (tname != "Transform") continue;
      out.push_back({tr.get<std::string>("<xmlattr>.translation"), tr.get<std::string>("Shape.Box.<xmlattr>.size"),
                     tr.get<std::string>("Shape.Appearance.Material.<xmlattr>.diffuseColor"),
                     tr.get<std::string>("Shape.Appearance.Material.<xmlattr>.transparency")});
    }
  }
  return out;
}

Halfspace ax(const char* d, Comparison c, Rational b) { return Halfspace::axis(d, c, b); }

}  // namespace

TEST_CASE("unit box scene") {
  const SceneGroup g{"doors", Color::green(), Rational(0), {box(Point::xyz(0, 0, 0), Point::xyz(1, 1, 1))}};
  const std::string text = emit_scene({g});
  const auto b = boxes(parse_xml(text));
  REQUIRE(b.size() == 1);
  CHECK(b[0].translation == "0.5 0.5 0.5");
  CHECK(b[0].size == "1 1 1");
  CHECK(b[0].color == "0 1 0");
  CHECK(emit_scene({g}) == text);
  CHECK(text.rfind("<?xml", 0) == 0);
  CHECK(text.find("<X3D profile=\"Interchange\"") != std::string::npos);
}

TEST_CASE("empty scene") {
  const auto doc = parse_xml(emit_scene({}));
  CHECK(doc.get_child("X3D.Scene").empty());
}

TEST_CASE("clipping to an envelope") {
  Shape slab(kXYZ);
  slab.add(LinSystem(kXYZ, {ax("Y", Comparison::Lt, -4)}));
  const Envelope env{Point::xyz(-10, -10, -10), Point::xyz(10, 10, 10)};
  const Shape clipped = clip_to_envelope(slab, env);
  CHECK(equivalent(clipped, box(Point::xyz(-10, -10, -10), Point::xyz(10, -4, 10))));

  const Shape inside = box(Point::xyz(0, 0, 0), Point::xyz(1, 2, 3));
  CHECK(equivalent(clip_to_envelope(inside, env), inside));
  CHECK(is_empty(clip_to_envelope(box(Point::xyz(20, 20, 20), Point::xyz(21, 21, 21)), env)));

  const auto groups = clip_groups({{"far", Color::red(), Rational(0), {box(Point::xyz(20, 20, 20), Point::xyz(21, 21, 21))}}}, env);
  CHECK(groups.empty());
  CHECK_THROWS_AS(emit_scene({{"slab", Color::red(), Rational(0), {slab}}}), std::domain_error);
}

TEST_CASE("default envelope grows the bounded hull by a tenth per side") {
  const SceneGroup g{"a", Color::blue(), Rational(0), {box(Point::xyz(0, 0, 0), Point::xyz(10, 20, 5))}};
  const Envelope e = default_envelope({g});
  CHECK(e.low == Point::xyz(-1, -2, Rational(-1, 2)));
  CHECK(e.high == Point::xyz(11, 22, Rational(11, 2)));
  const Envelope fallback = default_envelope({});
  CHECK(fallback.low == Point::xyz(-10, -10, -10));
}

TEST_CASE("subtraction cells become two boxes") {
  const Shape r1 = box(Point::xyz(1, 2, 0), Point::xyz(4, 5, 1));
  const Shape r2 = box(Point::xyz(3, 1, 0), Point::xyz(5, 4, 1));
  const Shape s = subtract(r1, r2);
  const auto b = boxes(parse_xml(emit_scene({{"diff", Color::red(), Rational(0), {s}}})));
  REQUIRE(b.size() == 2);
  CHECK(b[0].size == "2 3 1");
  CHECK(b[0].translation == "2 3.5 0.5");
  CHECK(b[1].size == "1 1 1");
  CHECK(b[1].translation == "3.5 4.5 0.5");
}

TEST_CASE("non-box cells are approximated by their bounding box") {
  const Shape tri = poly_extrude({Point::xyz(0, 0, 0), Point::xyz(0, 1, 0), Point::xyz(1, 0, 0)}, 2);
  const std::string text = emit_scene({{"tri", Color::blue(), Rational(1, 10), {tri}}});
  CHECK(text.find("<!-- approximation") != std::string::npos);
  const auto b = boxes(parse_xml(text));
  REQUIRE(b.size() == 1);
  CHECK(b[0].size == "1 1 2");
  CHECK(b[0].transparency == "0.5");
}

TEST_CASE("2D shapes become thin slabs and lossy decimals are flagged") {
  const Shape s = box(Point::xy(0, 0), Point::xy(Rational(1, 3), 1));
  const std::string text = emit_scene({{"flat", Color::blue(), Rational(0), {s}}});
  CHECK(text.find("lossy decimal") != std::string::npos);
  const auto b = boxes(parse_xml(text));
  REQUIRE(b.size() == 1);
  CHECK(b[0].size == "0.333333333333 1 0.01");
  CHECK(b[0].translation == "0.166666666667 0.5 0.005");
}

TEST_CASE("exact decimals reproduce the source box") {
  const Shape s = box(Point::xyz(Rational(-3, 8), Rational(1, 5), 2), Point::xyz(Rational(7, 4), Rational(9, 5), Rational(13, 4)));
  const auto b = boxes(parse_xml(emit_scene({{"x", Color::blue(), Rational(0), {s}}})));
  REQUIRE(b.size() == 1);
  std::istringstream t(b[0].translation), z(b[0].size);
  std::vector<Rational> lo, hi;
  for (int i = 0; i < 3; ++i) {
    std::string c, e;
    t >> c;
    z >> e;
    const Rational center = Rational::parse(c), extent = Rational::parse(e);
    lo.push_back(center - extent / Rational(2));
    hi.push_back(center + extent / Rational(2));
  }
  CHECK(Point::of(kXYZ, lo) == Point::xyz(Rational(-3, 8), Rational(1, 5), 2));
  CHECK(Point::of(kXYZ, hi) == Point::xyz(Rational(7, 4), Rational(9, 5), Rational(13, 4)));
}

TEST_CASE("invalid colors are rejected") {
  CHECK_THROWS_AS(emit_scene({{"x", {Rational(2), Rational(0), Rational(0)}, Rational(0), {}}}), std::invalid_argument);
}

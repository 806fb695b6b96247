#include "bimclp/x3d.hpp"

#include <sstream>
#include <stdexcept>

namespace bimclp {

void Color::validate() const {
  for (const Rational* c : {&r, &g, &b}) {
    if (*c < Rational(0) || *c > Rational(1)) throw std::invalid_argument("color components must lie in [0, 1]");
  }
}

Shape clip_to_envelope(const Shape& s, const Envelope& envelope) {
  std::vector<Rational> lo, hi;
  for (const auto& d : s.dims()) {
    lo.push_back(envelope.low[d]);
    hi.push_back(envelope.high[d]);
  }
  return intersect(s, box(Point::of(s.dims(), lo), Point::of(s.dims(), hi)));
}

Envelope default_envelope(const std::vector<SceneGroup>& groups) {
  std::optional<Point> lo, hi;
  for (const auto& g : groups) {
    for (const auto& s : g.shapes) {
      if (is_empty(s)) continue;
      const BoundingBox bb = bounding_box(s);
      if (!bb.bounded()) continue;
      Point l = bb.low(), h = bb.high();
      if (!l.coords.contains("Z")) {
        l.coords["Z"] = Rational(0);
        h.coords["Z"] = Rational(1, 100);
      }
      if (!lo) {
        lo = l;
        hi = h;
        continue;
      }
      for (auto& [d, v] : lo->coords) v = min(v, l[d]);
      for (auto& [d, v] : hi->coords) v = max(v, h[d]);
    }
  }
  if (!lo) return {Point::xyz(-10, -10, -10), Point::xyz(10, 10, 10)};
  for (auto& [d, v] : lo->coords) {
    const Rational margin = ((*hi)[d] - v) / Rational(10);
    v -= margin;
    hi->coords[d] += margin;
  }
  return {*lo, *hi};
}

std::vector<SceneGroup> clip_groups(const std::vector<SceneGroup>& groups, const std::optional<Envelope>& envelope) {
  const Envelope env = envelope ? *envelope : default_envelope(groups);
  std::vector<SceneGroup> out;
  for (const auto& g : groups) {
    SceneGroup clipped{g.name, g.color, g.transparency, {}};
    for (const auto& s : g.shapes) {
      Shape c = clip_to_envelope(s, env);
      if (!is_empty(c)) clipped.shapes.push_back(std::move(c));
    }
    if (!clipped.shapes.empty()) out.push_back(std::move(clipped));
  }
  return out;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Decimal text of a coordinate; records lossy prints for the comment.
struct Printer {
  std::vector<std::string> lossy;

  std::string operator()(const Rational& v) {
    bool approx = false;
    std::string text = v.to_decimal(&approx);
    if (approx) lossy.push_back(v.to_string() + " ~ " + text);
    return text;
  }
  std::string triple(const Rational& a, const Rational& b, const Rational& c) {
    return (*this)(a) + " " + (*this)(b) + " " + (*this)(c);
  }
};

}  // namespace

std::string emit_scene(const std::vector<SceneGroup>& groups) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<X3D profile=\"Interchange\" version=\"3.3\">\n";
  os << "  <Scene>\n";
  for (const auto& g : groups) {
    g.color.validate();
    if (g.transparency < Rational(0) || g.transparency > Rational(1)) {
      throw std::invalid_argument("transparency must lie in [0, 1]");
    }
    std::size_t cells = 0;
    for (const auto& s : g.shapes) cells += s.size();
    if (cells == 0) continue;

    os << "    <Group DEF=\"" << escape(g.name) << "\">\n";
    for (const auto& s : g.shapes) {
      for (const auto& cell : s.cells()) {
        const BoundingBox bb = bounding_box(cell);
        if (!bb.bounded()) throw std::domain_error("unbounded cell in group " + g.name + "; clip it first");
        Point lo = bb.low(), hi = bb.high();
        if (!lo.coords.contains("Z")) {
          lo.coords["Z"] = Rational(0);
          hi.coords["Z"] = Rational(1, 100);
        }
        Rational transparency = g.transparency;
        const bool approximate = !cell.is_box();
        if (approximate) {
          transparency = max(transparency, Rational(1, 2));
          os << "      <!-- approximation: bounding box of a non-box cell -->\n";
        }
        Printer print;
        const std::string translation = print.triple((lo["X"] + hi["X"]) / Rational(2),
                                                     (lo["Y"] + hi["Y"]) / Rational(2),
                                                     (lo["Z"] + hi["Z"]) / Rational(2));
        const std::string size = print.triple(hi["X"] - lo["X"], hi["Y"] - lo["Y"], hi["Z"] - lo["Z"]);
        const std::string color = print.triple(g.color.r, g.color.g, g.color.b);
        const std::string alpha = print(transparency);
        for (const auto& l : print.lossy) os << "      <!-- lossy decimal: " << l << " -->\n";
        os << "      <Transform translation=\"" << translation << "\">\n";
        os << "        <Shape>\n";
        os << "          <Appearance>\n";
        os << "            <Material diffuseColor=\"" << color << "\" transparency=\"" << alpha << "\"/>\n";
        os << "          </Appearance>\n";
        os << "          <Box size=\"" << size << "\"/>\n";
        os << "        </Shape>\n";
        os << "      </Transform>\n";
      }
    }
    os << "    </Group>\n";
  }
  os << "  </Scene>\n";
  os << "</X3D>\n";
  return os.str();
}

}  // namespace bimclp

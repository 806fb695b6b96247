#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimclp/rational.hpp"
#include "bimclp/shape.hpp"

namespace bimclp {

/// RGB with components in [0, 1].
struct Color {
  Rational r{0}, g{0}, b{0};

  void validate() const;
  static Color red() { return {Rational(1), Rational(0), Rational(0)}; }
  static Color green() { return {Rational(0), Rational(1), Rational(0)}; }
  static Color blue() { return {Rational(0), Rational(0), Rational(1)}; }
};

struct SceneGroup {
  std::string name;
  Color color;
  Rational transparency{0};
  std::vector<Shape> shapes;
};

/// Axis-aligned half-open box over X, Y, Z used to clip unbounded cells.
struct Envelope {
  Point low;
  Point high;
};

/// intersect(s, envelope) restricted to the dims of `s`.
Shape clip_to_envelope(const Shape& s, const Envelope& envelope);

/// Hull of every bounded shape of the groups, inflated by 10% of its extent
/// on each side; [-10, 10)^3 when nothing is bounded.
Envelope default_envelope(const std::vector<SceneGroup>& groups);

/// Clips every shape to the envelope (default_envelope when absent) and drops
/// empty results.
std::vector<SceneGroup> clip_groups(const std::vector<SceneGroup>& groups,
                                    const std::optional<Envelope>& envelope = std::nullopt);

/// X3D document with one Transform/Box per cell, in group then cell order.
/// Groups without cells are omitted. Throws std::domain_error for an
/// unbounded cell.
std::string emit_scene(const std::vector<SceneGroup>& groups);

}  // namespace bimclp

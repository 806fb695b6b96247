#pragma once

#include <string>
#include <vector>

#include "bimclp/bim_store.hpp"
#include "bimclp/rational.hpp"
#include "bimclp/vague.hpp"

namespace bimclp {

enum class Outcome { Pass, Fail, Conditional };

std::string to_string(Outcome o);

struct ModelOutcome {
  PartialModel model;
  Outcome outcome = Outcome::Fail;  // Pass or Fail
};

struct RuleVerdict {
  std::string rule;
  std::string room;
  Outcome outcome = Outcome::Fail;
  /// Filled only for Conditional: one entry per branch model.
  std::vector<ModelOutcome> branches;

  /// `window-width r3 conditional [model: small(r3) -> pass] [model: -small(r3) -> fail]`
  std::string to_string() const;
};

enum class WidthMode { Larger, Smaller };

struct WindowWidthRule {
  Rational min_width{Rational::parse("0.60")};        // room not small
  Rational min_width_small{Rational::parse("0.50")};  // room small
  WidthMode width_mode = WidthMode::Larger;
  std::string window_label = "ifcwindow";
  Rational epsilon{0};
  ThresholdRule smallness;
};

struct VentilationRule {
  Rational ratio{1, 10};
  std::string window_label = "ifcwindow";
  Rational epsilon{0};
};

/// Horizontal width of a window box: the larger (or smaller) of its X and Y
/// extents.
Rational window_width(const BimObject& window, WidthMode mode = WidthMode::Larger);
/// Product of the two largest extents of the box.
Rational window_face_area(const BimObject& window);
/// X extent times Y extent.
Rational floor_area(const BimObject& room);

/// Objects carrying `label` (case-insensitive) that belong to the room.
std::vector<BimObject> windows_of(const ModelStore& store, const std::string& room, const std::string& label,
                                  const Rational& epsilon);

/// Pass iff some window of the room is wider than the threshold that applies
/// to the room's smallness. Smallness comes from `sizes`; a room without a
/// known size branches. Throws std::out_of_range for an unknown room.
RuleVerdict check_window_width(const std::string& room, const ModelStore& store, const EntityStore& sizes,
                               const WindowWidthRule& rule = {});

/// Pass iff the window face areas add up to at least `ratio` of the floor area.
RuleVerdict check_natural_ventilation(const std::string& room, const ModelStore& store,
                                      const VentilationRule& rule = {});

}  // namespace bimclp

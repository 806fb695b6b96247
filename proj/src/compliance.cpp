#include "bimclp/compliance.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>

namespace bimclp {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Conditional: return "conditional";
  }
  return "?";
}

std::string RuleVerdict::to_string() const {
  std::string out = rule + " " + room + " " + bimclp::to_string(outcome);
  for (const auto& b : branches) {
    out += " [model: ";
    for (std::size_t i = 0; i < b.model.literals.size(); ++i) {
      if (i) out += ", ";
      out += b.model.literals[i].to_string();
    }
    out += " -> " + bimclp::to_string(b.outcome) + "]";
  }
  return out;
}

namespace {

Rational extent(const BimObject& o, const char* d) { return o.high[d] - o.low[d]; }

bool same_label(std::string a, std::string b) {
  const auto low = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  };
  return low(std::move(a)) == low(std::move(b));
}

}  // namespace

Rational window_width(const BimObject& window, WidthMode mode) {
  const Rational x = extent(window, "X"), y = extent(window, "Y");
  return mode == WidthMode::Larger ? max(x, y) : min(x, y);
}

Rational window_face_area(const BimObject& window) {
  std::array<Rational, 3> e{extent(window, "X"), extent(window, "Y"), extent(window, "Z")};
  std::sort(e.begin(), e.end(), std::greater<>());
  return e[0] * e[1];
}

Rational floor_area(const BimObject& room) { return extent(room, "X") * extent(room, "Y"); }

std::vector<BimObject> windows_of(const ModelStore& store, const std::string& room, const std::string& label,
                                  const Rational& epsilon) {
  store.at(room);
  std::vector<BimObject> out;
  for (const auto& o : store.objects()) {
    if (o.id == room || !same_label(o.label, label)) continue;
    if (window_belongs(store, o.id, room, epsilon)) out.push_back(o);
  }
  return out;
}

RuleVerdict check_window_width(const std::string& room, const ModelStore& store, const EntityStore& sizes,
                               const WindowWidthRule& rule) {
  const auto windows = windows_of(store, room, rule.window_label, rule.epsilon);
  const auto outcome_for = [&](bool small) {
    const Rational& threshold = small ? rule.min_width_small : rule.min_width;
    const bool ok = std::any_of(windows.begin(), windows.end(), [&](const BimObject& w) {
      return window_width(w, rule.width_mode) > threshold;
    });
    return ok ? Outcome::Pass : Outcome::Fail;
  };

  std::optional<Rational> size;
  if (const auto* e = sizes.find(room)) size = e->value(rule.smallness.attribute);

  RuleVerdict v{"window-width", room, Outcome::Fail, {}};
  const auto models = models_for_value(room, size, rule.smallness);
  if (models.size() == 1) {
    v.outcome = outcome_for(models.front().literals.front().positive);
    return v;
  }
  v.outcome = Outcome::Conditional;
  for (const auto& m : models) v.branches.push_back({m, outcome_for(m.literals.front().positive)});
  return v;
}

RuleVerdict check_natural_ventilation(const std::string& room, const ModelStore& store,
                                      const VentilationRule& rule) {
  const auto windows = windows_of(store, room, rule.window_label, rule.epsilon);
  Rational area(0);
  for (const auto& w : windows) area += window_face_area(w);
  const bool ok = area >= rule.ratio * floor_area(store.at(room));
  return {"ventilation", room, ok ? Outcome::Pass : Outcome::Fail, {}};
}

}  // namespace bimclp

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bimclp/rational.hpp"

namespace bimclp {

/// Evidence thresholds for a vague unary predicate such as small(Room):
/// value < evidence_below proves it, value > counterevidence_above proves its
/// classical negation, anything else (including an unknown value) branches.
struct ThresholdRule {
  std::string predicate = "small";
  std::string attribute = "size";
  Rational evidence_below{10};
  Rational counterevidence_above{20};
  /// Answer labels for the positive and negated predicate.
  std::string positive_label = "small";
  std::string negative_label = "big";

  /// Throws std::invalid_argument when evidence_below > counterevidence_above.
  void validate() const;
};

struct EntityFact {
  std::string entity;
  std::map<std::string, Rational> attributes;  // absent = unknown

  std::optional<Rational> value(const std::string& attribute) const;
};

/// Declared entities (`room(r1).`) with their numeric attributes
/// (`size(r1, 25).`), in declaration order.
class EntityStore {
 public:
  /// Throws std::invalid_argument on a duplicate entity.
  void declare(const std::string& entity);
  /// Throws std::out_of_range for an undeclared entity and
  /// std::invalid_argument for a conflicting value.
  void set(const std::string& entity, const std::string& attribute, Rational value);

  const std::vector<EntityFact>& entities() const noexcept { return entities_; }
  const EntityFact* find(const std::string& entity) const;
  const EntityFact& at(const std::string& entity) const;

 private:
  std::vector<EntityFact> entities_;
  std::map<std::string, std::size_t> index_;
};

/// Reads `<kind>(e).` declarations and binary `attr(e, number).` facts.
/// Attribute facts about undeclared entities and unrelated predicates are
/// skipped so the same file can also carry object and data facts.
EntityStore load_entities(std::string_view text, std::string_view kind = "room");

struct Determination {
  enum class Kind { Proven, ProvenNot, Branch };
  Kind kind = Kind::Branch;
  std::string predicate;

  friend bool operator==(const Determination&, const Determination&) = default;
};

Determination classify_value(const std::optional<Rational>& value, const ThresholdRule& rule);
/// Throws std::out_of_range for an unknown entity.
Determination classify(const EntityStore& store, const std::string& entity, const ThresholdRule& rule);

enum class Provenance { Evidence, Assumption };

struct Literal {
  bool positive = true;
  std::string predicate;
  std::string entity;
  Provenance provenance = Provenance::Evidence;

  /// `small(r1)` or `-small(r1)`
  std::string to_string() const;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct PartialModel {
  std::vector<Literal> literals;
  bool consistent = true;

  /// `{small(r3)}` with assumption literals marked by a trailing `?`.
  std::string to_string() const;
  friend bool operator==(const PartialModel&, const PartialModel&) = default;
};

std::vector<PartialModel> models_for(const EntityStore& store, const std::string& entity,
                                     const ThresholdRule& rule);
std::vector<PartialModel> models_for_value(const std::string& entity,
                                           const std::optional<Rational>& value,
                                           const ThresholdRule& rule);

struct Answer {
  std::string entity;
  std::string label;
  PartialModel model;
  std::optional<Rational> value;
  ThresholdRule rule;
};

/// All partial answers of room_is(Entity, Label), entity by entity. Yields
/// one answer per determined entity and two per branching entity.
std::vector<Answer> query_room_is(const EntityStore& store, const ThresholdRule& rule);
std::vector<Answer> query_room_is(const EntityStore& store, const std::string& entity,
                                  const ThresholdRule& rule);

/// Number of stable models a grounding solver enumerates: 2^(branching entities).
Integer count_global_models(const EntityStore& store, const ThresholdRule& rule);

/// Explicit global models (one literal per entity). Throws std::length_error
/// when the count exceeds `cap`.
std::vector<std::vector<Literal>> enumerate_global_models(const EntityStore& store,
                                                          const ThresholdRule& rule,
                                                          std::size_t cap = 1024);

/// Plain-text justification tree for one answer.
std::string justify(const Answer& answer);

}  // namespace bimclp

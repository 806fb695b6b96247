#include "bimclp/vague.hpp"

#include <sstream>
#include <stdexcept>

#include "bimclp/facts.hpp"

namespace bimclp {

void ThresholdRule::validate() const {
  if (evidence_below > counterevidence_above) {
    throw std::invalid_argument("threshold rule: evidence_below exceeds counterevidence_above");
  }
}

std::optional<Rational> EntityFact::value(const std::string& attribute) const {
  auto it = attributes.find(attribute);
  if (it == attributes.end()) return std::nullopt;
  return it->second;
}

void EntityStore::declare(const std::string& entity) {
  if (index_.contains(entity)) throw std::invalid_argument("duplicate entity " + entity);
  index_.emplace(entity, entities_.size());
  entities_.push_back({entity, {}});
}

void EntityStore::set(const std::string& entity, const std::string& attribute, Rational value) {
  auto it = index_.find(entity);
  if (it == index_.end()) throw std::out_of_range("unknown entity " + entity);
  auto& attrs = entities_[it->second].attributes;
  auto [slot, inserted] = attrs.try_emplace(attribute, value);
  if (!inserted && slot->second != value) {
    throw std::invalid_argument("conflicting " + attribute + " for " + entity);
  }
}

const EntityFact* EntityStore::find(const std::string& entity) const {
  auto it = index_.find(entity);
  return it == index_.end() ? nullptr : &entities_[it->second];
}

const EntityFact& EntityStore::at(const std::string& entity) const {
  if (const auto* e = find(entity)) return *e;
  throw std::out_of_range("unknown entity " + entity);
}

EntityStore load_entities(std::string_view text, std::string_view kind) {
  EntityStore store;
  const auto facts = parse_facts(text);
  for (const auto& f : facts) {
    if (f.term.is(kind, 1) && f.term.args[0].is_atom()) {
      try {
        store.declare(f.term.args[0].name);
      } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(f.line) + ": " + e.what(), 0, f.line);
      }
    }
  }
  for (const auto& f : facts) {
    const Term& t = f.term;
    if (!t.is_compound() || t.args.size() != 2 || !t.args[0].is_atom() || !t.args[1].is_number()) continue;
    if (!store.find(t.args[0].name)) continue;
    try {
      store.set(t.args[0].name, t.name, t.args[1].number);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(f.line) + ": " + e.what(), 0, f.line);
    }
  }
  return store;
}

Determination classify_value(const std::optional<Rational>& value, const ThresholdRule& rule) {
  rule.validate();
  if (value && *value < rule.evidence_below) return {Determination::Kind::Proven, rule.predicate};
  if (value && *value > rule.counterevidence_above) return {Determination::Kind::ProvenNot, rule.predicate};
  return {Determination::Kind::Branch, rule.predicate};
}

Determination classify(const EntityStore& store, const std::string& entity, const ThresholdRule& rule) {
  return classify_value(store.at(entity).value(rule.attribute), rule);
}

std::string Literal::to_string() const {
  return (positive ? "" : "-") + predicate + "(" + entity + ")";
}

std::string PartialModel::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i) out += ", ";
    out += literals[i].to_string();
    if (literals[i].provenance == Provenance::Assumption) out += "?";
  }
  return out + "}";
}

std::vector<PartialModel> models_for_value(const std::string& entity,
                                           const std::optional<Rational>& value,
                                           const ThresholdRule& rule) {
  const auto lit = [&](bool positive, Provenance p) {
    return PartialModel{{Literal{positive, rule.predicate, entity, p}}, true};
  };
  switch (classify_value(value, rule).kind) {
    case Determination::Kind::Proven: return {lit(true, Provenance::Evidence)};
    case Determination::Kind::ProvenNot: return {lit(false, Provenance::Evidence)};
    case Determination::Kind::Branch:
      return {lit(true, Provenance::Assumption), lit(false, Provenance::Assumption)};
  }
  return {};
}

std::vector<PartialModel> models_for(const EntityStore& store, const std::string& entity,
                                     const ThresholdRule& rule) {
  return models_for_value(entity, store.at(entity).value(rule.attribute), rule);
}

namespace {

void append_answers(std::vector<Answer>& out, const EntityFact& e, const ThresholdRule& rule) {
  const auto value = e.value(rule.attribute);
  for (auto& m : models_for_value(e.entity, value, rule)) {
    const bool positive = m.literals.front().positive;
    out.push_back({e.entity, positive ? rule.positive_label : rule.negative_label, std::move(m), value, rule});
  }
}

}  // namespace

std::vector<Answer> query_room_is(const EntityStore& store, const ThresholdRule& rule) {
  std::vector<Answer> out;
  for (const auto& e : store.entities()) append_answers(out, e, rule);
  return out;
}

std::vector<Answer> query_room_is(const EntityStore& store, const std::string& entity,
                                  const ThresholdRule& rule) {
  std::vector<Answer> out;
  append_answers(out, store.at(entity), rule);
  return out;
}

Integer count_global_models(const EntityStore& store, const ThresholdRule& rule) {
  unsigned long branching = 0;
  for (const auto& e : store.entities()) {
    branching += classify_value(e.value(rule.attribute), rule).kind == Determination::Kind::Branch;
  }
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, branching);
  return out;
}

std::vector<std::vector<Literal>> enumerate_global_models(const EntityStore& store,
                                                          const ThresholdRule& rule,
                                                          std::size_t cap) {
  const Integer count = count_global_models(store, rule);
  if (count > Integer(static_cast<unsigned long>(cap))) {
    throw std::length_error("global model count " + count.get_str() + " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::vector<Literal>> models{{}};
  for (const auto& e : store.entities()) {
    const auto options = models_for_value(e.entity, e.value(rule.attribute), rule);
    std::vector<std::vector<Literal>> next;
    next.reserve(models.size() * options.size());
    for (const auto& partial : models) {
      for (const auto& opt : options) {
        auto extended = partial;
        extended.push_back(opt.literals.front());
        next.push_back(std::move(extended));
      }
    }
    models = std::move(next);
  }
  return models;
}

std::string justify(const Answer& answer) {
  const Literal& lit = answer.model.literals.front();
  const ThresholdRule& rule = answer.rule;
  std::ostringstream os;
  os << "room_is(" << answer.entity << ", " << answer.label << ")\n";
  os << "  room(" << answer.entity << ")\n";
  os << "  " << lit.to_string() << "\n";
  const std::string attr = rule.attribute + "(" + answer.entity + ")";
  if (lit.provenance == Provenance::Evidence) {
    if (lit.positive) {
      os << "    evidence: " << attr << " = " << answer.value->to_text() << " < "
         << rule.evidence_below.to_text() << "\n";
    } else {
      os << "    evidence: " << attr << " = " << answer.value->to_text() << " > "
         << rule.counterevidence_above.to_text() << "\n";
    }
  } else {
    os << "    assumption: ";
    if (answer.value) {
      os << attr << " = " << answer.value->to_text() << " within [" << rule.evidence_below.to_text()
         << ", " << rule.counterevidence_above.to_text() << "]";
    } else {
      os << rule.attribute << " unknown";
    }
    os << "; no evidence for or against, branched; assumed " << answer.label << "\n";
  }
  return os.str();
}

}  // namespace bimclp

#include "bimclp/merge.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "bimclp/facts.hpp"
#include "bimclp/rational.hpp"

namespace bimclp {

Atom Atom::instantiate(const std::string& constant) const {
  return is_var ? ground(functor, constant) : *this;
}

bool Atom::matches(const Atom& ground_atom) const {
  return functor == ground_atom.functor && (is_var || arg == ground_atom.arg);
}

std::string Atom::to_string() const { return functor + "(" + (is_var ? "A" : arg) + ")"; }

std::string Verdict::to_string() const {
  std::string out = "{Pr=" + std::to_string(priority) + ", Data=" + atom.to_string();
  for (const auto& c : excluded) out += ", A\\=" + c;
  return out + "}";
}

void MergeStore::add_data(DataItem item) {
  if (item.priority < 0) throw std::invalid_argument("data priority must be >= 0");
  data_.insert(std::move(item));
}

void MergeStore::add_inconsistency(const Atom& a, const Atom& b) {
  if (a.is_var || b.is_var) throw std::invalid_argument("inconsistency declarations must be ground");
  inconsistent_.insert({a, b});
  inconsistent_.insert({b, a});
}

std::set<std::string> MergeStore::constants() const {
  std::set<std::string> out;
  for (const auto& d : data_) {
    if (!d.atom.is_var) out.insert(d.atom.arg);
  }
  for (const auto& [a, b] : inconsistent_) {
    out.insert(a.arg);
    out.insert(b.arg);
  }
  return out;
}

std::optional<Witness> MergeStore::canceled(const DataItem& item,
                                            const std::optional<std::string>& instance) const {
  if (item.atom.is_var && !instance) throw std::invalid_argument("variable data item needs an instance");
  const Atom subject = instance ? item.atom.instantiate(*instance) : item.atom;

  // data_ is ordered by priority ascending; walk down so the first hit is
  // the highest-priority witness.
  for (auto it = data_.rbegin(); it != data_.rend(); ++it) {
    if (it->priority <= item.priority) break;
    for (auto pair = inconsistent_.lower_bound({subject, Atom{}});
         pair != inconsistent_.end() && pair->first == subject; ++pair) {
      if (it->atom.matches(pair->second)) return Witness{it->priority, pair->second};
    }
  }
  return std::nullopt;
}

std::vector<Verdict> MergeStore::valid_data() const {
  std::vector<Verdict> out;
  const auto domain = constants();
  for (const auto& item : data_) {
    Verdict v{item.priority, item.atom, {}, true, std::nullopt};
    if (item.atom.is_var) {
      for (const auto& c : domain) {
        if (canceled(item, c)) v.excluded.insert(c);
      }
    } else if (auto w = canceled(item)) {
      v.valid = false;
      v.witness = std::move(w);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const Verdict& a, const Verdict& b) {
    return std::tie(a.priority, a.atom.functor, a.atom.arg, a.atom.is_var) <
           std::tie(b.priority, b.atom.functor, b.atom.arg, b.atom.is_var);
  });
  return out;
}

namespace {

Atom to_atom(const Term& t, std::size_t line) {
  if (!t.is_compound() || t.args.size() != 1 || !(t.args[0].is_atom() || t.args[0].is_var())) {
    throw ParseError("line " + std::to_string(line) + ": expected a unary term like ventilation(natural)",
                     0, line);
  }
  return t.args[0].is_var() ? Atom::variable(t.name, t.args[0].name) : Atom::ground(t.name, t.args[0].name);
}

}  // namespace

MergeStore load_scenario(std::string_view text) {
  MergeStore store;
  for (const auto& f : parse_facts(text)) {
    const Term& t = f.term;
    if (t.is("data", 2)) {
      const Term& p = t.args[0];
      if (!p.is_number() || !p.number.is_integer() || !p.number.numerator().fits_sint_p() ||
          p.number.sign() < 0) {
        throw ParseError("line " + std::to_string(f.line) + ": priority must be a non-negative integer", 0,
                         f.line);
      }
      store.add_data({static_cast<int>(p.number.numerator().get_si()), to_atom(t.args[1], f.line)});
    } else if (t.is("inconsistent", 2)) {
      const Atom a = to_atom(t.args[0], f.line);
      const Atom b = to_atom(t.args[1], f.line);
      if (a.is_var || b.is_var) {
        throw ParseError("line " + std::to_string(f.line) + ": inconsistency declarations must be ground", 0,
                         f.line);
      }
      store.add_inconsistency(a, b);
    }
  }
  return store;
}

}  // namespace bimclp

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bimclp {

/// Unary data term such as ventilation(natural) or ventilation(X).
struct Atom {
  std::string functor;
  std::string arg;  // constant, or the variable name when is_var
  bool is_var = false;

  static Atom ground(std::string functor, std::string constant) { return {std::move(functor), std::move(constant), false}; }
  static Atom variable(std::string functor, std::string name = "X") { return {std::move(functor), std::move(name), true}; }

  /// Same atom with the variable bound to `constant`.
  Atom instantiate(const std::string& constant) const;
  /// Whether this (possibly non-ground) atom can be unified with a ground one.
  bool matches(const Atom& ground_atom) const;
  /// Variables print as `A`, the first fresh name of an answer.
  std::string to_string() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// `data(Priority, Atom)`: higher priority means more confidence.
struct DataItem {
  int priority = 0;
  Atom atom;

  friend bool operator==(const DataItem&, const DataItem&) = default;
  friend auto operator<=>(const DataItem&, const DataItem&) = default;
};

struct Witness {
  int priority = 0;
  Atom atom;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  int priority = 0;
  Atom atom;
  std::set<std::string> excluded;  // disequalities on the variable argument
  bool valid = true;
  std::optional<Witness> witness;  // set for canceled ground items

  /// `{Pr=1, Data=ventilation(A), A\=artificial}`
  std::string to_string() const;
};

class MergeStore {
 public:
  /// Throws std::invalid_argument for a negative priority.
  void add_data(DataItem item);
  /// Records the pair in both directions. Throws std::invalid_argument when an
  /// argument is not ground.
  void add_inconsistency(const Atom& a, const Atom& b);

  const std::set<DataItem>& data() const noexcept { return data_; }
  const std::set<std::pair<Atom, Atom>>& inconsistencies() const noexcept { return inconsistent_; }
  bool inconsistent(const Atom& a, const Atom& b) const { return inconsistent_.contains({a, b}); }

  /// Constants mentioned by stored data or inconsistency declarations; the
  /// domain over which variable arguments are instantiated.
  std::set<std::string> constants() const;

  /// A strictly higher-priority item inconsistent with `item` (instantiated
  /// with `instance` if it has a variable). The witness need not be valid
  /// itself. Throws std::invalid_argument when a variable item has no instance.
  std::optional<Witness> canceled(const DataItem& item,
                                  const std::optional<std::string>& instance = std::nullopt) const;

  /// One verdict per item sorted by (priority, functor, argument).
  std::vector<Verdict> valid_data() const;

 private:
  std::set<DataItem> data_;
  std::set<std::pair<Atom, Atom>> inconsistent_;
};

/// Reads `data(P, f(c)).`, `data(P, f(X)).` and `inconsistent(f(a), g(b)).`
/// facts; other predicates are skipped.
MergeStore load_scenario(std::string_view text);

}  // namespace bimclp

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bimclp/rational.hpp"

namespace bimclp {

/// Ground or non-ground term of a Prolog-style fact:
/// atoms (`ifcbeam`, `'arq'`), numbers (`-4.002`, `1/3`), variables (`X`, `_`)
/// and compounds (`point(0,0,0)`).
struct Term {
  enum class Kind { Atom, Number, Var, Compound };

  Kind kind = Kind::Atom;
  std::string name;  // atom, variable or functor name
  Rational number;
  std::vector<Term> args;

  static Term atom(std::string name);
  static Term num(Rational value);
  static Term var(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_number() const { return kind == Kind::Number; }
  bool is_var() const { return kind == Kind::Var; }
  bool is_compound() const { return kind == Kind::Compound; }
  /// Atom or compound whose name and arity match.
  bool is(std::string_view functor, std::size_t arity) const;

  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Fact {
  Term term;
  std::size_t line = 0;
};

/// Parses a sequence of `term.` facts. `%` starts a line comment.
/// Throws ParseError carrying the 1-based line number.
std::vector<Fact> parse_facts(std::string_view text);

}  // namespace bimclp

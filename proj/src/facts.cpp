#include "bimclp/facts.hpp"

#include <cctype>

namespace bimclp {

Term Term::atom(std::string name) {
  Term t;
  t.kind = Kind::Atom;
  t.name = std::move(name);
  return t;
}

Term Term::num(Rational value) {
  Term t;
  t.kind = Kind::Number;
  t.number = std::move(value);
  return t;
}

Term Term::var(std::string name) {
  Term t;
  t.kind = Kind::Var;
  t.name = std::move(name);
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  Term t;
  t.kind = Kind::Compound;
  t.name = std::move(functor);
  t.args = std::move(args);
  return t;
}

bool Term::is(std::string_view functor, std::size_t arity) const {
  if (arity == 0) return kind == Kind::Atom && name == functor;
  return kind == Kind::Compound && name == functor && args.size() == arity;
}

namespace {

bool plain_atom(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

std::string Term::to_string() const {
  switch (kind) {
    case Kind::Atom: return plain_atom(name) ? name : "'" + name + "'";
    case Kind::Number: return number.to_text();
    case Kind::Var: return name;
    case Kind::Compound: {
      std::string out = name + "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ", ";
        out += args[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Fact> run() {
    std::vector<Fact> out;
    for (;;) {
      skip();
      if (at_end()) return out;
      const std::size_t line = line_;
      Term t = term();
      if (t.is_var() || t.is_number()) fail("a fact must be an atom or compound term");
      skip();
      expect('.');
      out.push_back({std::move(t), line});
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  // At end of input, blame the line of the last token rather than the
  // trailing newline.
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = line_;
    if (at_end()) {
      std::size_t p = text_.size();
      while (p > 0 && std::isspace(static_cast<unsigned char>(text_[p - 1]))) {
        if (text_[p - 1] == '\n') --line;
        --p;
      }
    }
    throw ParseError("line " + std::to_string(line) + ": " + what, pos_, line);
  }

  void skip() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier() {
    const std::size_t begin = pos_;
    while (!at_end() && ident_char(peek())) advance();
    return std::string(text_.substr(begin, pos_ - begin));
  }

  Term number() {
    const std::size_t begin = pos_;
    if (peek() == '-' || peek() == '+') advance();
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    } else if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    try {
      return Term::num(Rational::parse(text_.substr(begin, pos_ - begin)));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  Term term() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return number();
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') return Term::var(identifier());

    std::string name;
    if (c == '\'') {
      advance();
      const std::size_t begin = pos_;
      while (!at_end() && peek() != '\'' && peek() != '\n') advance();
      if (peek() != '\'') fail("unterminated quoted atom");
      name = std::string(text_.substr(begin, pos_ - begin));
      advance();
    } else if (std::islower(static_cast<unsigned char>(c))) {
      name = identifier();
    } else if (at_end()) {
      fail("unexpected end of input");
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }

    if (peek() != '(') return Term::atom(std::move(name));
    advance();
    std::vector<Term> args;
    for (;;) {
      args.push_back(term());
      skip();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(')');
      break;
    }
    return Term::compound(std::move(name), std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

std::vector<Fact> parse_facts(std::string_view text) { return Parser(text).run(); }

}  // namespace bimclp

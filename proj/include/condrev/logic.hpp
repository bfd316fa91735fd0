// condrev/logic.hpp — propositional language front-end.
//
// Formulas are immutable ASTs over a fixed, ordered vocabulary of atoms.
// Worlds are opaque labels carrying a total valuation; several worlds may
// share a valuation, so consistency and equivalence are always relative to
// the scenario's world list rather than to all 2^n valuations.
//
// Concrete syntax (binding tightest first): "!"/"~" negation, "&"
// conjunction, "|" disjunction, "->" material conditional (right
// associative), "true"/"false" constants. "=>" separates antecedent and
// consequent of a conditional input and is only legal at top level.

#ifndef CONDREV_LOGIC_HPP
#define CONDREV_LOGIC_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "condrev/worldset.hpp"

namespace condrev {

class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> atom_names)
      : names_(std::move(atom_names)) {
    if (names_.empty()) throw std::invalid_argument("vocabulary is empty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i]))
        throw std::invalid_argument("bad atom name: '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate atom: '" + names_[i] + "'");
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  static bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
      return false;
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        return false;
    return s != "true" && s != "false";
  }

 private:
  std::vector<std::string> names_;
};

struct World {
  std::string id;
  std::uint32_t valuation = 0;  // bit i set = atom i true

  bool holds(int atom) const { return (valuation >> atom) & 1u; }
};

class Formula {
 public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies };

  Formula() : Formula(top()) {}

  static Formula top() { return Formula(make(Kind::True, -1, {}, {})); }
  static Formula bottom() { return Formula(make(Kind::False, -1, {}, {})); }
  static Formula atom(int index) {
    return Formula(make(Kind::Atom, index, {}, {}));
  }
  static Formula neg(Formula f) {
    return Formula(make(Kind::Not, -1, f.node_, {}));
  }
  static Formula conj(Formula l, Formula r) {
    return Formula(make(Kind::And, -1, l.node_, r.node_));
  }
  static Formula disj(Formula l, Formula r) {
    return Formula(make(Kind::Or, -1, l.node_, r.node_));
  }
  static Formula implies(Formula l, Formula r) {
    return Formula(make(Kind::Implies, -1, l.node_, r.node_));
  }

  Kind kind() const { return node_->kind; }
  int atom_index() const { return node_->atom; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula child() const { return Formula(node_->left); }

  bool same_ast(const Formula& other) const {
    return same_node(node_.get(), other.node_.get());
  }

 private:
  struct Node {
    Kind kind;
    int atom;
    std::shared_ptr<const Node> left, right;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> make(Kind k, int atom,
                                          std::shared_ptr<const Node> l,
                                          std::shared_ptr<const Node> r) {
    return std::make_shared<const Node>(Node{k, atom, std::move(l), std::move(r)});
  }

  static bool same_node(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a == nullptr || b == nullptr) return false;
    if (a->kind != b->kind || a->atom != b->atom) return false;
    return same_node(a->left.get(), b->left.get()) &&
           same_node(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

// A revision input: either a plain sentence or a conditional A => B with
// both sides plain (the conditional language is flat, no nesting).
struct ConditionalInput {
  bool is_ramsey = false;
  Formula a;  // the plain formula, or the antecedent
  Formula b;  // the consequent (meaningful only when is_ramsey)
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        pos(position) {}
  std::size_t pos;
};

inline bool eval(const Formula& f, std::uint32_t valuation) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return (valuation >> f.atom_index()) & 1u;
    case Formula::Kind::Not:
      return !eval(f.child(), valuation);
    case Formula::Kind::And:
      return eval(f.left(), valuation) && eval(f.right(), valuation);
    case Formula::Kind::Or:
      return eval(f.left(), valuation) || eval(f.right(), valuation);
    case Formula::Kind::Implies:
      return !eval(f.left(), valuation) || eval(f.right(), valuation);
  }
  return false;
}

inline WorldSet models(const Formula& f, const std::vector<World>& worlds) {
  WorldSet out;
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (eval(f, worlds[i].valuation)) out = out.with(static_cast<int>(i));
  return out;
}

inline bool is_consistent(const Formula& f, const std::vector<World>& worlds) {
  return !models(f, worlds).empty();
}

inline bool are_equivalent(const Formula& f, const Formula& g,
                           const std::vector<World>& worlds) {
  return models(f, worlds) == models(g, worlds);
}

inline bool entails(const Formula& f, const Formula& g,
                    const std::vector<World>& worlds) {
  return models(f, worlds).subset_of(models(g, worlds));
}

// A conditional A => B is consistent just in case A & B is.
inline bool conditional_consistent(const ConditionalInput& c,
                                   const std::vector<World>& worlds) {
  if (!c.is_ramsey) return is_consistent(c.a, worlds);
  return (models(c.a, worlds) & models(c.b, worlds)).empty() == false;
}

namespace detail {

struct Token {
  enum class Type { Ident, True, False, Not, And, Or, Implies, Ramsey,
                    LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_])))
      ++i_;
    std::size_t start = i_;
    if (i_ >= src_.size()) {
      tok_ = {Token::Type::End, "", start};
      return;
    }
    char c = src_[i_];
    if (c == '(') { ++i_; tok_ = {Token::Type::LParen, "(", start}; return; }
    if (c == ')') { ++i_; tok_ = {Token::Type::RParen, ")", start}; return; }
    if (c == '!' || c == '~') {
      ++i_;
      tok_ = {Token::Type::Not, std::string(1, c), start};
      return;
    }
    if (c == '&') { ++i_; tok_ = {Token::Type::And, "&", start}; return; }
    if (c == '|') { ++i_; tok_ = {Token::Type::Or, "|", start}; return; }
    if (c == '-') {
      if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
        i_ += 2;
        tok_ = {Token::Type::Implies, "->", start};
        return;
      }
      throw ParseError(start, "expected '->'");
    }
    if (c == '=') {
      if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
        i_ += 2;
        tok_ = {Token::Type::Ramsey, "=>", start};
        return;
      }
      throw ParseError(start, "expected '=>'");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) ||
              src_[j] == '_'))
        ++j;
      std::string word(src_.substr(i_, j - i_));
      i_ = j;
      if (word == "true") { tok_ = {Token::Type::True, word, start}; return; }
      if (word == "false") { tok_ = {Token::Type::False, word, start}; return; }
      tok_ = {Token::Type::Ident, word, start};
      return;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Token tok_{Token::Type::End, "", 0};
};

class FormulaParser {
 public:
  FormulaParser(std::string_view src, const Vocabulary& vocab,
                bool ramsey_context)
      : lex_(src), vocab_(vocab), ramsey_context_(ramsey_context) {}

  // formula := or ("->" formula)?   with "->" right associative
  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lex_.peek().type == Token::Type::Implies) {
      lex_.next();
      return Formula::implies(lhs, parse_implies());
    }
    return lhs;
  }

  void expect_end() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Ramsey) throw ramsey_error(t.pos);
    if (t.type != Token::Type::End)
      throw ParseError(t.pos, "unexpected '" + t.text + "'");
  }

  bool at_ramsey() const { return lex_.peek().type == Token::Type::Ramsey; }
  std::size_t position() const { return lex_.peek().pos; }
  void consume_ramsey() { lex_.next(); }

  ParseError ramsey_error(std::size_t pos) const {
    return ramsey_context_
               ? ParseError(pos, "nested conditional")
               : ParseError(pos, "Ramsey arrow not allowed in plain formula");
  }

 private:
  Formula parse_or() {
    Formula lhs = parse_and();
    while (lex_.peek().type == Token::Type::Or) {
      lex_.next();
      lhs = Formula::disj(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (lex_.peek().type == Token::Type::And) {
      lex_.next();
      lhs = Formula::conj(lhs, parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Not) {
      lex_.next();
      return Formula::neg(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    Token t = lex_.next();
    switch (t.type) {
      case Token::Type::LParen: {
        Formula inner = parse_implies();
        Token close = lex_.next();
        if (close.type == Token::Type::Ramsey) throw ramsey_error(close.pos);
        if (close.type != Token::Type::RParen)
          throw ParseError(close.pos, "expected ')'");
        return inner;
      }
      case Token::Type::True:
        return Formula::top();
      case Token::Type::False:
        return Formula::bottom();
      case Token::Type::Ident: {
        auto idx = vocab_.index_of(t.text);
        if (!idx)
          throw ParseError(t.pos, "unknown atom '" + t.text + "'");
        return Formula::atom(*idx);
      }
      case Token::Type::Ramsey:
        throw ramsey_error(t.pos);
      default:
        throw ParseError(t.pos, "expected a formula, got '" + t.text + "'");
    }
  }

  Lexer lex_;
  const Vocabulary& vocab_;
  bool ramsey_context_;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  detail::FormulaParser p(text, vocab, /*ramsey_context=*/false);
  Formula f = p.parse_implies();
  p.expect_end();
  return f;
}

// A single top-level "=>" splits antecedent and consequent; anything else
// parses as a plain formula.
inline ConditionalInput parse_input(std::string_view text,
                                    const Vocabulary& vocab) {
  detail::FormulaParser p(text, vocab, /*ramsey_context=*/true);
  Formula first = p.parse_implies();
  if (!p.at_ramsey()) {
    p.expect_end();
    return {false, first, Formula::top()};
  }
  p.consume_ramsey();
  Formula second = p.parse_implies();
  if (p.at_ramsey()) throw ParseError(p.position(), "nested conditional");
  p.expect_end();
  return {true, first, second};
}

namespace detail {

inline int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

inline void print_formula(const Formula& f, const Vocabulary& vocab,
                          int parent_prec, std::string& out) {
  const int prec = precedence(f.kind());
  const bool need_parens = prec < parent_prec;
  if (need_parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::False:
      out += "false";
      break;
    case Formula::Kind::Atom:
      out += vocab.name(f.atom_index());
      break;
    case Formula::Kind::Not:
      out += '!';
      print_formula(f.child(), vocab, prec + 1, out);
      break;
    case Formula::Kind::And:
      print_formula(f.left(), vocab, prec, out);
      out += " & ";
      print_formula(f.right(), vocab, prec + 1, out);
      break;
    case Formula::Kind::Or:
      print_formula(f.left(), vocab, prec, out);
      out += " | ";
      print_formula(f.right(), vocab, prec + 1, out);
      break;
    case Formula::Kind::Implies:
      // right associative: parenthesize a left child of equal precedence
      print_formula(f.left(), vocab, prec + 1, out);
      out += " -> ";
      print_formula(f.right(), vocab, prec, out);
      break;
  }
  if (need_parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Formula& f, const Vocabulary& vocab) {
  std::string out;
  detail::print_formula(f, vocab, 0, out);
  return out;
}

inline std::string to_string(const ConditionalInput& c,
                             const Vocabulary& vocab) {
  if (!c.is_ramsey) return to_string(c.a, vocab);
  return to_string(c.a, vocab) + " => " + to_string(c.b, vocab);
}

}  // namespace condrev

#endif  // CONDREV_LOGIC_HPP

// Recursive-descent parser shared by formulas and schema patterns. The
// builder decides what nodes are made of; patterns additionally accept
// metavariables (PHI, PSI, ...) and BAR(PHI).
//
// Precedence, loosest first: <->, ->, |, &, prefix operators. Binaries
// associate to the left except ->, which associates to the right.

#ifndef HYPERIGN_SRC_PARSER_H_
#define HYPERIGN_SRC_PARSER_H_

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "hyperign/errors.h"
#include "hyperign/syntax.h"

namespace hyperign::detail {

enum class Tok {
  End,
  Lower,  // atom
  Upper,  // operator keyword or metavariable
  Tilde,
  Amp,
  Bar,
  Arrow,
  DArrow,
  Box,
  LParen,
  RParen,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = std::move(tok_);
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    const char c = text_[i_];
    auto word = [&](auto pred) {
      std::size_t j = i_ + 1;
      while (j < text_.size() && pred(static_cast<unsigned char>(text_[j]))) ++j;
      tok_.text = std::string(text_.substr(i_, j - i_));
      i_ = j;
    };
    if (c >= 'a' && c <= 'z') {
      tok_.kind = Tok::Lower;
      word([](unsigned char ch) { return std::islower(ch) || std::isdigit(ch) || ch == '_'; });
      return;
    }
    if (c >= 'A' && c <= 'Z') {
      tok_.kind = Tok::Upper;
      word([](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
      return;
    }
    auto starts = [&](std::string_view s) { return text_.substr(i_, s.size()) == s; };
    if (starts("<->")) {
      tok_.kind = Tok::DArrow;
      i_ += 3;
    } else if (starts("->")) {
      tok_.kind = Tok::Arrow;
      i_ += 2;
    } else if (starts("[]")) {
      tok_.kind = Tok::Box;
      i_ += 2;
    } else {
      switch (c) {
        case '~': tok_.kind = Tok::Tilde; break;
        case '&': tok_.kind = Tok::Amp; break;
        case '|': tok_.kind = Tok::Bar; break;
        case '(': tok_.kind = Tok::LParen; break;
        case ')': tok_.kind = Tok::RParen; break;
        default:
          throw SyntaxError(i_, "formula character");
      }
      ++i_;
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Token tok_;
};

inline bool keyword_op(const std::string& word, Op* op) {
  if (word == "Iw") *op = Op::IgnW;
  else if (word == "Iu") *op = Op::IgnU;
  else if (word == "Id") *op = Op::IgnD;
  else if (word == "G") *op = Op::Grasp;
  else return false;
  return true;
}

template <class Builder>
class Parser {
 public:
  using Node = typename Builder::Node;

  Parser(std::string_view text, Language lang, Builder& builder,
         bool allow_meta)
      : lex_(text), lang_(lang), b_(builder), allow_meta_(allow_meta) {}

  Node parse_all() {
    Node n = parse_iff();
    if (lex_.peek().kind != Tok::End) throw SyntaxError(lex_.peek().pos, "end of input");
    return n;
  }

 private:
  void check(Op op) {
    if (!admits(lang_, op)) {
      throw LanguageError(std::string(op_symbol(op)), std::string(to_string(lang_)));
    }
  }

  Node parse_iff() {
    Node lhs = parse_imp();
    while (lex_.peek().kind == Tok::DArrow) {
      lex_.take();
      lhs = b_.binary(Op::Iff, std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Node parse_imp() {
    Node lhs = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return b_.binary(Op::Imp, std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Node parse_or() {
    Node lhs = parse_and();
    while (lex_.peek().kind == Tok::Bar) {
      lex_.take();
      lhs = b_.binary(Op::Or, std::move(lhs), parse_and());
    }
    return lhs;
  }

  Node parse_and() {
    Node lhs = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      lhs = b_.binary(Op::And, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Node parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Tilde:
        lex_.take();
        return b_.unary(Op::Not, parse_unary());
      case Tok::Box:
        check(Op::Box);
        lex_.take();
        return b_.unary(Op::Box, parse_unary());
      case Tok::Upper: {
        Op op;
        if (keyword_op(t.text, &op)) {
          check(op);
          lex_.take();
          return b_.unary(op, parse_unary());
        }
        if (!allow_meta_) throw SyntaxError(t.pos, "atom, operator or '('");
        Token word = lex_.take();
        if (word.text == "BAR") {
          expect(Tok::LParen, "'(' after BAR");
          const Token& m = lex_.peek();
          if (m.kind != Tok::Upper || m.text == "BAR" || keyword_op(m.text, &op)) {
            throw SyntaxError(m.pos, "metavariable inside BAR(...)");
          }
          Token meta = lex_.take();
          expect(Tok::RParen, "')'");
          return b_.bar(meta.text);
        }
        return b_.meta(word.text);
      }
      default:
        return parse_primary();
    }
  }

  Node parse_primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Lower) return b_.atom(lex_.take().text);
    if (t.kind == Tok::LParen) {
      lex_.take();
      Node inner = parse_iff();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw SyntaxError(t.pos, "atom, operator or '('");
  }

  void expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) throw SyntaxError(lex_.peek().pos, what);
    lex_.take();
  }

  Lexer lex_;
  Language lang_;
  Builder& b_;
  bool allow_meta_;
};

}  // namespace hyperign::detail

#endif  // HYPERIGN_SRC_PARSER_H_

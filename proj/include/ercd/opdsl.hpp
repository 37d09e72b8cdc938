#ifndef ERCD_OPDSL_HPP
#define ERCD_OPDSL_HPP

#include "ercd/catalog.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ercd::dsl {

class DslError : public std::runtime_error {
public:
  enum class Kind { IllegalCharacter, Syntax, UnknownName, BadArguments, NonScalarDivisor, XSymbols };
  DslError(Kind kind, std::size_t position, const std::string& message);
  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }  // byte offset into the input

private:
  Kind kind_;
  std::size_t position_;
};

struct Token {
  enum class Kind { Ident, Int, LParen, RParen, Comma, Plus, Minus, Star, Slash, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& text);

struct Node {
  enum class Kind { Name, Literal, Neg, Binary, Call };
  Kind kind = Kind::Literal;
  std::string ident;       // Name / Call
  bool has_args = false;   // Name with an index list
  std::string literal;     // decimal digits
  char op = 0;             // Binary: + - * /
  std::vector<Node> args;  // index arguments, call arguments, or operands
  std::size_t offset = 0;

  /// Fully parenthesized rendering, e.g. "(+ (* i D1) m)".
  std::string sexpr() const;
};

Node parse(const std::vector<Token>& tokens);
Node parse(const std::string& text);

Operator elaborate(const Node& ast, const Conventions& c = {});
Operator evaluate(const std::string& text, const Conventions& c = {});

std::string format(const Operator& op);

}  // namespace ercd::dsl

#endif

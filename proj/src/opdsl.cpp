#include "ercd/opdsl.hpp"

#include "ercd/lie_verify.hpp"

#include <cctype>

namespace ercd::dsl {

DslError::DslError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error("at byte " + std::to_string(position) + ": " + message), kind_(kind), position_(position) {}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < text.size()) {
    unsigned char ch = static_cast<unsigned char>(text[k]);
    if (ch == ' ' || ch == '\t') {
      ++k;
      continue;
    }
    std::size_t start = k;
    if (std::isalpha(ch) && ch < 128) {
      while (k < text.size() && static_cast<unsigned char>(text[k]) < 128 && std::isalnum(static_cast<unsigned char>(text[k]))) ++k;
      out.push_back({Token::Kind::Ident, text.substr(start, k - start), start});
      continue;
    }
    if (std::isdigit(ch) && ch < 128) {
      while (k < text.size() && static_cast<unsigned char>(text[k]) < 128 && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      out.push_back({Token::Kind::Int, text.substr(start, k - start), start});
      continue;
    }
    Token::Kind kind;
    switch (ch) {
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      case ',': kind = Token::Kind::Comma; break;
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '/': kind = Token::Kind::Slash; break;
      default:
        throw DslError(DslError::Kind::IllegalCharacter, start, "illegal character (byte 0x" +
                                                                   std::string(1, "0123456789abcdef"[ch >> 4]) +
                                                                   std::string(1, "0123456789abcdef"[ch & 15]) + ")");
    }
    out.push_back({kind, std::string(1, static_cast<char>(ch)), start});
    ++k;
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

std::string Node::sexpr() const {
  auto list = [this](const std::string& head) {
    std::string s = "(" + head;
    for (const auto& a : args) s += " " + a.sexpr();
    return s + ")";
  };
  switch (kind) {
    case Kind::Literal: return literal;
    case Kind::Name: return has_args ? list(ident) : ident;
    case Kind::Neg: return list("neg");
    case Kind::Binary: return list(std::string(1, op));
    case Kind::Call: return list(ident);
  }
  return "";
}

namespace {

const char* describe(Token::Kind k) {
  switch (k) {
    case Token::Kind::Ident: return "identifier";
    case Token::Kind::Int: return "integer";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

bool is_call_name(const std::string& s) {
  return s == "comm" || s == "acomm" || s == "adj" || s == "par" || s == "conjV" || s == "conjW";
}

class Parser {
public:
  explicit Parser(const std::vector<Token>& t) : toks_(t) {}

  Node run() {
    if (toks_.empty() || toks_.back().kind != Token::Kind::End) throw DslError(DslError::Kind::Syntax, 0, "token stream not terminated");
    Node n = expr();
    if (peek().kind != Token::Kind::End) fail("expected operator or end of input");
    return n;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw DslError(DslError::Kind::Syntax, peek().offset, what + ", found " + describe(peek().kind));
  }
  void expect(Token::Kind k) {
    if (peek().kind != k) fail(std::string("expected ") + describe(k));
    next();
  }

  Node binary(char op, Node a, Node b, std::size_t offset) {
    Node n;
    n.kind = Node::Kind::Binary;
    n.op = op;
    n.offset = offset;
    n.args.push_back(std::move(a));
    n.args.push_back(std::move(b));
    return n;
  }

  Node expr() {
    Node left = term();
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const Token& t = next();
      left = binary(t.text[0], std::move(left), term(), t.offset);
    }
    return left;
  }

  Node term() {
    Node left = unary();
    while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
      const Token& t = next();
      left = binary(t.text[0], std::move(left), unary(), t.offset);
    }
    return left;
  }

  Node unary() {
    if (peek().kind == Token::Kind::Minus) {
      Node n;
      n.kind = Node::Kind::Neg;
      n.offset = next().offset;
      if (++depth_ > kMaxDepth) fail("expression nested too deeply");
      n.args.push_back(unary());
      --depth_;
      return n;
    }
    return primary();
  }

  Node primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        Node n;
        n.kind = Node::Kind::Literal;
        n.literal = t.text;
        n.offset = t.offset;
        next();
        return n;
      }
      case Token::Kind::Ident: {
        Node n;
        n.ident = t.text;
        n.offset = t.offset;
        n.kind = is_call_name(t.text) ? Node::Kind::Call : Node::Kind::Name;
        next();
        if (peek().kind == Token::Kind::LParen) {
          next();
          n.has_args = true;
          if (++depth_ > kMaxDepth) fail("expression nested too deeply");
          n.args.push_back(expr());
          while (peek().kind == Token::Kind::Comma) {
            next();
            n.args.push_back(expr());
          }
          --depth_;
          expect(Token::Kind::RParen);
        } else if (n.kind == Node::Kind::Call) {
          fail("expected '(' after " + n.ident);
        }
        return n;
      }
      case Token::Kind::LParen: {
        next();
        if (++depth_ > kMaxDepth) fail("expression nested too deeply");
        Node n = expr();
        --depth_;
        expect(Token::Kind::RParen);
        return n;
      }
      default:
        fail("expected expression");
    }
  }

  static constexpr int kMaxDepth = 200;
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

int index_arg(const Node& n) {
  if (n.kind != Node::Kind::Literal || n.literal.size() > 2)
    throw DslError(DslError::Kind::BadArguments, n.offset, "index must be a small integer literal");
  return std::stoi(n.literal);
}

void arity(const Node& n, std::size_t count) {
  if (n.args.size() != count)
    throw DslError(DslError::Kind::BadArguments, n.offset,
                   n.ident + " takes " + std::to_string(count) + " argument" + (count == 1 ? "" : "s"));
}

Operator indexed(const Node& n, const Conventions& c) {
  try {
    if (n.ident == "s" || n.ident == "sCD" || n.ident == "sI" || n.ident == "sII" || n.ident == "sTS" ||
        n.ident == "sV" || n.ident == "shat") {
      arity(n, 2);
      int a = index_arg(n.args[0]), b = index_arg(n.args[1]);
      if (n.ident == "s") return catalog::so6_gen(a, b);
      if (n.ident == "sCD") return catalog::cd_generator(a, b);
      if (n.ident == "sI") return catalog::sI(a, b);
      if (n.ident == "sII") return catalog::sII(a, b);
      if (n.ident == "sTS") return catalog::sTS(a, b);
      if (n.ident == "sV") return catalog::sV(a, b);
      return catalog::shat(a, b, c);
    }
    if (n.ident == "gamma") {
      arity(n, 1);
      return catalog::gamma(index_arg(n.args[0]));
    }
  } catch (const IndexError& e) {
    throw DslError(DslError::Kind::BadArguments, n.offset, e.what());
  }
  throw DslError(DslError::Kind::UnknownName, n.offset, "unknown indexed name '" + n.ident + "'");
}

bool scalar_of(const Operator& op, FieldElem& out) {
  if (op.is_zero()) return false;
  if (op.terms().size() != 1) return false;
  const auto& [key, m] = *op.terms().begin();
  if (!key.x.is_one() || key.conj) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i == j && m(i, j) != m(0, 0)) return false;
    }
  out = m(0, 0);
  return true;
}

Operator elab(const Node& n, const Conventions& c) {
  switch (n.kind) {
    case Node::Kind::Literal: {
      if (n.literal.size() > 30) throw DslError(DslError::Kind::BadArguments, n.offset, "integer literal too long");
      return Operator(FieldElem(GaussianRational(Rational::parse(n.literal))));
    }
    case Node::Kind::Name: {
      if (n.has_args) return indexed(n, c);
      Operator op;
      if (!catalog::lookup(n.ident, c, op)) throw DslError(DslError::Kind::UnknownName, n.offset, "unknown name '" + n.ident + "'");
      return op;
    }
    case Node::Kind::Neg:
      return -elab(n.args[0], c);
    case Node::Kind::Binary: {
      Operator a = elab(n.args[0], c);
      Operator b = elab(n.args[1], c);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: {
          FieldElem s;
          if (!scalar_of(b, s)) throw DslError(DslError::Kind::NonScalarDivisor, n.args[1].offset, "divisor is not a nonzero scalar");
          return a * Operator(inv(s));
        }
      }
    }
    case Node::Kind::Call: {
      const std::string& f = n.ident;
      if (f == "comm" || f == "acomm") {
        arity(n, 2);
        Operator a = elab(n.args[0], c), b = elab(n.args[1], c);
        return f == "comm" ? commutator(a, b) : anticommutator(a, b);
      }
      arity(n, 1);
      Operator a = elab(n.args[0], c);
      if (f == "adj") return adjoint(a);
      if (f == "par") return parity(a);
      try {
        if (f == "conjV") return conjugate(a, catalog::V_conjugator(c), Direction::Inverse);
        return conjugate(a, catalog::W_conjugator(), Direction::Forward);
      } catch (const XSymbolsPresent& e) {
        throw DslError(DslError::Kind::XSymbols, n.offset, e.what());
      }
    }
  }
  throw DslError(DslError::Kind::Syntax, n.offset, "malformed tree");
}

}  // namespace

Node parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

Node parse(const std::string& text) { return parse(tokenize(text)); }

Operator elaborate(const Node& ast, const Conventions& c) { return elab(ast, c); }

Operator evaluate(const std::string& text, const Conventions& c) { return elaborate(parse(text), c); }

std::string format(const Operator& op) { return to_text(op); }

}  // namespace ercd::dsl

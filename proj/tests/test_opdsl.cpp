#include "doctest.h"

#include "ercd/opdsl.hpp"
#include "random_elems.hpp"

using namespace ercd;
using namespace ercd::dsl;

namespace {

std::vector<std::string> kinds(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text)) {
    switch (t.kind) {
      case Token::Kind::Ident: out.push_back("id:" + t.text); break;
      case Token::Kind::Int: out.push_back("int:" + t.text); break;
      case Token::Kind::End: out.push_back("end"); break;
      default: out.push_back(t.text);
    }
  }
  return out;
}

DslError::Kind error_kind(const std::string& text) {
  try {
    evaluate(text);
  } catch (const DslError& e) {
    return e.kind();
  }
  FAIL("expected an error for " << text);
  return DslError::Kind::Syntax;
}

std::size_t error_position(const std::string& text) {
  try {
    evaluate(text);
  } catch (const DslError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("tokenize examples") {
  CHECK(kinds("comm(s(1,2), s(2,3))") ==
        std::vector<std::string>{"id:comm", "(", "id:s", "(", "int:1", ",", "int:2", ")", ",", "id:s", "(", "int:2", ",",
                                 "int:3", ")", ")", "end"});
  CHECK(kinds("gamma0*gamma1") == std::vector<std::string>{"id:gamma0", "*", "id:gamma1", "end"});
  CHECK_THROWS_AS(tokenize("\xce\xb3"), DslError);
  try {
    tokenize("i + $");
  } catch (const DslError& e) {
    CHECK(e.kind() == DslError::Kind::IllegalCharacter);
    CHECK(e.position() == 4);
  }
  auto toks = tokenize("  X1");
  CHECK(toks[0].offset == 2);
}

TEST_CASE("parse examples") {
  CHECK(parse("i*D1 + m").sexpr() == "(+ (* i D1) m)");
  CHECK(parse("adj(comm(HD, eps))").sexpr() == "(adj (comm HD eps))");
  CHECK_THROWS_AS(parse("s(1,"), DslError);
  try {
    parse("s(1,");
  } catch (const DslError& e) {
    CHECK(e.kind() == DslError::Kind::Syntax);
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("expected expression") != std::string::npos);
  }
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("a - b - c").sexpr() == "(- (- a b) c)");
  CHECK(parse("a + b*c").sexpr() == "(+ a (* b c))");
  CHECK(parse("a / b / c").sexpr() == "(/ (/ a b) c)");
  CHECK(parse("-a*b").sexpr() == "(* (neg a) b)");
  CHECK(parse("--a").sexpr() == "(neg (neg a))");
  CHECK(parse("(a + b)*c").sexpr() == "(* (+ a b) c)");
  CHECK(parse("sI(0,1)").sexpr() == "(sI 0 1)");
}

TEST_CASE("syntax errors carry positions") {
  CHECK(error_position("gamma0 gamma1") == 7);
  CHECK(error_position(")") == 0);
  CHECK(error_position("comm") == 4);
  CHECK(error_position("(i") == 2);
  CHECK(error_position("") == 0);
  CHECK(error_kind("i +") == DslError::Kind::Syntax);
}

TEST_CASE("elaborate examples") {
  FieldElem i = FieldElem::i();
  CHECK(evaluate("sII(1,2)") == Operator(i * inv(FieldElem(2))));
  CHECK(evaluate("comm(s(1,2), eps)").is_zero());
  CHECK(error_kind("HD/gamma1") == DslError::Kind::NonScalarDivisor);
  CHECK(error_kind("HD/0") == DslError::Kind::NonScalarDivisor);
  CHECK(error_kind("nosuch") == DslError::Kind::UnknownName);
  CHECK(error_position("i + nosuch") == 4);
  CHECK(error_kind("foo(1)") == DslError::Kind::UnknownName);
  CHECK(error_kind("s(1,1)") == DslError::Kind::BadArguments);
  CHECK(error_kind("s(1)") == DslError::Kind::BadArguments);
  CHECK(error_kind("s(i,2)") == DslError::Kind::BadArguments);
  CHECK(error_kind("comm(C)") == DslError::Kind::BadArguments);
  CHECK(error_kind("conjV(X1)") == DslError::Kind::XSymbols);
  CHECK(error_kind("conjW(X1*gamma0)") == DslError::Kind::XSymbols);
}

TEST_CASE("elaborate covers the catalog names") {
  Conventions c;
  CHECK(evaluate("C*C") == Operator::identity());
  CHECK(evaluate("gamma5") == catalog::gamma(5));
  CHECK(evaluate("gamma(5)") == catalog::gamma(5));
  CHECK(evaluate("shat(0,3)") == catalog::shat(0, 3, c));
  CHECK(evaluate("-HD/(2*w)") == catalog::shat(0, 3, c));
  CHECK(evaluate("conjV(sII(0,3))") == catalog::shat(0, 3, c));
  CHECK(evaluate("conjV(w*gamma0)") == catalog::dirac_hamiltonian(c));
  CHECK(evaluate("conjW(1)") == Operator::identity());
  CHECK(evaluate("sCD(2,5)") == catalog::cd_generator(2, 5));
  CHECK(evaluate("sTS(0,1) - sI(0,1) - sII(0,1)").is_zero());
  CHECK(evaluate("sV(0,1) + sI(0,1) - sII(0,1)").is_zero());
  CHECK(evaluate("Lfw") == catalog::fw_operator());
  CHECK(evaluate("Ldirac") == catalog::dirac_operator(c));
  CHECK(evaluate("W*Winv") == Operator(FieldElem(2)));
  CHECK(evaluate("V*Vinv/(2*w*(w+m))") == Operator::identity());
  CHECK(evaluate("adj(D1)") == evaluate("-D1"));
  CHECK(evaluate("par(V)") == evaluate("Vinv"));
  CHECK(evaluate("acomm(gamma1, gamma1)") == evaluate("-2"));
  CHECK(evaluate("comm(X1, D1)") == evaluate("-1"));
  CHECK(evaluate("comm(sI(0,1), sI(0,2))") == evaluate("-sI(1,2)"));
}

TEST_CASE("format examples") {
  CHECK(format(evaluate("gamma0*gamma1/2")) == "(1/2)*gamma0*gamma1");
  CHECK(format(Operator()) == "0");
  CHECK(format(evaluate("i/2")) == "(i/2)");
  CHECK(format(evaluate("C*C")) == "1");
}

TEST_CASE("property: parse . format round trip on random catalog combinations") {
  testing::Gen gen(301);
  const std::vector<std::string> atoms = {
      "gamma0", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5", "gamma6", "eps", "C", "i",
      "m",      "w",      "D1",     "D2",     "D3",     "D0",     "HD",     "W",   "V", "s(1,2)",
      "s(3,5)", "sI(0,1)", "sII(0,2)", "sII(3,1)", "sTS(2,3)", "sV(0,3)", "shat(0,1)", "shat(0,3)", "sCD(0,5)", "2"};
  const std::vector<std::string> ops = {"+", "-", "*"};
  int checked = 0;
  for (int n = 0; n < 600; ++n) {
    std::string expr = atoms[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(atoms.size()) - 1))];
    int len = gen.uniform(1, 3);
    for (int k = 0; k < len; ++k) {
      expr += ops[static_cast<std::size_t>(gen.uniform(0, 2))];
      expr += atoms[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(atoms.size()) - 1))];
    }
    if (gen.uniform(0, 3) == 0) expr = "comm(" + expr + ",gamma0)";
    if (gen.uniform(0, 4) == 0) expr = "(" + expr + ")/(w+m)";
    Operator op = evaluate(expr);
    std::string text = format(op);
    INFO(expr << " -> " << text);
    REQUIRE(evaluate(text) == op);
    REQUIRE(format(evaluate(text)) == text);
    ++checked;
  }
  CHECK(checked == 600);
}

TEST_CASE("fuzz: arbitrary bytes never crash and errors carry positions") {
  testing::Gen gen(302);
  const std::string alphabet = "()+-*/, 0123456789abcDmwXisCgamhtV\x01\xff";
  for (int n = 0; n < 3000; ++n) {
    std::string text;
    int len = gen.uniform(0, 24);
    for (int k = 0; k < len; ++k) {
      if (gen.uniform(0, 9) == 0) text += static_cast<char>(gen.uniform(0, 255));
      else text += alphabet[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(alphabet.size()) - 1))];
    }
    try {
      evaluate(text);
    } catch (const DslError& e) {
      REQUIRE(e.position() <= text.size());
    }
  }
  // Deep nesting is rejected rather than overflowing the stack.
  std::string deep(100000, '(');
  CHECK_THROWS_AS(parse(deep), DslError);
  std::string negs(100000, '-');
  CHECK_THROWS_AS(parse(negs + "1"), DslError);
}

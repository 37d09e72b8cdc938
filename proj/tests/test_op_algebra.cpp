#include "doctest.h"

#include "ercd/catalog.hpp"
#include "random_ops.hpp"

using namespace ercd;

namespace {

using catalog::gamma;
Operator C() { return Operator::conjugation(); }
Operator I() { return Operator::identity(); }
Operator X(int mu) { return Operator::coordinate(mu); }
Operator D(int mu) { return Operator(FieldElem::var(static_cast<Var>(mu))); }
FieldElem i() { return FieldElem::i(); }
FieldElem w() { return FieldElem::omega(); }

Sample real_sample(int m, int d1, int d2, int d3) {
  return *Sample::real(Rational(m), {Rational(d1), Rational(d2), Rational(d3)});
}

RealMatrix8 real_identity() {
  RealMatrix8 r = RealMatrix8::Constant(Rational(0));
  for (int k = 0; k < 8; ++k) r(k, k) = Rational(1);
  return r;
}

}  // namespace

TEST_CASE("op_mul examples") {
  CHECK(C() * Operator(i()) == Operator(-i()) * C());
  CHECK(D(1) * X(1) == X(1) * D(1) + I());
  CHECK(gamma(5) * gamma(6) == Operator(i()));
}

TEST_CASE("op_commutator examples") {
  CHECK(commutator(catalog::so6_gen(1, 2), catalog::so6_gen(2, 3)) == catalog::so6_gen(3, 1));
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) CHECK(commutator(catalog::so6_gen(a, b), catalog::epsilon_hat()).is_zero());
  Operator a = X(2) * gamma(3) * D(1) + gamma(5);
  CHECK(commutator(a, a).is_zero());
  CHECK(anticommutator(gamma(1), gamma(2)).is_zero());
}

TEST_CASE("op_adjoint examples") {
  Operator p0 = Operator(-i()) * gamma(0) * Operator(w());
  CHECK(adjoint(p0) == -p0);
  CHECK(adjoint(D(1)) == -D(1));
  CHECK(adjoint(X(1) * D(2)) == -(X(1) * D(2)));
  CHECK(adjoint(X(1) * D(1)) == -(D(1) * X(1)));
  CHECK(adjoint(C()) == C());
}

TEST_CASE("op_parity examples") {
  Operator gd = gamma(1) * D(1) + gamma(2) * D(2) + gamma(3) * D(3);
  CHECK(parity(gd) == -gd);
  CHECK(parity(gamma(0) * Operator(w())) == gamma(0) * Operator(w()));
  CHECK(parity(X(1) * D(1)) == -(X(1) * D(1)));
}

TEST_CASE("op_realify examples") {
  Sample s = *Sample::momentum(Rational(3), {Rational(0), Rational(0), Rational(4)});
  CHECK(realify(I(), s) == real_identity());
  RealMatrix8 ri = RealMatrix8::Constant(Rational(0));
  for (int k = 0; k < 4; ++k) {
    ri(k, k + 4) = Rational(-1);
    ri(k + 4, k) = Rational(1);
  }
  CHECK(realify(Operator(i()), s) == ri);
  RealMatrix8 rc = real_identity();
  for (int k = 4; k < 8; ++k) rc(k, k) = Rational(-1);
  CHECK(realify(C(), s) == rc);
  CHECK_THROWS_AS(realify(X(0), s), XSymbolsPresent);
}

TEST_CASE("op_equal examples") {
  CHECK(C() * C() == I());
  CHECK_FALSE(X(1) * D(1) == D(1) * X(1));
  CHECK(gamma(4) == gamma(0) * gamma(1) * gamma(2) * gamma(3));
}

TEST_CASE("zero matrices are pruned and text is canonical") {
  Operator a = gamma(1) - gamma(1);
  CHECK(a.is_zero());
  CHECK(a.terms().empty());
  CHECK(to_text(a) == "0");
  CHECK(to_text(FieldElem(1) * inv(FieldElem(2)) * (gamma(0) * gamma(1))) == "(1/2)*gamma0*gamma1");
  CHECK(to_text(Operator(i() * inv(FieldElem(2)))) == "(i/2)");
  CHECK(to_text(D(1) * X(1)) == "1+X1*D1");
  CHECK(to_text(gamma(5)) == "gamma1*gamma3*C");
}

TEST_CASE("[X_mu, D_nu] = -delta for all 16 pairs") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Operator expected = mu == nu ? -I() : Operator();
      CHECK(commutator(X(mu), D(nu)) == expected);
    }
}

TEST_CASE("higher X powers reorder with binomial coefficients") {
  // D1 X1^2 = X1^2 D1 + 2 X1
  Operator x2 = X(1) * X(1);
  CHECK(D(1) * x2 == x2 * D(1) + FieldElem(2) * X(1));
  // f(D) X1 = X1 f + df/dD1 for f = w
  CHECK(Operator(w()) * X(1) == X(1) * Operator(w()) + Operator(dD(w(), 1)));
}

TEST_CASE("property: associativity") {
  testing::OpGen gen(101);
  for (int n = 0; n < 500; ++n) {
    Operator a = gen.op(true, 2), b = gen.op(true, 2), c = gen.op(true, 2);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("property: C antilinearity and C^2 = 1") {
  testing::OpGen gen(102);
  for (int n = 0; n < 500; ++n) {
    FieldElem f = gen.scalar();
    Operator a = gen.op(true);
    REQUIRE(C() * (f * a) == conj(f) * (C() * a));
    REQUIRE(C() * C() * a == a);
  }
}

TEST_CASE("property: parity and adjoint are involutions") {
  testing::OpGen gen(103);
  for (int n = 0; n < 500; ++n) {
    Operator a = gen.op(true);
    REQUIRE(parity(parity(a)) == a);
    REQUIRE(adjoint(adjoint(a)) == a);
  }
}

TEST_CASE("property: adjoint is an antihomomorphism") {
  testing::OpGen gen(104);
  for (int n = 0; n < 500; ++n) {
    Operator a = gen.op(true, 2), b = gen.op(true, 2);
    REQUIRE(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
}

TEST_CASE("property: parity is multiplicative") {
  testing::OpGen gen(105);
  for (int n = 0; n < 500; ++n) {
    Operator a = gen.op(false, 2), b = gen.op(false, 2);
    REQUIRE(parity(a * b) == parity(a) * parity(b));
  }
}

TEST_CASE("property: realify is multiplicative at real-D samples") {
  testing::OpGen gen(106);
  const Sample samples[] = {real_sample(5, 3, 0, 0), real_sample(3, 1, 2, 0), real_sample(7, 2, 3, 0),
                            real_sample(13, 0, 12, 0)};
  for (int n = 0; n < 500; ++n) {
    Operator a = gen.op(false, 2), b = gen.op(false, 2);
    const Sample& s = samples[n % 4];
    REQUIRE(realify(a * b, s) == realify(a, s) * realify(b, s));
  }
}

TEST_CASE("property: realify is multiplicative at momentum samples for conj-free or constant operators") {
  testing::OpGen gen(107);
  const Sample samples[] = {*Sample::momentum(Rational(3), {Rational(0), Rational(0), Rational(4)}),
                            *Sample::momentum(Rational(1), {Rational(2), Rational(2), Rational(0)}),
                            *Sample::momentum(Rational(5), {Rational(0), Rational(12), Rational(0)})};
  for (int n = 0; n < 500; ++n) {
    const Sample& s = samples[n % 3];
    Operator a = gen.op(false, 2).linear_part(), b = gen.op(false, 2).linear_part();
    REQUIRE(realify(a * b, s) == realify(a, s) * realify(b, s));
    Operator c = gen.constant(), d = gen.constant();
    REQUIRE(realify(c * d, s) == realify(c, s) * realify(d, s));
  }
}

TEST_CASE("normal form: A * I = A for catalog entries") {
  Conventions conv;
  std::vector<Operator> entries;
  for (int k = 0; k <= 6; ++k) entries.push_back(gamma(k));
  for (const auto& e : catalog::ercd_basis()) entries.push_back(e);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) {
        entries.push_back(catalog::sI(a, b));
        entries.push_back(catalog::sII(a, b));
        entries.push_back(catalog::shat(a, b, conv));
      }
  entries.push_back(catalog::dirac_hamiltonian(conv));
  entries.push_back(catalog::fw_operator());
  entries.push_back(catalog::dirac_operator(conv));
  entries.push_back(catalog::W_conjugator().n_op);
  entries.push_back(catalog::V_conjugator(conv).n_op);
  for (const auto& [name, op] : catalog::fw_genset(Flavor::TensorScalar, conv).members()) entries.push_back(op);
  for (const auto& [name, op] : catalog::dirac_genset(Flavor::TensorScalar, conv).members()) entries.push_back(op);
  for (const auto& e : entries) {
    CHECK(e * I() == e);
    CHECK(I() * e == e);
  }
}

#include "doctest.h"

#include "ercd/field.hpp"
#include "random_elems.hpp"

#include <cmath>

using namespace ercd;

namespace {

FieldElem m() { return FieldElem::var(Var::M); }
FieldElem D(int k) { return FieldElem::var(static_cast<Var>(k)); }
FieldElem w() { return FieldElem::omega(); }
FieldElem P() { return D(1) * D(1) + D(2) * D(2) + D(3) * D(3); }

Sample pythagorean() { return *Sample::momentum(Rational(3), {Rational(0), Rational(0), Rational(4)}); }

}  // namespace

TEST_CASE("gaussian rational arithmetic and text") {
  GaussianRational a(Rational(1, 2), Rational(-3));
  CHECK((a * a.conj()).im.is_zero());
  CHECK((a / a).is_one());
  CHECK(GaussianRational(Rational(-1, 2)).str() == "(-1/2)");
  CHECK(GaussianRational::i().str() == "i");
  CHECK(GaussianRational(Rational(0), Rational(1, 2)).str() == "(i/2)");
  CHECK(GaussianRational(Rational(2), Rational(-3)).str() == "(2-3*i)");
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), DivisionByZero);
}

TEST_CASE("polynomial exact division") {
  Polynomial a = Polynomial::var(Var::M) + Polynomial::var(Var::D1);
  Polynomial b = Polynomial::var(Var::M) - Polynomial::var(Var::D2);
  auto q = (a * b).divide_exact(a);
  REQUIRE(q.has_value());
  CHECK(*q == b);
  CHECK_FALSE((a * b + Polynomial(1)).divide_exact(a).has_value());
}

TEST_CASE("field_mul examples") {
  CHECK(w() * w() == FieldElem(FieldElem::omega_squared()));
  CHECK((w() + m()) * (w() - m()) == -P());
  CHECK(FieldElem(1) * w() == w());
}

TEST_CASE("field_inv examples") {
  CHECK(inv(w() + m()) == (w() - m()) * inv(-P()));
  CHECK(inv(m()) == FieldElem(RationalFunction::fraction(Polynomial(1), Polynomial::var(Var::M))));
  FieldElem two_w = FieldElem(2) * w();
  CHECK(inv(two_w) == w() * inv(FieldElem(2) * FieldElem(FieldElem::omega_squared())));
  CHECK((inv(two_w) * two_w).is_one());
  CHECK_THROWS_AS(inv(FieldElem()), DivisionByZero);
}

TEST_CASE("field_is_zero examples") {
  CHECK((w() * w() - m() * m() + P()).is_zero());
  CHECK_FALSE((w() - m()).is_zero());
  FieldElem a = m() * inv(D(1));
  FieldElem b = m() * D(2) * inv(D(1) * D(2));
  CHECK((a - b).is_zero());
}

TEST_CASE("field_conj examples") {
  CHECK(conj(FieldElem::i() * w()) == -(FieldElem::i() * w()));
  CHECK(conj(m() + D(1)) == m() + D(1));
  FieldElem z = FieldElem(GaussianRational(Rational(2), Rational(3))) * inv(D(2));
  CHECK(conj(z) == FieldElem(GaussianRational(Rational(2), Rational(-3))) * inv(D(2)));
}

TEST_CASE("field_dD examples") {
  CHECK(dD(w(), 1) == -D(1) * inv(w()));
  CHECK(dD(D(2) * D(2), 2) == FieldElem(2) * D(2));
  FieldElem f = inv(w() + m());
  FieldElem expected = D(1) * inv(w() * (w() + m()) * (w() + m()));
  CHECK(dD(f, 1) == expected);
  CHECK(dD(w(), 0).is_zero());
}

TEST_CASE("field_dD agrees with a finite-difference oracle") {
  // Real sample m=5, D=(3,0,0): w = 4. Evaluate 1/(w+m) in doubles around D1.
  auto direct = [](double d1) {
    double wv = std::sqrt(25.0 - d1 * d1);
    return 1.0 / (wv + 5.0);
  };
  double h = 1e-5;
  double fd = (direct(3.0 + h) - direct(3.0 - h)) / (2 * h);
  Sample s = *Sample::real(Rational(5), {Rational(3), Rational(0), Rational(0)});
  GaussianRational exact = eval(dD(inv(w() + m()), 1), s);
  double exact_d = exact.re.raw().get_d();
  CHECK(exact.im.is_zero());
  CHECK(std::abs(exact_d - fd) < 1e-8);
}

TEST_CASE("field_parity examples") {
  CHECK(parity(D(1) + w()) == -D(1) + w());
  CHECK(parity(D(1) * D(2)) == D(1) * D(2));
  CHECK(parity(m()) == m());
}

TEST_CASE("field_eval examples") {
  Sample s = pythagorean();
  CHECK(eval(w(), s) == GaussianRational(5));
  CHECK(eval(m(), s) == GaussianRational(3));
  CHECK(eval(inv(w() + m()), s) == GaussianRational(Rational(1, 8)));
  Sample bad = s;
  bad.omega = GaussianRational(4);
  CHECK_THROWS_AS(eval(w(), bad), InconsistentSample);
  Sample zero_den = *Sample::real(Rational(5), {Rational(3), Rational(0), Rational(0)});
  CHECK_THROWS_AS(eval(inv(D(2)), zero_den), DivisionByZero);
  CHECK_FALSE(Sample::momentum(Rational(1), {Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("canonical text") {
  CHECK(w().str() == "w");
  CHECK((m() * m() - D(1)).str() == "m*m-D1");
  CHECK(FieldElem().str() == "0");
  CHECK(inv(FieldElem(2) * w()).str() == "((1/2)*w)/(m*m-D3*D3-D2*D2-D1*D1)");
}

TEST_CASE("property: ring axioms on random triples") {
  testing::Gen gen(20261019);
  for (int n = 0; n < 1000; ++n) {
    FieldElem a = gen.field(), b = gen.field(), c = gen.field();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
  }
}

TEST_CASE("property: inverses, involutions, automorphisms") {
  testing::Gen gen(7);
  for (int n = 0; n < 500; ++n) {
    FieldElem a = gen.nonzero_field();
    FieldElem b = gen.field();
    REQUIRE((a * inv(a)).is_one());
    REQUIRE(inv(inv(a)) == a);
    REQUIRE(conj(conj(a)) == a);
    REQUIRE(parity(parity(a)) == a);
    REQUIRE(conj(parity(a)) == parity(conj(a)));
    REQUIRE(conj(a * b) == conj(a) * conj(b));
    REQUIRE(parity(a * b) == parity(a) * parity(b));
    REQUIRE(parity(a + b) == parity(a) + parity(b));
  }
}

TEST_CASE("property: Leibniz rule for dD") {
  testing::Gen gen(11);
  for (int n = 0; n < 500; ++n) {
    FieldElem a = gen.field(), b = gen.field();
    int mu = gen.uniform(0, 3);
    REQUIRE(dD(a * b, mu) == dD(a, mu) * b + a * dD(b, mu));
  }
}

TEST_CASE("property: w-reduction is confluent") {
  testing::Gen gen(3);
  for (int n = 0; n < 500; ++n) {
    FieldElem a = gen.field(), b = gen.field();
    FieldElem x = a + w() * b;
    FieldElem left = ((x * w()) * w()) * x;
    FieldElem right = x * (w() * (w() * x));
    FieldElem mixed = (x * x) * (w() * w());
    REQUIRE(left == right);
    REQUIRE(left == mixed);
    REQUIRE(left.u() == mixed.u());
    REQUIRE(left.v() == mixed.v());
  }
}

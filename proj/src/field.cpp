#include "ercd/field.hpp"

namespace ercd {

namespace {

constexpr unsigned kSpatialMask = (1u << 1) | (1u << 2) | (1u << 3);
constexpr unsigned kAllDMask = kSpatialMask | 1u;

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  mpz_class n = x.raw().get_num();
  mpz_class d = x.raw().get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

}  // namespace

std::optional<Sample> Sample::momentum(const Rational& m, const std::array<Rational, 3>& p) {
  Rational w2 = m * m;
  for (const auto& pk : p) w2 += pk * pk;
  auto w = rational_sqrt(w2);
  if (!w || w->is_zero()) return std::nullopt;
  Sample s;
  s.m = GaussianRational(m);
  s.d[0] = GaussianRational(0);
  for (int k = 0; k < 3; ++k) s.d[k + 1] = GaussianRational(Rational(0), p[k]);
  s.omega = GaussianRational(*w);
  return s;
}

std::optional<Sample> Sample::real(const Rational& m, const std::array<Rational, 3>& d) {
  Rational w2 = m * m;
  for (const auto& dk : d) w2 -= dk * dk;
  auto w = rational_sqrt(w2);
  if (!w || w->is_zero()) return std::nullopt;
  Sample s;
  s.m = GaussianRational(m);
  s.d[0] = GaussianRational(0);
  for (int k = 0; k < 3; ++k) s.d[k + 1] = GaussianRational(d[k]);
  s.omega = GaussianRational(*w);
  return s;
}

std::array<GaussianRational, kNumVars> Sample::vars() const { return {d[0], d[1], d[2], d[3], m}; }

bool Sample::consistent() const {
  return omega * omega == FieldElem::omega_squared().eval(vars());
}

std::string Sample::str() const {
  return "m=" + m.str() + ",D0=" + d[0].str() + ",D1=" + d[1].str() + ",D2=" + d[2].str() +
         ",D3=" + d[3].str() + ",w=" + omega.str();
}

const Polynomial& FieldElem::omega_squared() {
  static const Polynomial w2 = Polynomial::var(Var::M, 2) - Polynomial::var(Var::D1, 2) -
                               Polynomial::var(Var::D2, 2) - Polynomial::var(Var::D3, 2);
  return w2;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = FieldElem();
  if (v_.is_zero() && o.v_.is_zero()) {
    u_ *= o.u_;
    return *this;
  }
  if (o.v_.is_zero()) {
    u_ *= o.u_;
    v_ *= o.u_;
    return *this;
  }
  if (v_.is_zero()) {
    v_ = u_ * o.v_;
    u_ *= o.u_;
    return *this;
  }
  RationalFunction u = u_ * o.u_ + v_ * o.v_ * RationalFunction(omega_squared());
  RationalFunction v = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

FieldElem inv(const FieldElem& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero field element");
  if (a.v_.is_zero()) return FieldElem(a.u_.inverse());
  // (u + v w)^-1 = (u - v w) / (u^2 - v^2 w^2)
  RationalFunction norm = a.u_ * a.u_ - a.v_ * a.v_ * RationalFunction(FieldElem::omega_squared());
  RationalFunction r = norm.inverse();
  return FieldElem(a.u_ * r, -(a.v_ * r));
}

FieldElem conj(const FieldElem& a) { return FieldElem(a.u_.conj(), a.v_.conj()); }

FieldElem parity(const FieldElem& a) {
  return FieldElem(a.u_.flip_signs(kSpatialMask), a.v_.flip_signs(kSpatialMask));
}

FieldElem scalar_adjoint(const FieldElem& a) {
  return FieldElem(a.u_.conj().flip_signs(kAllDMask), a.v_.conj().flip_signs(kAllDMask));
}

FieldElem dD(const FieldElem& a, int mu) {
  Var v = static_cast<Var>(mu);
  RationalFunction du = a.u_.derivative(v);
  RationalFunction dv = a.v_.derivative(v);
  if (mu != 0 && !a.v_.is_zero()) {
    // v * dw/dD_k = v * (-D_k / w) = -(v D_k / w^2) * w
    dv -= a.v_ * RationalFunction::fraction(Polynomial::var(v), FieldElem::omega_squared());
  }
  return FieldElem(std::move(du), std::move(dv));
}

GaussianRational eval(const FieldElem& a, const Sample& s) {
  if (!s.consistent()) throw InconsistentSample("sample violates w^2 = m^2 - D1^2 - D2^2 - D3^2");
  auto at = s.vars();
  GaussianRational r = a.u_.eval(at);
  if (!a.v_.is_zero()) r += a.v_.eval(at) * s.omega;
  return r;
}

std::string FieldElem::str() const {
  if (v_.is_zero()) return u_.str();
  auto common = RationalFunction::lcm(u_.denominator_factors(), v_.denominator_factors());
  Polynomial un = u_.numerator_over(common);
  Polynomial vn = v_.numerator_over(common);
  std::string wpart;
  if (vn == Polynomial(1)) wpart = "w";
  else if (vn == Polynomial(-1)) wpart = "-w";
  else if (vn.terms().size() == 1) wpart = vn.str() + "*w";
  else wpart = "(" + vn.str() + ")*w";
  std::string body;
  if (un.is_zero()) body = wpart;
  else body = un.str() + (wpart[0] == '-' ? "" : "+") + wpart;
  Polynomial den = common.expand();
  if (den == Polynomial(1)) return body;
  return "(" + body + ")/(" + den.str() + ")";
}

}  // namespace ercd

#ifndef ERCD_FIELD_HPP
#define ERCD_FIELD_HPP

#include "ercd/rational_function.hpp"

#include <array>
#include <optional>
#include <string>

namespace ercd {

/// Numeric point for spot evaluation. `omega` must satisfy
/// omega^2 = m^2 - D1^2 - D2^2 - D3^2 at the point.
struct Sample {
  GaussianRational m;
  std::array<GaussianRational, 4> d;  // D0..D3
  GaussianRational omega;

  /// Momentum-style sample: D_k = i*p_k, omega = sqrt(m^2 + |p|^2), which
  /// must be rational. Returns nullopt if it is not.
  static std::optional<Sample> momentum(const Rational& m, const std::array<Rational, 3>& p);
  /// Real sample: D_k = d_k, omega = sqrt(m^2 - |d|^2) must be a positive rational.
  static std::optional<Sample> real(const Rational& m, const std::array<Rational, 3>& d);

  bool consistent() const;
  std::array<GaussianRational, kNumVars> vars() const;
  std::string str() const;
};

struct InconsistentSample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// u + v*w where w is the energy symbol with w^2 = m^2 - D1^2 - D2^2 - D3^2.
/// Every product is reduced on the spot, so w never appears squared.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(RationalFunction u) : u_(std::move(u)) {}
  FieldElem(RationalFunction u, RationalFunction v) : u_(std::move(u)), v_(std::move(v)) {}
  FieldElem(GaussianRational c) : u_(std::move(c)) {}
  FieldElem(Polynomial p) : u_(std::move(p)) {}
  FieldElem(long c) : u_(c) {}
  FieldElem(int c) : u_(static_cast<long>(c)) {}

  static FieldElem omega() { return FieldElem(RationalFunction(), RationalFunction(1)); }
  static FieldElem var(Var v) { return FieldElem(RationalFunction::var(v)); }
  static FieldElem i() { return FieldElem(GaussianRational::i()); }
  /// m^2 - D1^2 - D2^2 - D3^2
  static const Polynomial& omega_squared();

  const RationalFunction& u() const { return u_; }
  const RationalFunction& v() const { return v_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_one() const { return v_.is_zero() && u_.is_one(); }

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= inv(o); }
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend FieldElem operator-(const FieldElem& a) { return FieldElem(-a.u_, -a.v_); }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  friend FieldElem inv(const FieldElem& a);
  /// i -> -i on every coefficient.
  friend FieldElem conj(const FieldElem& a);
  /// D_k -> -D_k for k = 1..3.
  friend FieldElem parity(const FieldElem& a);
  /// Formal adjoint of a scalar symbol: conj with D_mu -> -D_mu for all mu.
  friend FieldElem scalar_adjoint(const FieldElem& a);
  /// Formal partial derivative in D_mu, with dw/dD_k = -D_k/w.
  friend FieldElem dD(const FieldElem& a, int mu);
  friend GaussianRational eval(const FieldElem& a, const Sample& s);

  /// Canonical text "(U+(V)*w)/(Den)" over a common denominator; variables
  /// m, D0..D3, w. Parseable by the operator expression language.
  std::string str() const;

private:
  RationalFunction u_;
  RationalFunction v_;
};

// Free-function spellings used by generic code.
inline bool field_is_zero(const FieldElem& a) { return a.is_zero(); }
inline FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }
inline FieldElem field_inv(const FieldElem& a) { return inv(a); }
inline FieldElem field_conj(const FieldElem& a) { return conj(a); }
inline FieldElem field_parity(const FieldElem& a) { return parity(a); }
inline FieldElem field_dD(const FieldElem& a, int mu) { return dD(a, mu); }
inline GaussianRational field_eval(const FieldElem& a, const Sample& s) { return eval(a, s); }

}  // namespace ercd

#endif

#ifndef ERCD_POLYNOMIAL_HPP
#define ERCD_POLYNOMIAL_HPP

#include "ercd/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ercd {

/// Commuting scalar symbols. D0..D3 are the derivative symbols, M the mass.
enum class Var : int { D0 = 0, D1 = 1, D2 = 2, D3 = 3, M = 4 };
inline constexpr int kNumVars = 5;

/// Packed exponent vector. Byte v holds the exponent of Var v, byte 5 holds
/// the total degree, so integer order on the key is graded lex with
/// D0 < D1 < D2 < D3 < m and multiplication of monomials is key addition.
class Monomial {
public:
  constexpr Monomial() = default;
  static constexpr Monomial var(Var v, int power = 1) {
    return Monomial(shifted(static_cast<int>(v), power) | shifted(kNumVars, power));
  }
  static constexpr Monomial from_key(std::uint64_t k) { return Monomial(k); }

  constexpr std::uint64_t key() const { return key_; }
  constexpr int exponent(Var v) const { return field(static_cast<int>(v)); }
  constexpr int degree() const { return field(kNumVars); }
  constexpr bool is_one() const { return key_ == 0; }

  /// Each exponent of `d` is <= the matching exponent here.
  bool divisible_by(Monomial d) const;
  Monomial operator*(Monomial o) const;
  Monomial operator/(Monomial o) const;  // requires divisible_by(o)
  Monomial gcd(Monomial o) const;
  Monomial lcm(Monomial o) const;

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend constexpr auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

  std::string str() const;  // "m*m*D1", "1" for the unit monomial

private:
  constexpr explicit Monomial(std::uint64_t k) : key_(k) {}
  static constexpr std::uint64_t shifted(int slot, int power) {
    return static_cast<std::uint64_t>(power) << (8 * slot);
  }
  constexpr int field(int slot) const { return static_cast<int>((key_ >> (8 * slot)) & 0xffu); }

  std::uint64_t key_ = 0;
};

const char* var_name(Var v);

/// Sparse multivariate polynomial over the Gaussian rationals. Terms are kept
/// sorted by descending monomial with no zero coefficients.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    GaussianRational coef;
  };

  Polynomial() = default;
  Polynomial(GaussianRational c);
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}
  static Polynomial var(Var v, int power = 1);
  static Polynomial monomial(Monomial m, GaussianRational c = GaussianRational(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  GaussianRational constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  int degree(Var v) const;
  int total_degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

  Polynomial scaled(const GaussianRational& c) const;
  Polynomial times_monomial(Monomial m) const;
  Polynomial pow(int n) const;

  /// Exact quotient if `d` divides this polynomial, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  Polynomial divide_monomial(Monomial m) const;  // requires every term divisible

  Polynomial derivative(Var v) const;
  Polynomial conj() const;
  /// Substitutes v -> -v for every variable whose bit is set in `mask`.
  Polynomial flip_signs(unsigned mask) const;
  /// GCD of all term monomials.
  Monomial monomial_content() const;

  GaussianRational eval(const std::array<GaussianRational, kNumVars>& at) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  std::size_t hash() const;

  /// Canonical text, e.g. "m*m-D1*D1+(1/2)*D2". Zero renders as "0".
  std::string str() const;

private:
  void normalize();
  std::vector<Term> terms_;
};

}  // namespace ercd

#endif

#ifndef ERCD_RATIONAL_FUNCTION_HPP
#define ERCD_RATIONAL_FUNCTION_HPP

#include "ercd/polynomial.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ercd {

/// Quotient of polynomials in (m, D0..D3). The denominator is kept factored
/// as a monomial times powers of interned monic "atoms", so sums use an
/// LCM instead of multiplying denominators out. Atoms are not guaranteed
/// irreducible or pairwise coprime; equality is decided by cross
/// multiplication, which does not depend on the factorization.
class RationalFunction {
public:
  using AtomPowers = std::vector<std::pair<int, int>>;  // (atom id, exponent), sorted by id

  RationalFunction() = default;
  RationalFunction(Polynomial p) : num_(std::move(p)) {}
  RationalFunction(GaussianRational c) : num_(std::move(c)) {}
  RationalFunction(long c) : num_(c) {}
  static RationalFunction var(Var v) { return RationalFunction(Polynomial::var(v)); }
  static RationalFunction fraction(Polynomial num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  Monomial denominator_monomial() const { return den_mono_; }
  const AtomPowers& denominator_atoms() const { return den_atoms_; }
  Polynomial denominator() const;
  bool is_polynomial() const { return den_mono_.is_one() && den_atoms_.empty(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return (*this - RationalFunction(1)).is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator-(RationalFunction a) { a.num_ = -a.num_; return a; }

  RationalFunction inverse() const;
  RationalFunction derivative(Var v) const;
  RationalFunction conj() const;
  RationalFunction flip_signs(unsigned mask) const;

  /// Multiplies numerator by `f` and records the quotient `lcm/den`; helper
  /// for bringing several functions onto one denominator.
  struct CommonDenominator {
    Monomial mono;
    AtomPowers atoms;
    Polynomial expand() const;
  };
  static CommonDenominator lcm(const CommonDenominator& a, const CommonDenominator& b);
  CommonDenominator denominator_factors() const { return {den_mono_, den_atoms_}; }
  /// Numerator rescaled to sit over `common`, which must be a multiple of
  /// this function's denominator.
  Polynomial numerator_over(const CommonDenominator& common) const;

  GaussianRational eval(const std::array<GaussianRational, kNumVars>& at) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string str() const;

private:
  void cancel();
  static void cancel_pair(Polynomial& num, Monomial& den_mono, AtomPowers& den_atoms);

  Polynomial num_;
  Monomial den_mono_;
  AtomPowers den_atoms_;
};

namespace atoms {
/// Monic atom polynomial for an id.
const Polynomial& get(int id);
std::size_t count();
}  // namespace atoms

}  // namespace ercd

#endif

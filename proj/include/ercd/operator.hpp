#ifndef ERCD_OPERATOR_HPP
#define ERCD_OPERATOR_HPP

#include "ercd/eigen_support.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace ercd {

/// Exponents of the coordinate symbols X0..X3, one byte each.
class XPower {
public:
  constexpr XPower() = default;
  static constexpr XPower of(int mu, int power = 1) {
    XPower x;
    x.bits_ = static_cast<std::uint32_t>(power) << (8 * mu);
    return x;
  }
  constexpr int operator[](int mu) const { return static_cast<int>((bits_ >> (8 * mu)) & 0xffu); }
  constexpr bool is_one() const { return bits_ == 0; }
  constexpr XPower operator*(XPower o) const { return XPower(bits_ + o.bits_); }
  constexpr XPower operator/(XPower o) const { return XPower(bits_ - o.bits_); }
  constexpr std::uint32_t bits() const { return bits_; }
  friend constexpr auto operator<=>(XPower a, XPower b) = default;

  std::string str() const;  // "X0*X1*X1", "1" when empty

private:
  constexpr explicit XPower(std::uint32_t b) : bits_(b) {}
  std::uint32_t bits_ = 0;
};

/// Position of a term in normal order: X monomial on the left, matrix in the
/// middle, complex conjugation on the right when `conj` is set.
struct TermKey {
  XPower x;
  bool conj = false;
  friend constexpr auto operator<=>(const TermKey& a, const TermKey& b) = default;
};

struct XSymbolsPresent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Normal-ordered finite sum  sum_k X^{a_k} M_k C^{c_k}  with 4x4 matrices
/// over `Scalar`. Reordering rules:
///   C X = X C,  C f = conj(f) C,  C C = 1,  f X_mu = X_mu f + df/dD_mu.
template <typename Scalar>
class BasicOperator {
public:
  using Matrix = Matrix4<Scalar>;
  using TermMap = std::map<TermKey, Matrix>;

  BasicOperator() = default;
  explicit BasicOperator(const Matrix& m) { add_term({}, m); }
  BasicOperator(const Scalar& s) { add_term({}, scalar_matrix(s)); }

  static BasicOperator zero() { return {}; }
  static BasicOperator identity() { return BasicOperator(Scalar(1)); }
  static BasicOperator conjugation() {
    BasicOperator c;
    c.add_term({XPower(), true}, scalar_matrix(Scalar(1)));
    return c;
  }
  static BasicOperator coordinate(int mu) {
    BasicOperator c;
    c.add_term({XPower::of(mu), false}, scalar_matrix(Scalar(1)));
    return c;
  }
  static BasicOperator term(TermKey key, const Matrix& m) {
    BasicOperator c;
    c.add_term(key, m);
    return c;
  }
  static Matrix scalar_matrix(const Scalar& s) {
    Matrix m = Matrix::Constant(Scalar());
    for (int k = 0; k < 4; ++k) m(k, k) = s;
    return m;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_x_free() const {
    for (const auto& [key, m] : terms_)
      if (!key.x.is_one()) return false;
    return true;
  }
  bool is_linear() const {
    for (const auto& [key, m] : terms_)
      if (key.conj) return false;
    return true;
  }
  /// Matrix at a key; zero matrix when absent.
  Matrix part(TermKey key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Matrix::Constant(Scalar()) : it->second;
  }
  BasicOperator linear_part() const { return filtered(false); }
  BasicOperator antilinear_part() const { return filtered(true); }

  void add_term(TermKey key, const Matrix& m) {
    if (is_zero_matrix(m)) return;
    auto [it, inserted] = terms_.try_emplace(key, m);
    if (inserted) return;
    it->second += m;
    if (is_zero_matrix(it->second)) terms_.erase(it);
  }

  BasicOperator& operator+=(const BasicOperator& o) {
    for (const auto& [key, m] : o.terms_) add_term(key, m);
    return *this;
  }
  BasicOperator& operator-=(const BasicOperator& o) {
    for (const auto& [key, m] : o.terms_) add_term(key, -m);
    return *this;
  }
  friend BasicOperator operator+(BasicOperator a, const BasicOperator& b) { return a += b; }
  friend BasicOperator operator-(BasicOperator a, const BasicOperator& b) { return a -= b; }
  friend BasicOperator operator-(const BasicOperator& a) {
    BasicOperator r;
    for (const auto& [key, m] : a.terms_) r.terms_.emplace(key, -m);
    return r;
  }
  friend BasicOperator operator*(const BasicOperator& a, const BasicOperator& b) { return multiply(a, b); }
  BasicOperator& operator*=(const BasicOperator& o) { return *this = multiply(*this, o); }

  /// Scalar on the left: s * (X^a M C^c) = X^a (s M) C^c.
  friend BasicOperator operator*(const Scalar& s, const BasicOperator& a) {
    BasicOperator r;
    if (s.is_zero()) return r;
    for (const auto& [key, m] : a.terms_) r.add_term(key, map_entries(m, [&](const Scalar& x) { return s * x; }));
    return r;
  }

  friend bool operator==(const BasicOperator& a, const BasicOperator& b) { return (a - b).is_zero(); }
  friend bool operator!=(const BasicOperator& a, const BasicOperator& b) { return !(a == b); }

private:
  BasicOperator filtered(bool conj) const {
    BasicOperator r;
    for (const auto& [key, m] : terms_)
      if (key.conj == conj) r.terms_.emplace(key, m);
    return r;
  }

  static Matrix derivative(const Matrix& m, int mu, int times) {
    Matrix out = m;
    for (int t = 0; t < times; ++t) out = map_entries(out, [mu](const Scalar& x) { return dD(x, mu); });
    return out;
  }

  static long binomial(int n, int k) {
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
  }

  static BasicOperator multiply(const BasicOperator& a, const BasicOperator& b) {
    BasicOperator r;
    for (const auto& [ka, ma] : a.terms_) {
      for (const auto& [kb, mb] : b.terms_) {
        Matrix right = ka.conj ? map_entries(mb, [](const Scalar& x) { return conj(x); }) : mb;
        bool c = ka.conj != kb.conj;
        if (kb.x.is_one()) {
          r.add_term({ka.x, c}, sparse_product(ma, right));
          continue;
        }
        // f X^n = sum_k C(n,k) X^{n-k} d^k f, independently in each X_mu.
        std::array<int, 4> n{kb.x[0], kb.x[1], kb.x[2], kb.x[3]};
        std::array<int, 4> k{0, 0, 0, 0};
        for (;;) {
          Matrix left = ma;
          long coef = 1;
          XPower drop;
          for (int mu = 0; mu < 4; ++mu) {
            if (k[mu] == 0) continue;
            left = derivative(left, mu, k[mu]);
            coef *= binomial(n[mu], k[mu]);
            drop = drop * XPower::of(mu, k[mu]);
          }
          if (!is_zero_matrix(left)) {
            Matrix prod = sparse_product(left, right);
            if (coef != 1) prod = map_entries(prod, [coef](const Scalar& x) { return Scalar(coef) * x; });
            r.add_term({ka.x * (kb.x / drop), c}, prod);
          }
          int mu = 0;
          while (mu < 4 && ++k[mu] > n[mu]) k[mu++] = 0;
          if (mu == 4) break;
        }
      }
    }
    return r;
  }

  TermMap terms_;
};

template <typename Scalar>
BasicOperator<Scalar> commutator(const BasicOperator<Scalar>& a, const BasicOperator<Scalar>& b) {
  return a * b - b * a;
}

template <typename Scalar>
BasicOperator<Scalar> anticommutator(const BasicOperator<Scalar>& a, const BasicOperator<Scalar>& b) {
  return a * b + b * a;
}

/// Formal adjoint: X_mu^+ = X_mu, D_mu^+ = -D_mu, i^+ = -i, C^+ = C, and
/// (AB)^+ = B^+ A^+. Each normal-ordered term X^a M C^c maps to C^c M^+ X^a.
template <typename Scalar>
BasicOperator<Scalar> adjoint(const BasicOperator<Scalar>& a) {
  using Op = BasicOperator<Scalar>;
  Op r;
  for (const auto& [key, m] : a.terms()) {
    typename Op::Matrix h;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) h(i, j) = m(j, i).is_zero() ? Scalar() : scalar_adjoint(m(j, i));
    Op t(h);
    if (key.conj) t = Op::conjugation() * t;
    if (!key.x.is_one()) t = t * Op::term({key.x, false}, Op::scalar_matrix(Scalar(1)));
    r += t;
  }
  return r;
}

/// D_k -> -D_k (k = 1..3) on every matrix entry; X and C structure untouched.
template <typename Scalar>
BasicOperator<Scalar> parity(const BasicOperator<Scalar>& a) {
  BasicOperator<Scalar> r;
  for (const auto& [key, m] : a.terms()) r.add_term(key, map_entries(m, [](const Scalar& x) { return parity(x); }));
  return r;
}

/// Real 8x8 form of an X-free operator at a sample, acting on C^4 = R^8 as
/// (Re psi, Im psi). A linear matrix M = R + iJ maps to [[R,-J],[J,R]];
/// C maps to diag(I,-I).
template <typename Scalar>
RealMatrix8 realify(const BasicOperator<Scalar>& a, const Sample& s) {
  RealMatrix8 out = RealMatrix8::Constant(Rational(0));
  for (const auto& [key, m] : a.terms()) {
    if (!key.x.is_one()) throw XSymbolsPresent("realify requires an X-free operator");
    RealMatrix8 block = RealMatrix8::Constant(Rational(0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (m(i, j).is_zero()) continue;
        GaussianRational z = eval(m(i, j), s);
        block(i, j) = z.re;
        block(i + 4, j + 4) = z.re;
        block(i, j + 4) = -z.im;
        block(i + 4, j) = z.im;
      }
    if (key.conj) block.rightCols(4) = -block.rightCols(4).eval();
    out += block;
  }
  return out;
}

using Operator = BasicOperator<FieldElem>;
using Matrix = Operator::Matrix;

/// Canonical text: terms in (X power, C flag) order, each matrix expanded in
/// the gamma-product basis, e.g. "(1/2)*gamma0*gamma1" or "X1*D1+1".
std::string to_text(const Operator& a);

}  // namespace ercd

#endif

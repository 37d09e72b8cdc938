#ifndef ERCD_EIGEN_SUPPORT_HPP
#define ERCD_EIGEN_SUPPORT_HPP

#include "ercd/field.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<ercd::FieldElem> : GenericNumTraits<ercd::FieldElem> {
  using Real = ercd::FieldElem;
  using NonInteger = ercd::FieldElem;
  using Nested = ercd::FieldElem;
  using Literal = ercd::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ercd::Rational> : GenericNumTraits<ercd::Rational> {
  using Real = ercd::Rational;
  using NonInteger = ercd::Rational;
  using Nested = ercd::Rational;
  using Literal = ercd::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ercd {

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

using RealMatrix8 = Eigen::Matrix<Rational, 8, 8>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Zero-skipping product; the catalog matrices are mostly zero and scalar
/// multiplication dominates the cost.
template <typename Scalar>
Matrix4<Scalar> sparse_product(const Matrix4<Scalar>& a, const Matrix4<Scalar>& b) {
  Matrix4<Scalar> c = Matrix4<Scalar>::Constant(Scalar());
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

template <typename Scalar>
bool is_zero_matrix(const Matrix4<Scalar>& a) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

template <typename Scalar, typename F>
Matrix4<Scalar> map_entries(const Matrix4<Scalar>& a, F&& f) {
  Matrix4<Scalar> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = a(i, j).is_zero() ? Scalar() : f(a(i, j));
  return out;
}

/// Rank of a dense rational matrix by fraction-exact Gaussian elimination.
int exact_rank(RationalMatrix a);

/// Basis of the right null space {x : a x = 0}, one column per basis vector,
/// in reduced form (pivot-free variables set to unit vectors).
RationalMatrix exact_null_space(RationalMatrix a);

}  // namespace ercd

#endif

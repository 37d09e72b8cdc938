#include "ercd/eigen_support.hpp"

#include <vector>

namespace ercd {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RationalMatrix& a) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Rational inv = Rational(1) / a(r, c);
    for (int j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (int j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int exact_rank(RationalMatrix a) { return static_cast<int>(rref(a).size()); }

RationalMatrix exact_null_space(RationalMatrix a) {
  std::vector<int> pivots = rref(a);
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  RationalMatrix basis = RationalMatrix::Constant(cols, static_cast<int>(free_cols.size()), Rational(0));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    basis(fc, static_cast<int>(f)) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<int>(f)) = -a(static_cast<int>(r), fc);
  }
  return basis;
}

}  // namespace ercd

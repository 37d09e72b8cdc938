#include "ercd/operator.hpp"

#include <algorithm>
#include <vector>

namespace ercd {

std::string XPower::str() const {
  std::string out;
  for (int mu = 0; mu < 4; ++mu)
    for (int k = 0; k < (*this)[mu]; ++k) {
      if (!out.empty()) out += "*";
      out += "X" + std::to_string(mu);
    }
  return out.empty() ? "1" : out;
}

namespace {

// Subsets of {0,1,2,3} ordered by size then lexicographically.
const std::vector<unsigned>& gamma_subsets() {
  static const std::vector<unsigned> order = [] {
    std::vector<unsigned> v;
    for (int grade = 0; grade <= 4; ++grade)
      for (unsigned s = 0; s < 16; ++s)
        if (__builtin_popcount(s) == grade) v.push_back(s);
    // Within a grade, lexicographic order of index lists equals ascending
    // order of the reversed bit pattern; re-sort accordingly.
    std::stable_sort(v.begin(), v.end(), [](unsigned a, unsigned b) {
      int ga = __builtin_popcount(a), gb = __builtin_popcount(b);
      if (ga != gb) return ga < gb;
      for (int k = 0; k < 4; ++k) {
        bool ia = a & (1u << k), ib = b & (1u << k);
        if (ia != ib) return ia;
      }
      return false;
    });
    return v;
  }();
  return order;
}

Matrix gamma_matrix(int mu) {
  // Dirac-Pauli: gamma0 = diag(1,1,-1,-1), gamma_k = [[0, sigma_k], [-sigma_k, 0]].
  Matrix g = Matrix::Constant(FieldElem());
  FieldElem i = FieldElem::i();
  switch (mu) {
    case 0:
      g(0, 0) = 1; g(1, 1) = 1; g(2, 2) = -1; g(3, 3) = -1;
      break;
    case 1:
      g(0, 3) = 1; g(1, 2) = 1; g(2, 1) = -1; g(3, 0) = -1;
      break;
    case 2:
      g(0, 3) = -i; g(1, 2) = i; g(2, 1) = i; g(3, 0) = -i;
      break;
    case 3:
      g(0, 2) = 1; g(1, 3) = -1; g(2, 0) = -1; g(3, 1) = 1;
      break;
  }
  return g;
}

Matrix gamma_product(unsigned subset) {
  Matrix p = Operator::scalar_matrix(FieldElem(1));
  for (int mu = 0; mu < 4; ++mu)
    if (subset & (1u << mu)) p = sparse_product(p, gamma_matrix(mu));
  return p;
}

std::string gamma_name(unsigned subset) {
  std::string out;
  for (int mu = 0; mu < 4; ++mu)
    if (subset & (1u << mu)) {
      if (!out.empty()) out += "*";
      out += "gamma" + std::to_string(mu);
    }
  return out;
}

bool has_top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && k > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

std::vector<std::string> matrix_pieces(const Matrix& m) {
  std::vector<std::string> pieces;
  for (unsigned subset : gamma_subsets()) {
    Matrix g = gamma_product(subset);
    Matrix sq = sparse_product(g, g);
    // g^2 = +-1, so g^-1 = g^2 * g and the coefficient is tr(g^-1 M) / 4.
    Matrix ginv = sq(0, 0) == FieldElem(1) ? g : Matrix(-g);
    Matrix prod = sparse_product(ginv, m);
    FieldElem c = prod(0, 0) + prod(1, 1) + prod(2, 2) + prod(3, 3);
    if (c.is_zero()) continue;
    c = c * inv(FieldElem(4));
    std::string name = gamma_name(subset);
    std::string cs = c.str();
    if (name.empty()) {
      pieces.push_back(cs);
    } else if (c == FieldElem(1)) {
      pieces.push_back(name);
    } else if (c == FieldElem(-1)) {
      pieces.push_back("-" + name);
    } else if (has_top_level_sum(cs)) {
      pieces.push_back("(" + cs + ")*" + name);
    } else if (cs.rfind("(-", 0) == 0 || cs[0] == '-') {
      std::string pos = (-c).str();
      pieces.push_back("-" + (has_top_level_sum(pos) ? "(" + pos + ")" : pos) + "*" + name);
    } else {
      pieces.push_back(cs + "*" + name);
    }
  }
  return pieces;
}

}  // namespace

namespace detail {
Matrix dirac_gamma(int mu) { return gamma_matrix(mu); }
}  // namespace detail

std::string to_text(const Operator& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [key, m] : a.terms()) {
    std::vector<std::string> pieces = matrix_pieces(m);
    std::string sum;
    for (const auto& p : pieces) {
      if (!sum.empty() && p[0] != '-') sum += "+";
      sum += p;
    }
    std::string prefix = key.x.is_one() ? "" : key.x.str();
    std::string suffix = key.conj ? "C" : "";
    std::string text;
    if (prefix.empty() && suffix.empty()) {
      text = sum;
    } else {
      std::string body = sum;
      bool negative = false;
      if (pieces.size() == 1 && !has_top_level_sum(body)) {
        if (body[0] == '-') {
          negative = true;
          body = body.substr(1);
        }
      } else {
        body = "(" + body + ")";
      }
      std::vector<std::string> factors;
      if (!prefix.empty()) factors.push_back(prefix);
      if (body != "1") factors.push_back(body);
      if (!suffix.empty()) factors.push_back(suffix);
      for (const auto& f : factors) text += (text.empty() ? "" : "*") + f;
      if (negative) text = "-" + text;
    }
    if (!out.empty() && text[0] != '-') out += "+";
    out += text;
  }
  return out;
}

}  // namespace ercd

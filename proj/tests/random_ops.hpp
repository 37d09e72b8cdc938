#ifndef ERCD_TESTS_RANDOM_OPS_HPP
#define ERCD_TESTS_RANDOM_OPS_HPP

#include "ercd/catalog.hpp"
#include "random_elems.hpp"

namespace ercd::testing {

/// Random operators built from the ERCD basis, a few scalar symbols and
/// optionally the coordinates X_mu.
class OpGen {
public:
  explicit OpGen(unsigned seed) : gen_(seed), basis_(catalog::ercd_basis()) {}

  FieldElem scalar() {
    FieldElem m = FieldElem::var(Var::M), w = FieldElem::omega();
    switch (gen_.uniform(0, 7)) {
      case 0: return FieldElem(gen_.gauss().is_zero() ? GaussianRational(1) : gen_.gauss());
      case 1: return FieldElem::i();
      case 2: return FieldElem::var(static_cast<Var>(gen_.uniform(0, 3)));
      case 3: return w;
      case 4: return m;
      case 5: return inv(w + m);
      case 6: return FieldElem::var(static_cast<Var>(gen_.uniform(1, 3))) * w;
      default: return FieldElem(2) * w + FieldElem::i() * m;
    }
  }

  Operator term(bool with_x) {
    Operator t = scalar() * basis_[static_cast<std::size_t>(gen_.uniform(0, 63))];
    if (with_x && gen_.uniform(0, 2) == 0) t = Operator::coordinate(gen_.uniform(0, 3)) * t;
    return t;
  }

  Operator op(bool with_x, int max_terms = 3) {
    Operator a;
    int n = gen_.uniform(1, max_terms);
    for (int k = 0; k < n; ++k) a += term(with_x);
    return a;
  }

  /// D-free constant operator (Gaussian coefficients only).
  Operator constant() {
    Operator a;
    int n = gen_.uniform(1, 3);
    for (int k = 0; k < n; ++k) a += FieldElem(gen_.gauss()) * basis_[static_cast<std::size_t>(gen_.uniform(0, 63))];
    return a;
  }

  Gen& base() { return gen_; }

private:
  Gen gen_;
  std::vector<Operator> basis_;
};

}  // namespace ercd::testing

#endif

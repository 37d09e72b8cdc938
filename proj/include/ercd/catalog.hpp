#ifndef ERCD_CATALOG_HPP
#define ERCD_CATALOG_HPP

#include "ercd/operator.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ercd {

/// Sign and index conventions that the source formulas leave implicit.
struct Conventions {
  enum class PForm { Momentum, Derivative };          // p_k = -i D_k  |  p_k = D_k
  enum class BoostCoordinate { Covariant, Contravariant };  // x_k = -X_k  |  x_k = X_k

  PForm p_form = PForm::Momentum;
  BoostCoordinate boost_coordinate = BoostCoordinate::Covariant;
  int translation_sign = -1;  // epsilon in [j_mn, p_r] = epsilon (g_mr p_n - g_nr p_m)
  int levi_civita = 1;        // sign of epsilon^{0123}

  std::string p_form_name() const { return p_form == PForm::Momentum ? "momentum" : "derivative"; }
  std::string boost_name() const { return boost_coordinate == BoostCoordinate::Covariant ? "covariant" : "contravariant"; }
  std::string str() const;
  friend bool operator==(const Conventions&, const Conventions&) = default;

  /// All 16 assignments, in enumeration order.
  static std::vector<Conventions> all();
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

enum class SetKind { SO6, SO15, SO13, Poincare };

/// Named family of operators. Rotation-type members carry an antisymmetric
/// index pair, translation-type members a single index.
struct GeneratorSet {
  std::string name;
  SetKind kind = SetKind::SO13;
  std::vector<int> indices;  // allowed index values, e.g. {1..6} or {0..3}
  std::vector<int> metric;   // diagonal signature, parallel to `indices`
  std::map<std::pair<int, int>, Operator> rotations;  // key (a, b) with a < b
  std::map<int, Operator> translations;
  std::vector<std::pair<std::string, Operator>> central;  // e.g. identity, eps

  Operator rot(int a, int b) const;
  const Operator& trans(int a) const;
  int g(int a) const;  // metric entry for index value a
  std::size_t size() const { return rotations.size() + translations.size(); }
  /// Members in canonical order with display labels like "j01" or "p2".
  std::vector<std::pair<std::string, Operator>> members() const;
};

/// Similarity transform stored without square roots: N * N_inv = n * 1.
struct NormalizedConjugator {
  std::string name;
  Operator n_op;
  Operator n_inv;
  FieldElem n;
};

enum class Flavor { Fermi, TensorScalar };

namespace catalog {

/// gamma_0..gamma_3 Dirac-Pauli, gamma_4 = g0 g1 g2 g3, gamma_5 = g1 g3 C,
/// gamma_6 = i g1 g3 C.
Operator gamma(int idx);
Operator conjugation();
Operator epsilon_hat();  // i gamma_0

Operator cd_generator(int a, int b);  // s_ab, indices 0..5
GeneratorSet cd_basis();              // 15 generators plus the identity
std::vector<Operator> ercd_basis();   // {e, i e, C e, i C e} for e in cd_basis
std::vector<std::string> ercd_labels();

Operator so6_gen(int a, int b);  // indices 1..6
GeneratorSet so6_set();
std::vector<Operator> a32_basis();  // 15 s_AB, 15 eps s_AB, eps, identity
std::vector<std::string> a32_labels();

Operator sI(int mu, int nu);
Operator sII(int mu, int nu);
Operator sTS(int mu, int nu);
Operator sV(int mu, int nu);
GeneratorSet lorentz_set(const std::string& family);  // "sI", "sII", "sTS", "sV"

NormalizedConjugator W_conjugator();
NormalizedConjugator V_conjugator(const Conventions& c);

Operator momentum_component(int k, const Conventions& c);  // p_k per the p-form
Operator dirac_hamiltonian(const Conventions& c);          // gamma0 (gamma.p + m)
Operator fw_operator();                                    // i D0 - gamma0 w
Operator dirac_operator(const Conventions& c);             // i D0 - H_D

Operator shat(int mu, int nu, const Conventions& c);
GeneratorSet fw_genset(Flavor flavor, const Conventions& c);
GeneratorSet dirac_genset(Flavor flavor, const Conventions& c);

/// Looks up a parameterless catalog name ("gamma5", "eps", "HD", ...).
/// Returns false if the name is unknown.
bool lookup(const std::string& name, const Conventions& c, Operator& out);
/// Source anchor for the show command.
std::string anchor(const std::string& name);

}  // namespace catalog

}  // namespace ercd

#endif

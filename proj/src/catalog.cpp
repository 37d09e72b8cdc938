#include "ercd/catalog.hpp"

#include <array>

namespace ercd {

namespace detail {
Matrix dirac_gamma(int mu);
}

std::string Conventions::str() const {
  return "p-form=" + p_form_name() + " boost-x=" + boost_name() +
         " translation-sign=" + std::to_string(translation_sign) + " levi-civita=" + std::to_string(levi_civita);
}

std::vector<Conventions> Conventions::all() {
  std::vector<Conventions> out;
  for (PForm p : {PForm::Momentum, PForm::Derivative})
    for (BoostCoordinate b : {BoostCoordinate::Covariant, BoostCoordinate::Contravariant})
      for (int eps : {1, -1})
        for (int lc : {1, -1}) out.push_back(Conventions{p, b, eps, lc});
  return out;
}

Operator GeneratorSet::rot(int a, int b) const {
  if (a == b) return Operator();
  bool flip = a > b;
  auto it = rotations.find(flip ? std::pair{b, a} : std::pair{a, b});
  if (it == rotations.end()) throw IndexError(name + ": no generator (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return flip ? -it->second : it->second;
}

const Operator& GeneratorSet::trans(int a) const {
  auto it = translations.find(a);
  if (it == translations.end()) throw IndexError(name + ": no translation " + std::to_string(a));
  return it->second;
}

int GeneratorSet::g(int a) const {
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (indices[k] == a) return metric[k];
  throw IndexError(name + ": index " + std::to_string(a) + " out of range");
}

std::vector<std::pair<std::string, Operator>> GeneratorSet::members() const {
  std::vector<std::pair<std::string, Operator>> out;
  std::string rot_prefix = kind == SetKind::Poincare ? "j" : "s";
  for (const auto& [key, op] : rotations)
    out.emplace_back(rot_prefix + std::to_string(key.first) + std::to_string(key.second), op);
  for (const auto& [key, op] : translations) out.emplace_back("p" + std::to_string(key), op);
  return out;
}

namespace catalog {

namespace {

FieldElem half() { return inv(FieldElem(2)); }
FieldElem quarter() { return inv(FieldElem(4)); }
FieldElem i_unit() { return FieldElem::i(); }
FieldElem w() { return FieldElem::omega(); }
FieldElem mass() { return FieldElem::var(Var::M); }
FieldElem dsym(int mu) { return FieldElem::var(static_cast<Var>(mu)); }

void check_lorentz_pair(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3 || mu == nu)
    throw IndexError("Lorentz index pair (" + std::to_string(mu) + "," + std::to_string(nu) + ") invalid");
}

// (i/2) g2 C, etc. Entries of the second spin realization, keyed (a,b) a<b.
Operator sII_stored(int a, int b) {
  Operator g0 = gamma(0), g2 = gamma(2), C = conjugation();
  if (a == 0 && b == 1) return (half() * i_unit()) * (g2 * C);
  if (a == 0 && b == 2) return -(half() * (g2 * C));
  if (a == 0 && b == 3) return -(half() * g0);
  if (a == 1 && b == 2) return Operator(half() * i_unit());
  if (a == 1 && b == 3) return -((half() * i_unit()) * (g0 * g2 * C));  // s31 = (i/2) g0 g2 C
  if (a == 2 && b == 3) return half() * (g0 * g2 * C);
  throw IndexError("sII index");
}

Operator shat_stored(int a, int b, const Conventions& c) {
  Operator g2C = gamma(2) * conjugation();
  Operator hd = dirac_hamiltonian(c);
  FieldElem inv_2w = inv(FieldElem(2) * w());
  if (a == 0 && b == 1) return (half() * i_unit()) * g2C;
  if (a == 0 && b == 2) return -(half() * g2C);
  if (a == 0 && b == 3) return -(inv_2w * hd);
  if (a == 1 && b == 2) return Operator(half() * i_unit());
  if (a == 1 && b == 3) return -((i_unit() * inv_2w) * (hd * g2C));  // s31 = (i H_D / 2w) g2 C
  if (a == 2 && b == 3) return inv_2w * (hd * g2C);
  throw IndexError("shat index");
}

Operator antisym(int mu, int nu, Operator (*stored)(int, int)) {
  return mu < nu ? stored(mu, nu) : -stored(nu, mu);
}

// Spatial epsilon_{kab} for k,a,b in 1..3.
int levi3(int k, int a, int b) {
  if (k == a || a == b || k == b) return 0;
  int perm[3] = {k, a, b};
  int inversions = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y)
      if (perm[x] > perm[y]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Operator orbital(int l, int n, int x_sign) {
  // x_l d_n - x_n d_l with x_l = x_sign * X_l
  return FieldElem(x_sign) * (Operator::coordinate(l) * Operator(dsym(n)) - Operator::coordinate(n) * Operator(dsym(l)));
}

GeneratorSet poincare_shell(const std::string& name) {
  GeneratorSet set;
  set.name = name;
  set.kind = SetKind::Poincare;
  set.indices = {0, 1, 2, 3};
  set.metric = {1, -1, -1, -1};
  return set;
}

int boost_x_sign(const Conventions& c) {
  return c.boost_coordinate == Conventions::BoostCoordinate::Covariant ? -1 : 1;
}

}  // namespace

Operator conjugation() { return Operator::conjugation(); }

Operator gamma(int idx) {
  switch (idx) {
    case 0:
    case 1:
    case 2:
    case 3:
      return Operator(detail::dirac_gamma(idx));
    case 4:
      return gamma(0) * gamma(1) * gamma(2) * gamma(3);
    case 5:
      return gamma(1) * gamma(3) * conjugation();
    case 6:
      return i_unit() * (gamma(1) * gamma(3) * conjugation());
    default:
      throw IndexError("gamma index " + std::to_string(idx) + " outside 0..6");
  }
}

Operator epsilon_hat() { return i_unit() * gamma(0); }

Operator cd_generator(int a, int b) {
  if (a < 0 || a > 5 || b < 0 || b > 5) throw IndexError("cd generator index outside 0..5");
  if (a == b) throw IndexError("cd generator needs distinct indices");
  if (b == 5) return half() * gamma(a);
  if (a == 5) return -(half() * gamma(b));
  return quarter() * commutator(gamma(a), gamma(b));
}

GeneratorSet cd_basis() {
  GeneratorSet set;
  set.name = "indCD";
  set.kind = SetKind::SO15;
  set.indices = {0, 1, 2, 3, 4, 5};
  set.metric = {1, -1, -1, -1, -1, -1};
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) set.rotations.emplace(std::pair{a, b}, cd_generator(a, b));
  set.central.emplace_back("1", Operator::identity());
  return set;
}

std::vector<Operator> ercd_basis() {
  GeneratorSet cd = cd_basis();
  std::vector<Operator> base{Operator::identity()};
  for (const auto& [key, op] : cd.rotations) base.push_back(op);
  std::vector<Operator> out;
  Operator C = conjugation();
  for (const auto& e : base) out.push_back(e);
  for (const auto& e : base) out.push_back(i_unit() * e);
  for (const auto& e : base) out.push_back(C * e);
  for (const auto& e : base) out.push_back(i_unit() * (C * e));
  return out;
}

std::vector<std::string> ercd_labels() {
  std::vector<std::string> base{"1"};
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) base.push_back("s(" + std::to_string(a) + "," + std::to_string(b) + ")");
  std::vector<std::string> out;
  for (const auto& e : base) out.push_back(e);
  for (const auto& e : base) out.push_back("i*" + e);
  for (const auto& e : base) out.push_back("C*" + e);
  for (const auto& e : base) out.push_back("i*C*" + e);
  return out;
}

Operator so6_gen(int a, int b) {
  if (a < 1 || a > 6 || b < 1 || b > 6) throw IndexError("SO(6) index outside 1..6");
  if (a == b) throw IndexError("SO(6) generator needs distinct indices");
  return quarter() * commutator(gamma(a), gamma(b));
}

GeneratorSet so6_set() {
  GeneratorSet set;
  set.name = "so6";
  set.kind = SetKind::SO6;
  set.indices = {1, 2, 3, 4, 5, 6};
  set.metric = {-1, -1, -1, -1, -1, -1};
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) set.rotations.emplace(std::pair{a, b}, so6_gen(a, b));
  set.central.emplace_back("eps", epsilon_hat());
  return set;
}

std::vector<Operator> a32_basis() {
  std::vector<Operator> out;
  Operator eps = epsilon_hat();
  GeneratorSet so6 = so6_set();
  for (const auto& [key, op] : so6.rotations) out.push_back(op);
  for (const auto& [key, op] : so6.rotations) out.push_back(eps * op);
  out.push_back(eps);
  out.push_back(Operator::identity());
  return out;
}

std::vector<std::string> a32_labels() {
  std::vector<std::string> out;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) out.push_back("s(" + std::to_string(a) + "," + std::to_string(b) + ")");
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) out.push_back("eps*s(" + std::to_string(a) + "," + std::to_string(b) + ")");
  out.push_back("eps");
  out.push_back("1");
  return out;
}

Operator sI(int mu, int nu) {
  check_lorentz_pair(mu, nu);
  if (nu == 0) return -sI(nu, mu);
  if (mu == 0) return (half() * i_unit()) * (gamma(nu) * gamma(4));
  return quarter() * commutator(gamma(mu), gamma(nu));
}

Operator sII(int mu, int nu) {
  check_lorentz_pair(mu, nu);
  return antisym(mu, nu, &sII_stored);
}

Operator sTS(int mu, int nu) { return sI(mu, nu) + sII(mu, nu); }

Operator sV(int mu, int nu) {
  check_lorentz_pair(mu, nu);
  if (mu == 0 || nu == 0) return -sI(mu, nu) + sII(mu, nu);
  return sTS(mu, nu);
}

GeneratorSet lorentz_set(const std::string& family) {
  Operator (*f)(int, int) = nullptr;
  if (family == "sI") f = &sI;
  else if (family == "sII") f = &sII;
  else if (family == "sTS") f = &sTS;
  else if (family == "sV") f = &sV;
  else throw std::invalid_argument("unknown Lorentz family " + family);
  GeneratorSet set;
  set.name = family;
  set.kind = SetKind::SO13;
  set.indices = {0, 1, 2, 3};
  set.metric = {1, -1, -1, -1};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) set.rotations.emplace(std::pair{a, b}, f(a, b));
  return set;
}

NormalizedConjugator W_conjugator() {
  FieldElem i = i_unit();
  Matrix lin = Operator::scalar_matrix(FieldElem());
  Matrix anti = lin;
  // sqrt(2) W: rows (0,-1,0,C), (0,i,0,iC), (-1,0,C,0), (-1,0,-C,0)
  lin(0, 1) = -1; anti(0, 3) = 1;
  lin(1, 1) = i;  anti(1, 3) = i;
  lin(2, 0) = -1; anti(2, 2) = 1;
  lin(3, 0) = -1; anti(3, 2) = -1;
  Matrix lin_inv = Operator::scalar_matrix(FieldElem());
  Matrix anti_inv = lin_inv;
  // sqrt(2) W^-1: rows (0,0,-1,-1), (-1,-i,0,0), (0,0,C,-C), (C,iC,0,0)
  lin_inv(0, 2) = -1; lin_inv(0, 3) = -1;
  lin_inv(1, 0) = -1; lin_inv(1, 1) = -i;
  anti_inv(2, 2) = 1; anti_inv(2, 3) = -1;
  anti_inv(3, 0) = 1; anti_inv(3, 1) = i;
  NormalizedConjugator w;
  w.name = "W";
  w.n_op = Operator(lin) + Operator(anti) * conjugation();
  w.n_inv = Operator(lin_inv) + Operator(anti_inv) * conjugation();
  w.n = FieldElem(2);
  return w;
}

Operator momentum_component(int k, const Conventions& c) {
  if (k < 1 || k > 3) throw IndexError("momentum component outside 1..3");
  if (c.p_form == Conventions::PForm::Momentum) return Operator(-(i_unit() * dsym(k)));
  return Operator(dsym(k));
}

NormalizedConjugator V_conjugator(const Conventions& c) {
  Operator n = Operator(w() + mass());
  for (int k = 1; k <= 3; ++k) n += gamma(k) * momentum_component(k, c);
  NormalizedConjugator v;
  v.name = "V";
  v.n_op = n;
  v.n_inv = parity(n);
  v.n = FieldElem(2) * w() * (w() + mass());
  return v;
}

Operator dirac_hamiltonian(const Conventions& c) {
  Operator inner = Operator(mass());
  for (int k = 1; k <= 3; ++k) inner += gamma(k) * momentum_component(k, c);
  return gamma(0) * inner;
}

Operator fw_operator() { return Operator(i_unit() * dsym(0)) - gamma(0) * Operator(w()); }

Operator dirac_operator(const Conventions& c) { return Operator(i_unit() * dsym(0)) - dirac_hamiltonian(c); }

Operator shat(int mu, int nu, const Conventions& c) {
  check_lorentz_pair(mu, nu);
  return mu < nu ? shat_stored(mu, nu, c) : -shat_stored(nu, mu, c);
}

GeneratorSet fw_genset(Flavor flavor, const Conventions& c) {
  bool ts = flavor == Flavor::TensorScalar;
  GeneratorSet set = poincare_shell(ts ? "fw-ts" : "fw-fermi");
  auto spin = [ts](int a, int b) { return ts ? sTS(a, b) : sI(a, b); };
  Operator ieps = epsilon_hat();  // i gamma0
  set.translations.emplace(0, -(ieps * Operator(w())));
  for (int n = 1; n <= 3; ++n) set.translations.emplace(n, Operator(dsym(n)));
  for (int l = 1; l <= 3; ++l)
    for (int n = l + 1; n <= 3; ++n) set.rotations.emplace(std::pair{l, n}, orbital(l, n, -1) + spin(l, n));
  // Rotation spin vector (s23, s31, s12).
  std::array<Operator, 4> svec{Operator(), spin(2, 3), spin(3, 1), spin(1, 2)};
  int xs = boost_x_sign(c);
  FieldElem inv_wm = inv(w() + mass());
  FieldElem inv_2w = inv(FieldElem(2) * w());
  for (int k = 1; k <= 3; ++k) {
    Operator inner = FieldElem(xs) * (Operator::coordinate(k) * Operator(w())) + Operator(dsym(k) * inv_2w);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        int e = levi3(k, a, b);
        if (e == 0) continue;
        inner += FieldElem(e) * (svec[a] * Operator(dsym(b) * inv_wm));
      }
    Operator boost = Operator::coordinate(0) * Operator(dsym(k)) + ieps * inner;
    set.rotations.emplace(std::pair{0, k}, boost);
  }
  return set;
}

GeneratorSet dirac_genset(Flavor flavor, const Conventions& c) {
  bool ts = flavor == Flavor::TensorScalar;
  GeneratorSet set = poincare_shell(ts ? "dirac" : "dirac-fermi");
  Operator p0 = -(i_unit() * dirac_hamiltonian(c));
  set.translations.emplace(0, p0);
  for (int n = 1; n <= 3; ++n) set.translations.emplace(n, Operator(dsym(n)));
  for (int k = 1; k <= 3; ++k)
    for (int l = k + 1; l <= 3; ++l) {
      Operator j = orbital(k, l, -1) + quarter() * commutator(gamma(k), gamma(l));
      if (ts) j += shat(k, l, c);
      set.rotations.emplace(std::pair{k, l}, j);
    }
  int xs = boost_x_sign(c);
  FieldElem inv_wm = inv(w() + mass());
  for (int k = 1; k <= 3; ++k) {
    // x0 d_k - x_k p0 + s_0k, with x_k and gamma_k carrying the same index placement.
    Operator j = Operator::coordinate(0) * Operator(dsym(k)) - FieldElem(xs) * (Operator::coordinate(k) * p0) +
                 FieldElem(xs) * (half() * (gamma(0) * gamma(k)));
    if (ts) {
      for (int l = 1; l <= 3; ++l)
        for (int n = 1; n <= 3; ++n) {
          int e = levi3(k, l, n);
          if (e == 0) continue;
          j += FieldElem(e) * (shat(0, l, c) * Operator(dsym(n) * inv_wm));
        }
    }
    set.rotations.emplace(std::pair{0, k}, j);
  }
  return set;
}

bool lookup(const std::string& name, const Conventions& c, Operator& out) {
  if (name.size() == 6 && name.rfind("gamma", 0) == 0 && name[5] >= '0' && name[5] <= '6') {
    out = gamma(name[5] - '0');
    return true;
  }
  if (name.size() == 2 && (name[0] == 'D' || name[0] == 'X') && name[1] >= '0' && name[1] <= '3') {
    int mu = name[1] - '0';
    out = name[0] == 'D' ? Operator(dsym(mu)) : Operator::coordinate(mu);
    return true;
  }
  if (name == "eps") out = epsilon_hat();
  else if (name == "C") out = conjugation();
  else if (name == "i") out = Operator(i_unit());
  else if (name == "m") out = Operator(mass());
  else if (name == "w") out = Operator(w());
  else if (name == "I") out = Operator::identity();
  else if (name == "HD") out = dirac_hamiltonian(c);
  else if (name == "Lfw") out = fw_operator();
  else if (name == "Ldirac") out = dirac_operator(c);
  else if (name == "W") out = W_conjugator().n_op;
  else if (name == "Winv") out = W_conjugator().n_inv;
  else if (name == "V") out = V_conjugator(c).n_op;
  else if (name == "Vinv") out = V_conjugator(c).n_inv;
  else return false;
  return true;
}

std::string anchor(const std::string& name) {
  static const std::map<std::string, std::string> defs = {
      {"gamma0", "Dirac-Pauli gamma0 = diag(1,1,-1,-1)"},
      {"gamma1", "Dirac-Pauli gamma1 = [[0,sigma1],[-sigma1,0]]"},
      {"gamma2", "Dirac-Pauli gamma2 = [[0,sigma2],[-sigma2,0]]"},
      {"gamma3", "Dirac-Pauli gamma3 = [[0,sigma3],[-sigma3,0]]"},
      {"gamma4", "gamma4 = gamma0*gamma1*gamma2*gamma3"},
      {"gamma5", "gamma5 = gamma1*gamma3*C"},
      {"gamma6", "gamma6 = i*gamma1*gamma3*C"},
      {"eps", "eps = i*gamma0 = -gamma1*gamma2*gamma3*gamma4*gamma5*gamma6"},
      {"C", "complex conjugation"},
      {"HD", "H_D = gamma0*(gamma.p + m)"},
      {"Lfw", "Foldy-Wouthuysen operator i*D0 - gamma0*w"},
      {"Ldirac", "Dirac operator i*D0 - H_D"},
      {"W", "sqrt(2)*W, normalizer 2"},
      {"Winv", "sqrt(2)*W^-1, normalizer 2"},
      {"V", "gamma.p + w + m, normalizer 2*w*(w+m)"},
      {"Vinv", "V with p -> -p, normalizer 2*w*(w+m)"},
  };
  auto it = defs.find(name);
  return it == defs.end() ? "" : it->second;
}

}  // namespace catalog

}  // namespace ercd

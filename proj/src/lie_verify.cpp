#include "ercd/lie_verify.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace ercd {

namespace {

using Key = std::pair<int, int>;  // rotation (a, b) or translation (r, -1)

bool is_translation(Key k) { return k.second < 0; }

std::string label(const GeneratorSet& gens, Key k) {
  if (is_translation(k)) return "p" + std::to_string(k.first);
  std::string prefix = gens.kind == SetKind::Poincare ? "j" : "s";
  return prefix + std::to_string(k.first) + std::to_string(k.second);
}

const Operator& member(const GeneratorSet& gens, Key k) {
  if (is_translation(k)) return gens.trans(k.first);
  return gens.rotations.at(k);
}

std::vector<Key> keys(const GeneratorSet& gens) {
  std::vector<Key> out;
  for (const auto& [k, op] : gens.rotations) out.push_back(k);
  for (const auto& [r, op] : gens.translations) out.emplace_back(r, -1);
  return out;
}

FieldElem metric(const GeneratorSet& gens, const StructureSpec& spec, int x, int y) {
  if (x != y) return FieldElem();
  if (spec.kind == StructureSpec::Kind::SO6Delta) return FieldElem(1);
  return FieldElem(gens.g(x));
}

void validate(const GeneratorSet& gens, const StructureSpec& spec) {
  bool poincare = spec.kind == StructureSpec::Kind::Poincare;
  if (poincare != (gens.kind == SetKind::Poincare))
    throw IndexMismatch(gens.name + ": generator set does not match the structure kind");
  if (!poincare && !gens.translations.empty()) throw IndexMismatch(gens.name + ": unexpected translations");
  if (gens.metric.size() != gens.indices.size()) throw IndexMismatch(gens.name + ": metric length");
  for (const auto& [k, op] : gens.rotations) {
    gens.g(k.first);
    gens.g(k.second);
  }
}

Matrix d0_coefficient(const Matrix& m) { return map_entries(m, [](const FieldElem& x) { return dD(x, 0); }); }

const Matrix& gamma0_matrix() {
  static const Matrix g = catalog::gamma(0).part({});
  return g;
}

std::string conventions_line(const std::optional<Conventions>& c) { return c ? c->str() : "none"; }

}  // namespace

bool CheckReport::passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::size_t CheckReport::count(const std::string& status) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == status;
  return n;
}

void CheckReport::add(std::string name, bool ok, std::string lhs, std::string rhs, std::string residual) {
  checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(lhs), std::move(rhs), std::move(residual)});
}

void CheckReport::info(std::string name, std::string lhs, std::string rhs) {
  checks.push_back({std::move(name), "info", std::move(lhs), std::move(rhs), ""});
}

void CheckReport::expect_equal(std::string name, const Operator& lhs, const Operator& rhs) {
  Operator diff = lhs - rhs;
  add(std::move(name), diff.is_zero(), ercd::to_text(lhs), ercd::to_text(rhs), diff.is_zero() ? "" : ercd::to_text(diff));
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

std::string CheckReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  if (conventions) {
    j["conventions"] = {{"p_form", conventions->p_form_name()},
                        {"boost_coordinate", conventions->boost_name()},
                        {"translation_sign", conventions->translation_sign},
                        {"levi_civita", conventions->levi_civita}};
  } else {
    j["conventions"] = nullptr;
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"residual", c.residual}});
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  else j["elapsed_ms"] = nullptr;
  return j.dump(2) + "\n";
}

std::string CheckReport::to_markdown(bool with_timing) const {
  auto cell = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '|') out += "\\|";
      else out += ch;
    }
    return out;
  };
  std::ostringstream os;
  os << "# " << suite << "\n\n";
  os << "conventions: " << conventions_line(conventions) << "\n\n";
  os << "| check | status | lhs | rhs | residual |\n|---|---|---|---|---|\n";
  for (const auto& c : checks)
    os << "| " << cell(c.name) << " | " << c.status << " | " << cell(c.lhs) << " | " << cell(c.rhs) << " | "
       << cell(c.residual) << " |\n";
  os << "\n" << count("pass") << " passed, " << count("fail") << " failed, " << count("info") << " info\n";
  if (with_timing) os << "elapsed: " << elapsed_ms << " ms\n";
  return os.str();
}

std::string CheckReport::to_text(bool with_timing) const {
  std::ostringstream os;
  os << "suite " << suite << "\nconventions: " << conventions_line(conventions) << "\n";
  for (const auto& c : checks) {
    std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "INFO";
    os << tag << "  " << c.name;
    if (c.status == "info") os << ": " << c.lhs << (c.rhs.empty() ? "" : " (" + c.rhs + ")");
    os << "\n";
    if (c.status == "fail") {
      os << "      lhs: " << c.lhs << "\n      rhs: " << c.rhs << "\n";
      if (!c.residual.empty()) os << "      residual: " << c.residual << "\n";
    }
  }
  os << count("pass") << " passed, " << count("fail") << " failed\n";
  if (with_timing) os << "elapsed: " << elapsed_ms << " ms\n";
  return os.str();
}

Operator expected_bracket(const GeneratorSet& gens, const StructureSpec& spec, Key a, Key b) {
  bool ta = is_translation(a), tb = is_translation(b);
  if (ta && tb) return Operator();
  if (ta) return -expected_bracket(gens, spec, b, a);
  auto g = [&](int x, int y) { return metric(gens, spec, x, y); };
  auto s = [&](int x, int y) { return gens.rot(x, y); };
  auto [m, n] = a;
  if (tb) {
    int r = b.first;
    FieldElem eps(spec.epsilon_translation);
    Operator out;
    if (!g(m, r).is_zero()) out += (eps * g(m, r)) * gens.trans(n);
    if (!g(n, r).is_zero()) out -= (eps * g(n, r)) * gens.trans(m);
    return out;
  }
  auto [r, q] = b;
  Operator out;
  auto term = [&](const FieldElem& coef, int x, int y) {
    if (!coef.is_zero() && x != y) out += coef * s(x, y);
  };
  if (spec.kind == StructureSpec::Kind::SO6Delta) {
    term(g(m, r), n, q);
    term(g(r, n), q, m);
    term(g(n, q), m, r);
    term(g(q, m), r, n);
  } else {
    term(-g(m, r), n, q);
    term(-g(r, n), q, m);
    term(-g(n, q), m, r);
    term(-g(q, m), r, n);
  }
  return out;
}

namespace {

CheckReport structure_impl(const GeneratorSet& gens, const StructureSpec& spec, bool stop_on_failure) {
  validate(gens, spec);
  CheckReport report;
  report.suite = gens.name;
  std::vector<Key> ks = keys(gens);
  for (std::size_t x = 0; x < ks.size(); ++x)
    for (std::size_t y = x + 1; y < ks.size(); ++y) {
      Operator lhs = commutator(member(gens, ks[x]), member(gens, ks[y]));
      Operator rhs = expected_bracket(gens, spec, ks[x], ks[y]);
      report.expect_equal("[" + label(gens, ks[x]) + "," + label(gens, ks[y]) + "]", lhs, rhs);
      if (stop_on_failure && !report.passed()) return report;
    }
  return report;
}

}  // namespace

CheckReport check_structure(const GeneratorSet& gens, const StructureSpec& spec) {
  return structure_impl(gens, spec, false);
}

CheckReport check_mutual_commute(const GeneratorSet& a, const GeneratorSet& b) {
  CheckReport report;
  report.suite = a.name + " x " + b.name;
  for (Key ka : keys(a))
    for (Key kb : keys(b))
      report.expect_equal("[" + a.name + "." + label(a, ka) + "," + b.name + "." + label(b, kb) + "]",
                          commutator(member(a, ka), member(b, kb)), Operator());
  for (const auto& [na, ca] : a.central)
    for (Key kb : keys(b))
      report.expect_equal("[" + a.name + "." + na + "," + b.name + "." + label(b, kb) + "]",
                          commutator(ca, member(b, kb)), Operator());
  return report;
}

InvarianceVerdict invariance_check(const Operator& q, const Operator& l, InvarianceVerdict::Mode mode) {
  InvarianceVerdict v;
  v.mode = mode;
  if (mode == InvarianceVerdict::Mode::Strict) {
    v.residual = commutator(q, l);
    return v;
  }
  if (l.terms().size() != 1 || !l.terms().begin()->first.x.is_one() || l.terms().begin()->first.conj)
    throw UnsupportedOperator("weak invariance needs an X-free linear operator");
  if (d0_coefficient(l.part({})) != Operator::scalar_matrix(FieldElem::i()))
    throw UnsupportedOperator("weak invariance needs D0 coefficient i times identity");
  Operator lq = l * q;
  for (const auto& [key, n] : lq.terms()) {
    // A D0 term of R~ L is  M * conj^c(i) D0; divide by conj^c(i).
    FieldElem f = key.conj ? FieldElem::i() : -FieldElem::i();
    v.cofactor.add_term(key, map_entries(d0_coefficient(n), [&](const FieldElem& x) { return f * x; }));
  }
  v.residual = lq - v.cofactor * l;
  return v;
}

bool gamma0_criterion(const Operator& q) {
  if (!q.is_x_free()) throw XSymbolsPresent("closed-form criterion needs an X-free operator");
  const Matrix& g0 = gamma0_matrix();
  Matrix lin = q.part({XPower(), false});
  Matrix anti = q.part({XPower(), true});
  return is_zero_matrix(Matrix(sparse_product(lin, g0) - sparse_product(g0, lin))) &&
         is_zero_matrix(Matrix(sparse_product(anti, g0) + sparse_product(g0, anti)));
}

namespace {

using Position = std::tuple<TermKey, int, int, int>;  // key, row, col, part (0 = u, 1 = v)

struct PositionLess {
  bool operator()(const Position& a, const Position& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::make_tuple(std::get<1>(a), std::get<2>(a), std::get<3>(a)) <
           std::make_tuple(std::get<1>(b), std::get<2>(b), std::get<3>(b));
  }
};

std::vector<Rational> flatten(const RealMatrix8& m) {
  std::vector<Rational> out;
  out.reserve(64);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out.push_back(m(i, j));
  return out;
}

const Sample& reference_sample() {
  static const Sample s = *Sample::real(Rational(5), {Rational(3), Rational(0), Rational(0)});
  return s;
}

}  // namespace

MaximalInvariance maximal_invariance(const std::vector<Operator>& basis, const Operator& l,
                                     const std::vector<Operator>& reference) {
  MaximalInvariance out;
  const std::size_t n = basis.size();
  std::vector<Operator> residuals;
  residuals.reserve(n);
  for (const auto& e : basis) {
    if (!e.is_x_free()) throw XSymbolsPresent("maximal invariance needs X-free basis elements");
    residuals.push_back(invariance_check(e, l, InvarianceVerdict::Mode::Weak).residual);
    out.member_invariant.push_back(residuals.back().is_zero());
  }
  // Group residual entries by position; each position gives one field equation.
  std::map<Position, std::vector<std::pair<std::size_t, const RationalFunction*>>, PositionLess> positions;
  for (std::size_t e = 0; e < n; ++e)
    for (const auto& [key, m] : residuals[e].terms())
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const FieldElem& x = m(i, j);
          if (!x.u().is_zero()) positions[{key, i, j, 0}].emplace_back(e, &x.u());
          if (!x.v().is_zero()) positions[{key, i, j, 1}].emplace_back(e, &x.v());
        }
  std::vector<std::vector<Rational>> rows;
  for (const auto& [pos, entries] : positions) {
    RationalFunction::CommonDenominator common = entries.front().second->denominator_factors();
    for (const auto& [e, f] : entries) common = RationalFunction::lcm(common, f->denominator_factors());
    std::map<Monomial, std::pair<std::vector<Rational>, std::vector<Rational>>> eqs;
    for (const auto& [e, f] : entries) {
      Polynomial num = f->numerator_over(common);
      for (const auto& t : num.terms()) {
        auto& [re, im] = eqs[t.mono];
        if (re.empty()) {
          re.assign(n, Rational(0));
          im.assign(n, Rational(0));
        }
        re[e] += t.coef.re;
        im[e] += t.coef.im;
      }
    }
    for (auto& [mono, pair] : eqs) {
      rows.push_back(std::move(pair.first));
      rows.push_back(std::move(pair.second));
    }
  }
  RationalMatrix system(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) system(r, c) = rows[r][c];
  RationalMatrix kernel;
  if (rows.empty()) {
    kernel = RationalMatrix::Identity(n, n);
  } else {
    kernel = exact_null_space(system);
  }
  out.dimension = static_cast<int>(kernel.cols());
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    std::vector<Rational> coeffs(n);
    Operator sol;
    for (std::size_t e = 0; e < n; ++e) {
      coeffs[e] = kernel(e, k);
      if (!coeffs[e].is_zero()) sol += FieldElem(GaussianRational(coeffs[e])) * basis[e];
    }
    out.kernel.push_back(std::move(coeffs));
    out.solutions.push_back(std::move(sol));
  }
  // Membership via realified 64-vectors at a fixed real sample.
  if (!reference.empty()) {
    RationalMatrix span(64, out.dimension + 1);
    for (int k = 0; k < out.dimension; ++k) {
      auto v = flatten(realify(out.solutions[k], reference_sample()));
      for (int r = 0; r < 64; ++r) span(r, k) = v[r];
    }
    int base_rank = out.dimension == 0 ? 0 : exact_rank(span.leftCols(out.dimension));
    for (const auto& ref : reference) {
      auto v = flatten(realify(ref, reference_sample()));
      for (int r = 0; r < 64; ++r) span(r, out.dimension) = v[r];
      out.contains.push_back(exact_rank(span) == base_rank);
    }
  }
  return out;
}

Operator conjugate(const Operator& q, const NormalizedConjugator& by, Direction direction) {
  if (!q.is_x_free()) throw XSymbolsPresent("conjugation needs an X-free operand");
  Operator prod = direction == Direction::Forward ? by.n_op * q * by.n_inv : by.n_inv * q * by.n_op;
  return inv(by.n) * prod;
}

namespace {

void require_poincare(const GeneratorSet& gens) {
  if (gens.kind != SetKind::Poincare || gens.rotations.size() != 6 || gens.translations.size() != 4)
    throw NotPoincareSet(gens.name + " is not a 10-generator Poincare set");
}

int permutation_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) {
      if (p[x] == p[y]) return 0;
      if (p[x] > p[y]) sign = -sign;
    }
  return sign;
}

}  // namespace

Operator casimir_p2(const GeneratorSet& gens) {
  require_poincare(gens);
  Operator out = gens.trans(0) * gens.trans(0);
  for (int k = 1; k <= 3; ++k) out -= gens.trans(k) * gens.trans(k);
  return out;
}

Operator pauli_lubanski_w2(const GeneratorSet& gens, int levi_civita) {
  require_poincare(gens);
  Operator w2;
  for (int mu = 0; mu < 4; ++mu) {
    // w^mu = (1/2) eps^{mu nu rho sigma} j_{nu rho} p_sigma, summing nu < rho once.
    Operator w;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = nu + 1; rho < 4; ++rho)
        for (int sigma = 0; sigma < 4; ++sigma) {
          int e = permutation_sign({mu, nu, rho, sigma});
          if (e == 0) continue;
          w += FieldElem(e * levi_civita) * (gens.rot(nu, rho) * gens.trans(sigma));
        }
    w2 += FieldElem(gens.g(mu)) * (w * w);
  }
  return w2;
}

bool annihilator_check(const Operator& a, const std::vector<FieldElem>& coeffs) {
  Operator acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * a + Operator(*it);
  return acc.is_zero();
}

int realified_rank(const std::vector<Operator>& ops, const Sample& s) {
  RationalMatrix m(64, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    auto v = flatten(realify(ops[k], s));
    for (int r = 0; r < 64; ++r) m(r, k) = v[r];
  }
  return exact_rank(m);
}

CheckReport v_transform_checks(const Conventions& c, bool stop_on_failure) {
  CheckReport report;
  report.suite = "fw-dirac-map";
  NormalizedConjugator v = catalog::V_conjugator(c);
  Operator n(v.n);
  auto done = [&] { return stop_on_failure && !report.passed(); };
  report.expect_equal("N*Ninv = 2w(w+m)", v.n_op * v.n_inv, n);
  if (done()) return report;
  report.expect_equal("Ninv*N = 2w(w+m)", v.n_inv * v.n_op, n);
  if (done()) return report;
  report.expect_equal("Vinv*(gamma0*w)*V = HD", conjugate(catalog::gamma(0) * Operator(FieldElem::omega()), v, Direction::Inverse),
                      catalog::dirac_hamiltonian(c));
  if (done()) return report;
  Operator hd = catalog::dirac_hamiltonian(c);
  report.expect_equal("HD*HD = w^2", hd * hd, Operator(FieldElem::omega() * FieldElem::omega()));
  if (done()) return report;
  report.expect_equal("Vinv*Lfw*V = Ldirac", conjugate(catalog::fw_operator(), v, Direction::Inverse),
                      catalog::dirac_operator(c));
  if (done()) return report;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      std::string idx = std::to_string(mu) + std::to_string(nu);
      if (mu == 1 && nu == 3) idx = "31";
      int a = mu, b = nu;
      if (idx == "31") std::swap(a, b);
      report.expect_equal("Vinv*sII" + idx + "*V = shat" + idx, conjugate(catalog::sII(a, b), v, Direction::Inverse),
                          catalog::shat(a, b, c));
      if (done()) return report;
    }
  return report;
}

CheckReport poincare_checks(const GeneratorSet& gens, const Operator& l, const Conventions& c, bool stop_on_failure) {
  CheckReport report = structure_impl(gens, StructureSpec::poincare(c.translation_sign), stop_on_failure);
  report.suite = gens.name;
  if (stop_on_failure && !report.passed()) return report;
  for (const auto& [name, q] : gens.members()) {
    InvarianceVerdict weak = invariance_check(q, l, InvarianceVerdict::Mode::Weak);
    report.add("weak invariance " + name, weak.pass(), ercd::to_text(weak.cofactor), "", weak.pass() ? "" : ercd::to_text(weak.residual));
    if (stop_on_failure && !report.passed()) return report;
  }
  for (const auto& [name, q] : gens.members()) {
    report.expect_equal("anti-self-adjoint " + name, adjoint(q), -q);
    if (stop_on_failure && !report.passed()) return report;
  }
  if (!stop_on_failure) {
    for (const auto& [name, q] : gens.members()) {
      bool strict = invariance_check(q, l, InvarianceVerdict::Mode::Strict).pass();
      report.info("strict invariance " + name, strict ? "commutes" : "does not commute");
    }
  }
  return report;
}

CheckReport casimir_checks(const Conventions& c, bool stop_on_failure) {
  CheckReport report;
  report.suite = "casimir";
  FieldElem m = FieldElem::var(Var::M);
  FieldElem m2 = m * m;
  Operator minus_m2(-m2);
  auto done = [&] { return stop_on_failure && !report.passed(); };
  GeneratorSet fermi = catalog::fw_genset(Flavor::Fermi, c);
  GeneratorSet ts = catalog::fw_genset(Flavor::TensorScalar, c);
  GeneratorSet dirac = catalog::dirac_genset(Flavor::TensorScalar, c);
  for (const GeneratorSet* g : {&fermi, &ts, &dirac}) {
    report.expect_equal("P^2 " + g->name + " = -m^2", casimir_p2(*g), minus_m2);
    if (done()) return report;
  }
  Operator w2_fermi = pauli_lubanski_w2(fermi, c.levi_civita);
  report.expect_equal("w^2 fw-fermi = -(3/4)m^2", w2_fermi, Operator(FieldElem(-3) * inv(FieldElem(4)) * m2));
  if (done()) return report;
  for (const GeneratorSet* g : {&ts, &dirac}) {
    Operator w2 = pauli_lubanski_w2(*g, c.levi_civita);
    Operator shifted = w2 + Operator(FieldElem(2) * m2);
    bool annihilated = (w2 * shifted).is_zero();
    report.add("w^2 " + g->name + " annihilated by l(l+2m^2)", annihilated, ercd::to_text(w2 * shifted), "0");
    if (done()) return report;
    report.add("w^2 " + g->name + " nonzero", !w2.is_zero(), ercd::to_text(w2), "nonzero");
    if (done()) return report;
    report.add("w^2+2m^2 " + g->name + " nonzero", !shifted.is_zero(), ercd::to_text(shifted), "nonzero");
    if (done()) return report;
  }
  return report;
}

AuditResult convention_audit(const AuditOptions& options) {
  AuditResult result;
  result.report.suite = "audit";
  for (const Conventions& c : Conventions::all()) {
    std::vector<CheckReport> parts;
    auto run = [&](auto&& f) {
      if (!parts.empty() && !parts.back().passed()) return;
      parts.push_back(f());
    };
    if (options.v_identity) run([&] { return v_transform_checks(c, true); });
    if (options.closure || options.invariance) {
      Operator lfw = catalog::fw_operator();
      Operator ld = catalog::dirac_operator(c);
      auto sets = {std::pair{catalog::fw_genset(Flavor::Fermi, c), lfw},
                   std::pair{catalog::fw_genset(Flavor::TensorScalar, c), lfw},
                   std::pair{catalog::dirac_genset(Flavor::TensorScalar, c), ld}};
      for (const auto& [g, l] : sets) {
        if (options.closure)
          run([&] {
            CheckReport r = structure_impl(g, StructureSpec::poincare(c.translation_sign), true);
            r.suite = g.name;
            return r;
          });
        if (options.invariance)
          run([&] {
            CheckReport r;
            for (const auto& [name, q] : g.members()) {
              auto v = invariance_check(q, l, InvarianceVerdict::Mode::Weak);
              r.add(g.name + " weak invariance " + name, v.pass(), "", "");
              if (!v.pass()) break;
            }
            return r;
          });
      }
    }
    if (options.casimir) run([&] { return casimir_checks(c, true); });
    bool ok = parts.empty() || parts.back().passed();
    std::string detail = "holds";
    if (!ok) {
      for (const auto& chk : parts.back().checks)
        if (chk.status == "fail") detail = "first failure: " + (parts.back().suite.empty() ? "" : parts.back().suite + " ") + chk.name;
    }
    result.report.info(c.str(), detail);
    if (ok && !result.selected) result.selected = c;
  }
  result.report.add("selected assignment", result.selected.has_value(), conventions_line(result.selected), "");
  result.report.conventions = result.selected;
  return result;
}

}  // namespace ercd

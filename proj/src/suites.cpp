#include "ercd/suites.hpp"

#include <functional>
#include <map>

namespace ercd {

namespace {

GeneratorSet conjugated(const GeneratorSet& set, const NormalizedConjugator& by, const std::string& name) {
  GeneratorSet out = set;
  out.name = name;
  for (auto& [key, op] : out.rotations) op = conjugate(op, by, Direction::Forward);
  return out;
}

CheckReport so15(const Conventions&, const Sample&) {
  CheckReport r = check_structure(catalog::cd_basis(), StructureSpec::so_metric());
  r.suite = "so15";
  return r;
}

CheckReport so6(const Conventions&, const Sample&) {
  GeneratorSet set = catalog::so6_set();
  CheckReport r = check_structure(set, StructureSpec::so6_delta());
  r.suite = "so6";
  Operator eps = catalog::epsilon_hat();
  for (const auto& [key, op] : set.rotations)
    r.expect_equal("[s" + std::to_string(key.first) + std::to_string(key.second) + ",eps]", commutator(op, eps), Operator());
  return r;
}

CheckReport ercd_rank(const Conventions&, const Sample& s) {
  CheckReport r;
  r.suite = "ercd-rank";
  int rank = realified_rank(catalog::ercd_basis(), s);
  r.add("realified rank of 64 ERCD elements", rank == 64, std::to_string(rank), "64");
  return r;
}

CheckReport a32(const Conventions&, const Sample& s) {
  CheckReport r;
  r.suite = "a32";
  std::vector<Operator> basis = catalog::ercd_basis();
  std::vector<std::string> labels = catalog::ercd_labels();
  std::vector<Operator> a32 = catalog::a32_basis();
  std::vector<std::string> a32_names = catalog::a32_labels();
  Operator lfw = catalog::fw_operator();
  MaximalInvariance mi = maximal_invariance(basis, lfw, a32);
  r.add("weak invariance dimension", mi.dimension == 32, std::to_string(mi.dimension), "32");
  for (std::size_t k = 0; k < a32.size(); ++k)
    r.add("span contains " + a32_names[k], mi.contains[k], mi.contains[k] ? "contained" : "missing", "contained");
  for (std::size_t e = 0; e < basis.size(); ++e) {
    bool oracle = gamma0_criterion(basis[e]);
    r.add("solver agrees with gamma0 criterion on " + labels[e], oracle == mi.member_invariant[e],
          mi.member_invariant[e] ? "invariant" : "not invariant", oracle ? "invariant" : "not invariant");
  }
  Operator eps = catalog::epsilon_hat();
  std::size_t central = 0;
  for (const auto& sol : mi.solutions) central += commutator(eps, sol).is_zero();
  r.add("eps central in solution space", central == mi.solutions.size(), std::to_string(central),
        std::to_string(mi.solutions.size()));
  std::vector<Operator> closure = mi.solutions;
  for (std::size_t x = 0; x < mi.solutions.size(); ++x)
    for (std::size_t y = x + 1; y < mi.solutions.size(); ++y) closure.push_back(commutator(mi.solutions[x], mi.solutions[y]));
  int span_rank = realified_rank(mi.solutions, s);
  int closure_rank = realified_rank(closure, s);
  r.add("solution space closed under commutators", span_rank == closure_rank, std::to_string(closure_rank),
        std::to_string(span_rank));
  std::size_t strict = 0;
  for (const auto& op : a32) strict += invariance_check(op, lfw, InvarianceVerdict::Mode::Strict).pass();
  r.info("A32 elements strictly commuting with Lfw", std::to_string(strict) + " of " + std::to_string(a32.size()));
  return r;
}

CheckReport lorentz(const Conventions&, const Sample&) {
  CheckReport r;
  r.suite = "lorentz";
  for (std::string fam : {"sI", "sII", "sTS", "sV"})
    r.append(check_structure(catalog::lorentz_set(fam), StructureSpec::so_metric()), fam + " ");
  r.append(check_mutual_commute(catalog::lorentz_set("sI"), catalog::lorentz_set("sII")));
  return r;
}

CheckReport bose(const Conventions&, const Sample&) {
  CheckReport r;
  r.suite = "bose-transform";
  NormalizedConjugator w = catalog::W_conjugator();
  r.expect_equal("W*Winv = 2", w.n_op * w.n_inv, Operator(w.n));
  r.expect_equal("Winv*W = 2", w.n_inv * w.n_op, Operator(w.n));
  for (std::string fam : {"sTS", "sV"}) {
    GeneratorSet bose = conjugated(catalog::lorentz_set(fam), w, "W" + fam + "Winv");
    r.append(check_structure(bose, StructureSpec::so_metric()), bose.name + " ");
  }
  return r;
}

CheckReport fw_dirac(const Conventions& c, const Sample&) { return v_transform_checks(c); }

CheckReport poincare_fw(const Conventions& c, const Sample&) {
  CheckReport r;
  r.suite = "poincare-fw";
  Operator l = catalog::fw_operator();
  for (Flavor f : {Flavor::Fermi, Flavor::TensorScalar}) {
    GeneratorSet g = catalog::fw_genset(f, c);
    r.append(poincare_checks(g, l, c), g.name + " ");
  }
  return r;
}

CheckReport poincare_dirac(const Conventions& c, const Sample&) {
  CheckReport r;
  r.suite = "poincare-dirac";
  GeneratorSet g = catalog::dirac_genset(Flavor::TensorScalar, c);
  r.append(poincare_checks(g, catalog::dirac_operator(c), c), g.name + " ");
  return r;
}

CheckReport casimir(const Conventions& c, const Sample&) { return casimir_checks(c); }

CheckReport fermi(const Conventions& c, const Sample&) {
  CheckReport r;
  r.suite = "fermi-case";
  GeneratorSet fw = catalog::fw_genset(Flavor::Fermi, c);
  GeneratorSet dirac = catalog::dirac_genset(Flavor::Fermi, c);
  r.append(poincare_checks(fw, catalog::fw_operator(), c), fw.name + " ");
  r.append(poincare_checks(dirac, catalog::dirac_operator(c), c), dirac.name + " ");
  FieldElem m2 = FieldElem::var(Var::M) * FieldElem::var(Var::M);
  for (const GeneratorSet* g : {&fw, &dirac}) {
    r.expect_equal("P^2 " + g->name + " = -m^2", casimir_p2(*g), Operator(-m2));
    r.expect_equal("w^2 " + g->name + " = -(3/4)m^2", pauli_lubanski_w2(*g, c.levi_civita),
                   Operator(FieldElem(-3) * inv(FieldElem(4)) * m2));
  }
  return r;
}

using SuiteFn = std::function<CheckReport(const Conventions&, const Sample&)>;

const std::vector<std::pair<std::string, SuiteFn>>& table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t = {
      {"so15", so15},
      {"so6", so6},
      {"ercd-rank", ercd_rank},
      {"a32", a32},
      {"lorentz", lorentz},
      {"poincare-fw", poincare_fw},
      {"poincare-dirac", poincare_dirac},
      {"fw-dirac-map", fw_dirac},
      {"bose-transform", bose},
      {"casimir", casimir},
      {"fermi-case", fermi},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : table()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

Sample default_sample() { return *Sample::momentum(Rational(3), {Rational(0), Rational(0), Rational(4)}); }

CheckReport run_suite(const std::string& name, const Conventions& c, const Sample& sample) {
  if (name == "all") {
    CheckReport r;
    r.suite = "all";
    r.conventions = c;
    for (const auto& [n, fn] : table()) r.append(fn(c, sample), n + "/");
    return r;
  }
  for (const auto& [n, fn] : table()) {
    if (n != name) continue;
    CheckReport r = fn(c, sample);
    r.suite = name;
    r.conventions = c;
    return r;
  }
  throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace ercd

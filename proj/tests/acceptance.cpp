// Acceptance run: one PASS/FAIL line per criterion.

#include "ercd/suites.hpp"
#include "random_ops.hpp"

#include <cstdio>
#include <functional>
#include <string>

using namespace ercd;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string counted(const CheckReport& r) {
  return std::to_string(r.count("pass")) + "/" + std::to_string(r.count("pass") + r.count("fail"));
}

Outcome from_report(const CheckReport& r, std::size_t expected_checks) {
  std::size_t n = r.count("pass") + r.count("fail");
  return {r.passed() && n == expected_checks, counted(r) + " checks"};
}

CheckReport filtered(const CheckReport& r, const std::string& needle) {
  CheckReport out;
  for (const auto& c : r.checks)
    if (c.name.find(needle) != std::string::npos) out.checks.push_back(c);
  return out;
}

Outcome substrate() {
  testing::Gen gen(424242);
  testing::OpGen ops(424243);
  const std::vector<Sample> real = {*Sample::real(Rational(5), {Rational(3), Rational(0), Rational(0)}),
                                    *Sample::real(Rational(3), {Rational(1), Rational(2), Rational(0)})};
  int failures = 0, cases = 0;
  auto tally = [&](bool ok) {
    ++cases;
    failures += !ok;
  };
  FieldElem w = FieldElem::omega();
  for (int n = 0; n < 1000; ++n) {
    FieldElem a = gen.field(), b = gen.field(), c = gen.field();
    tally((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a && (a + b) + c == a + (b + c));
  }
  for (int n = 0; n < 500; ++n) {
    FieldElem a = gen.nonzero_field();
    tally((a * inv(a)).is_one());
  }
  for (int n = 0; n < 500; ++n) {
    FieldElem a = gen.field(), b = gen.field();
    FieldElem x = a + w * b;
    tally(((x * w) * w) * x == (x * x) * (w * w));
  }
  for (int n = 0; n < 500; ++n) {
    FieldElem f = ops.scalar();
    Operator a = ops.op(true);
    Operator cc = Operator::conjugation();
    tally(cc * (f * a) == conj(f) * (cc * a));
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Operator d(FieldElem::var(static_cast<Var>(nu)));
      tally(commutator(Operator::coordinate(mu), d) == (mu == nu ? -Operator::identity() : Operator()));
    }
  for (int n = 0; n < 500; ++n) {
    Operator a = ops.op(true, 2), b = ops.op(true, 2);
    tally(adjoint(a * b) == adjoint(b) * adjoint(a));
  }
  for (int n = 0; n < 500; ++n) {
    Operator a = ops.op(false, 2), b = ops.op(false, 2);
    const Sample& s = real[static_cast<std::size_t>(n % 2)];
    tally(realify(a * b, s) == realify(a, s) * realify(b, s));
  }
  return {failures == 0, std::to_string(cases - failures) + "/" + std::to_string(cases) + " randomized cases"};
}

}  // namespace

int main() {
  AuditResult audit = convention_audit();
  Conventions c = audit.selected.value_or(Conventions{});
  Sample sample = default_sample();

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"SO(1,5) closure of the 15 CD generators",
       [&] { return from_report(run_suite("so15", c, sample), 105); }},
      {"SO(6) closure and eps centrality",
       [&] { return from_report(run_suite("so6", c, sample), 120); }},
      {"ERCD independence, realified rank 64",
       [&] {
         int rank = realified_rank(catalog::ercd_basis(), sample);
         return Outcome{rank == 64, "rank " + std::to_string(rank)};
       }},
      {"maximal invariance algebra of the FW operator",
       [&] {
         MaximalInvariance mi = maximal_invariance(catalog::ercd_basis(), catalog::fw_operator(), catalog::a32_basis());
         bool contains = true;
         for (bool b : mi.contains) contains = contains && b;
         int agree = 0;
         auto basis = catalog::ercd_basis();
         for (std::size_t e = 0; e < basis.size(); ++e) agree += mi.member_invariant[e] == gamma0_criterion(basis[e]);
         return Outcome{mi.dimension == 32 && contains && agree == 64,
                        "dimension " + std::to_string(mi.dimension) + ", A32 contained " + (contains ? "yes" : "no") +
                            ", oracle agreement " + std::to_string(agree) + "/64"};
       }},
      {"Lorentz spin-1 families sI, sII, sTS, sV and [sI,sII] = 0",
       [&] { return from_report(run_suite("lorentz", c, sample), 96); }},
      {"W transform and Bose-representation closure",
       [&] {
         CheckReport r = run_suite("bose-transform", c, sample);
         return from_report(r, 32);
       }},
      {"V transform, H_D and the six shat forms",
       [&] { return from_report(run_suite("fw-dirac-map", c, sample), 11); }},
      {"Poincare closure and weak invariance of fw-fermi, fw-ts, dirac",
       [&] {
         CheckReport fw = run_suite("poincare-fw", c, sample);
         CheckReport d = run_suite("poincare-dirac", c, sample);
         std::size_t brackets = filtered(fw, "[").count("pass") + filtered(d, "[").count("pass");
         std::size_t weak = filtered(fw, "weak").count("pass") + filtered(d, "weak").count("pass");
         bool ok = fw.passed() && d.passed() && brackets == 135 && weak == 30;
         return Outcome{ok, std::to_string(brackets) + "/135 brackets, " + std::to_string(weak) + "/30 weak invariance"};
       }},
      {"Casimirs P^2 and w^2",
       [&] { return from_report(run_suite("casimir", c, sample), 10); }},
      {"convention audit selects an assignment",
       [&] {
         return Outcome{audit.selected.has_value() && audit.report.passed(),
                        audit.selected ? audit.selected->str() : std::string("no assignment")};
       }},
      {"substrate property suites", substrate},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o = criteria[k].second();
    failed += !o.ok;
    std::printf("criterion %zu: %s  %s (%s)\n", k + 1, o.ok ? "PASS" : "FAIL", criteria[k].first.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#ifndef ERCD_LIE_VERIFY_HPP
#define ERCD_LIE_VERIFY_HPP

#include "ercd/catalog.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ercd {

/// Expected right-hand sides for the brackets of a GeneratorSet.
struct StructureSpec {
  enum class Kind { SO6Delta, SOMetric, Poincare };
  Kind kind = Kind::SOMetric;
  int epsilon_translation = 1;  // Poincare only

  static StructureSpec so6_delta() { return {Kind::SO6Delta, 1}; }
  static StructureSpec so_metric() { return {Kind::SOMetric, 1}; }
  static StructureSpec poincare(int eps) { return {Kind::Poincare, eps}; }
};

struct IndexMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedOperator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotPoincareSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckRecord {
  std::string name;
  std::string status;  // "pass", "fail" or "info"
  std::string lhs;
  std::string rhs;
  std::string residual;
};

struct CheckReport {
  std::string suite;
  std::optional<Conventions> conventions;
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0;

  bool passed() const;
  std::size_t count(const std::string& status) const;
  void add(std::string name, bool ok, std::string lhs, std::string rhs, std::string residual = "");
  void info(std::string name, std::string lhs, std::string rhs = "");
  /// Compares two operators, storing canonical text for both sides and the
  /// difference when they disagree.
  void expect_equal(std::string name, const Operator& lhs, const Operator& rhs);
  void append(const CheckReport& other, const std::string& prefix = "");

  std::string to_json(bool with_timing) const;
  std::string to_markdown(bool with_timing) const;
  std::string to_text(bool with_timing) const;
};

CheckReport check_structure(const GeneratorSet& gens, const StructureSpec& spec);
/// Expected value of one bracket under a spec; keys are rotation pairs or,
/// for translations, (index, -1).
Operator expected_bracket(const GeneratorSet& gens, const StructureSpec& spec, std::pair<int, int> a,
                          std::pair<int, int> b);
CheckReport check_mutual_commute(const GeneratorSet& a, const GeneratorSet& b);

struct InvarianceVerdict {
  enum class Mode { Strict, Weak };
  Mode mode = Mode::Weak;
  Operator cofactor;
  Operator residual;
  bool pass() const { return residual.is_zero(); }
};

InvarianceVerdict invariance_check(const Operator& q, const Operator& l, InvarianceVerdict::Mode mode);

/// Closed form for X-free, D-free Q against i D0 - gamma0 (...): the linear
/// part commutes with gamma0 and the antilinear matrix anticommutes with it.
bool gamma0_criterion(const Operator& q);

struct MaximalInvariance {
  int dimension = 0;
  std::vector<std::vector<Rational>> kernel;  // coefficient vectors over the basis
  std::vector<Operator> solutions;
  std::vector<bool> member_invariant;  // per basis element
  std::vector<bool> contains;          // per element of the reference set
};

/// Real span of the weakly invariant combinations of `basis`. `reference`
/// elements are tested for membership in the solution space.
MaximalInvariance maximal_invariance(const std::vector<Operator>& basis, const Operator& l,
                                     const std::vector<Operator>& reference = {});

enum class Direction { Forward, Inverse };
Operator conjugate(const Operator& q, const NormalizedConjugator& by, Direction direction);

Operator casimir_p2(const GeneratorSet& gens);
Operator pauli_lubanski_w2(const GeneratorSet& gens, int levi_civita = 1);
/// sum_k coeffs[k] * a^k == 0
bool annihilator_check(const Operator& a, const std::vector<FieldElem>& coeffs);

/// Realified 8x8 matrices of `ops`, flattened to 64-vectors, and their rank.
int realified_rank(const std::vector<Operator>& ops, const Sample& s);

struct AuditOptions {
  bool v_identity = true;
  bool closure = true;
  bool invariance = true;
  bool casimir = true;
};

struct AuditResult {
  CheckReport report;
  std::optional<Conventions> selected;
};

/// Runs the convention-dependent checks under every assignment and selects
/// the first one for which all enabled groups pass.
AuditResult convention_audit(const AuditOptions& options = {});

/// The individual groups, shared with the suites.
CheckReport v_transform_checks(const Conventions& c, bool stop_on_failure = false);
CheckReport poincare_checks(const GeneratorSet& gens, const Operator& l, const Conventions& c,
                            bool stop_on_failure = false);
CheckReport casimir_checks(const Conventions& c, bool stop_on_failure = false);

}  // namespace ercd

#endif

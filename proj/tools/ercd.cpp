#include "ercd/opdsl.hpp"
#include "ercd/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ercd;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFail = 1;
constexpr int kUsage = 2;
constexpr int kAuditFail = 3;

struct Options {
  std::string format = "text";
  std::string out;
  std::vector<std::string> sample;
  std::string conventions = "audit";
  std::string p_form = "momentum";
  std::string boost = "covariant";
  int translation_sign = -1;
  int levi_civita = 1;
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Sample parse_sample(const std::vector<std::string>& items) {
  std::vector<Rational> v;
  std::string text;
  for (const auto& item : items) {
    text += (text.empty() ? "" : ",") + item;
    try {
      v.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw UsageError("bad sample component '" + item + "'");
    }
  }
  if (v.size() != 4) throw UsageError("sample needs m,p1,p2,p3");
  auto s = Sample::momentum(v[0], {v[1], v[2], v[3]});
  if (!s) throw UsageError("sample " + text + " has no rational w = sqrt(m^2+p^2)");
  return *s;
}

Conventions explicit_conventions(const Options& o) {
  Conventions c;
  if (o.p_form == "momentum") c.p_form = Conventions::PForm::Momentum;
  else if (o.p_form == "derivative") c.p_form = Conventions::PForm::Derivative;
  else throw UsageError("p-form must be momentum or derivative");
  if (o.boost == "covariant") c.boost_coordinate = Conventions::BoostCoordinate::Covariant;
  else if (o.boost == "contravariant") c.boost_coordinate = Conventions::BoostCoordinate::Contravariant;
  else throw UsageError("boost must be covariant or contravariant");
  if (o.translation_sign != 1 && o.translation_sign != -1) throw UsageError("translation-sign must be 1 or -1");
  if (o.levi_civita != 1 && o.levi_civita != -1) throw UsageError("levi-civita must be 1 or -1");
  c.translation_sign = o.translation_sign;
  c.levi_civita = o.levi_civita;
  return c;
}

void emit(const Options& o, const std::string& bytes) {
  if (o.out.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.out);
  f << bytes;
}

std::string render(const CheckReport& r, const Options& o) {
  if (o.format == "json") return r.to_json(o.timing);
  if (o.format == "md") return r.to_markdown(o.timing);
  return r.to_text(o.timing);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Resolves conventions; on audit failure writes the audit report and
/// returns nullopt.
std::optional<Conventions> resolve(const Options& o, CheckReport* audit_out = nullptr) {
  if (o.conventions == "explicit") return explicit_conventions(o);
  auto t0 = std::chrono::steady_clock::now();
  AuditResult a = convention_audit();
  a.report.elapsed_ms = ms_since(t0);
  if (audit_out) *audit_out = a.report;
  if (!a.selected) emit(o, render(a.report, o));
  return a.selected;
}

std::string rational_text(const Rational& r) { return r.str(); }

std::string matrix_text(const Matrix& m) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    out += "  [";
    for (int j = 0; j < 4; ++j) out += (j ? ", " : "") + (m(i, j).is_zero() ? std::string("0") : m(i, j).str());
    out += "]\n";
  }
  return out;
}

nlohmann::ordered_json matrix_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j).is_zero() ? std::string("0") : m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

std::string real8_text(const RealMatrix8& m) {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    out += "  [";
    for (int j = 0; j < 8; ++j) out += (j ? ", " : "") + rational_text(m(i, j));
    out += "]\n";
  }
  return out;
}

nlohmann::ordered_json real8_json(const RealMatrix8& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 8; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < 8; ++j) row.push_back(rational_text(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_verify(const std::string& suite, const Options& o, const Sample& sample) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport audit;
  auto c = resolve(o, &audit);
  if (!c) return kAuditFail;
  CheckReport r = run_suite(suite, *c, sample);
  if (suite == "all" && o.conventions == "audit") {
    CheckReport combined;
    combined.suite = "all";
    combined.conventions = c;
    combined.append(audit, "audit/");
    combined.append(r);
    r = std::move(combined);
  }
  r.elapsed_ms = ms_since(t0);
  emit(o, render(r, o));
  return r.passed() ? kPass : kCheckFail;
}

int cmd_audit(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  AuditResult a = convention_audit();
  a.report.elapsed_ms = ms_since(t0);
  emit(o, render(a.report, o));
  return a.selected ? kPass : kAuditFail;
}

int cmd_eval(const std::string& expr, const Options& o, const std::optional<Sample>& sample) {
  auto c = resolve(o);
  if (!c) return kAuditFail;
  Operator op = dsl::evaluate(expr, *c);
  std::string text = dsl::format(op);
  std::optional<RealMatrix8> real;
  if (sample) {
    if (!op.is_x_free()) throw UsageError("realification needs an X-free operator");
    real = realify(op, *sample);
  }
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = expr;
    j["conventions"] = c->str();
    j["result"] = text;
    if (real) {
      j["sample"] = sample->str();
      j["realified"] = real8_json(*real);
    }
    emit(o, j.dump(2) + "\n");
  } else if (o.format == "md") {
    std::string out = "# eval\n\n`" + expr + "`\n\n```\n" + text + "\n```\n";
    if (real) out += "\nrealified at " + sample->str() + ":\n\n```\n" + real8_text(*real) + "```\n";
    emit(o, out);
  } else {
    std::string out = text + "\n";
    if (real) out += "realified at " + sample->str() + ":\n" + real8_text(*real);
    emit(o, out);
  }
  return kPass;
}

std::optional<GeneratorSet> named_set(const std::string& name, const Conventions& c) {
  if (name == "fw-fermi") return catalog::fw_genset(Flavor::Fermi, c);
  if (name == "fw-ts") return catalog::fw_genset(Flavor::TensorScalar, c);
  if (name == "dirac") return catalog::dirac_genset(Flavor::TensorScalar, c);
  if (name == "dirac-fermi") return catalog::dirac_genset(Flavor::Fermi, c);
  if (name == "so6") return catalog::so6_set();
  if (name == "cd") return catalog::cd_basis();
  for (const char* f : {"sI", "sII", "sTS", "sV"})
    if (name == f) return catalog::lorentz_set(f);
  return std::nullopt;
}

int show_set(const GeneratorSet& set, const Options& o) {
  auto members = set.members();
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["name"] = set.name;
    j["members"] = nlohmann::ordered_json::object();
    for (const auto& [label, op] : members) j["members"][label] = dsl::format(op);
    emit(o, j.dump(2) + "\n");
    return kPass;
  }
  std::string out = "set: " + set.name + " (" + std::to_string(members.size()) + " generators)\n";
  for (const auto& [label, op] : members) out += label + " = " + dsl::format(op) + "\n";
  if (o.format == "md") out = "# " + set.name + "\n\n```\n" + out + "```\n";
  emit(o, out);
  return kPass;
}

int cmd_show(const std::string& name, const Options& o) {
  auto c = resolve(o);
  if (!c) return kAuditFail;
  if (auto set = named_set(name, *c)) return show_set(*set, o);
  Operator op;
  std::string definition = catalog::anchor(name);
  if (!catalog::lookup(name, *c, op)) {
    op = dsl::evaluate(name, *c);  // indexed names such as sII(1,2)
    if (definition.empty()) definition = "catalog entry " + name;
  }
  Matrix lin = op.part({XPower(), false});
  Matrix anti = op.part({XPower(), true});
  bool has_conj = !op.antilinear_part().is_zero();
  bool x_free = op.is_x_free();
  std::string normalizer;
  if (name == "W" || name == "Winv") normalizer = catalog::W_conjugator().n.str();
  if (name == "V" || name == "Vinv") normalizer = catalog::V_conjugator(*c).n.str();
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["definition"] = definition;
    j["canonical"] = dsl::format(op);
    j["antilinear"] = has_conj;
    if (x_free) {
      j["linear_part"] = matrix_json(lin);
      j["conj_part"] = matrix_json(anti);
    }
    if (!normalizer.empty()) j["normalizer"] = normalizer;
    emit(o, j.dump(2) + "\n");
    return kPass;
  }
  std::string out;
  out += "name: " + name + "\n";
  out += "definition: " + definition + "\n";
  out += "canonical: " + dsl::format(op) + "\n";
  out += std::string("C flag: ") + (has_conj ? "yes" : "no") + "\n";
  if (x_free) {
    out += "linear part:\n" + matrix_text(lin);
    if (has_conj) out += "C part (matrix to the left of C):\n" + matrix_text(anti);
  }
  if (!normalizer.empty()) out += "normalizer: " + normalizer + "\n";
  if (o.format == "md") out = "# " + name + "\n\n```\n" + out + "```\n";
  emit(o, out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of extended real Clifford-Dirac algebra identities"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.set_config("--config", "", "flat key=value file; flags override it");
  app.config_formatter(std::make_shared<CLI::ConfigINI>());
  app.add_option("--format", o.format, "json, md or text")->check(CLI::IsMember({"json", "md", "text"}));
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_option("--sample", o.sample, "m,p1,p2,p3 with rational w (default 3,0,0,4)")->delimiter(',')->expected(4);
  app.add_option("--conventions", o.conventions, "audit or explicit")->check(CLI::IsMember({"audit", "explicit"}));
  app.add_option("--p-form", o.p_form, "explicit mode: momentum or derivative");
  app.add_option("--boost", o.boost, "explicit mode: covariant or contravariant");
  app.add_option("--translation-sign", o.translation_sign, "explicit mode: 1 or -1");
  app.add_option("--levi-civita", o.levi_civita, "explicit mode: 1 or -1");
  app.add_flag("--timing", o.timing, "include elapsed time (output is then not reproducible)");

  std::string suite, expr, name;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  auto* eval = app.add_subcommand("eval", "evaluate an operator expression");
  eval->add_option("expr", expr, "expression")->required();
  auto* show = app.add_subcommand("show", "show a catalog object");
  show->add_option("name", name, "catalog name")->required();
  auto* audit = app.add_subcommand("audit", "run the convention audit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    std::optional<Sample> given;
    if (!o.sample.empty()) given = parse_sample(o.sample);
    Sample sample = given ? *given : default_sample();
    if (o.conventions == "explicit") explicit_conventions(o);
    if (verify->parsed()) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kUsage;
      }
      return cmd_verify(suite, o, sample);
    }
    if (eval->parsed()) return cmd_eval(expr, o, given);
    if (show->parsed()) return cmd_show(name, o);
    if (audit->parsed()) return cmd_audit(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const dsl::DslError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

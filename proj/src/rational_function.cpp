#include "ercd/rational_function.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace ercd {

namespace {

class AtomTable {
public:
  const Polynomial& get(int id) {
    std::lock_guard<std::mutex> lock(mu_);
    return polys_.at(static_cast<std::size_t>(id));
  }

  std::size_t count() {
    std::lock_guard<std::mutex> lock(mu_);
    return polys_.size();
  }

  int intern(const Polynomial& monic) {
    std::lock_guard<std::mutex> lock(mu_);
    auto range = index_.equal_range(monic.hash());
    for (auto it = range.first; it != range.second; ++it)
      if (polys_[static_cast<std::size_t>(it->second)] == monic) return it->second;
    int id = static_cast<int>(polys_.size());
    polys_.push_back(monic);
    index_.emplace(monic.hash(), id);
    return id;
  }

private:
  std::mutex mu_;
  std::deque<Polynomial> polys_;
  std::unordered_multimap<std::size_t, int> index_;
};

AtomTable& table() {
  static AtomTable t;
  return t;
}

struct FactoredDenominator {
  GaussianRational constant{1};
  Monomial mono;
  RationalFunction::AtomPowers atoms;
};

void add_power(RationalFunction::AtomPowers& powers, int id, int e) {
  for (auto& [aid, ae] : powers) {
    if (aid == id) {
      ae += e;
      return;
    }
  }
  powers.emplace_back(id, e);
  std::sort(powers.begin(), powers.end());
}

FactoredDenominator factor_denominator(Polynomial q) {
  if (q.is_zero()) throw DivisionByZero("rational function with zero denominator");
  FactoredDenominator out;
  out.mono = q.monomial_content();
  if (!out.mono.is_one()) q = q.divide_monomial(out.mono);
  out.constant = q.leading().coef;
  if (!out.constant.is_one()) q = q.scaled(GaussianRational(1) / out.constant);
  if (q.is_constant()) return out;
  std::size_t n = table().count();
  for (std::size_t id = 0; id < n && !q.is_constant(); ++id) {
    const Polynomial& atom = table().get(static_cast<int>(id));
    if (atom.total_degree() > q.total_degree()) continue;
    while (!q.is_constant()) {
      auto quot = q.divide_exact(atom);
      if (!quot) break;
      q = std::move(*quot);
      add_power(out.atoms, static_cast<int>(id), 1);
    }
  }
  if (!q.is_constant()) add_power(out.atoms, table().intern(q), 1);
  return out;
}

Polynomial atom_power(int id, int e) { return table().get(id).pow(e); }

}  // namespace

namespace atoms {
const Polynomial& get(int id) { return table().get(id); }
std::size_t count() { return table().count(); }
}  // namespace atoms

RationalFunction RationalFunction::fraction(Polynomial num, const Polynomial& den) {
  FactoredDenominator f = factor_denominator(den);
  RationalFunction r;
  r.num_ = f.constant.is_one() ? std::move(num) : num.scaled(GaussianRational(1) / f.constant);
  r.den_mono_ = f.mono;
  r.den_atoms_ = std::move(f.atoms);
  r.cancel();
  return r;
}

Polynomial RationalFunction::CommonDenominator::expand() const {
  Polynomial p = Polynomial::monomial(mono);
  for (const auto& [id, e] : atoms) p = p * atom_power(id, e);
  return p;
}

Polynomial RationalFunction::denominator() const { return CommonDenominator{den_mono_, den_atoms_}.expand(); }

void RationalFunction::cancel_pair(Polynomial& num, Monomial& den_mono, AtomPowers& den_atoms) {
  if (num.is_zero()) {
    den_mono = Monomial();
    den_atoms.clear();
    return;
  }
  if (!den_mono.is_one()) {
    Monomial g = num.monomial_content().gcd(den_mono);
    if (!g.is_one()) {
      num = num.divide_monomial(g);
      den_mono = den_mono / g;
    }
  }
  for (auto& [id, e] : den_atoms) {
    const Polynomial& atom = table().get(id);
    while (e > 0) {
      if (atom.total_degree() > num.total_degree()) break;
      auto quot = num.divide_exact(atom);
      if (!quot) break;
      num = std::move(*quot);
      --e;
    }
  }
  std::erase_if(den_atoms, [](const auto& p) { return p.second == 0; });
}

void RationalFunction::cancel() { cancel_pair(num_, den_mono_, den_atoms_); }

RationalFunction::CommonDenominator RationalFunction::lcm(const CommonDenominator& a,
                                                          const CommonDenominator& b) {
  CommonDenominator out{a.mono.lcm(b.mono), a.atoms};
  for (const auto& [id, e] : b.atoms) {
    bool found = false;
    for (auto& [aid, ae] : out.atoms) {
      if (aid == id) {
        ae = std::max(ae, e);
        found = true;
      }
    }
    if (!found) out.atoms.emplace_back(id, e);
  }
  std::sort(out.atoms.begin(), out.atoms.end());
  return out;
}

Polynomial RationalFunction::numerator_over(const CommonDenominator& common) const {
  Polynomial p = num_;
  Monomial extra = common.mono / den_mono_;
  if (!extra.is_one()) p = p.times_monomial(extra);
  for (const auto& [id, e] : common.atoms) {
    int have = 0;
    for (const auto& [aid, ae] : den_atoms_)
      if (aid == id) have = ae;
    if (e > have) p = p * atom_power(id, e - have);
  }
  return p;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_mono_ == o.den_mono_ && den_atoms_ == o.den_atoms_) {
    num_ += o.num_;
    if (!is_polynomial()) cancel();
    return *this;
  }
  CommonDenominator common = lcm(denominator_factors(), o.denominator_factors());
  num_ = numerator_over(common) + o.numerator_over(common);
  den_mono_ = common.mono;
  den_atoms_ = std::move(common.atoms);
  cancel();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial other_num = o.num_;
  Monomial other_mono = o.den_mono_;
  AtomPowers other_atoms = o.den_atoms_;
  cancel_pair(num_, other_mono, other_atoms);
  cancel_pair(other_num, den_mono_, den_atoms_);
  num_ = num_ * other_num;
  den_mono_ = den_mono_ * other_mono;
  for (const auto& [id, e] : other_atoms) add_power(den_atoms_, id, e);
  // A product can be divisible by an atom power that neither factor was.
  if (!o.is_polynomial() && !den_atoms_.empty()) cancel();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return fraction(denominator(), num_);
}

RationalFunction RationalFunction::derivative(Var v) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(v));
  // d(n/d) = n'/d - (n/d) * d'/d, with d'/d summed over the factored form.
  RationalFunction log_der;
  int ev = den_mono_.exponent(v);
  if (ev > 0) log_der += fraction(Polynomial(ev), Polynomial::var(v));
  for (const auto& [id, e] : den_atoms_) {
    Polynomial da = table().get(id).derivative(v);
    if (da.is_zero()) continue;
    RationalFunction term;
    term.num_ = da.scaled(GaussianRational(e));
    term.den_atoms_ = {{id, 1}};
    term.cancel();
    log_der += term;
  }
  RationalFunction lead = *this;
  lead.num_ = num_.derivative(v);
  lead.cancel();
  return lead - *this * log_der;
}

namespace {

template <typename Map>
RationalFunction map_function(const RationalFunction& f, Map&& map) {
  RationalFunction out = RationalFunction::fraction(map(f.numerator()),
                                                    map(Polynomial::monomial(f.denominator_monomial())));
  for (const auto& [id, e] : f.denominator_atoms()) {
    RationalFunction piece = RationalFunction::fraction(Polynomial(1), map(atoms::get(id)));
    for (int k = 0; k < e; ++k) out *= piece;
  }
  return out;
}

}  // namespace

RationalFunction RationalFunction::conj() const {
  if (is_polynomial()) return RationalFunction(num_.conj());
  return map_function(*this, [](const Polynomial& p) { return p.conj(); });
}

RationalFunction RationalFunction::flip_signs(unsigned mask) const {
  if (is_polynomial()) return RationalFunction(num_.flip_signs(mask));
  return map_function(*this, [mask](const Polynomial& p) { return p.flip_signs(mask); });
}

GaussianRational RationalFunction::eval(const std::array<GaussianRational, kNumVars>& at) const {
  GaussianRational den = denominator().eval(at);
  if (den.is_zero()) throw DivisionByZero("denominator vanishes at sample");
  return num_.eval(at) / den;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_mono_ == b.den_mono_ && a.den_atoms_ == b.den_atoms_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  std::string n = num_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + denominator().str() + ")";
}

}  // namespace ercd

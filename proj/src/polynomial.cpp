#include "ercd/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ercd {

namespace {

constexpr int kVarOrderForText[kNumVars] = {4, 0, 1, 2, 3};

bool coef_looks_negative(const GaussianRational& c) {
  if (c.im.is_zero()) return c.re.sign() < 0;
  return c.re.is_zero() && c.im.sign() < 0;
}

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::D0: return "D0";
    case Var::D1: return "D1";
    case Var::D2: return "D2";
    case Var::D3: return "D3";
    case Var::M: return "m";
  }
  return "?";
}

bool Monomial::divisible_by(Monomial d) const {
  for (int s = 0; s <= kNumVars; ++s)
    if (field(s) < d.field(s)) return false;
  return true;
}

Monomial Monomial::operator*(Monomial o) const {
  for (int s = 0; s < kNumVars; ++s)
    if (field(s) + o.field(s) > 255) throw std::overflow_error("monomial exponent overflow");
  if (degree() + o.degree() > 255) throw std::overflow_error("monomial degree overflow");
  return Monomial(key_ + o.key_);
}

Monomial Monomial::operator/(Monomial o) const { return Monomial(key_ - o.key_); }

Monomial Monomial::gcd(Monomial o) const {
  Monomial r;
  for (int s = 0; s < kNumVars; ++s)
    r = r * var(static_cast<Var>(s), std::min(field(s), o.field(s)));
  return r;
}

Monomial Monomial::lcm(Monomial o) const {
  Monomial r;
  for (int s = 0; s < kNumVars; ++s)
    r = r * var(static_cast<Var>(s), std::max(field(s), o.field(s)));
  return r;
}

std::string Monomial::str() const {
  std::string out;
  for (int slot : kVarOrderForText) {
    for (int k = 0; k < field(slot); ++k) {
      if (!out.empty()) out += "*";
      out += var_name(static_cast<Var>(slot));
    }
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(GaussianRational c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

Polynomial Polynomial::var(Var v, int power) { return monomial(Monomial::var(v, power)); }

Polynomial Polynomial::monomial(Monomial m, GaussianRational c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

GaussianRational Polynomial::constant_value() const {
  if (terms_.empty()) return GaussianRational();
  if (!terms_[0].mono.is_one()) throw std::logic_error("polynomial is not constant");
  return terms_[0].coef;
}

int Polynomial::degree(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

int Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      out.push_back(*b++);
    } else {
      GaussianRational c = a->coef + b->coef;
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a.scaled(b.terms_[0].coef);
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b.scaled(a.terms_[0].coef);
  Polynomial r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({x.mono * y.mono, x.coef * y.coef});
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  Polynomial r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_monomial(Monomial m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

Polynomial Polynomial::pow(int n) const {
  Polynomial r(1);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return Polynomial();
  const Term& lead = d.terms_.front();
  if (d.terms_.size() == 1) {
    Polynomial q;
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!t.mono.divisible_by(lead.mono)) return std::nullopt;
      q.terms_.push_back({t.mono / lead.mono, t.coef / lead.coef});
    }
    return q;
  }
  Polynomial rem = *this;
  Polynomial quot;
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.front();
    if (!r.mono.divisible_by(lead.mono)) return std::nullopt;
    Term q{r.mono / lead.mono, r.coef / lead.coef};
    rem -= d.times_monomial(q.mono).scaled(q.coef);
    quot.terms_.push_back(std::move(q));
  }
  // Quotient terms were produced in descending order.
  return quot;
}

Polynomial Polynomial::divide_monomial(Monomial m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

Polynomial Polynomial::derivative(Var v) const {
  Polynomial r;
  Monomial dv = Monomial::var(v);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (e == 0) continue;
    r.terms_.push_back({t.mono / dv, t.coef * GaussianRational(e)});
  }
  // Dividing every monomial by the same variable preserves grlex order
  // among terms that all contain it.
  return r;
}

Polynomial Polynomial::conj() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = t.coef.conj();
  return r;
}

Polynomial Polynomial::flip_signs(unsigned mask) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    int parity = 0;
    for (int s = 0; s < kNumVars; ++s)
      if (mask & (1u << s)) parity += t.mono.exponent(static_cast<Var>(s));
    if (parity % 2) t.coef = -t.coef;
  }
  return r;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

GaussianRational Polynomial::eval(const std::array<GaussianRational, kNumVars>& at) const {
  GaussianRational sum;
  for (const auto& t : terms_) {
    GaussianRational x = t.coef;
    for (int s = 0; s < kNumVars; ++s)
      for (int k = 0; k < t.mono.exponent(static_cast<Var>(s)); ++k) x *= at[s];
    sum += x;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].mono != b.terms_[k].mono || !(a.terms_[k].coef == b.terms_[k].coef)) return false;
  return true;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ std::hash<std::uint64_t>{}(t.mono.key());
    h = h * 1000003u ^ t.coef.re.hash();
    h = h * 1000003u ^ t.coef.im.hash();
  }
  return h;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = coef_looks_negative(t.coef);
    GaussianRational c = neg ? -t.coef : t.coef;
    std::string mono = t.mono.str();
    std::string body;
    if (t.mono.is_one()) body = c.str();
    else if (c.is_one()) body = mono;
    else body = c.str() + "*" + mono;
    if (first) out += neg ? "-" : "";
    else out += neg ? "-" : "+";
    out += body;
    first = false;
  }
  return out;
}

}  // namespace ercd

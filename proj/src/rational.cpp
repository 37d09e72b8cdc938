#include "ercd/rational.hpp"

#include <functional>

namespace ercd {

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(q_.get_num().get_str(16));
  return h * 31u + std::hash<std::string>{}(q_.get_den().get_str(16));
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.im.is_zero()) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero("gaussian rational division by zero");
  if (o.im.is_zero()) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

namespace {

// Magnitude of a rational as a term; sign handled by the caller.
std::string rational_magnitude(const Rational& r, bool with_i) {
  Rational mag = r.abs();
  const auto& q = mag.raw();
  std::string num = q.get_num().get_str();
  std::string den = q.get_den().get_str();
  std::string head = with_i ? (num == "1" ? "i" : num + "*i") : num;
  return den == "1" ? head : head + "/" + den;
}

}  // namespace

std::string GaussianRational::str() const {
  if (im.is_zero()) {
    if (re.is_integer()) return re.str();
    return "(" + std::string(re.sign() < 0 ? "-" : "") + rational_magnitude(re, false) + ")";
  }
  std::string imag = (im.sign() < 0 ? "-" : "") + rational_magnitude(im, true);
  if (re.is_zero()) {
    if (imag == "i") return imag;
    return "(" + imag + ")";
  }
  std::string real = (re.sign() < 0 ? "-" : "") + rational_magnitude(re, false);
  return "(" + real + (im.sign() < 0 ? "" : "+") + imag + ")";
}

}  // namespace ercd

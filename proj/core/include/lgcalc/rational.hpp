#ifndef LGCALC_RATIONAL_HPP
#define LGCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lgcalc/errors.hpp"

namespace lgcalc {

using Int = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw LgError(ErrorKind::semantic, "zero denominator");
    v_.canonicalize();
  }

  // Accepts "p/q" or "p"; q must be nonzero.
  static Rational parse(const std::string& text);

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Largest integer <= value.
  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw LgError(ErrorKind::semantic, "division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational pow(Rational base, long e) {
  if (e < 0) {
    base = Rational(1) / base;
    e = -e;
  }
  Rational r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw LgError(ErrorKind::parse, "invalid rational literal '" + text + "'");
  }
}

}  // namespace lgcalc

#endif

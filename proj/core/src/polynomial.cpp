#include "lgcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "lgcalc/errors.hpp"

namespace lgcalc {

std::string LaurentMonomial::str() const {
  std::string s;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(j + 1);
    if (exponents[j] != 1) s += "^" + exponents[j].get_str();
  }
  return s.empty() ? "1" : s;
}

Phase pair_phase(const LaurentMonomial& m, const PhaseVec& theta) {
  Rational acc(0);
  for (std::size_t j = 0; j < m.exponents.size(); ++j)
    acc += Rational(m.exponents[j]) * theta[j].value();
  return Phase(acc);
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(i, what); }

  Int integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected an integer");
    return Int(s.substr(start, i - start));
  }
};

}  // namespace

QuasiHomogPoly QuasiHomogPoly::parse(const std::string& text, int nvars) {
  if (nvars < 0) throw LgError(ErrorKind::semantic, "negative variable count");
  Cursor c{text};
  std::vector<Term> terms;

  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    if (c.eof()) c.fail("dangling sign");
    first = false;

    Rational coeff(sign);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      Int num = c.integer();
      Int den = 1;
      if (!c.eof() && c.peek() == '/') {
        ++c.i;
        den = c.integer();
        if (den == 0) c.fail("zero denominator");
      }
      coeff = Rational(sign) * Rational(num, den);
      have_coeff = true;
      if (!c.eof() && c.peek() == '*') ++c.i;  // optional '*' after the coefficient
    }

    std::vector<Int> expo(nvars, 0);
    bool have_factor = false;
    for (;;) {
      if (c.eof()) break;
      char ch = c.peek();
      if (ch == 'x') {
        ++c.i;
        Int k = c.integer();
        if (k < 1 || k > nvars) c.fail("variable index out of range");
        Int e = 1;
        if (!c.eof() && c.peek() == '^') {
          ++c.i;
          e = c.integer();
          if (e < 1) c.fail("exponent must be positive");
        }
        expo[k.get_si() - 1] += e;
        have_factor = true;
        if (!c.eof() && c.peek() == '*') {
          ++c.i;
          if (c.eof() || c.peek() != 'x') c.fail("expected a factor after '*'");
        }
        continue;
      }
      if (ch == '+' || ch == '-') break;
      c.fail("unexpected character");
    }
    if (!have_factor && !have_coeff) c.fail("empty term");
    terms.push_back(Term{coeff, std::move(expo)});
  }
  if (terms.empty()) throw ZeroPolynomialError();
  return from_terms(nvars, std::move(terms));
}

QuasiHomogPoly QuasiHomogPoly::from_terms(int nvars, std::vector<Term> terms) {
  // canonical order: descending lex on exponent vectors
  auto lex = [](const Term& a, const Term& b) {
    for (std::size_t j = 0; j < a.exponents.size(); ++j) {
      if (a.exponents[j] != b.exponents[j]) return a.exponents[j] > b.exponents[j];
    }
    return false;
  };
  std::sort(terms.begin(), terms.end(), lex);
  QuasiHomogPoly out(nvars);
  for (auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != nvars)
      throw LgError(ErrorKind::semantic, "term arity mismatch");
    if (!out.terms_.empty() && out.terms_.back().exponents == t.exponents)
      out.terms_.back().coeff += t.coeff;
    else
      out.terms_.push_back(std::move(t));
    if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
  }
  if (out.terms_.empty()) throw ZeroPolynomialError();
  return out;
}

IntMatrix QuasiHomogPoly::exponent_matrix() const {
  IntMatrix m(static_cast<int>(terms_.size()), nvars_);
  for (std::size_t a = 0; a < terms_.size(); ++a)
    for (int j = 0; j < nvars_; ++j) m.at(static_cast<int>(a), j) = terms_[a].exponents[j];
  return m;
}

void QuasiHomogPoly::check_variables_used() const {
  for (int j = 0; j < nvars_; ++j) {
    bool used = false;
    for (const auto& t : terms_)
      if (t.exponents[j] != 0) {
        used = true;
        break;
      }
    if (!used) throw UnusedVariableError(j);
  }
}

MPoly QuasiHomogPoly::to_mpoly() const {
  std::vector<std::pair<Expo, Rational>> ts;
  for (const auto& t : terms_) {
    std::vector<int> e(nvars_);
    for (int j = 0; j < nvars_; ++j) e[j] = static_cast<int>(t.exponents[j].get_si());
    ts.emplace_back(make_expo(std::move(e)), t.coeff);
  }
  return MPoly(nvars_, std::move(ts));
}

std::string QuasiHomogPoly::str() const {
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono = LaurentMonomial{t.exponents}.str();
    if (mono == "1")
      s += t.coeff.str();
    else if (t.coeff == Rational(1))
      s += mono;
    else
      s += t.coeff.str() + "*" + mono;
  }
  return s;
}

}  // namespace lgcalc

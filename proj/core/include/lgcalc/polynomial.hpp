#ifndef LGCALC_POLYNOMIAL_HPP
#define LGCALC_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "lgcalc/int_matrix.hpp"
#include "lgcalc/mpoly.hpp"
#include "lgcalc/phase.hpp"
#include "lgcalc/rational.hpp"

namespace lgcalc {

// Exponent vector of a Laurent monomial x_1^{c_1} ... x_n^{c_n}.
struct LaurentMonomial {
  std::vector<Int> exponents;

  friend bool operator==(const LaurentMonomial& a, const LaurentMonomial& b) {
    return a.exponents == b.exponents;
  }
  std::string str() const;
};

// Pairing of an exponent vector against a phase vector, in Q/Z.
Phase pair_phase(const LaurentMonomial& m, const PhaseVec& theta);

// A polynomial with nonzero rational coefficients and pairwise distinct
// nonnegative exponent vectors, kept sorted for canonical order.
class QuasiHomogPoly {
 public:
  struct Term {
    Rational coeff;
    std::vector<Int> exponents;
  };

  // Grammar: terms joined by '+'/'-'; a term is an optional rational
  // coefficient ("p/q" or integer) followed by '*'-separated factors xK or
  // xK^E with 1 <= K <= n and E >= 1.  Whitespace is ignored.  Like terms
  // merge; a vanishing result raises ZeroPolynomialError.
  static QuasiHomogPoly parse(const std::string& text, int nvars);
  static QuasiHomogPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Rows are the exponent vectors of the terms (m x n).
  IntMatrix exponent_matrix() const;

  // Throws UnusedVariableError if some variable appears in no term.
  void check_variables_used() const;

  MPoly to_mpoly() const;
  std::string str() const;

  friend bool operator==(const QuasiHomogPoly& a, const QuasiHomogPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_.size() == b.terms_.size() && a.str() == b.str();
  }

 private:
  explicit QuasiHomogPoly(int nvars) : nvars_(nvars) {}
  int nvars_;
  std::vector<Term> terms_;
};

}  // namespace lgcalc

#endif

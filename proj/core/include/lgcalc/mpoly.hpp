#ifndef LGCALC_MPOLY_HPP
#define LGCALC_MPOLY_HPP

#include <utility>
#include <vector>

#include "lgcalc/rational.hpp"

namespace lgcalc {

// Multivariate polynomials over Q with degrevlex term order, sized for
// desk-scale Groebner runs (exponents fit in int).

struct Expo {
  std::vector<int> e;
  int deg = 0;
};

inline Expo make_expo(std::vector<int> e) {
  Expo x{std::move(e), 0};
  for (int v : x.e) x.deg += v;
  return x;
}

// a < b in degrevlex: smaller total degree, or equal degree and the
// rightmost differing exponent of a is larger.
inline bool degrevlex_less(const Expo& a, const Expo& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

inline bool divides(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Expo expo_mul(const Expo& a, const Expo& b) {
  Expo r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  r.deg += b.deg;
  return r;
}

inline Expo expo_div(const Expo& a, const Expo& b) {  // assumes b | a
  Expo r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
  r.deg -= b.deg;
  return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r = a;
  r.deg = 0;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    r.deg += r.e[i];
  }
  return r;
}

inline bool expo_coprime(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

class MPoly {
 public:
  explicit MPoly(int nvars) : nvars_(nvars) {}
  // Terms may be unsorted and contain duplicates; they get merged.
  MPoly(int nvars, std::vector<std::pair<Expo, Rational>> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Terms in strictly descending degrevlex order.
  const std::vector<std::pair<Expo, Rational>>& terms() const { return terms_; }
  const Expo& leading_expo() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.deg; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly mul_term(const Expo& x, const Rational& c) const;
  MPoly partial(int var) const;

 private:
  int nvars_;
  std::vector<std::pair<Expo, Rational>> terms_;
};

struct GroebnerBudget {
  int max_reductions = 10000;  // S-polynomial reductions
  int max_degree = 40;         // total degree of any pair lcm
};

struct GroebnerResult {
  std::vector<MPoly> basis;  // minimal Groebner basis when completed
  bool completed = false;    // false: a budget was hit, basis is partial
};

GroebnerResult buchberger(std::vector<MPoly> gens, const GroebnerBudget& budget = {});

// Remainder of f under full multivariate division by the basis.
MPoly normal_form(MPoly f, const std::vector<MPoly>& basis);

// Leading-term criterion for dim V(I) <= 0: every variable carries a pure
// power among the leading terms of a Groebner basis.
bool zero_dimensional(const std::vector<MPoly>& groebner_basis, int nvars);

}  // namespace lgcalc

#endif

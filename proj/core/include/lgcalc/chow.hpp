#ifndef LGCALC_CHOW_HPP
#define LGCALC_CHOW_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgcalc/rational.hpp"
#include "lgcalc/weights.hpp"

namespace lgcalc {

// Registry of formal bundles.  Bundle k of rank rho contributes generators
// c_1,...,c_rho of degrees 1..rho; monomials of degree beyond the truncation
// are identically zero.
class GradedRing {
 public:
  explicit GradedRing(int truncation) : truncation_(truncation) {}

  int add_bundle(std::string name, int rank) {
    bundles_.push_back({std::move(name), rank});
    return static_cast<int>(bundles_.size()) - 1;
  }
  int num_bundles() const { return static_cast<int>(bundles_.size()); }
  int rank(int bundle) const { return bundles_[bundle].rank; }
  const std::string& name(int bundle) const { return bundles_[bundle].name; }
  int truncation() const { return truncation_; }

 private:
  struct Bundle {
    std::string name;
    int rank;
  };
  std::vector<Bundle> bundles_;
  int truncation_;
};

// c_index(bundle)^power; index >= 1, power >= 1.
struct ChernPower {
  int bundle;
  int index;
  int power;

  friend auto operator<=>(const ChernPower&, const ChernPower&) = default;
};

struct ClassMonomial {
  std::vector<ChernPower> factors;  // sorted by (bundle, index)
  int degree = 0;                   // sum of index * power

  friend bool operator==(const ClassMonomial& a, const ClassMonomial& b) {
    return a.factors == b.factors;
  }
  // Degree first, then lexicographic on the factor list.
  friend bool operator<(const ClassMonomial& a, const ClassMonomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.factors < b.factors;
  }
};

// Sparse element of the truncated ring, terms in canonical order.
class RingElem {
 public:
  RingElem() = default;
  static RingElem constant(const Rational& c);
  static RingElem one() { return constant(Rational(1)); }
  // c_index(bundle); zero when index exceeds the rank or the truncation.
  static RingElem chern(const GradedRing& ring, int bundle, int index);

  bool is_zero() const { return terms_.empty(); }
  const std::map<ClassMonomial, Rational>& terms() const { return terms_; }
  // The coefficient of the empty monomial when no other term is present.
  std::optional<Rational> as_constant() const;

  RingElem scaled(const Rational& c) const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b) { return a.terms_ == b.terms_; }

 private:
  friend RingElem mul(const GradedRing&, const RingElem&, const RingElem&);
  std::map<ClassMonomial, Rational> terms_;
};

RingElem mul(const GradedRing& ring, const RingElem& a, const RingElem& b);
std::string to_string(const GradedRing& ring, const RingElem& e);

// Polynomial/series in t with ring coefficients.  `trunc` absent means the
// series is exact; operations propagate the tightest truncation.
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(std::optional<int> trunc) : trunc_(trunc) {}
  static GradedSeries constant(const Rational& c);

  std::optional<int> truncation() const { return trunc_; }
  const std::map<int, RingElem>& coefficients() const { return coeffs_; }
  RingElem coeff(int k) const;
  void set_coeff(int k, RingElem e);

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);

 private:
  std::optional<int> trunc_;
  std::map<int, RingElem> coeffs_;  // only nonzero entries
};

GradedSeries series_mul(const GradedRing& ring, const GradedSeries& a, const GradedSeries& b);

// 1 + c_1 t + ... + c_rho t^rho.
GradedSeries chern_series(const GradedRing& ring, int bundle);

// Substitute t -> t/e: the t^i coefficient picks up e^{-i}.
GradedSeries scale_argument(const GradedSeries& s, const Rational& e);

// Multiplicative inverse through t^T; the constant coefficient must be a
// nonzero rational multiple of 1 (NonUnitConstantTermError).
GradedSeries invert(const GradedRing& ring, const GradedSeries& s, int T);

// Multiply by t^k.
GradedSeries shift(const GradedSeries& s, int k);

struct FreeCaseInput {
  std::vector<int> ranks;    // r_j = rank R^0
  std::vector<int> coranks;  // s_j = rank R^1
  WeightSystem weights;      // per-variable (delta_j, d_j)
  int truncation = 0;        // ring truncation (base dimension)
  // Per-bundle numeric mode: the base is a point there, positive-degree
  // classes vanish.  Empty = all formal.
  std::vector<bool> numeric;

  bool numeric_at(int j) const { return !numeric.empty() && numeric[j]; }
  int total_rank() const;
  int total_corank() const;
};

// Bundles F_1..F_n (ranks) then G_1..G_n (coranks).
GradedRing make_free_case_ring(const FreeCaseInput& in);
inline int f_bundle(int j) { return j; }
inline int g_bundle(const FreeCaseInput& in, int j) {
  return static_cast<int>(in.ranks.size()) + j;
}

// Coeff_{t^{s-r}} of prod_j eps_j^{s_j} c(G_j)(t/eps_j) over
// prod_j delta_j^{r_j} c(F_j)(t/delta_j), with eps_j = delta_j - d_j; the
// zero class when s < r.  Throws EpsilonZeroError when some delta_j = d_j.
RingElem free_case_class(const GradedRing& ring, const FreeCaseInput& in);

// t^r * (prod_j e_j^{r_j} c(F_j)(t/e_j))^{-1} through t^T, for positive
// integer weights e_j.  Ring must contain bundles F_1..F_n with the given
// ranks (make_segre_ring).
GradedRing make_segre_ring(const std::vector<int>& ranks, int truncation);
GradedSeries weighted_segre_series(const GradedRing& ring, const std::vector<int>& ranks,
                                   const std::vector<Int>& e, int T);

struct ConcavityReport {
  RingElem lhs;  // free-case class at r = 0
  RingElem rhs;  // c_top(G) = prod_j c_{s_j}(G_j)
  bool equal = false;
};
ConcavityReport check_concavity(const std::vector<int>& coranks, const WeightSystem& w, int D);

struct IndexZeroReport {
  Rational computed;        // prod eps_j^{s_j} / prod delta_j^{r_j}
  bool factor_defined = false;
  Rational factor;          // prod s_j / prod r_j when defined
  Rational printed;         // computed * factor when defined
  bool flagged = false;     // printed formula disagrees (or is undefined)
};
IndexZeroReport check_index_zero(const std::vector<int>& ranks_eq_coranks, const WeightSystem& w);

// n = 1, delta = 1 specialization with eps = 1 - d; requires d >= 2.  The
// ring must come from make_free_case_ring of the matching input.
RingElem n1_corollary_class(const GradedRing& ring, int r, int s, const Int& d);

}  // namespace lgcalc

#endif

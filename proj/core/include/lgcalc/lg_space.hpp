#ifndef LGCALC_LG_SPACE_HPP
#define LGCALC_LG_SPACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgcalc/diagonal_group.hpp"
#include "lgcalc/mpoly.hpp"
#include "lgcalc/polynomial.hpp"
#include "lgcalc/weights.hpp"

namespace lgcalc {

enum class Tri { yes, no, indeterminate };

struct NondegeneracyReport {
  bool no_cross_terms = false;
  // Zero-dimensionality of the Jacobian ideal, decided by a degrevlex
  // Groebner basis over Q; indeterminate when the budget ran out or the
  // cross-term check already failed.
  Tri isolated_origin = Tri::indeterminate;

  bool nondegenerate() const { return no_cross_terms && isolated_origin == Tri::yes; }
};

NondegeneracyReport check_nondegenerate(const QuasiHomogPoly& W, const WeightSystem& w,
                                        const GroebnerBudget& budget = {});

// ker of the exponent-matrix pairing; throws InfiniteAutError when the
// exponent matrix has rank < n.
DiagonalGroup aut_group(const QuasiHomogPoly& W);

struct GroupSpec {
  enum class Kind { aut, minimal, explicit_gens };
  Kind kind = Kind::aut;
  std::vector<PhaseVec> generators;  // used for explicit_gens

  static GroupSpec aut() { return {Kind::aut, {}}; }
  static GroupSpec minimal() { return {Kind::minimal, {}}; }
  static GroupSpec explicit_gens(std::vector<PhaseVec> gens) {
    return {Kind::explicit_gens, std::move(gens)};
  }
};

// An LG space: a quasi-homogeneous polynomial with its weight system, a group
// G with <j> <= G <= Aut(W), and the cached invariant lattice with integral
// monomial weights.
class LgSpace {
 public:
  LgSpace() = default;  // the empty space (n = 0)

  static LgSpace build(QuasiHomogPoly W, const GroupSpec& spec,
                       std::optional<WeightSystem> weights = std::nullopt);
  static LgSpace empty();

  bool is_empty() const { return !W_.has_value(); }
  int nvars() const { return W_ ? W_->nvars() : 0; }
  const QuasiHomogPoly& polynomial() const { return *W_; }
  const WeightSystem& weights() const { return weights_; }
  const DiagonalGroup& group() const { return G_; }
  PhaseVec j() const { return j_element(weights_); }

  // HNF basis of the invariant lattice, one monomial per row, with its
  // integral weights.
  const std::vector<LaurentMonomial>& lambda_basis() const { return lambda_basis_; }
  const std::vector<Int>& lambda_weights() const { return lambda_weights_; }

 private:
  friend LgSpace product_space(const LgSpace&, const LgSpace&);
  void compute_lambda();
  std::optional<QuasiHomogPoly> W_;
  WeightSystem weights_;
  DiagonalGroup G_ = DiagonalGroup::trivial(0);
  std::vector<LaurentMonomial> lambda_basis_;
  std::vector<Int> lambda_weights_;
};

// w(m) = (sum_j c_j delta_j) / d per block; requires m invariant under the
// space's group (NotInvariantError) and integrality (NonIntegralWeightError).
Int monomial_weight(const LgSpace& space, const LaurentMonomial& m);

// Variables concatenated, W_A + W_B on disjoint variables, G_A x G_B,
// weight blocks kept side by side.
LgSpace product_space(const LgSpace& a, const LgSpace& b);

}  // namespace lgcalc

#endif

#ifndef LGCALC_WEIGHTS_HPP
#define LGCALC_WEIGHTS_HPP

#include <string>
#include <vector>

#include "lgcalc/phase.hpp"
#include "lgcalc/polynomial.hpp"
#include "lgcalc/rational.hpp"

namespace lgcalc {

// One quasi-homogeneity datum (d; delta_1..delta_k), d >= 1, delta_j >= 1,
// gcd(delta_1,...,delta_k, d) = 1.
struct WeightBlock {
  Int d;
  std::vector<Int> delta;
};

// Weight data per variable.  A plain LG space has a single block; a product
// of spaces keeps one block per factor, so each variable carries its own
// (delta_j, d_j) pair.
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(WeightBlock block);

  static WeightSystem concat(const WeightSystem& a, const WeightSystem& b);

  int nvars() const { return static_cast<int>(var_block_.size()); }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  bool single_block() const { return blocks_.size() == 1; }

  const Int& delta(int j) const { return blocks_[var_block_[j]].delta[var_offset_[j]]; }
  const Int& d_of(int j) const { return blocks_[var_block_[j]].d; }
  int block_of(int j) const { return var_block_[j]; }
  Rational ratio(int j) const { return Rational(delta(j), d_of(j)); }

  std::string str() const;

 private:
  std::vector<WeightBlock> blocks_;
  std::vector<int> var_block_, var_offset_;
};

// The unique primitive positive integral (d, delta) with
// sum_j m_aj * delta_j = d for every term a.  Throws
// NotQuasiHomogeneousError / AmbiguousWeightsError / NoPositiveSolutionError.
WeightSystem infer_weights(const QuasiHomogPoly& W);

// Every term satisfies its block's weight equation, with the term's support
// confined to a single block.
bool satisfies(const QuasiHomogPoly& W, const WeightSystem& w);

// Phases (delta_1/d_1, ..., delta_n/d_n) of the exponential grading element.
PhaseVec j_element(const WeightSystem& w);

}  // namespace lgcalc

#endif

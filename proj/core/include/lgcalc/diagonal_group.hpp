#ifndef LGCALC_DIAGONAL_GROUP_HPP
#define LGCALC_DIAGONAL_GROUP_HPP

#include <vector>

#include "lgcalc/int_matrix.hpp"
#include "lgcalc/phase.hpp"

namespace lgcalc {

// A finite subgroup of the diagonal torus, with elements recorded as phase
// vectors in (Q/Z)^n.  Every instance is canonical: the generators realize the
// invariant-factor decomposition, and `dual_basis` is the Hermite normal form
// of the lattice of integer vectors pairing integrally with the whole group.
// Two instances describe the same subgroup iff their dual bases are equal.
class DiagonalGroup {
 public:
  static DiagonalGroup trivial(int ambient_dim);
  static DiagonalGroup from_generators(int ambient_dim, const std::vector<PhaseVec>& gens);

  int ambient_dim() const { return ambient_dim_; }
  // One generator per invariant factor; generator k has exact order
  // invariant_factors()[k] and the sum of the cyclic pieces is direct.
  const std::vector<PhaseVec>& generators() const { return generators_; }
  // Ascending divisibility chain, every entry > 1; empty for the trivial group.
  const std::vector<Int>& invariant_factors() const { return invariant_factors_; }
  const Int& order() const { return order_; }
  // Rank-n lattice of exponent vectors invariant under the group, HNF rows.
  // Its index in Z^n equals the group order.
  const IntMatrix& dual_basis() const { return dual_basis_; }

  bool contains(const PhaseVec& theta) const;
  PhaseVec identity_element() const { return zero_phases(ambient_dim_); }

  // Element for coordinates (a_1,...,a_k) against the invariant-factor
  // generators; coordinates are reduced mod the factors.
  PhaseVec element_at(const std::vector<Int>& coords) const;

  // All elements in lexicographic order of the invariant-factor coordinates
  // (first coordinate most significant).  Throws CapExceededError when the
  // order exceeds `cap`.
  std::vector<PhaseVec> elements(const Int& cap = Int(1000000)) const;

  DiagonalGroup product(const DiagonalGroup& other) const;

  friend bool operator==(const DiagonalGroup& a, const DiagonalGroup& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.dual_basis_ == b.dual_basis_;
  }

 private:
  DiagonalGroup() = default;
  int ambient_dim_ = 0;
  std::vector<PhaseVec> generators_;
  std::vector<Int> invariant_factors_;
  Int order_ = 1;
  IntMatrix dual_basis_;
};

// The group {theta in (Q/Z)^n : M*theta is integral}.  Requires rank(M) = n;
// otherwise throws InfiniteKernelError carrying a nonzero rational kernel
// vector.  The order equals |det M| when M is square.
DiagonalGroup phase_kernel(const IntMatrix& M);

// HNF basis of {c in Z^n : c . theta is integral for every theta in G}.
inline const IntMatrix& dual_lattice(const DiagonalGroup& g) { return g.dual_basis(); }

}  // namespace lgcalc

#endif

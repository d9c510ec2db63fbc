#ifndef LGCALC_SECTORS_HPP
#define LGCALC_SECTORS_HPP

#include <vector>

#include "lgcalc/lg_space.hpp"

namespace lgcalc {

// A sector is a group element read as the monodromy representation it
// generates: zeta_r maps to the phase vector theta, r = order(theta).
struct Sector {
  PhaseVec theta;
  Int r;
};

// Requires theta in G (NotInGroupError).  The cyclic representation attached
// to a group element is automatically faithful.
Sector sector_of(const LgSpace& space, const PhaseVec& theta);

// Narrow: every coordinate projection is nontrivial.
bool is_narrow(const PhaseVec& theta);
inline bool is_narrow(const Sector& s) { return is_narrow(s.theta); }

struct SectorTuple {
  int genus = 0;
  std::vector<Sector> sectors;

  int length() const { return static_cast<int>(sectors.size()); }
};

// Selection rule: for every j, delta_j (2g - 2 + ell) / d - sum_i Theta^i_j
// is an integer, the sum running over the ell markings.
bool is_admissible(const LgSpace& space, const SectorTuple& tuple);

// All ordered ell-tuples of group elements passing is_admissible (and
// is_narrow on every slot when narrow_only), in lexicographic order of the
// invariant-factor coordinates.  Throws CapExceededError when |G|^ell > cap.
std::vector<SectorTuple> enumerate_admissible(const LgSpace& space, int genus, int ell,
                                              bool narrow_only, const Int& cap = Int(1000000));

// Orbifold degrees deg L_j = delta_j (2g - 2 + ell) / d_j.
std::vector<Rational> line_bundle_degrees(int genus, int ell, const LgSpace& space);

// chi_j = (1 - g) + deg L_j - sum_i Theta^i_j; integral for admissible
// tuples, otherwise NonIntegralError.
std::vector<Rational> euler_characteristics(const LgSpace& space, const SectorTuple& tuple);

// (n - 3)(1 - g) + ell + sum_j deg L_j - sum_{i,j} Theta^i_j, checked
// integral.
Int virtual_dimension(const LgSpace& space, const SectorTuple& tuple);

}  // namespace lgcalc

#endif

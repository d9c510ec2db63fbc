#include "lgcalc/sectors.hpp"

#include "lgcalc/errors.hpp"

namespace lgcalc {

Sector sector_of(const LgSpace& space, const PhaseVec& theta) {
  if (!space.group().contains(theta)) throw NotInGroupError();
  return Sector{theta, element_order(theta)};
}

bool is_narrow(const PhaseVec& theta) {
  if (theta.empty()) return false;
  for (const auto& p : theta)
    if (p.is_zero()) return false;
  return true;
}

bool is_admissible(const LgSpace& space, const SectorTuple& tuple) {
  const int ell = tuple.length();
  const long chi_arg = 2L * tuple.genus - 2 + ell;
  for (int j = 0; j < space.nvars(); ++j) {
    Rational lhs = space.weights().ratio(j) * Rational(chi_arg);
    for (const auto& s : tuple.sectors) lhs -= s.theta[j].value();
    if (!lhs.is_integer()) return false;
  }
  return true;
}

std::vector<SectorTuple> enumerate_admissible(const LgSpace& space, int genus, int ell,
                                              bool narrow_only, const Int& cap) {
  Int count = 1;
  for (int i = 0; i < ell; ++i) count *= space.group().order();
  if (count > cap) throw CapExceededError(count.get_str());

  const std::vector<PhaseVec> elements = space.group().elements(cap);
  std::vector<bool> narrow(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) narrow[k] = is_narrow(elements[k]);

  std::vector<SectorTuple> out;
  std::vector<std::size_t> idx(ell, 0);
  for (;;) {
    bool ok = true;
    if (narrow_only)
      for (int i = 0; i < ell && ok; ++i) ok = narrow[idx[i]];
    if (ok) {
      SectorTuple t;
      t.genus = genus;
      for (int i = 0; i < ell; ++i)
        t.sectors.push_back(Sector{elements[idx[i]], element_order(elements[idx[i]])});
      if (is_admissible(space, t)) out.push_back(std::move(t));
    }
    int k = ell - 1;
    while (k >= 0) {
      if (++idx[k] < elements.size()) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<Rational> line_bundle_degrees(int genus, int ell, const LgSpace& space) {
  const long chi_arg = 2L * genus - 2 + ell;
  std::vector<Rational> deg(space.nvars());
  for (int j = 0; j < space.nvars(); ++j) deg[j] = space.weights().ratio(j) * Rational(chi_arg);
  return deg;
}

std::vector<Rational> euler_characteristics(const LgSpace& space, const SectorTuple& tuple) {
  const auto deg = line_bundle_degrees(tuple.genus, tuple.length(), space);
  std::vector<Rational> chi(space.nvars());
  for (int j = 0; j < space.nvars(); ++j) {
    chi[j] = Rational(1 - tuple.genus) + deg[j];
    for (const auto& s : tuple.sectors) chi[j] -= s.theta[j].value();
    if (!chi[j].is_integer())
      throw NonIntegralError("chi_" + std::to_string(j + 1) +
                             " is not an integer; tuple is not admissible");
  }
  return chi;
}

Int virtual_dimension(const LgSpace& space, const SectorTuple& tuple) {
  const int n = space.nvars();
  Rational vd = Rational((n - 3) * (1 - tuple.genus) + tuple.length());
  for (const auto& d : line_bundle_degrees(tuple.genus, tuple.length(), space)) vd += d;
  for (const auto& s : tuple.sectors)
    for (const auto& p : s.theta) vd -= p.value();
  if (!vd.is_integer())
    throw NonIntegralError("virtual dimension is not an integer; tuple is not admissible");
  return vd.numerator();
}

}  // namespace lgcalc

#include "lgcalc/diagonal_group.hpp"

#include <cassert>

#include "lgcalc/errors.hpp"

namespace lgcalc {

namespace {

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  s.reserve(v.size());
  for (const auto& r : v) s.push_back(r.str());
  return s;
}

// Invariant-factor data read off a Smith decomposition of a full-rank
// constraint matrix M: theta = V*(e_k/d_k) generates the k-th cyclic piece.
struct KernelData {
  std::vector<PhaseVec> generators;
  std::vector<Int> invariant_factors;
  Int order = 1;
};

KernelData kernel_data(const IntMatrix& M) {
  const int n = M.cols();
  SmithDecomposition s = smith_normal_form(M);
  if (s.rank < n) {
    std::vector<Rational> witness(n);
    for (int i = 0; i < n; ++i) witness[i] = Rational(s.V.at(i, s.rank));
    throw InfiniteKernelError(rational_strings(witness));
  }
  KernelData out;
  for (int k = 0; k < n; ++k) {
    const Int& d = s.D.at(k, k);
    out.order *= d;
    if (d == 1) continue;
    PhaseVec g(n);
    for (int i = 0; i < n; ++i) g[i] = Phase(Rational(s.V.at(i, k), d));
    out.generators.push_back(std::move(g));
    out.invariant_factors.push_back(d);
  }
  return out;
}

// Basis (rows) of {c in Z^n : c . g is integral for every listed g}.
IntMatrix invariant_lattice(int n, const std::vector<PhaseVec>& gens) {
  if (gens.empty()) return IntMatrix::identity(n);
  Int L = 1;
  for (const auto& g : gens)
    for (const auto& p : g) L = lcm(L, p.denominator());
  const int s = static_cast<int>(gens.size());
  IntMatrix A(s, n);
  for (int k = 0; k < s; ++k)
    for (int j = 0; j < n; ++j) {
      const Rational& v = gens[k][j].value();
      A.at(k, j) = v.numerator() * (L / v.denominator());
    }
  // A*c = 0 (mod L)  <=>  D*(V^-1 c) = 0 (mod L): coordinate k of V^-1 c must
  // be a multiple of L / gcd(d_k, L).
  SmithDecomposition sd = smith_normal_form(A);
  IntMatrix basis(n, n);
  for (int k = 0; k < n; ++k) {
    Int mult = 1;
    if (k < sd.rank) mult = L / gcd(sd.D.at(k, k), L);
    for (int i = 0; i < n; ++i) basis.at(k, i) = mult * sd.V.at(i, k);
  }
  return hermite_normal_form(basis);
}

}  // namespace

DiagonalGroup DiagonalGroup::trivial(int ambient_dim) {
  return from_generators(ambient_dim, {});
}

DiagonalGroup DiagonalGroup::from_generators(int ambient_dim, const std::vector<PhaseVec>& gens) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != ambient_dim)
      throw LgError(ErrorKind::semantic, "generator dimension mismatch");
  DiagonalGroup out;
  out.ambient_dim_ = ambient_dim;
  out.dual_basis_ = invariant_lattice(ambient_dim, gens);
  KernelData k = kernel_data(out.dual_basis_);  // full rank by construction
  out.generators_ = std::move(k.generators);
  out.invariant_factors_ = std::move(k.invariant_factors);
  out.order_ = std::move(k.order);
  return out;
}

DiagonalGroup phase_kernel(const IntMatrix& M) {
  KernelData k = kernel_data(M);
  return DiagonalGroup::from_generators(M.cols(), k.generators);
}

bool DiagonalGroup::contains(const PhaseVec& theta) const {
  if (static_cast<int>(theta.size()) != ambient_dim_) return false;
  for (int r = 0; r < dual_basis_.rows(); ++r) {
    Rational pairing(0);
    for (int j = 0; j < ambient_dim_; ++j)
      pairing += Rational(dual_basis_.at(r, j)) * theta[j].value();
    if (!pairing.is_integer()) return false;
  }
  return true;
}

PhaseVec DiagonalGroup::element_at(const std::vector<Int>& coords) const {
  assert(coords.size() == generators_.size());
  PhaseVec acc = identity_element();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    PhaseVec g(ambient_dim_);
    for (int j = 0; j < ambient_dim_; ++j)
      g[j] = Phase(Rational(coords[k]) * generators_[k][j].value());
    acc = add(acc, g);
  }
  return acc;
}

std::vector<PhaseVec> DiagonalGroup::elements(const Int& cap) const {
  if (order_ > cap) throw CapExceededError(order_.get_str());
  std::vector<PhaseVec> out;
  out.reserve(static_cast<std::size_t>(order_.get_ui()));
  std::vector<Int> coords(generators_.size(), 0);
  for (;;) {
    out.push_back(element_at(coords));
    int k = static_cast<int>(coords.size()) - 1;
    while (k >= 0) {
      coords[k] += 1;
      if (coords[k] < invariant_factors_[k]) break;
      coords[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

DiagonalGroup DiagonalGroup::product(const DiagonalGroup& other) const {
  const int n = ambient_dim_ + other.ambient_dim_;
  std::vector<PhaseVec> gens;
  for (const auto& g : generators_) {
    PhaseVec v = g;
    v.resize(n);
    gens.push_back(std::move(v));
  }
  for (const auto& g : other.generators_) {
    PhaseVec v = zero_phases(ambient_dim_);
    v.insert(v.end(), g.begin(), g.end());
    gens.push_back(std::move(v));
  }
  return from_generators(n, gens);
}

}  // namespace lgcalc

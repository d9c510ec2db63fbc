#include "lgcalc/mpoly.hpp"

#include <algorithm>
#include <deque>

namespace lgcalc {

MPoly::MPoly(int nvars, std::vector<std::pair<Expo, Rational>> terms) : nvars_(nvars) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return degrevlex_less(b.first, a.first); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first.e == t.first.e)
      terms_.back().second += t.second;
    else
      terms_.push_back(std::move(t));
    if (terms_.back().second.is_zero()) terms_.pop_back();
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  std::vector<std::pair<Expo, Rational>> out;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && degrevlex_less(o.terms_[j].first, terms_[i].first))) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || degrevlex_less(terms_[i].first, o.terms_[j].first)) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  MPoly r(nvars_);
  r.terms_ = std::move(out);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly neg(nvars_);
  neg.terms_ = o.terms_;
  for (auto& t : neg.terms_) t.second = -t.second;
  return *this + neg;
}

MPoly MPoly::mul_term(const Expo& x, const Rational& c) const {
  MPoly r(nvars_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    t.first = expo_mul(t.first, x);
    t.second *= c;
  }
  return r;
}

MPoly MPoly::partial(int var) const {
  std::vector<std::pair<Expo, Rational>> out;
  for (const auto& t : terms_) {
    if (t.first.e[var] == 0) continue;
    Expo x = t.first;
    Rational c = t.second * Rational(x.e[var]);
    x.e[var] -= 1;
    x.deg -= 1;
    out.emplace_back(std::move(x), std::move(c));
  }
  return MPoly(nvars_, std::move(out));
}

// Full reduction by the basis; the remainder's terms are all irreducible.
MPoly normal_form(MPoly f, const std::vector<MPoly>& basis) {
  std::vector<std::pair<Expo, Rational>> remainder;
  while (!f.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (divides(g.leading_expo(), f.leading_expo())) {
        Expo q = expo_div(f.leading_expo(), g.leading_expo());
        f = f - g.mul_term(q, f.leading_coeff() / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(f.terms().front());
      MPoly lead(f.nvars(), {f.terms().front()});
      f = f - lead;
    }
  }
  return MPoly(f.nvars(), std::move(remainder));
}

namespace {

struct Pair {
  int i, j;
  Expo lcm;
};

}  // namespace

GroebnerResult buchberger(std::vector<MPoly> gens, const GroebnerBudget& budget) {
  std::vector<MPoly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  if (basis.empty()) return {basis, true};

  auto push_pairs = [&](std::deque<Pair>& pairs, int k) {
    for (int i = 0; i < k; ++i)
      pairs.push_back({i, k, expo_lcm(basis[i].leading_expo(), basis[k].leading_expo())});
  };

  std::deque<Pair> pairs;
  for (int k = 1; k < static_cast<int>(basis.size()); ++k) push_pairs(pairs, k);

  int reductions = 0;
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (degrevlex_less(it->lcm, best->lcm)) best = it;
    Pair p = *best;
    pairs.erase(best);

    const MPoly& f = basis[p.i];
    const MPoly& g = basis[p.j];
    // Buchberger's product criterion.
    if (expo_coprime(f.leading_expo(), g.leading_expo())) continue;
    // Chain criterion: a third leading term dividing the lcm, with both
    // associated pairs already dispatched.
    bool chained = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis[k].leading_expo(), p.lcm)) continue;
      bool pending = false;
      for (const auto& q : pairs)
        if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k)) ||
            (q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) {
          pending = true;
          break;
        }
      if (!pending) chained = true;
    }
    if (chained) continue;

    if (p.lcm.deg > budget.max_degree) return {basis, false};
    if (++reductions > budget.max_reductions) return {basis, false};

    MPoly s = f.mul_term(expo_div(p.lcm, f.leading_expo()), Rational(1) / f.leading_coeff()) -
              g.mul_term(expo_div(p.lcm, g.leading_expo()), Rational(1) / g.leading_coeff());
    MPoly r = normal_form(std::move(s), basis);
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    push_pairs(pairs, static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop members whose leading term another member divides.
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
      if (i != j && divides(basis[j].leading_expo(), basis[i].leading_expo()) &&
          !(basis[j].leading_expo().e == basis[i].leading_expo().e && j > i))
        redundant = true;
    if (!redundant) minimal.push_back(basis[i]);
  }
  return {std::move(minimal), true};
}

bool zero_dimensional(const std::vector<MPoly>& groebner_basis, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    bool pure = false;
    for (const auto& g : groebner_basis) {
      if (g.is_zero()) continue;
      const Expo& lt = g.leading_expo();
      bool ok = true;
      for (int j = 0; j < nvars; ++j)
        if (j != v && lt.e[j] != 0) {
          ok = false;
          break;
        }
      if (ok) {
        pure = true;
        break;
      }
    }
    if (!pure) return false;
  }
  return true;
}

}  // namespace lgcalc

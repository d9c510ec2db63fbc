#include "lgcalc/chow.hpp"

#include <algorithm>

#include "lgcalc/errors.hpp"

namespace lgcalc {

RingElem RingElem::constant(const Rational& c) {
  RingElem e;
  if (!c.is_zero()) e.terms_[ClassMonomial{}] = c;
  return e;
}

RingElem RingElem::chern(const GradedRing& ring, int bundle, int index) {
  if (index == 0) return one();
  if (index > ring.rank(bundle) || index > ring.truncation()) return RingElem{};
  RingElem e;
  e.terms_[ClassMonomial{{ChernPower{bundle, index, 1}}, index}] = Rational(1);
  return e;
}

std::optional<Rational> RingElem::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.factors.empty()) return terms_.begin()->second;
  return std::nullopt;
}

RingElem RingElem::scaled(const Rational& c) const {
  RingElem out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
  return out;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  RingElem out = a;
  for (const auto& [m, v] : b.terms_) {
    auto it = out.terms_.find(m);
    if (it == out.terms_.end()) {
      out.terms_[m] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

RingElem operator-(const RingElem& a, const RingElem& b) { return a + b.scaled(Rational(-1)); }

namespace {

// Merge two sorted factor lists; degree addition may exceed the truncation,
// in which case the product is zero.
std::optional<ClassMonomial> mono_mul(const ClassMonomial& a, const ClassMonomial& b, int trunc) {
  if (a.degree + b.degree > trunc) return std::nullopt;
  ClassMonomial out;
  out.degree = a.degree + b.degree;
  auto i = a.factors.begin();
  auto j = b.factors.begin();
  while (i != a.factors.end() || j != b.factors.end()) {
    if (j == b.factors.end() ||
        (i != a.factors.end() &&
         std::pair{i->bundle, i->index} < std::pair{j->bundle, j->index})) {
      out.factors.push_back(*i++);
    } else if (i == a.factors.end() ||
               std::pair{j->bundle, j->index} < std::pair{i->bundle, i->index}) {
      out.factors.push_back(*j++);
    } else {
      out.factors.push_back(ChernPower{i->bundle, i->index, i->power + j->power});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RingElem mul(const GradedRing& ring, const RingElem& a, const RingElem& b) {
  RingElem out;
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      auto m = mono_mul(ma, mb, ring.truncation());
      if (!m) continue;
      Rational& slot = out.terms_[*m];
      slot += va * vb;
      if (slot.is_zero()) out.terms_.erase(*m);
    }
  return out;
}

std::string to_string(const GradedRing& ring, const RingElem& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (const auto& f : m.factors) {
      if (!mono.empty()) mono += "*";
      mono += "c" + std::to_string(f.index) + "(" + ring.name(f.bundle) + ")";
      if (f.power > 1) mono += "^" + std::to_string(f.power);
    }
    if (mono.empty())
      s += c.str();
    else if (c == Rational(1))
      s += mono;
    else
      s += c.str() + "*" + mono;
  }
  return s;
}

GradedSeries GradedSeries::constant(const Rational& c) {
  GradedSeries s;
  if (!c.is_zero()) s.coeffs_[0] = RingElem::constant(c);
  return s;
}

RingElem GradedSeries::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? RingElem{} : it->second;
}

void GradedSeries::set_coeff(int k, RingElem e) {
  if (e.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = std::move(e);
}

namespace {

std::optional<int> min_trunc(const std::optional<int>& a, const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries out(min_trunc(a.truncation(), b.truncation()));
  for (const auto& [k, e] : a.coefficients()) {
    if (out.truncation() && k > *out.truncation()) continue;
    out.set_coeff(k, e);
  }
  for (const auto& [k, e] : b.coefficients()) {
    if (out.truncation() && k > *out.truncation()) continue;
    out.set_coeff(k, out.coeff(k) + e);
  }
  return out;
}

GradedSeries series_mul(const GradedRing& ring, const GradedSeries& a, const GradedSeries& b) {
  GradedSeries out(min_trunc(a.truncation(), b.truncation()));
  for (const auto& [i, ea] : a.coefficients())
    for (const auto& [j, eb] : b.coefficients()) {
      const int k = i + j;
      if (out.truncation() && k > *out.truncation()) continue;
      RingElem p = mul(ring, ea, eb);
      if (!p.is_zero()) out.set_coeff(k, out.coeff(k) + p);
    }
  return out;
}

GradedSeries chern_series(const GradedRing& ring, int bundle) {
  GradedSeries s;  // exact polynomial
  s.set_coeff(0, RingElem::one());
  for (int i = 1; i <= ring.rank(bundle); ++i) s.set_coeff(i, RingElem::chern(ring, bundle, i));
  return s;
}

GradedSeries scale_argument(const GradedSeries& s, const Rational& e) {
  if (e.is_zero()) throw ZeroScaleError();
  GradedSeries out(s.truncation());
  for (const auto& [k, c] : s.coefficients()) out.set_coeff(k, c.scaled(pow(e, -long(k))));
  return out;
}

GradedSeries invert(const GradedRing& ring, const GradedSeries& s, int T) {
  auto c0 = s.coeff(0).as_constant();
  if (!c0 || c0->is_zero()) throw NonUnitConstantTermError();
  const Rational inv0 = Rational(1) / *c0;

  // N = 1 - S/c0 has no t^0 part, so the geometric series terminates at T.
  GradedSeries n(T);
  for (const auto& [k, e] : s.coefficients()) {
    if (k == 0 || k > T) continue;
    n.set_coeff(k, e.scaled(-inv0));
  }
  GradedSeries acc(T);
  acc.set_coeff(0, RingElem::one());
  GradedSeries power(T);
  power.set_coeff(0, RingElem::one());
  for (int k = 1; k <= T; ++k) {
    power = series_mul(ring, power, n);
    acc = acc + power;
  }
  GradedSeries out(T);
  for (const auto& [k, e] : acc.coefficients()) out.set_coeff(k, e.scaled(inv0));
  return out;
}

GradedSeries shift(const GradedSeries& s, int k) {
  std::optional<int> t = s.truncation();
  if (t) t = *t + k;
  GradedSeries out(t);
  for (const auto& [i, e] : s.coefficients()) out.set_coeff(i + k, e);
  return out;
}

int FreeCaseInput::total_rank() const {
  int r = 0;
  for (int x : ranks) r += x;
  return r;
}

int FreeCaseInput::total_corank() const {
  int s = 0;
  for (int x : coranks) s += x;
  return s;
}

GradedRing make_free_case_ring(const FreeCaseInput& in) {
  GradedRing ring(in.truncation);
  for (std::size_t j = 0; j < in.ranks.size(); ++j)
    ring.add_bundle("F" + std::to_string(j + 1), in.ranks[j]);
  for (std::size_t j = 0; j < in.coranks.size(); ++j)
    ring.add_bundle("G" + std::to_string(j + 1), in.coranks[j]);
  return ring;
}

namespace {

void check_free_case_input(const FreeCaseInput& in) {
  const std::size_t n = in.ranks.size();
  if (in.coranks.size() != n || in.weights.nvars() != static_cast<int>(n))
    throw LgError(ErrorKind::semantic, "rank vectors must have length n");
  if (!in.numeric.empty() && in.numeric.size() != n)
    throw LgError(ErrorKind::semantic, "numeric-mode vector must have length n");
  for (std::size_t j = 0; j < n; ++j)
    if (in.weights.delta(static_cast<int>(j)) == in.weights.d_of(static_cast<int>(j)))
      throw EpsilonZeroError(static_cast<int>(j));
}

// prod_j w_j^{k_j} c(B_j)(t/w_j) truncated at T, where B_j has rank k_j and
// w_j is the scaling weight; numeric bundles contribute their constant only.
GradedSeries scaled_product(const GradedRing& ring, const std::vector<int>& ranks,
                            const std::vector<Rational>& w, const std::vector<int>& bundles,
                            const std::vector<bool>& numeric, int T) {
  GradedSeries acc(T);
  acc.set_coeff(0, RingElem::one());
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    const Rational scale = pow(w[j], ranks[j]);
    GradedSeries factor(T);
    factor.set_coeff(0, RingElem::constant(scale));
    if (numeric.empty() || !numeric[j]) {
      for (int i = 1; i <= ranks[j] && i <= T; ++i)
        factor.set_coeff(i, RingElem::chern(ring, bundles[j], i).scaled(pow(w[j], ranks[j] - i)));
    }
    acc = series_mul(ring, acc, factor);
  }
  return acc;
}

}  // namespace

RingElem free_case_class(const GradedRing& ring, const FreeCaseInput& in) {
  check_free_case_input(in);
  const int n = static_cast<int>(in.ranks.size());
  const int k = in.total_corank() - in.total_rank();
  if (k < 0) return RingElem{};

  std::vector<Rational> eps(n), del(n);
  std::vector<int> f_ids(n), g_ids(n);
  for (int j = 0; j < n; ++j) {
    eps[j] = Rational(in.weights.delta(j)) - Rational(in.weights.d_of(j));
    del[j] = Rational(in.weights.delta(j));
    f_ids[j] = f_bundle(j);
    g_ids[j] = g_bundle(in, j);
  }

  GradedSeries num = scaled_product(ring, in.coranks, eps, g_ids, in.numeric, k);
  GradedSeries den = scaled_product(ring, in.ranks, del, f_ids, in.numeric, k);
  GradedSeries quotient = series_mul(ring, num, invert(ring, den, k));
  return quotient.coeff(k);
}

GradedRing make_segre_ring(const std::vector<int>& ranks, int truncation) {
  GradedRing ring(truncation);
  for (std::size_t j = 0; j < ranks.size(); ++j)
    ring.add_bundle("F" + std::to_string(j + 1), ranks[j]);
  return ring;
}

GradedSeries weighted_segre_series(const GradedRing& ring, const std::vector<int>& ranks,
                                   const std::vector<Int>& e, int T) {
  if (e.size() != ranks.size())
    throw LgError(ErrorKind::semantic, "weight vector must match the rank vector");
  for (const auto& w : e)
    if (w < 1) throw LgError(ErrorKind::semantic, "Segre weights must be positive integers");
  int r = 0;
  for (int x : ranks) r += x;

  std::vector<Rational> w(ranks.size());
  std::vector<int> ids(ranks.size());
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    w[j] = Rational(e[j]);
    ids[j] = static_cast<int>(j);
  }
  const int inner = std::max(T - r, 0);
  GradedSeries p = scaled_product(ring, ranks, w, ids, {}, inner);
  GradedSeries out = shift(invert(ring, p, inner), r);
  // Everything below t^r vanishes by construction; pin the truncation to T.
  GradedSeries pinned(T);
  for (const auto& [i, c] : out.coefficients())
    if (i <= T) pinned.set_coeff(i, c);
  return pinned;
}

ConcavityReport check_concavity(const std::vector<int>& coranks, const WeightSystem& w, int D) {
  FreeCaseInput in;
  in.ranks.assign(coranks.size(), 0);
  in.coranks = coranks;
  in.weights = w;
  in.truncation = D;
  GradedRing ring = make_free_case_ring(in);

  ConcavityReport report;
  report.lhs = free_case_class(ring, in);
  report.rhs = RingElem::one();
  for (std::size_t j = 0; j < coranks.size(); ++j)
    report.rhs = mul(ring, report.rhs, RingElem::chern(ring, g_bundle(in, static_cast<int>(j)),
                                                       coranks[j]));
  report.equal = report.lhs == report.rhs;
  return report;
}

IndexZeroReport check_index_zero(const std::vector<int>& ranks_eq_coranks, const WeightSystem& w) {
  FreeCaseInput in;
  in.ranks = ranks_eq_coranks;
  in.coranks = ranks_eq_coranks;
  in.weights = w;
  in.truncation = 0;
  in.numeric.assign(ranks_eq_coranks.size(), true);
  GradedRing ring = make_free_case_ring(in);

  IndexZeroReport report;
  auto c = free_case_class(ring, in).as_constant();
  report.computed = *c;  // numeric mode always yields a constant

  Rational num(1), den(1);
  for (int x : ranks_eq_coranks) {
    num *= Rational(x);
    den *= Rational(x);
  }
  if (den.is_zero()) {
    report.factor_defined = false;
    report.flagged = true;  // printed formula is 0/0 here
  } else {
    report.factor_defined = true;
    report.factor = num / den;
    report.printed = report.computed * report.factor;
    report.flagged = report.factor != Rational(1);
  }
  return report;
}

RingElem n1_corollary_class(const GradedRing& ring, int r, int s, const Int& d) {
  if (d < 2) throw LgError(ErrorKind::semantic, "corollary requires d >= 2");
  FreeCaseInput in;
  in.ranks = {r};
  in.coranks = {s};
  in.weights = WeightSystem(WeightBlock{d, {Int(1)}});
  in.truncation = ring.truncation();
  return free_case_class(ring, in);
}

}  // namespace lgcalc

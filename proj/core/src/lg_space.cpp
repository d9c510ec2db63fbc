#include "lgcalc/lg_space.hpp"

#include "lgcalc/errors.hpp"

namespace lgcalc {

namespace {

std::vector<std::string> phase_strings(const PhaseVec& v) {
  std::vector<std::string> s;
  for (const auto& p : v) s.push_back(p.str());
  return s;
}

bool pairs_with_all_rows(const IntMatrix& expo, const PhaseVec& theta) {
  for (int a = 0; a < expo.rows(); ++a) {
    Rational acc(0);
    for (int j = 0; j < expo.cols(); ++j) acc += Rational(expo.at(a, j)) * theta[j].value();
    if (!acc.is_integer()) return false;
  }
  return true;
}

}  // namespace

NondegeneracyReport check_nondegenerate(const QuasiHomogPoly& W, const WeightSystem& w,
                                        const GroebnerBudget& budget) {
  NondegeneracyReport report;
  if (!satisfies(W, w)) throw LgError(ErrorKind::semantic, "weights do not fit the polynomial");

  report.no_cross_terms = true;
  for (const auto& t : W.terms()) {
    int ones = 0, nonzero = 0;
    for (const auto& e : t.exponents) {
      if (e == 1) ++ones;
      if (e != 0) ++nonzero;
    }
    if (ones == 2 && nonzero == 2) {  // a term x_i * x_j with i != j
      report.no_cross_terms = false;
      break;
    }
  }
  // Cross terms short-circuit the Groebner stage.
  if (!report.no_cross_terms) return report;

  // Exponents beyond the degree budget cannot finish anyway; report
  // indeterminate instead of overflowing the dense engine.
  for (const auto& t : W.terms())
    for (const auto& e : t.exponents)
      if (e > budget.max_degree) {
        report.isolated_origin = Tri::indeterminate;
        return report;
      }

  MPoly f = W.to_mpoly();
  std::vector<MPoly> jacobian;
  for (int j = 0; j < W.nvars(); ++j) jacobian.push_back(f.partial(j));
  GroebnerResult gb = buchberger(std::move(jacobian), budget);
  if (!gb.completed) {
    report.isolated_origin = Tri::indeterminate;
    return report;
  }
  report.isolated_origin = zero_dimensional(gb.basis, W.nvars()) ? Tri::yes : Tri::no;
  return report;
}

DiagonalGroup aut_group(const QuasiHomogPoly& W) {
  try {
    return phase_kernel(W.exponent_matrix());
  } catch (const InfiniteKernelError& e) {
    throw InfiniteAutError(e.witness);
  }
}

void LgSpace::compute_lambda() {
  const IntMatrix& basis = G_.dual_basis();
  lambda_basis_.clear();
  lambda_weights_.clear();
  for (int k = 0; k < basis.rows(); ++k) {
    LaurentMonomial m;
    m.exponents.resize(nvars());
    for (int j = 0; j < nvars(); ++j) m.exponents[j] = basis.at(k, j);
    lambda_weights_.push_back(monomial_weight(*this, m));
    lambda_basis_.push_back(std::move(m));
  }
}

LgSpace LgSpace::build(QuasiHomogPoly W, const GroupSpec& spec,
                       std::optional<WeightSystem> weights) {
  W.check_variables_used();
  LgSpace out;
  if (weights) {
    if (!satisfies(W, *weights)) throw NotQuasiHomogeneousError();
    out.weights_ = std::move(*weights);
  } else {
    out.weights_ = infer_weights(W);
  }
  const IntMatrix expo = W.exponent_matrix();
  const PhaseVec j = j_element(out.weights_);

  switch (spec.kind) {
    case GroupSpec::Kind::aut:
      out.G_ = aut_group(W);
      break;
    case GroupSpec::Kind::minimal:
      out.G_ = DiagonalGroup::from_generators(W.nvars(), {j});
      break;
    case GroupSpec::Kind::explicit_gens:
      for (const auto& g : spec.generators)
        if (static_cast<int>(g.size()) != W.nvars())
          throw LgError(ErrorKind::semantic, "generator dimension mismatch");
      out.G_ = DiagonalGroup::from_generators(W.nvars(), spec.generators);
      break;
  }

  if (!out.G_.contains(j)) throw JNotContainedError();
  for (const auto& g : out.G_.generators())
    if (!pairs_with_all_rows(expo, g)) throw NotSubgroupOfAutError(phase_strings(g));

  out.W_ = std::move(W);
  out.compute_lambda();
  return out;
}

LgSpace LgSpace::empty() { return LgSpace{}; }

Int monomial_weight(const LgSpace& space, const LaurentMonomial& m) {
  if (static_cast<int>(m.exponents.size()) != space.nvars())
    throw LgError(ErrorKind::semantic, "monomial arity mismatch");
  for (const auto& g : space.group().generators())
    if (!pair_phase(m, g).is_zero()) throw NotInvariantError();

  const WeightSystem& w = space.weights();
  Int total = 0;
  for (std::size_t b = 0; b < w.blocks().size(); ++b) {
    Rational acc(0);
    for (int j = 0; j < space.nvars(); ++j)
      if (w.block_of(j) == static_cast<int>(b))
        acc += Rational(m.exponents[j] * w.delta(j), w.blocks()[b].d);
    if (!acc.is_integer()) throw NonIntegralWeightError();
    total += acc.numerator();
  }
  return total;
}

LgSpace product_space(const LgSpace& a, const LgSpace& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  const int na = a.nvars(), nb = b.nvars();
  std::vector<QuasiHomogPoly::Term> terms;
  for (const auto& t : a.polynomial().terms()) {
    QuasiHomogPoly::Term u{t.coeff, t.exponents};
    u.exponents.resize(na + nb, Int(0));
    terms.push_back(std::move(u));
  }
  for (const auto& t : b.polynomial().terms()) {
    QuasiHomogPoly::Term u{t.coeff, std::vector<Int>(na, Int(0))};
    u.exponents.insert(u.exponents.end(), t.exponents.begin(), t.exponents.end());
    terms.push_back(std::move(u));
  }
  LgSpace out;
  out.W_ = QuasiHomogPoly::from_terms(na + nb, std::move(terms));
  out.weights_ = WeightSystem::concat(a.weights(), b.weights());
  out.G_ = a.group().product(b.group());
  out.compute_lambda();
  return out;
}

}  // namespace lgcalc

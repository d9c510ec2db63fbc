#include "lgcalc/weights.hpp"

#include "lgcalc/errors.hpp"

namespace lgcalc {

WeightSystem::WeightSystem(WeightBlock block) {
  if (block.d < 1) throw LgError(ErrorKind::semantic, "weight d must be positive");
  Int g = 0;
  for (const auto& x : block.delta) {
    if (x < 1) throw LgError(ErrorKind::semantic, "weights delta must be positive");
    g = gcd(g, x);
  }
  if (!block.delta.empty() && g != 1)
    throw LgError(ErrorKind::semantic, "weight tuple is not primitive");
  const int k = static_cast<int>(block.delta.size());
  blocks_.push_back(std::move(block));
  for (int j = 0; j < k; ++j) {
    var_block_.push_back(0);
    var_offset_.push_back(j);
  }
}

WeightSystem WeightSystem::concat(const WeightSystem& a, const WeightSystem& b) {
  WeightSystem out = a;
  const int shift = static_cast<int>(out.blocks_.size());
  for (const auto& blk : b.blocks_) out.blocks_.push_back(blk);
  for (std::size_t j = 0; j < b.var_block_.size(); ++j) {
    out.var_block_.push_back(b.var_block_[j] + shift);
    out.var_offset_.push_back(b.var_offset_[j]);
  }
  return out;
}

std::string WeightSystem::str() const {
  std::string s;
  for (const auto& blk : blocks_) {
    if (!s.empty()) s += " x ";
    s += "(" + blk.d.get_str() + "; ";
    for (std::size_t j = 0; j < blk.delta.size(); ++j) {
      if (j) s += ",";
      s += blk.delta[j].get_str();
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

namespace {

// Kernel basis of an m x n rational matrix via Gauss-Jordan elimination.
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> a, int n) {
  const int m = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rational inv = Rational(1) / a[r][c];
    for (int j = 0; j < n; ++j) a[r][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> kernel;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[c] = Rational(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const auto& r : v) s.push_back(r.str());
  return s;
}

}  // namespace

WeightSystem infer_weights(const QuasiHomogPoly& W) {
  const int n = W.nvars();
  // Unknowns (delta_1,...,delta_n, d); each term contributes
  // sum_j m_aj delta_j - d = 0.
  std::vector<std::vector<Rational>> rows;
  for (const auto& t : W.terms()) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (int j = 0; j < n; ++j) row[j] = Rational(t.exponents[j]);
    row[n] = Rational(-1);
    rows.push_back(std::move(row));
  }
  auto kernel = rational_kernel(std::move(rows), n + 1);
  if (kernel.empty()) throw NotQuasiHomogeneousError();
  if (kernel.size() >= 2)
    throw AmbiguousWeightsError(rational_strings(kernel[0]), rational_strings(kernel[1]));

  std::vector<Rational>& v = kernel[0];
  int sign = 0;
  for (const auto& x : v) {
    if (x.is_zero()) throw NoPositiveSolutionError();
    int s = x > Rational(0) ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) throw NoPositiveSolutionError();
  }
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.denominator());
  std::vector<Int> w(n + 1);
  Int g = 0;
  for (int j = 0; j <= n; ++j) {
    w[j] = v[j].numerator() * (l / v[j].denominator()) * sign;
    g = gcd(g, w[j]);
  }
  WeightBlock block;
  block.delta.resize(n);
  for (int j = 0; j < n; ++j) block.delta[j] = w[j] / g;
  block.d = w[n] / g;
  return WeightSystem(std::move(block));
}

bool satisfies(const QuasiHomogPoly& W, const WeightSystem& w) {
  if (W.nvars() != w.nvars()) return false;
  for (const auto& t : W.terms()) {
    int block = -1;
    Int acc = 0;
    for (int j = 0; j < W.nvars(); ++j) {
      if (t.exponents[j] == 0) continue;
      if (block < 0) block = w.block_of(j);
      if (w.block_of(j) != block) return false;
      acc += t.exponents[j] * w.delta(j);
    }
    if (block < 0) return false;  // constant term
    if (acc != w.blocks()[block].d) return false;
  }
  return true;
}

PhaseVec j_element(const WeightSystem& w) {
  PhaseVec j(w.nvars());
  for (int k = 0; k < w.nvars(); ++k) j[k] = Phase(w.ratio(k));
  return j;
}

}  // namespace lgcalc

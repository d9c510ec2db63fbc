#include "lgcalc/int_matrix.hpp"

#include <algorithm>
#include <cassert>

namespace lgcalc {

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols_ == b.rows_);
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Int IntMatrix::determinant() const {
  assert(rows_ == cols_);
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

// Elementary operations applied simultaneously to the work matrix and the
// unimodular transforms, maintaining D = U*M*V.
struct SmithWork {
  IntMatrix D, U, V;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
    for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
    for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < D.cols(); ++j) D.at(dst, j) += f * D.at(src, j);
    for (int j = 0; j < U.cols(); ++j) U.at(dst, j) += f * U.at(src, j);
  }
  void add_col(int dst, int src, const Int& f) {  // col dst += f * col src
    for (int i = 0; i < D.rows(); ++i) D.at(i, dst) += f * D.at(i, src);
    for (int i = 0; i < V.rows(); ++i) V.at(i, dst) += f * V.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < D.cols(); ++j) D.at(r, j) = -D.at(r, j);
    for (int j = 0; j < U.cols(); ++j) U.at(r, j) = -U.at(r, j);
  }
};

bool find_min_pivot(const IntMatrix& D, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < D.rows(); ++i)
    for (int j = t; j < D.cols(); ++j) {
      if (D.at(i, j) == 0) continue;
      Int a = abs(D.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  const int m = M.rows(), n = M.cols();
  SmithWork w{M, IntMatrix::identity(m), IntMatrix::identity(n)};
  const int nmin = std::min(m, n);
  int rank = 0;

  for (int t = 0; t < nmin; ++t) {
    for (;;) {
      int pi, pj;
      if (!find_min_pivot(w.D, t, pi, pj)) {
        t = nmin;  // remaining block is zero
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (w.D.at(i, t) == 0) continue;
        Int q = w.D.at(i, t) / w.D.at(t, t);  // truncated: remainder smaller than pivot
        if (q != 0) w.add_row(i, t, -q);
        if (w.D.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (w.D.at(t, j) == 0) continue;
        Int q = w.D.at(t, j) / w.D.at(t, t);
        if (q != 0) w.add_col(j, t, -q);
        if (w.D.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot is lone; force it to divide the remaining block.
      bool divides = true;
      for (int i = t + 1; i < m && divides; ++i)
        for (int j = t + 1; j < n; ++j)
          if (w.D.at(i, j) % w.D.at(t, t) != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t >= nmin) break;
    if (w.D.at(t, t) < 0) w.negate_row(t);
    ++rank;
  }

  return SmithDecomposition{std::move(w.U), std::move(w.D), std::move(w.V), rank};
}

IntMatrix hermite_normal_form(const IntMatrix& M) {
  int m = M.rows(), n = M.cols();
  IntMatrix h = M;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    // Euclid on the column below `row` until a single nonzero entry remains.
    for (;;) {
      int pivot = -1;
      for (int i = row; i < m; ++i)
        if (h.at(i, col) != 0 && (pivot < 0 || abs(h.at(i, col)) < abs(h.at(pivot, col)))) pivot = i;
      if (pivot < 0) break;
      if (pivot != row)
        for (int j = 0; j < n; ++j) std::swap(h.at(row, j), h.at(pivot, j));
      bool reduced = true;
      for (int i = row + 1; i < m; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(row, col);
        if (q != 0)
          for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(row, j);
        if (h.at(i, col) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0)
      for (int j = 0; j < n; ++j) h.at(row, j) = -h.at(row, j);
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
      if (q != 0)
        for (int j = 0; j < n; ++j) h.at(i, j) -= q * h.at(row, j);
    }
    ++row;
  }
  IntMatrix out(row, n);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

}  // namespace lgcalc

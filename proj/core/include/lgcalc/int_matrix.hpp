#ifndef LGCALC_INT_MATRIX_HPP
#define LGCALC_INT_MATRIX_HPP

#include <vector>

#include "lgcalc/rational.hpp"

namespace lgcalc {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  Int determinant() const;  // Bareiss fraction-free elimination; square only

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// U*M*V = D with U, V unimodular, D diagonal with d_1 | d_2 | ... | d_rank > 0.
struct SmithDecomposition {
  IntMatrix U, D, V;
  int rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& M);

// Canonical row-style Hermite normal form of the lattice spanned by the rows:
// row echelon, positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result has rank-many rows.
IntMatrix hermite_normal_form(const IntMatrix& M);

}  // namespace lgcalc

#endif

#include <doctest.h>

#include <random>

#include "lgcalc/diagonal_group.hpp"
#include "lgcalc/errors.hpp"
#include "lgcalc/int_matrix.hpp"
#include "lgcalc/phase.hpp"
#include "lgcalc/rational.hpp"

using namespace lgcalc;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_smith(const IntMatrix& M, const SmithDecomposition& s) {
  // The stated oracle: direct multiplication plus the divisibility chain.
  CHECK(s.U * M * s.V == s.D);
  Int du = s.U.determinant(), dv = s.V.determinant();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  const int nmin = std::min(M.rows(), M.cols());
  for (int i = 0; i < nmin; ++i)
    for (int j = 0; j < nmin; ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
  for (int i = 0; i < s.rank; ++i) {
    CHECK(s.D.at(i, i) > 0);
    if (i + 1 < s.rank) CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
  }
  for (int i = s.rank; i < nmin; ++i) CHECK(s.D.at(i, i) == 0);
}

// Exhaustive phase vectors with denominator dividing L.
std::vector<PhaseVec> all_phases(int n, long L) {
  std::vector<PhaseVec> out;
  std::vector<long> a(n, 0);
  for (;;) {
    PhaseVec v(n);
    for (int i = 0; i < n; ++i) v[i] = Phase(Rational(Int(a[i]), Int(L)));
    out.push_back(std::move(v));
    int k = n - 1;
    while (k >= 0) {
      if (++a[k] < L) break;
      a[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

bool in_kernel(const IntMatrix& M, const PhaseVec& theta) {
  for (int i = 0; i < M.rows(); ++i) {
    Rational acc(0);
    for (int j = 0; j < M.cols(); ++j) acc += Rational(M.at(i, j)) * theta[j].value();
    if (!acc.is_integer()) return false;
  }
  return true;
}

std::vector<std::string> sorted_keys(const std::vector<PhaseVec>& elems) {
  std::vector<std::string> keys;
  for (const auto& e : elems) keys.push_back(str(e));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST_CASE("rational invariants and parsing") {
  Rational r(Int(6), Int(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::parse("-3/2") == r);
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("4/6") == Rational(Int(2), Int(3)));
  CHECK_THROWS_AS(Rational::parse("x"), LgError);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), LgError);
  CHECK(Rational(Int(-7), Int(3)).floor() == -3);
  CHECK(pow(Rational(Int(-2), Int(1)), 3) == Rational(-8));
  CHECK(pow(Rational(2), -2) == Rational(Int(1), Int(4)));
}

TEST_CASE("phases normalize into [0,1)") {
  CHECK(Phase(Rational(Int(7), Int(3))).value() == Rational(Int(1), Int(3)));
  CHECK(Phase(Rational(Int(-1), Int(3))).value() == Rational(Int(2), Int(3)));
  CHECK(Phase(Rational(2)).is_zero());
  PhaseVec v = phase_vec({Rational(Int(1), Int(3)), Rational(Int(2), Int(3))});
  CHECK(is_zero(add(v, inverse(v))));
}

TEST_CASE("element_order is the lcm of denominators") {
  CHECK(element_order(zero_phases(2)) == 1);
  CHECK(element_order(phase_vec({Rational(Int(1), Int(3)), Rational(Int(1), Int(3))})) == 3);
  CHECK(element_order(phase_vec({Rational(Int(1), Int(2)), Rational(Int(1), Int(3))})) == 6);
}

TEST_CASE("smith normal form on pinned matrices") {
  SUBCASE("identity") {
    IntMatrix m = IntMatrix::identity(2);
    auto s = smith_normal_form(m);
    check_smith(m, s);
    CHECK(s.rank == 2);
    CHECK(s.D == IntMatrix::identity(2));
  }
  SUBCASE("diag(2,3) has invariant factors 1,6") {
    IntMatrix m = from_rows({{2, 0}, {0, 3}});
    auto s = smith_normal_form(m);
    check_smith(m, s);
    CHECK(s.rank == 2);
    CHECK(s.D.at(0, 0) == 1);
    CHECK(s.D.at(1, 1) == 6);
  }
  SUBCASE("1x1 zero matrix") {
    IntMatrix m(1, 1);
    auto s = smith_normal_form(m);
    check_smith(m, s);
    CHECK(s.rank == 0);
    CHECK(s.D.at(0, 0) == 0);
  }
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(20240801);
  std::uniform_int_distribution<int> entry(-10, 10);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    check_smith(m, s);
  }
}

TEST_CASE("phase_kernel on pinned matrices") {
  SUBCASE("unimodular 1x1") {
    auto g = phase_kernel(from_rows({{1}}));
    CHECK(g.order() == 1);
    CHECK(g.invariant_factors().empty());
  }
  SUBCASE("diag(3,3)") {
    auto g = phase_kernel(from_rows({{3, 0}, {0, 3}}));
    CHECK(g.order() == 9);
    REQUIRE(g.invariant_factors().size() == 2);
    CHECK(g.invariant_factors()[0] == 3);
    CHECK(g.invariant_factors()[1] == 3);
    // brute force over denominators dividing 3
    IntMatrix m = from_rows({{3, 0}, {0, 3}});
    std::vector<PhaseVec> expected;
    for (const auto& v : all_phases(2, 3))
      if (in_kernel(m, v)) expected.push_back(v);
    CHECK(sorted_keys(g.elements()) == sorted_keys(expected));
  }
  SUBCASE("[[2,1],[1,2]] is cyclic of order 3") {
    IntMatrix m = from_rows({{2, 1}, {1, 2}});
    auto g = phase_kernel(m);
    CHECK(g.order() == 3);
    REQUIRE(g.generators().size() == 1);
    CHECK(g.contains(phase_vec({Rational(Int(1), Int(3)), Rational(Int(1), Int(3))})));
    std::vector<PhaseVec> expected;
    for (const auto& v : all_phases(2, 3))
      if (in_kernel(m, v)) expected.push_back(v);
    CHECK(sorted_keys(g.elements()) == sorted_keys(expected));
  }
}

TEST_CASE("phase_kernel equals exhaustive enumeration for small determinants") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> entry(-3, 3);
  int done = 0;
  while (done < 40) {
    IntMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.at(i, j) = entry(rng);
    Int det = abs(m.determinant());
    if (det == 0 || det > 12) continue;
    ++done;
    auto g = phase_kernel(m);
    CHECK(g.order() == det);
    std::vector<PhaseVec> expected;
    for (const auto& v : all_phases(2, det.get_si()))
      if (in_kernel(m, v)) expected.push_back(v);
    CHECK(sorted_keys(g.elements()) == sorted_keys(expected));
    // order of every element divides the group order
    for (const auto& e : g.elements()) {
      Int r = element_order(e);
      CHECK(g.order() % r == 0);
    }
  }
}

TEST_CASE("phase_kernel rejects rank-deficient matrices with a witness") {
  IntMatrix m = from_rows({{1, 1}});
  try {
    phase_kernel(m);
    FAIL("expected InfiniteKernelError");
  } catch (const InfiniteKernelError& e) {
    REQUIRE(e.witness.size() == 2);
    Rational acc(0);
    bool nonzero = false;
    for (int j = 0; j < 2; ++j) {
      Rational x = Rational::parse(e.witness[j]);
      if (!x.is_zero()) nonzero = true;
      acc += Rational(m.at(0, j)) * x;
    }
    CHECK(nonzero);
    CHECK(acc == Rational(0));
  }
}

TEST_CASE("dual lattice bases") {
  SUBCASE("trivial group in dim 2") {
    auto g = DiagonalGroup::trivial(2);
    CHECK(dual_lattice(g) == IntMatrix::identity(2));
  }
  SUBCASE("cyclic diagonal third roots") {
    auto g = DiagonalGroup::from_generators(
        2, {phase_vec({Rational(Int(1), Int(3)), Rational(Int(1), Int(3))})});
    const IntMatrix& b = dual_lattice(g);
    REQUIRE(b.rows() == 2);
    CHECK(b.determinant() == g.order());  // index equals the group order
    for (int r = 0; r < 2; ++r) {
      Rational acc(0);
      for (int j = 0; j < 2; ++j)
        acc += Rational(b.at(r, j)) * Rational(Int(1), Int(3));
      CHECK(acc.is_integer());
    }
  }
  SUBCASE("single congruence in dim 1") {
    auto g = DiagonalGroup::from_generators(1, {phase_vec({Rational(Int(1), Int(5))})});
    const IntMatrix& b = dual_lattice(g);
    REQUIRE(b.rows() == 1);
    CHECK(b.at(0, 0) == 5);
  }
}

TEST_CASE("dual lattice contains the row span and has index |G|") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-4, 4);
  int done = 0;
  while (done < 25) {
    IntMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.at(i, j) = entry(rng);
    if (m.determinant() == 0) continue;
    ++done;
    auto g = phase_kernel(m);
    const IntMatrix& b = dual_lattice(g);
    CHECK(abs(b.determinant()) == g.order());
    // every row of M pairs integrally with every group element, i.e. the row
    // span sits inside the dual lattice
    for (const auto& e : g.elements(Int(100000))) CHECK(in_kernel(m, e));
  }
}

TEST_CASE("element enumeration is capped and lexicographic") {
  auto g = phase_kernel(from_rows({{3, 0}, {0, 3}}));
  CHECK_THROWS_AS(g.elements(Int(8)), CapExceededError);
  auto elems = g.elements();
  REQUIRE(elems.size() == 9);
  CHECK(is_zero(elems[0]));  // identity first
  // coordinates enumerate lexicographically against the generators
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) CHECK(!(str(elems[i]) == str(elems[i + 1])));
}

TEST_CASE("hermite normal form is canonical on the row lattice") {
  std::mt19937 rng(515151);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = entry(rng);

    IntMatrix h = hermite_normal_form(m);
    // echelon with positive pivots and reduced entries above them
    int last_pivot_col = -1;
    for (int i = 0; i < h.rows(); ++i) {
      int p = 0;
      while (p < h.cols() && h.at(i, p) == 0) ++p;
      REQUIRE(p < h.cols());
      CHECK(p > last_pivot_col);
      last_pivot_col = p;
      CHECK(h.at(i, p) > 0);
      for (int k = 0; k < i; ++k) {
        CHECK(h.at(k, p) >= 0);
        CHECK(h.at(k, p) < h.at(i, p));
      }
    }
    CHECK(hermite_normal_form(h) == h);

    // invariant under left multiplication by a unimodular matrix
    IntMatrix u = IntMatrix::identity(3);
    for (int ops = 0; ops < 6; ++ops) {
      int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
      if (a == b) continue;
      Int f = entry(rng);
      for (int j = 0; j < 3; ++j) u.at(a, j) += f * u.at(b, j);
    }
    CHECK(hermite_normal_form(u * m) == h);

    Int det = abs(m.determinant());
    if (det != 0) {
      Int prod = 1;
      for (int i = 0; i < h.rows(); ++i) {
        int p = 0;
        while (h.at(i, p) == 0) ++p;
        prod *= h.at(i, p);
      }
      CHECK(prod == det);  // lattice index is preserved
    }
  }
}

TEST_CASE("phase_kernel of a tall matrix") {
  // three congruences in two unknowns
  IntMatrix m = from_rows({{2, 1}, {1, 2}, {3, 3}});
  auto g = phase_kernel(m);
  CHECK(g.order() == 3);
  std::vector<PhaseVec> expected;
  for (const auto& v : all_phases(2, 3))
    if (in_kernel(m, v)) expected.push_back(v);
  CHECK(sorted_keys(g.elements()) == sorted_keys(expected));
}

TEST_CASE("element enumeration follows invariant-factor coordinates") {
  auto g = DiagonalGroup::from_generators(
      2, {phase_vec({Rational(Int(1), Int(3)), Rational(Int(1), Int(3))})});
  auto elems = g.elements();
  REQUIRE(elems.size() == 3);
  REQUIRE(g.generators().size() == 1);
  const PhaseVec& gen = g.generators()[0];
  CHECK(str(elems[0]) == str(zero_phases(2)));
  CHECK(str(elems[1]) == str(gen));
  CHECK(str(elems[2]) == str(add(gen, gen)));
}

TEST_CASE("canonical representation is independent of the generating set") {
  auto a = DiagonalGroup::from_generators(
      2, {phase_vec({Rational(Int(1), Int(3)), Rational(Int(0), Int(1))}),
          phase_vec({Rational(Int(0), Int(1)), Rational(Int(1), Int(3))})});
  auto b = phase_kernel(from_rows({{3, 0}, {0, 3}}));
  CHECK(a == b);
  CHECK(a.generators().size() == b.generators().size());
  auto c = DiagonalGroup::from_generators(
      2, {phase_vec({Rational(Int(1), Int(3)), Rational(Int(1), Int(3))}),
          phase_vec({Rational(Int(2), Int(3)), Rational(Int(2), Int(3))})});
  CHECK(c.order() == 3);
  CHECK(c.invariant_factors().size() == 1);
}

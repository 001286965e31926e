#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hf/ratlp.hpp"
#include "hf/zmatrix.hpp"

using namespace hf;

namespace {

IntMatrix mk(const std::vector<std::vector<int>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

template <typename F>
Code code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  FAIL("expected an Error");
  return Code::Internal;
}

// Independent rank oracle: Gaussian elimination over the rationals.
int rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) a[i][j] = Rat(m.at(i, j));
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int p = -1;
    for (int i = rank; i < m.rows; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[rank]);
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[rank][c];
      for (int j = 0; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

TEST_CASE("determinants of small matrices") {
  CHECK(det(IntMatrix::identity(3)) == 1);
  CHECK(det(mk({{2, 0}, {0, 3}})) == 6);
  CHECK(det(mk({{1, 2}, {2, 4}})) == 0);
  CHECK(det(mk({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(det(mk({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("smith normal form on fixed examples") {
  auto s = smith_normal_form(IntMatrix::identity(3));
  CHECK(s.diag() == std::vector<Int>{1, 1, 1});

  s = smith_normal_form(mk({{2, 4}, {6, 8}}));
  CHECK(s.diag() == std::vector<Int>{2, 4});

  s = smith_normal_form(mk({{1, 0}, {0, 3}}));
  CHECK(s.diag() == std::vector<Int>{1, 3});

  s = smith_normal_form(mk({{0, 0, 0}, {0, 0, 0}}));
  CHECK(s.diag() == std::vector<Int>{0, 0});
  CHECK(s.rank() == 0);

  // Non-square, rank 1.
  s = smith_normal_form(mk({{2, 4, 6}}));
  CHECK(s.diag() == std::vector<Int>{2});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    CHECK(s.U.mul(m).mul(s.V) == s.D);
    CHECK(abs_int(det(s.U)) == 1);
    CHECK(abs_int(det(s.V)) == 1);
    auto d = s.diag();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      if (d[i] == 0) CHECK(d[i + 1] == 0);
    }
    CHECK(s.rank() == rational_rank(m));
  }
}

TEST_CASE("integer linear systems") {
  auto r = solve_integer_system(mk({{1}}), {Int(2)});
  CHECK(r.solvable);
  CHECK(r.particular == std::vector<Int>{2});
  CHECK(r.kernel.empty());

  CHECK_FALSE(solve_integer_system(mk({{2}}), {Int(1)}).solvable);

  r = solve_integer_system(mk({{2}}), {Int(4)});
  CHECK(r.solvable);
  CHECK(r.particular == std::vector<Int>{2});

  r = solve_integer_system(mk({{1, 1}}), {Int(5)});
  CHECK(r.solvable);
  REQUIRE(r.kernel.size() == 1);
  CHECK(r.kernel[0][0] + r.kernel[0][1] == 0);
  CHECK(abs_int(r.kernel[0][0]) == 1);  // primitive

  CHECK(code_of([] { solve_integer_system(mk({{1, 1}}), {Int(1), Int(2)}); }) ==
        Code::DimensionMismatch);
}

TEST_CASE("integer solve properties on random solvable systems") {
  std::mt19937 rng(987123);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a(2, 4);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = entry(rng);
    std::vector<Int> w(4);
    for (auto& x : w) x = entry(rng);
    auto b = a.apply(w);
    auto r = solve_integer_system(a, b);
    REQUIRE(r.solvable);
    CHECK(a.apply(r.particular) == b);
    CHECK(int(r.kernel.size()) == a.cols - rational_rank(a));
    std::vector<Int> zero(a.rows, 0);
    for (const auto& k : r.kernel) CHECK(a.apply(k) == zero);
  }
}

TEST_CASE("cokernels of relation matrices") {
  CHECK(cokernel(mk({{3}})) == AbelianGroup{0, {3}});
  CHECK(cokernel(mk({{1, 0}, {0, 5}})) == AbelianGroup{0, {5}});
  CHECK(cokernel(mk({{0}, {0}})) == AbelianGroup{2, {}});
  CHECK(cokernel(mk({{2, 0}, {0, 2}})) == AbelianGroup{0, {2, 2}});
  CHECK(cokernel(mk({{2, 4}, {6, 8}})) == AbelianGroup{0, {2, 4}});
  CHECK(cokernel(IntMatrix(1, 0)) == AbelianGroup{1, {}});
  CHECK(cokernel(mk({{1}})).trivial());

  CHECK(AbelianGroup{0, {3}}.order() == 3);
  CHECK(AbelianGroup{1, {}}.order() == 0);
  CHECK(AbelianGroup{0, {}}.order() == 1);
}

TEST_CASE("lattice quotient coordinates") {
  auto q = lattice_quotient(mk({{3}}));
  CHECK(q.group() == AbelianGroup{0, {3}});
  CHECK(q.reduce({Int(4)}) == q.reduce({Int(7)}));
  CHECK(q.reduce({Int(0)}) == q.reduce({Int(3)}));
  CHECK(q.reduce({Int(0)}) != q.reduce({Int(1)}));
  auto coords = q.reduce({Int(4)});
  REQUIRE(coords.size() == 1);
  CHECK(coords[0].second == 3);
  CHECK(coords[0].first >= 0);
  CHECK(coords[0].first < 3);

  // Z^2 / <(2,0)> = Z/2 + Z.
  auto q2 = lattice_quotient(mk({{2}, {0}}));
  CHECK(q2.group() == AbelianGroup{1, {2}});
  CHECK(q2.reduce({Int(1), Int(0)}) != q2.reduce({Int(0), Int(0)}));
  CHECK(q2.reduce({Int(2), Int(0)}) == q2.reduce({Int(0), Int(0)}));
  CHECK(q2.reduce({Int(0), Int(1)}) != q2.reduce({Int(0), Int(0)}));
}

TEST_CASE("lattice quotient reduction is additive and separates cosets") {
  std::mt19937 rng(55771);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix rel(3, 2);
    for (int i = 0; i < rel.rows; ++i)
      for (int j = 0; j < rel.cols; ++j) rel.at(i, j) = entry(rng);
    auto q = lattice_quotient(rel);
    std::vector<Int> u(3), v(3);
    for (auto& x : u) x = entry(rng);
    for (auto& x : v) x = entry(rng);
    std::vector<Int> sum(3);
    for (int i = 0; i < 3; ++i) sum[i] = u[i] + v[i];
    auto ru = q.reduce(u), rv = q.reduce(v), rs = q.reduce(sum);
    REQUIRE(ru.size() == rs.size());
    for (size_t i = 0; i < rs.size(); ++i) {
      Int m = rs[i].second;
      Int expect = ru[i].first + rv[i].first;
      if (m != 0) expect = ((expect % m) + m) % m;
      CHECK(rs[i].first == expect);
    }
    // Shifting by a relation column never changes the reduction.
    for (int c = 0; c < rel.cols; ++c) {
      std::vector<Int> shifted(3);
      for (int i = 0; i < 3; ++i) shifted[i] = u[i] + rel.at(i, c);
      CHECK(q.reduce(shifted) == ru);
    }
  }
}

TEST_CASE("rational feasibility on fixed systems") {
  auto r = rational_feasible({{Rat(1), Rat(1)}}, {Rat(2)});
  CHECK(r.feasible);

  r = rational_feasible({{Rat(1), Rat(1)}}, {Rat(-1)});
  CHECK_FALSE(r.feasible);
  REQUIRE(r.farkas.size() == 1);
  CHECK(r.farkas[0] < 0);

  r = rational_feasible({{Rat(1), Rat(-1)}}, {Rat(0)});
  CHECK(r.feasible);

  // Unique rational solution has a negative coordinate.
  r = rational_feasible({{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}}, {Rat(3), Rat(1)});
  CHECK_FALSE(r.feasible);

  r = rational_feasible({{Rat(1)}, {Rat(1)}}, {Rat(2), Rat(2)});
  CHECK(r.feasible);
  r = rational_feasible({{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(2)});
  CHECK_FALSE(r.feasible);

  CHECK(rational_feasible({}, {}).feasible);
  CHECK(code_of([] { rational_feasible({{Rat(1)}}, {Rat(1), Rat(2)}); }) ==
        Code::DimensionMismatch);
}

TEST_CASE("rational feasibility always returns a verifiable certificate") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> entry(-4, 4), nonneg(0, 4), coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    int m = 1 + trial % 3, n = 1 + (trial / 3) % 4;
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
    for (auto& row : a)
      for (auto& x : row) x = Rat(entry(rng));
    std::vector<Rat> b(m);
    if (coin(rng)) {
      // Planted feasible instance.
      std::vector<Rat> x0(n);
      for (auto& x : x0) x = Rat(nonneg(rng));
      for (int i = 0; i < m; ++i) {
        b[i] = 0;
        for (int j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
      }
      CHECK(rational_feasible(a, b).feasible);
    } else {
      for (auto& x : b) x = Rat(entry(rng));
    }
    auto r = rational_feasible(a, b);
    if (r.feasible) {
      REQUIRE(int(r.x.size()) == n);
      for (const auto& v : r.x) CHECK(v >= 0);
      for (int i = 0; i < m; ++i) {
        Rat lhs(0);
        for (int j = 0; j < n; ++j) lhs += a[i][j] * r.x[j];
        CHECK(lhs == b[i]);
      }
    } else {
      // Farkas: y^T A <= 0 and y^T b > 0 together refute feasibility.
      REQUIRE(int(r.farkas.size()) == m);
      for (int j = 0; j < n; ++j) {
        Rat s(0);
        for (int i = 0; i < m; ++i) s += r.farkas[i] * a[i][j];
        CHECK(s <= 0);
      }
      Rat yb(0);
      for (int i = 0; i < m; ++i) yb += r.farkas[i] * b[i];
      CHECK(yb > 0);
    }
  }
}

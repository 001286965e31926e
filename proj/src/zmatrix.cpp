#include "hf/zmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace hf {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(rows, int(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    require(int(cols[j].size()) == rows, Code::DimensionMismatch, "column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  require(cols == o.rows, Code::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  require(int(v.size()) == cols, Code::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Int> r(rows);
  for (int i = 0; i < rows; ++i) {
    Int s = 0;
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Int> IntMatrix::column(int c) const {
  std::vector<Int> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, c);
  return v;
}

Int det(const IntMatrix& m) {
  require(m.rows == m.cols, Code::DimensionMismatch, "determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

void row_swap(IntMatrix& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void col_swap(IntMatrix& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i += q * row j
void row_axpy(IntMatrix& m, int i, int j, const Int& q) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) += q * m.at(j, c);
}
// col i += q * col j
void col_axpy(IntMatrix& m, int i, int j, const Int& q) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) += q * m.at(r, j);
}
void row_negate(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

std::vector<Int> SmithResult::diag() const {
  std::vector<Int> v;
  int n = std::min(D.rows, D.cols);
  for (int i = 0; i < n; ++i) v.push_back(D.at(i, i));
  return v;
}

int SmithResult::rank() const {
  int r = 0;
  for (const Int& d : diag())
    if (d != 0) ++r;
  return r;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult s{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
  IntMatrix& D = s.D;
  IntMatrix& U = s.U;
  IntMatrix& V = s.V;
  int n = std::min(m.rows, m.cols);

  for (int t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    int pr = -1, pc = -1;
    for (int i = t; i < D.rows; ++i)
      for (int j = t; j < D.cols; ++j)
        if (D.at(i, j) != 0 &&
            (pr < 0 || iabs(D.at(i, j)) < iabs(D.at(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;  // trailing submatrix zero: done
    if (pr != t) { row_swap(D, t, pr); row_swap(U, t, pr); }
    if (pc != t) { col_swap(D, t, pc); col_swap(V, t, pc); }

    for (;;) {
      bool dirty = false;
      // Clear column t.
      for (int i = 0; i < D.rows; ++i) {
        if (i == t || D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        if (q != 0) { row_axpy(D, i, t, -q); row_axpy(U, i, t, -q); }
        if (D.at(i, t) != 0) {
          row_swap(D, i, t);
          row_swap(U, i, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t.
      for (int j = 0; j < D.cols; ++j) {
        if (j == t || D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        if (q != 0) { col_axpy(D, j, t, -q); col_axpy(V, j, t, -q); }
        if (D.at(t, j) != 0) {
          col_swap(D, j, t);
          col_swap(V, j, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: pivot must divide the trailing submatrix.
      bool fixed = false;
      for (int i = t + 1; i < D.rows && !fixed; ++i)
        for (int j = t + 1; j < D.cols && !fixed; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            row_axpy(D, t, i, 1);
            row_axpy(U, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (D.at(t, t) < 0) { row_negate(D, t); row_negate(U, t); }
  }

  // Verified postcondition on every call.
  check_internal(U.mul(m).mul(V) == D, "SNF factorization identity failed");
  for (int i = 0; i < D.rows; ++i)
    for (int j = 0; j < D.cols; ++j)
      if (i != j) check_internal(D.at(i, j) == 0, "SNF result not diagonal");
  auto dg = s.diag();
  for (size_t i = 0; i + 1 < dg.size(); ++i) {
    check_internal(dg[i] >= 0, "SNF diagonal entry negative");
    if (dg[i] == 0)
      check_internal(dg[i + 1] == 0, "SNF zero before nonzero on diagonal");
    else
      check_internal(dg[i + 1] % dg[i] == 0, "SNF divisibility chain failed");
  }
  check_internal(iabs(det(U)) == 1 && iabs(det(V)) == 1,
                 "SNF transforms not unimodular");
  return s;
}

IntSolveResult solve_integer_system(const IntMatrix& A, const std::vector<Int>& b) {
  require(int(b.size()) == A.rows, Code::DimensionMismatch,
          "right-hand side length does not match row count");
  SmithResult s = smith_normal_form(A);
  std::vector<Int> c = s.U.apply(b);
  int n = std::min(A.rows, A.cols);

  IntSolveResult res;
  std::vector<Int> y(A.cols, Int(0));
  bool ok = true;
  for (int i = 0; i < A.rows; ++i) {
    Int d = (i < n) ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) { ok = false; break; }
    } else {
      if (c[i] % d != 0) { ok = false; break; }
      y[i] = c[i] / d;
    }
  }
  if (ok) {
    res.solvable = true;
    res.particular = s.V.apply(y);
    check_internal(A.apply(res.particular) == b,
                   "integer solve: substitution check failed");
  }
  // Kernel basis: columns of V at free coordinates (always computed; callers
  // solving homogeneous systems pass b = 0).
  for (int j = 0; j < A.cols; ++j) {
    bool free_coord = (j >= n) || s.D.at(j, j) == 0;
    if (!free_coord) continue;
    std::vector<Int> k = s.V.column(j);
    check_internal(A.apply(k) == std::vector<Int>(A.rows, Int(0)),
                   "integer solve: kernel vector fails A k = 0");
    res.kernel.push_back(std::move(k));
  }
  return res;
}

Int AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  Int o = 1;
  for (const Int& t : torsion) o *= t;
  return o;
}

AbelianGroup cokernel(const IntMatrix& m) { return lattice_quotient(m).group(); }

LatticeQuotient lattice_quotient(const IntMatrix& relations) {
  SmithResult s = smith_normal_form(relations);
  LatticeQuotient q;
  q.n = relations.rows;
  q.U = s.U;
  q.diag.assign(q.n, Int(0));
  int n = std::min(relations.rows, relations.cols);
  for (int i = 0; i < n; ++i) q.diag[i] = s.D.at(i, i);
  return q;
}

AbelianGroup LatticeQuotient::group() const {
  AbelianGroup g;
  for (const Int& d : diag) {
    if (d == 0)
      ++g.free_rank;
    else if (d > 1)
      g.torsion.push_back(d);
  }
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

std::vector<std::pair<Int, Int>> LatticeQuotient::reduce(const std::vector<Int>& v) const {
  require(int(v.size()) == n, Code::DimensionMismatch, "quotient reduce: wrong length");
  std::vector<Int> y = U.apply(v);
  std::vector<std::pair<Int, Int>> torsion_part, free_part;
  for (int i = 0; i < n; ++i) {
    const Int& d = diag[i];
    if (d == 1) continue;  // trivial coordinate
    if (d == 0) {
      free_part.emplace_back(y[i], Int(0));
    } else {
      Int r = y[i] % d;
      if (r < 0) r += d;
      torsion_part.emplace_back(r, d);
    }
  }
  torsion_part.insert(torsion_part.end(), free_part.begin(), free_part.end());
  return torsion_part;
}

}  // namespace hf

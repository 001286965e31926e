#include "hf/ratlp.hpp"

namespace hf {

FeasibilityResult rational_feasible(const std::vector<std::vector<Rat>>& A,
                                    const std::vector<Rat>& b) {
  int m = int(A.size());
  require(int(b.size()) == m, Code::DimensionMismatch, "rhs length does not match rows");
  int n = m ? int(A[0].size()) : 0;
  for (const auto& row : A)
    require(int(row.size()) == n, Code::DimensionMismatch, "ragged coefficient matrix");

  // Normalize to nonnegative rhs, remembering the row signs.
  std::vector<int> sign(m, 1);
  // Tableau rows 0..m-1, objective row m; columns 0..n-1 structural,
  // n..n+m-1 artificial, n+m rhs.
  int cols = n + m + 1;
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < m; ++i) {
    sign[i] = (b[i] < 0) ? -1 : 1;
    for (int j = 0; j < n; ++j) t[i][j] = sign[i] * A[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = sign[i] * b[i];
  }
  // Phase-I objective: minimize the artificial sum. Row m holds reduced
  // costs; its rhs holds minus the current objective value.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < cols; ++j)
      if (j < n || j == n + m) t[m][j] -= t[i][j];
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (t[m][j] < 0) { enter = j; break; }  // Bland: lowest index
    if (enter < 0) break;
    int leave = -1;
    Rat best(0);
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n + m] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    check_internal(leave >= 0, "phase-I objective unbounded");
    Rat piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat c = t[i][enter];
      for (int j = 0; j < cols; ++j) t[i][j] -= c * t[leave][j];
    }
    basis[leave] = enter;
  }

  FeasibilityResult res;
  Rat objective = -t[m][n + m];
  if (objective == 0) {
    res.feasible = true;
    res.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = t[i][n + m];
    for (int i = 0; i < m; ++i) {
      Rat lhs(0);
      for (int j = 0; j < n; ++j) lhs += A[i][j] * res.x[j];
      check_internal(lhs == b[i], "feasible point fails the system");
    }
    for (const Rat& v : res.x) check_internal(v >= 0, "feasible point is negative");
  } else {
    res.feasible = false;
    // Simplex multipliers from the artificial reduced costs: y_i = 1 - r_{n+i},
    // folded through the row signs so the certificate applies to (A, b).
    res.farkas.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) res.farkas[i] = sign[i] * (1 - t[m][n + i]);
    for (int j = 0; j < n; ++j) {
      Rat s(0);
      for (int i = 0; i < m; ++i) s += res.farkas[i] * A[i][j];
      check_internal(s <= 0, "Farkas certificate fails y^T A <= 0");
    }
    Rat yb(0);
    for (int i = 0; i < m; ++i) yb += res.farkas[i] * b[i];
    check_internal(yb > 0, "Farkas certificate fails y^T b > 0");
  }
  return res;
}

}  // namespace hf

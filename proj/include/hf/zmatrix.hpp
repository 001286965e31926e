#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "hf/error.hpp"

namespace hf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense row-major integer matrix. Sizes here are desk-scale: exactness over
// speed throughout.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  static IntMatrix identity(int n);
  static IntMatrix from_columns(int rows, const std::vector<std::vector<Int>>& cols);

  Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  IntMatrix mul(const IntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;
  IntMatrix transpose() const;
  std::vector<Int> column(int c) const;

  bool operator==(const IntMatrix& o) const = default;
};

// Fraction-free determinant (for tests / unimodularity checks).
Int det(const IntMatrix& m);

// Smith normal form: unimodular U (rows x rows), V (cols x cols) with
// U * M * V = D, D diagonal with d_1 | d_2 | ... and d_i >= 0.
// The factorization identity, diagonality and the divisibility chain are
// re-verified on every call.
struct SmithResult {
  IntMatrix U, D, V;
  std::vector<Int> diag() const;  // length min(rows, cols)
  int rank() const;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Solve A x = b over the integers. When solvable, returns one particular
// solution plus a basis of the integer kernel of A (a primitive lattice
// basis, so later integer solves against it stay integral). The solution is
// verified by substitution. Throws DimensionMismatch if b has wrong length.
struct IntSolveResult {
  bool solvable = false;
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel;
};
IntSolveResult solve_integer_system(const IntMatrix& A, const std::vector<Int>& b);

// Finitely generated abelian group: Z^free_rank + sum Z/torsion[i], torsion
// entries > 1 and forming a divisibility chain.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  Int order() const;  // 0 when infinite
  bool operator==(const AbelianGroup& o) const = default;
};

// Z^rows / column-span(M).
AbelianGroup cokernel(const IntMatrix& m);

// Quotient Z^n / column-span(M) with canonical coordinates: reduce(v) maps a
// vector to its normal form (one coordinate per invariant factor; modulus 0
// means a free coordinate, moduli > 1 are torsion, trivial factors are
// dropped). Two vectors are equal in the quotient iff their reductions agree.
struct LatticeQuotient {
  int n = 0;
  IntMatrix U;             // from the SNF of the relation matrix
  std::vector<Int> diag;   // length n; invariant factor per U-coordinate (0 = free)

  AbelianGroup group() const;
  // (value, modulus) pairs for the non-trivial coordinates, torsion first.
  std::vector<std::pair<Int, Int>> reduce(const std::vector<Int>& v) const;
};
LatticeQuotient lattice_quotient(const IntMatrix& relations);

}  // namespace hf

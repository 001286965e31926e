#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hf/error.hpp"

namespace hf {

using F2Vec = std::vector<uint8_t>;

struct F2Matrix {
  int rows = 0, cols = 0;
  std::vector<F2Vec> row;  // row[i][j]

  F2Matrix() = default;
  F2Matrix(int r, int c) : rows(r), cols(c), row(r, F2Vec(c, 0)) {}
  static F2Matrix identity(int n);
  static F2Matrix zero(int r, int c) { return F2Matrix(r, c); }

  uint8_t at(int r, int c) const { return row[r][c]; }
  void set(int r, int c, uint8_t v) { row[r][c] = v & 1; }

  F2Matrix mul(const F2Matrix& o) const;
  F2Matrix add(const F2Matrix& o) const;
  F2Vec apply(const F2Vec& v) const;
  bool is_zero() const;
  bool operator==(const F2Matrix& o) const = default;
};

int f2_rank(F2Matrix m);
std::vector<F2Vec> f2_kernel_basis(const F2Matrix& m);
// One solution of M x = b, if any.
std::optional<F2Vec> f2_solve(const F2Matrix& m, const F2Vec& b);

// Reduce v modulo the column span of M, deterministically (Gauss pivots in
// fixed row order). Equal results characterize equality mod im(M).
F2Vec f2_reduce_mod_image(const F2Matrix& m, F2Vec v);

// Chain complex over F2. d is square over the basis: d[i][j] = coefficient of
// basis element i in the boundary of basis element j. Gradings are optional;
// with grading_modulus set they live in Z/modulus, otherwise in Z. A nonzero
// d[i][j] requires grading[i] = grading[j] - 1 (mod modulus).
struct F2Complex {
  std::vector<std::string> basis;
  F2Matrix d;
  std::optional<std::vector<long long>> grading;
  std::optional<long long> grading_modulus;

  int n() const { return int(basis.size()); }
};

// Throws NotAComplex unless d is square of the right size, d*d = 0, and the
// grading (when present) is consistent with d dropping degree by one.
void check_complex(const F2Complex& c);

struct GradedDims {
  bool graded = false;
  std::map<long long, int> dims;  // by grading, when graded
  int total = 0;
};
GradedDims f2_homology(const F2Complex& c);

// Chain map f: A -> B given as a B.n x A.n matrix. Throws NotChainMap unless
// d_B f = f d_A.
void check_chain_map(const F2Complex& a, const F2Complex& b, const F2Matrix& f);

// Mapping cone M(f), basis = shifted copy of A followed by B; graded when
// both inputs carry compatible gradings that f preserves.
F2Complex mapping_cone(const F2Complex& a, const F2Complex& b, const F2Matrix& f);

bool is_acyclic(const F2Complex& c);

// Rank-complete description of H(c): basis vectors are cycle representatives.
struct HomologyBasis {
  std::vector<F2Vec> reps;          // representatives of a homology basis
  std::vector<F2Vec> image_basis;   // basis of im(d)
};
HomologyBasis f2_homology_basis(const F2Complex& c);

// Matrix of the map induced on homology by a chain map f: A -> B.
F2Matrix homology_induced_map(const F2Complex& a, const F2Complex& b, const F2Matrix& f);
bool is_quasi_iso(const F2Complex& a, const F2Complex& b, const F2Matrix& f);

// Total complex of A -> B -> C with chain maps f1, f2 and a null-homotopy H
// of f2 f1 (f2 f1 = d_C H + H d_A, else NotNullHomotopy). Ungraded by design:
// the three layers shift by one, which is incompatible with a single shared
// grading when the inputs are graded mod different moduli.
F2Complex triple_complex(const F2Complex& a, const F2Complex& b, const F2Complex& c,
                         const F2Matrix& f1, const F2Matrix& f2, const F2Matrix& h);

// Iterated-cone diagnostic for a chain A_0 -f_0-> A_1 -f_1-> ... with
// null-homotopies H_i of f_{i+1} f_i (else HypothesisViolation). Reports, for
// each i where defined, whether psi_i = f_{i+2} H_i + H_{i+1} f_i is a
// quasi-isomorphism, and whether (H_i, f_{i+1}): M(f_i) -> A_{i+2} induces a
// homology isomorphism.
struct IteratedConeReport {
  std::vector<uint8_t> psi_quasi_iso;       // index i, size max(n-3, 0)
  std::vector<uint8_t> cone_map_quasi_iso;  // index i, size max(n-2, 0)
  bool all_psi_quasi_iso = true;
  bool all_cone_maps_quasi_iso = true;
};
IteratedConeReport iterated_cone_check(const std::vector<F2Complex>& complexes,
                                       const std::vector<F2Matrix>& maps,
                                       const std::vector<F2Matrix>& homotopies);

}  // namespace hf

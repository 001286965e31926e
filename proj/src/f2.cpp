#include "hf/f2.hpp"

#include <algorithm>

namespace hf {

F2Matrix F2Matrix::identity(int n) {
  F2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.row[i][i] = 1;
  return m;
}

F2Matrix F2Matrix::mul(const F2Matrix& o) const {
  require(cols == o.rows, Code::DimensionMismatch, "F2 product shape mismatch");
  F2Matrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      if (row[i][k])
        for (int j = 0; j < o.cols; ++j) r.row[i][j] ^= o.row[k][j];
  return r;
}

F2Matrix F2Matrix::add(const F2Matrix& o) const {
  require(rows == o.rows && cols == o.cols, Code::DimensionMismatch, "F2 sum shape mismatch");
  F2Matrix r(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.row[i][j] = row[i][j] ^ o.row[i][j];
  return r;
}

F2Vec F2Matrix::apply(const F2Vec& v) const {
  require(int(v.size()) == cols, Code::DimensionMismatch, "F2 apply shape mismatch");
  F2Vec r(rows, 0);
  for (int i = 0; i < rows; ++i) {
    uint8_t s = 0;
    for (int j = 0; j < cols; ++j) s ^= row[i][j] & v[j];
    r[i] = s;
  }
  return r;
}

bool F2Matrix::is_zero() const {
  for (const auto& r : row)
    for (uint8_t x : r)
      if (x) return false;
  return true;
}

namespace {

int leading_index(const F2Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) return int(i);
  return -1;
}

void xor_into(F2Vec& a, const F2Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// Reduced spanning set with unique leading indices, built deterministically
// in input order. Reducing a vector against it is canonical.
struct ReducedSpan {
  std::map<int, F2Vec> by_lead;

  // Reduces v in place; returns true (and absorbs) if v was independent.
  bool insert(F2Vec v) {
    reduce(v);
    int l = leading_index(v);
    if (l < 0) return false;
    by_lead.emplace(l, std::move(v));
    return true;
  }
  void reduce(F2Vec& v) const {
    for (;;) {
      int l = leading_index(v);
      if (l < 0) return;
      auto it = by_lead.find(l);
      if (it == by_lead.end()) return;
      xor_into(v, it->second);
    }
  }
};

}  // namespace

int f2_rank(F2Matrix m) {
  int rank = 0;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.row[i][c]) { p = i; break; }
    if (p < 0) continue;
    std::swap(m.row[p], m.row[r]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && m.row[i][c]) xor_into(m.row[i], m.row[r]);
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<F2Vec> f2_kernel_basis(const F2Matrix& m) {
  // Row-reduce a working copy, tracking pivot columns.
  F2Matrix w = m;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    int p = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.row[i][c]) { p = i; break; }
    if (p < 0) continue;
    std::swap(w.row[p], w.row[r]);
    for (int i = 0; i < w.rows; ++i)
      if (i != r && w.row[i][c]) xor_into(w.row[i], w.row[r]);
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<uint8_t> is_pivot(w.cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<F2Vec> basis;
  for (int c = 0; c < w.cols; ++c) {
    if (is_pivot[c]) continue;
    F2Vec v(w.cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      if (w.row[i][c]) v[pivot_col[i]] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<F2Vec> f2_solve(const F2Matrix& m, const F2Vec& b) {
  require(int(b.size()) == m.rows, Code::DimensionMismatch, "F2 solve shape mismatch");
  F2Matrix w = m;
  F2Vec rhs = b;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    int p = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.row[i][c]) { p = i; break; }
    if (p < 0) continue;
    std::swap(w.row[p], w.row[r]);
    std::swap(rhs[p], rhs[r]);
    for (int i = 0; i < w.rows; ++i)
      if (i != r && w.row[i][c]) {
        xor_into(w.row[i], w.row[r]);
        rhs[i] ^= rhs[r];
      }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < w.rows; ++i)
    if (rhs[i]) return std::nullopt;
  F2Vec x(w.cols, 0);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

F2Vec f2_reduce_mod_image(const F2Matrix& m, F2Vec v) {
  require(int(v.size()) == m.rows, Code::DimensionMismatch, "F2 reduce shape mismatch");
  ReducedSpan span;
  for (int c = 0; c < m.cols; ++c) {
    F2Vec col(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) col[i] = m.row[i][c];
    span.insert(std::move(col));
  }
  span.reduce(v);
  return v;
}

void check_complex(const F2Complex& c) {
  require(c.d.rows == c.n() && c.d.cols == c.n(), Code::NotAComplex,
          "differential is not square over the basis");
  require(c.d.mul(c.d).is_zero(), Code::NotAComplex, "d^2 != 0");
  if (c.grading_modulus && !c.grading)
    fail(Code::NotAComplex, "grading modulus without grading");
  if (c.grading) {
    require(int(c.grading->size()) == c.n(), Code::NotAComplex,
            "grading length does not match basis");
    if (c.grading_modulus)
      require(*c.grading_modulus >= 1, Code::NotAComplex, "grading modulus must be >= 1");
    for (int i = 0; i < c.n(); ++i)
      for (int j = 0; j < c.n(); ++j)
        if (c.d.at(i, j)) {
          long long gi = (*c.grading)[i], gj = (*c.grading)[j];
          if (c.grading_modulus) {
            long long m = *c.grading_modulus;
            require(((gi - (gj - 1)) % m + m) % m == 0, Code::NotAComplex,
                    "differential does not drop the grading by one (mod modulus)");
          } else {
            require(gi == gj - 1, Code::NotAComplex,
                    "differential does not drop the grading by one");
          }
        }
  }
}

namespace {
long long norm_grading(long long g, const std::optional<long long>& mod) {
  if (!mod) return g;
  long long m = *mod;
  return ((g % m) + m) % m;
}
}  // namespace

GradedDims f2_homology(const F2Complex& c) {
  check_complex(c);
  GradedDims out;
  int n = c.n();
  if (!c.grading) {
    int r = f2_rank(c.d);
    out.graded = false;
    out.total = n - 2 * r;
    return out;
  }
  out.graded = true;
  std::map<long long, std::vector<int>> by_deg;
  for (int i = 0; i < n; ++i)
    by_deg[norm_grading((*c.grading)[i], c.grading_modulus)].push_back(i);
  auto rank_out_of = [&](long long g) -> int {
    auto it = by_deg.find(g);
    if (it == by_deg.end()) return 0;
    F2Matrix sub(n, int(it->second.size()));
    for (int i = 0; i < n; ++i)
      for (size_t j = 0; j < it->second.size(); ++j)
        sub.row[i][j] = c.d.at(i, it->second[j]);
    return f2_rank(sub);
  };
  for (auto& [g, idx] : by_deg) {
    long long above = norm_grading(g + 1, c.grading_modulus);
    int dim = int(idx.size()) - rank_out_of(g) - rank_out_of(above);
    out.dims[g] = dim;
    out.total += dim;
  }
  return out;
}

void check_chain_map(const F2Complex& a, const F2Complex& b, const F2Matrix& f) {
  require(f.rows == b.n() && f.cols == a.n(), Code::NotChainMap,
          "chain map has wrong shape");
  require(b.d.mul(f) == f.mul(a.d), Code::NotChainMap, "d f != f d");
}

F2Complex mapping_cone(const F2Complex& a, const F2Complex& b, const F2Matrix& f) {
  check_complex(a);
  check_complex(b);
  check_chain_map(a, b, f);
  int na = a.n(), nb = b.n();
  F2Complex cone;
  for (const auto& s : a.basis) cone.basis.push_back("a:" + s);
  for (const auto& s : b.basis) cone.basis.push_back("b:" + s);
  cone.d = F2Matrix(na + nb, na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) cone.d.row[i][j] = a.d.at(i, j);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < na; ++j) cone.d.row[na + i][j] = f.at(i, j);
    for (int j = 0; j < nb; ++j) cone.d.row[na + i][na + j] = b.d.at(i, j);
  }
  bool graded = a.grading.has_value() && b.grading.has_value() &&
                a.grading_modulus == b.grading_modulus;
  if (graded) {
    for (int i = 0; i < nb && graded; ++i)
      for (int j = 0; j < na && graded; ++j)
        if (f.at(i, j) &&
            norm_grading((*b.grading)[i], b.grading_modulus) !=
                norm_grading((*a.grading)[j], a.grading_modulus))
          graded = false;  // f not grading-preserving: emit an ungraded cone
  }
  if (graded) {
    std::vector<long long> g;
    for (int j = 0; j < na; ++j)
      g.push_back(norm_grading((*a.grading)[j] + 1, a.grading_modulus));
    for (int j = 0; j < nb; ++j)
      g.push_back(norm_grading((*b.grading)[j], b.grading_modulus));
    cone.grading = std::move(g);
    cone.grading_modulus = a.grading_modulus;
  }
  check_complex(cone);
  return cone;
}

bool is_acyclic(const F2Complex& c) { return f2_homology(c).total == 0; }

HomologyBasis f2_homology_basis(const F2Complex& c) {
  check_complex(c);
  HomologyBasis h;
  ReducedSpan span;
  for (int j = 0; j < c.n(); ++j) {
    F2Vec col(c.n(), 0);
    for (int i = 0; i < c.n(); ++i) col[i] = c.d.at(i, j);
    span.insert(std::move(col));
  }
  for (const auto& [lead, v] : span.by_lead) h.image_basis.push_back(v);
  for (const F2Vec& k : f2_kernel_basis(c.d)) {
    F2Vec v = k;
    span.reduce(v);
    if (leading_index(v) >= 0) {
      h.reps.push_back(v);
      span.by_lead.emplace(leading_index(v), v);
    }
  }
  return h;
}

F2Matrix homology_induced_map(const F2Complex& a, const F2Complex& b, const F2Matrix& f) {
  check_chain_map(a, b, f);
  HomologyBasis ha = f2_homology_basis(a);
  HomologyBasis hb = f2_homology_basis(b);
  int dim_a = int(ha.reps.size());
  int dim_b = int(hb.reps.size());
  // Columns of E: image basis of B, then homology reps of B.
  int k = int(hb.image_basis.size());
  F2Matrix E(b.n(), k + dim_b);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < b.n(); ++i) E.row[i][j] = hb.image_basis[j][i];
  for (int j = 0; j < dim_b; ++j)
    for (int i = 0; i < b.n(); ++i) E.row[i][k + j] = hb.reps[j][i];
  F2Matrix out(dim_b, dim_a);
  for (int j = 0; j < dim_a; ++j) {
    F2Vec img = f.apply(ha.reps[j]);
    auto x = f2_solve(E, img);
    check_internal(x.has_value(), "induced map: image of a cycle not in cycle span");
    for (int i = 0; i < dim_b; ++i) out.row[i][j] = (*x)[k + i];
  }
  return out;
}

bool is_quasi_iso(const F2Complex& a, const F2Complex& b, const F2Matrix& f) {
  F2Matrix ind = homology_induced_map(a, b, f);
  return ind.rows == ind.cols && f2_rank(ind) == ind.rows;
}

F2Complex triple_complex(const F2Complex& a, const F2Complex& b, const F2Complex& c,
                         const F2Matrix& f1, const F2Matrix& f2, const F2Matrix& h) {
  check_complex(a);
  check_complex(b);
  check_complex(c);
  check_chain_map(a, b, f1);
  check_chain_map(b, c, f2);
  require(h.rows == c.n() && h.cols == a.n(), Code::DimensionMismatch,
          "homotopy has wrong shape");
  F2Matrix lhs = f2.mul(f1);
  F2Matrix rhs = c.d.mul(h).add(h.mul(a.d));
  require(lhs == rhs, Code::NotNullHomotopy, "f2 f1 is not null-homotopic via H");

  int na = a.n(), nb = b.n(), nc = c.n();
  F2Complex t;
  for (const auto& s : a.basis) t.basis.push_back("a:" + s);
  for (const auto& s : b.basis) t.basis.push_back("b:" + s);
  for (const auto& s : c.basis) t.basis.push_back("c:" + s);
  t.d = F2Matrix(na + nb + nc, na + nb + nc);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) t.d.row[i][j] = a.d.at(i, j);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < na; ++j) t.d.row[na + i][j] = f1.at(i, j);
    for (int j = 0; j < nb; ++j) t.d.row[na + i][na + j] = b.d.at(i, j);
  }
  for (int i = 0; i < nc; ++i) {
    for (int j = 0; j < na; ++j) t.d.row[na + nb + i][j] = h.at(i, j);
    for (int j = 0; j < nb; ++j) t.d.row[na + nb + i][na + j] = f2.at(i, j);
    for (int j = 0; j < nc; ++j) t.d.row[na + nb + i][na + nb + j] = c.d.at(i, j);
  }
  check_complex(t);  // d^2 = 0 is exactly the null-homotopy identity
  return t;
}

IteratedConeReport iterated_cone_check(const std::vector<F2Complex>& complexes,
                                       const std::vector<F2Matrix>& maps,
                                       const std::vector<F2Matrix>& homotopies) {
  int n = int(complexes.size());
  require(n >= 2, Code::DimensionMismatch, "need at least two complexes");
  require(int(maps.size()) == n - 1, Code::DimensionMismatch,
          "need one map per consecutive pair");
  require(int(homotopies.size()) == std::max(n - 2, 0), Code::DimensionMismatch,
          "need one homotopy per consecutive triple");
  for (const auto& c : complexes) check_complex(c);
  for (int i = 0; i + 1 < n; ++i)
    check_chain_map(complexes[i], complexes[i + 1], maps[i]);
  for (int i = 0; i + 2 < n; ++i) {
    const F2Matrix& h = homotopies[i];
    require(h.rows == complexes[i + 2].n() && h.cols == complexes[i].n(),
            Code::DimensionMismatch, "homotopy has wrong shape");
    F2Matrix lhs = maps[i + 1].mul(maps[i]);
    F2Matrix rhs = complexes[i + 2].d.mul(h).add(h.mul(complexes[i].d));
    require(lhs == rhs, Code::HypothesisViolation,
            "consecutive composite not null-homotopic via the supplied homotopy (index " +
                std::to_string(i) + ")");
  }

  IteratedConeReport rep;
  for (int i = 0; i + 3 < n; ++i) {
    F2Matrix psi = maps[i + 2].mul(homotopies[i]).add(homotopies[i + 1].mul(maps[i]));
    // psi is a chain map A_i -> A_{i+3}; a failure here is a bug, not input.
    check_internal(complexes[i + 3].d.mul(psi) == psi.mul(complexes[i].d),
                   "psi is not a chain map");
    bool q = is_quasi_iso(complexes[i], complexes[i + 3], psi);
    rep.psi_quasi_iso.push_back(q);
    rep.all_psi_quasi_iso = rep.all_psi_quasi_iso && q;
  }
  for (int i = 0; i + 2 < n; ++i) {
    F2Complex cone = mapping_cone(complexes[i], complexes[i + 1], maps[i]);
    int na = complexes[i].n(), nb = complexes[i + 1].n();
    F2Matrix m(complexes[i + 2].n(), na + nb);
    for (int r = 0; r < m.rows; ++r) {
      for (int j = 0; j < na; ++j) m.row[r][j] = homotopies[i].at(r, j);
      for (int j = 0; j < nb; ++j) m.row[r][na + j] = maps[i + 1].at(r, j);
    }
    check_internal(complexes[i + 2].d.mul(m) == m.mul(cone.d),
                   "(H, f) is not a chain map out of the cone");
    bool q = is_quasi_iso(cone, complexes[i + 2], m);
    rep.cone_map_quasi_iso.push_back(q);
    rep.all_cone_maps_quasi_iso = rep.all_cone_maps_quasi_iso && q;
  }
  return rep;
}

}  // namespace hf

#include "hf/floer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

namespace hf {

NicenessReport is_nice(const Validated& v, bool knot_mode) {
  NicenessReport out;
  for (int r = 0; r < v.regions(); ++r) {
    if (r == v.z_region) continue;
    if (knot_mode && r == v.w_region) continue;
    const Region& reg = v.d.regions[r];
    bool disc = reg.genus == 0 && reg.boundary.size() == 1;
    int corners = v.corner_count[r];
    if (disc && (corners == 2 || corners == 4)) continue;
    out.offending.push_back(r);
  }
  out.nice = out.offending.empty();
  return out;
}

namespace {

// Coordinate rows on which the lattice basis has full rank: every candidate
// multiplicity vector is pinned down by its values there. Rational row
// reduction of the transposed basis; the pivot columns are the rows.
std::vector<int> lattice_pivot_rows(const std::vector<std::vector<Int>>& lattice, int nregions) {
  int r = int(lattice.size());
  std::vector<int> rows;
  if (r == 0) return rows;
  std::vector<std::vector<Rat>> w(r, std::vector<Rat>(nregions));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < nregions; ++k) w[i][k] = Rat(lattice[i][k]);
  int row = 0;
  for (int col = 0; col < nregions && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i) {
      if (w[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(w[piv], w[row]);
    for (int i = 0; i < r; ++i) {
      if (i == row || w[i][col] == 0) continue;
      Rat f = w[i][col] / w[row][col];
      for (int k = col; k < nregions; ++k) w[i][k] -= f * w[row][k];
    }
    rows.push_back(col);
    ++row;
  }
  return rows;
}

// The support of a {0,1} domain glued along its interior arcs is a disc iff
// it is connected through those arcs and its Euler characteristic is one.
// chi = sum of region chi + one per glued point-bearing arc - per-point
// vertex identifications (covered quadrant visits minus contiguous runs);
// circle arcs cancel against their closing vertex and drop out.
bool disc_support(const Validated& v, const std::vector<Int>& m) {
  std::vector<char> in(v.regions(), 0);
  std::vector<int> supp;
  for (int r = 0; r < v.regions(); ++r) {
    if (m[r] == 1) {
      in[r] = 1;
      supp.push_back(r);
    }
  }
  if (supp.empty()) return false;

  std::map<int, std::vector<int>> adj;
  Int chi = 0;
  for (const auto& [key, slotpair] : v.slots) {
    int ra = slotpair[0].region, rb = slotpair[1].region;
    if (!in[ra] || !in[rb]) continue;
    if (!v.d.curves(key.kind)[key.curve].empty()) chi += 1;
    adj[ra].push_back(rb);
    adj[rb].push_back(ra);
  }
  std::vector<char> seen(v.regions(), 0);
  std::vector<int> stack = {supp[0]};
  seen[supp[0]] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (int nb : adj[r]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  if (reached != int(supp.size())) return false;

  for (int r : supp) {
    const Region& reg = v.d.regions[r];
    chi += 2 - 2 * reg.genus - int(reg.boundary.size());
  }
  for (int p = 0; p < v.points(); ++p) {
    int covered = 0;
    std::array<char, 4> qin{};
    for (int q = 0; q < 4; ++q) {
      qin[q] = in[v.quadrant[p][q]];
      covered += qin[q];
    }
    if (covered == 0) continue;
    int runs = 1;
    if (covered < 4) {
      runs = 0;
      for (int q = 0; q < 4; ++q)
        if (qin[q] && !qin[(q + 3) & 3]) ++runs;
    }
    chi -= covered - runs;
  }
  return chi == 1;
}

std::optional<CountedPolygon> filter_polygon(const Validated& v, const Generator& x,
                                             const Generator& y, const std::vector<int>& moving,
                                             const std::vector<Int>& m) {
  CountedPolygon poly;
  poly.mult = m;
  poly.arity = 2 * int(moving.size());
  // Corner structure: one covered quadrant at each end of a moving
  // coordinate, nothing at a shared one.
  for (size_t i = 0; i < x.pts.size(); ++i) {
    int px = x.pts[i], py = y.pts[i];
    if (px == py) {
      for (int q = 0; q < 4; ++q)
        if (m[v.quadrant[px][q]] != 0) return std::nullopt;
      continue;
    }
    for (int p : {px, py}) {
      Int local = 0;
      for (int q = 0; q < 4; ++q) local += m[v.quadrant[p][q]];
      if (local != 1) return std::nullopt;
    }
  }
  for (int i : moving) poly.corners.push_back(x.pts[i]);
  for (int i : moving) poly.corners.push_back(y.pts[i]);
  if (!disc_support(v, m)) return std::nullopt;
  if (maslov_index(v, x, y, m) != 1) return std::nullopt;
  return poly;
}

}  // namespace

std::vector<CountedPolygon> empty_polygons(const Validated& v, const Generator& x,
                                           const Generator& y, bool knot_mode, bool prune) {
  std::vector<CountedPolygon> out;
  if (x.pts == y.pts) return out;
  std::vector<int> moving;
  for (size_t i = 0; i < x.pts.size(); ++i)
    if (x.pts[i] != y.pts[i]) moving.push_back(int(i));
  if (prune && moving.size() > 2) return out;

  std::vector<int> pins = {v.z_region};
  if (knot_mode) {
    require(v.w_region >= 0, Code::MissingBasepoint, "knot-mode polygons need basepoint_w");
    if (v.w_region != v.z_region) pins.push_back(v.w_region);
  }
  DomainSolution sol = connecting_domains(v, x, y, pins);
  if (!sol.exists) return out;

  const int nregions = v.regions();
  const int rank = int(sol.lattice.size());
  check_internal(rank <= 20, "polygon lattice rank out of supported range");
  std::vector<int> rows = lattice_pivot_rows(sol.lattice, nregions);
  check_internal(int(rows.size()) == rank, "lattice rank mismatch in polygon enumeration");

  IntMatrix square(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) square.at(i, j) = sol.lattice[j][rows[i]];

  for (uint32_t mask = 0; mask < (uint32_t(1) << rank); ++mask) {
    std::vector<Int> m = sol.particular;
    if (rank > 0) {
      std::vector<Int> target(rank);
      for (int i = 0; i < rank; ++i)
        target[i] = Int(int((mask >> i) & 1)) - sol.particular[rows[i]];
      IntSolveResult cs = solve_integer_system(square, target);
      if (!cs.solvable) continue;
      check_internal(cs.kernel.empty(), "pivot system must be nonsingular");
      for (int j = 0; j < rank; ++j)
        for (int k = 0; k < nregions; ++k) m[k] += cs.particular[j] * sol.lattice[j][k];
    }
    bool zero_one = true;
    for (const Int& c : m) {
      if (c != 0 && c != 1) {
        zero_one = false;
        break;
      }
    }
    if (!zero_one) continue;
    if (auto poly = filter_polygon(v, x, y, moving, m)) out.push_back(*poly);
  }
  return out;
}

HatDifferential differential(const Validated& v, bool knot_mode) {
  NicenessReport nr = is_nice(v, knot_mode);
  if (!nr.nice) {
    std::string names;
    for (int r : nr.offending) names += (names.empty() ? "" : ", ") + v.region_name(r);
    fail(knot_mode ? Code::NotNiceForKnot : Code::NotNice,
         std::string(knot_mode ? "knot-mode " : "") + "niceness fails at region(s): " + names);
  }
  if (knot_mode)
    require(v.w_region >= 0, Code::MissingBasepoint, "knot differential needs basepoint_w");

  HatDifferential out;
  out.gens = enumerate_generators(v);
  out.h1 = first_homology(v);
  out.partition = partition_classes(v, out.h1, out.gens);

  for (const auto& cls : out.partition.classes) {
    const Generator& base = out.gens[cls[0]];
    WeakAdmissibility wa = check_weak_admissibility(v, base, knot_mode);
    if (!wa.admissible) {
      std::string w = "[";
      for (size_t i = 0; i < wa.witness.size(); ++i)
        w += (i ? ", " : "") + wa.witness[i].str();
      fail(Code::NotAdmissible,
           "class of " + base.name + " has a sign-definite periodic domain " + w + "]");
    }

    ClassComplex cc;
    cc.gens = cls;
    int n = int(cls.size());
    F2Matrix d(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        auto polys = empty_polygons(v, out.gens[cls[j]], out.gens[cls[i]], knot_mode, true);
        d.set(i, j, uint8_t(polys.size() & 1));
      }
    }
    if (!d.mul(d).is_zero())
      fail(Code::InternalD2, "differential does not square to zero on class of " + base.name);

    cc.delta = grading_divisor(v, base);
    std::vector<long long> gr(n, 0);
    for (int idx = 1; idx < n; ++idx) {
      const Generator& g = out.gens[cls[idx]];
      DomainSolution ds = connecting_domains(v, base, g, {});
      check_internal(ds.exists, "same-class generators must admit a connecting domain");
      Rat val = maslov_index(v, base, g, ds.particular) - 2 * Rat(ds.particular[v.z_region]);
      check_internal(denominator(val) == 1, "relative grading must be an integer");
      Int rel = -numerator(val);  // gr(base) - gr(g) = val with gr(base) = 0
      if (cc.delta != 0) rel = ((rel % cc.delta) + cc.delta) % cc.delta;
      gr[idx] = rel.convert_to<long long>();
    }
    cc.complex.basis.reserve(n);
    for (int gi : cls) cc.complex.basis.push_back(out.gens[gi].name);
    cc.complex.d = d;
    cc.complex.grading = gr;
    if (cc.delta != 0) cc.complex.grading_modulus = cc.delta.convert_to<long long>();
    try {
      check_complex(cc.complex);
    } catch (const Error& e) {
      fail(Code::Internal, std::string("class complex rejected: ") + e.what());
    }
    out.classes.push_back(std::move(cc));
  }
  return out;
}

HatHomology hf_hat(const Validated& v) {
  HatDifferential hd = differential(v, false);
  HatHomology out;
  out.h1 = hd.h1.h1;
  for (const auto& cc : hd.classes) {
    GradedDims gd = f2_homology(cc.complex);
    ClassHomology ch;
    ch.delta = cc.delta;
    ch.dim = gd.total;
    ch.graded = gd.dims;
    out.total += gd.total;
    out.classes.push_back(std::move(ch));
  }
  return out;
}

}  // namespace hf

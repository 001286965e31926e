#include "hf/knot.hpp"

#include <algorithm>
#include <queue>

namespace hf {

HatDifferential knot_differential(const Validated& v) { return differential(v, true); }

namespace {

// Relative Alexander degree of g against the base generator: n_z - n_w of a
// connecting domain, the base at zero. The orientation pairs with the Maslov
// convention so that the homology profile of a knot comes out symmetric.
// Well-definedness across the unconstrained lattice is the caller's
// refinement check.
long long alexander_of(const Validated& v, const Generator& base, const Generator& g) {
  DomainSolution ds = connecting_domains(v, base, g, {});
  check_internal(ds.exists, "same-class generators must admit a connecting domain");
  Int a = ds.particular[v.z_region] - ds.particular[v.w_region];
  return a.convert_to<long long>();
}

}  // namespace

KnotHomology hfk_hat(const Validated& v) {
  HatDifferential hd = differential(v, true);

  KnotHomology out;
  out.h1 = hd.h1.h1;

  out.refined = true;
  for (const auto& l : domain_lattice(v, {}))
    if (l[v.z_region] != l[v.w_region]) out.refined = false;

  for (const auto& cc : hd.classes) {
    KnotClassHomology kc;
    kc.basis = cc.complex.basis;
    kc.delta = cc.delta;

    GradedDims whole = f2_homology(cc.complex);
    for (const auto& [m, dim] : whole.dims)
      if (dim > 0) kc.by_maslov[m] = dim;
    kc.dim = whole.total;

    if (out.refined) {
      int n = cc.complex.n();
      const Generator& base = hd.gens[cc.gens[0]];
      std::vector<long long> a(n, 0);
      for (int i = 1; i < n; ++i) a[i] = alexander_of(v, base, hd.gens[cc.gens[i]]);
      for (int i = 0; i < n; ++i) kc.alexander[kc.basis[i]] = a[i];

      // Polygons counted by the knot differential miss both basepoints, so
      // the differential must preserve the Alexander degree.
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          check_internal(!cc.complex.d.at(i, j) || a[i] == a[j],
                         "knot differential must preserve the Alexander degree");

      std::map<long long, std::vector<int>> strata;
      for (int i = 0; i < n; ++i) strata[a[i]].push_back(i);
      int split_total = 0;
      for (const auto& [deg, idx] : strata) {
        F2Complex sub;
        sub.d = F2Matrix(int(idx.size()), int(idx.size()));
        std::vector<long long> gr;
        for (size_t jj = 0; jj < idx.size(); ++jj) {
          sub.basis.push_back(cc.complex.basis[idx[jj]]);
          gr.push_back((*cc.complex.grading)[idx[jj]]);
          for (size_t ii = 0; ii < idx.size(); ++ii)
            sub.d.set(int(ii), int(jj), cc.complex.d.at(idx[ii], idx[jj]));
        }
        sub.grading = gr;
        sub.grading_modulus = cc.complex.grading_modulus;
        GradedDims gd = f2_homology(sub);
        if (gd.total > 0) {
          for (const auto& [m, dim] : gd.dims)
            if (dim > 0) kc.table[deg][m] = dim;
          kc.by_alexander[deg] = gd.total;
        }
        split_total += gd.total;
      }
      check_internal(split_total == kc.dim,
                     "Alexander-split homology must match the unsplit dimension");
    }

    out.total += kc.dim;
    out.classes.push_back(std::move(kc));
  }

  // Symmetric centering in a homology sphere: shift the relative degrees so
  // the support midpoint lands on zero, when that midpoint is an integer.
  if (out.h1.trivial() && out.refined && out.total > 0) {
    check_internal(out.classes.size() == 1, "a homology sphere has a single structure class");
    KnotClassHomology& kc = out.classes[0];
    long long lo = kc.by_alexander.begin()->first;
    long long hi = kc.by_alexander.rbegin()->first;
    if ((lo + hi) % 2 == 0) {
      out.shift = -(lo + hi) / 2;
      out.centered = true;
      if (out.shift != 0) {
        std::map<std::string, long long> alex;
        std::map<long long, std::map<long long, int>> table;
        std::map<long long, int> by_alex;
        for (const auto& [g, deg] : kc.alexander) alex[g] = deg + out.shift;
        for (const auto& [deg, row] : kc.table) table[deg + out.shift] = row;
        for (const auto& [deg, d] : kc.by_alexander) by_alex[deg + out.shift] = d;
        kc.alexander = std::move(alex);
        kc.table = std::move(table);
        kc.by_alexander = std::move(by_alex);
      }
    }
  }
  return out;
}

KnotTrace knot_trace(const Validated& v) {
  require(v.w_region >= 0, Code::MissingBasepoint, "knot trace needs basepoint_w");

  KnotTrace out;

  // First leg: an arc from z to w avoiding every curve except for a single
  // beta crossing must step across one beta segment between the two
  // basepoint regions.
  bool found = false;
  for (const auto& [key, slotpair] : v.slots) {
    if (key.kind != CurveKind::Beta) continue;
    int ra = slotpair[0].region, rb = slotpair[1].region;
    if ((ra == v.z_region && rb == v.w_region) || (ra == v.w_region && rb == v.z_region)) {
      out.crossed = key;
      found = true;
      break;
    }
  }
  if (!found)
    fail(Code::NoValidTrace,
         "no single beta crossing joins region '" + v.region_name(v.z_region) +
             "' to region '" + v.region_name(v.w_region) + "'");

  // Return leg: a path from w back to z crossing alpha segments only.
  std::vector<int> prev(v.regions(), -2);
  std::queue<int> q;
  prev[v.w_region] = -1;
  q.push(v.w_region);
  while (!q.empty() && prev[v.z_region] == -2) {
    int r = q.front();
    q.pop();
    for (const auto& [key, slotpair] : v.slots) {
      if (key.kind != CurveKind::Alpha) continue;
      std::array<int, 2> ends = {slotpair[0].region, slotpair[1].region};
      for (int s = 0; s < 2; ++s)
        if (ends[s] == r && prev[ends[1 - s]] == -2) {
          prev[ends[1 - s]] = r;
          q.push(ends[1 - s]);
        }
    }
  }
  if (prev[v.z_region] == -2)
    fail(Code::NoValidTrace, "the return leg cannot reach region '" +
                                 v.region_name(v.z_region) + "' across alpha segments alone");

  std::vector<int> path;
  for (int r = v.z_region; r != -1; r = prev[r]) path.push_back(r);
  std::reverse(path.begin(), path.end());
  for (int r : path) out.gamma.push_back(v.region_name(r));
  out.gamma_crossings = int(path.size()) - 1;
  return out;
}

}  // namespace hf

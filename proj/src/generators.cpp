#include "hf/generators.hpp"

#include <algorithm>

namespace hf {

std::vector<Generator> enumerate_generators(const Validated& v) {
  const Diagram& d = v.d;
  std::vector<Generator> out;
  std::vector<int> chosen(d.genus, -1);
  std::vector<bool> beta_used(d.genus, false);
  auto emit = [&]() {
    Generator g;
    g.pts = chosen;
    for (int p : chosen) {
      g.beta_of.push_back(v.on_beta[p].first);
      if (!g.name.empty()) g.name += ",";
      g.name += d.points[p];
    }
    out.push_back(std::move(g));
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d.genus) {
      emit();
      return;
    }
    for (const std::string& pname : d.alpha[i]) {
      int p = v.point_id.at(pname);
      int bc = v.on_beta[p].first;
      if (beta_used[bc]) continue;
      beta_used[bc] = true;
      chosen[i] = p;
      self(self, i + 1);
      beta_used[bc] = false;
    }
  };
  if (d.genus > 0) rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const Generator& a, const Generator& b) { return a.pts < b.pts; });
  return out;
}

namespace {

// Deterministic segment ordering shared by all chain-level computations.
std::map<ArcKey, int> index_segments(const Diagram& d) {
  std::map<ArcKey, int> id;
  int next = 0;
  for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
    for (int c = 0; c < d.genus; ++c)
      for (int s = 0; s < d.segment_count(k, c); ++s) id[{k, c, s}] = next++;
  return id;
}

}  // namespace

H1Data first_homology(const Validated& v) {
  const Diagram& d = v.d;
  H1Data h;
  h.edge_id = index_segments(d);
  int segs = int(h.edge_id.size());

  // Spoke edges (center of a region to one vertex of each boundary cycle)
  // cut every region into a disc; they follow the segments in edge space.
  int spokes = 0;
  for (const Region& r : d.regions) spokes += int(r.boundary.size());
  int edges = segs + spokes;

  // Vertices: points, one closing vertex per pointless circle, one center
  // per region.
  std::map<std::pair<int, int>, int> circle_vertex;  // (kind as int, curve)
  int verts = v.points();
  for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
    for (int c = 0; c < d.genus; ++c)
      if (d.curves(k)[c].empty()) circle_vertex[{int(k), c}] = verts++;
  int center0 = verts;
  verts += v.regions();

  IntMatrix d1(verts, edges);
  for (const auto& [key, e] : h.edge_id) {
    const auto& pts = d.curves(key.kind)[key.curve];
    if (pts.empty()) continue;  // circle: both ends at its closing vertex
    int n = int(pts.size());
    int src = v.point_id.at(pts[key.segment]);
    int dst = v.point_id.at(pts[(key.segment + 1) % n]);
    d1.at(dst, e) += 1;
    d1.at(src, e) -= 1;
  }
  {
    int e = segs;
    for (int r = 0; r < v.regions(); ++r)
      for (const auto& cyc : d.regions[r].boundary) {
        const SegRef& head = cyc[0];
        int anchor;
        if (d.curves(head.kind)[head.curve].empty())
          anchor = circle_vertex.at({int(head.kind), head.curve});
        else {
          const auto& pts = d.curves(head.kind)[head.curve];
          int n = int(pts.size());
          int pos = head.reversed ? (head.segment + 1) % n : head.segment;
          anchor = v.point_id.at(pts[pos]);
        }
        d1.at(anchor, e) += 1;
        d1.at(center0 + r, e) -= 1;
        ++e;
      }
  }

  IntSolveResult cycles = solve_integer_system(d1, std::vector<Int>(verts, 0));
  check_internal(cycles.solvable, "homogeneous system must be solvable");
  h.cycle_rank = int(cycles.kernel.size());
  h.cycle_basis = IntMatrix::from_columns(edges, cycles.kernel);

  // Relations: each region's total boundary (its cut-open disc, spokes
  // cancelling) and the full curve classes of both families.
  std::vector<std::vector<Int>> relations;
  auto coords_of = [&](const std::vector<Int>& chain) {
    IntSolveResult r = solve_integer_system(h.cycle_basis, chain);
    check_internal(r.solvable, "1-chain is not a cycle");
    return r.particular;
  };
  for (const Region& r : d.regions) {
    check_internal(r.genus == 0, "validated diagrams have genus-zero regions");
    std::vector<Int> rel(edges, 0);
    for (const auto& cyc : r.boundary)
      for (const SegRef& s : cyc) rel[h.edge_id.at(key_of(s))] += s.reversed ? -1 : 1;
    relations.push_back(coords_of(rel));
  }
  {
    // The surface's own homology must come out free of rank twice the genus.
    AbelianGroup surface =
        cokernel(IntMatrix::from_columns(h.cycle_rank, relations));
    check_internal(surface == AbelianGroup{2 * d.genus, {}},
                   "surface homology should be free of rank twice the genus");
  }
  for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
    for (int c = 0; c < d.genus; ++c) {
      std::vector<Int> rel(edges, 0);
      for (int s = 0; s < d.segment_count(k, c); ++s) rel[h.edge_id.at({k, c, s})] += 1;
      relations.push_back(coords_of(rel));
    }
  h.quotient = lattice_quotient(IntMatrix::from_columns(h.cycle_rank, relations));
  h.h1 = h.quotient.group();
  return h;
}

std::vector<Int> H1Data::cycle_coordinates(const std::vector<Int>& chain) const {
  IntSolveResult r = solve_integer_system(cycle_basis, chain);
  check_internal(r.solvable, "1-chain is not a cycle");
  return r.particular;
}

std::vector<Int> connecting_chain(const Validated& v, const H1Data& h, const Generator& x,
                                  const Generator& y) {
  const Diagram& d = v.d;
  int edges = h.cycle_basis.rows;
  std::vector<Int> chain(edges, 0);
  for (int i = 0; i < d.genus; ++i) {
    // Forward along alpha curve i from x's point to y's point.
    int n = int(d.alpha[i].size());
    int j = v.on_alpha[x.pts[i]].second;
    int stop = v.on_alpha[y.pts[i]].second;
    while (j != stop) {
      chain[h.edge_id.at({CurveKind::Alpha, i, j})] += 1;
      j = (j + 1) % n;
    }
  }
  std::vector<int> x_on_beta(d.genus, -1), y_on_beta(d.genus, -1);
  for (int i = 0; i < d.genus; ++i) {
    x_on_beta[x.beta_of[i]] = x.pts[i];
    y_on_beta[y.beta_of[i]] = y.pts[i];
  }
  for (int c = 0; c < d.genus; ++c) {
    // Forward along beta curve c from y's point back to x's point.
    int n = int(d.beta[c].size());
    int j = v.on_beta[y_on_beta[c]].second;
    int stop = v.on_beta[x_on_beta[c]].second;
    while (j != stop) {
      chain[h.edge_id.at({CurveKind::Beta, c, j})] += 1;
      j = (j + 1) % n;
    }
  }
  return chain;
}

std::vector<std::pair<Int, Int>> epsilon(const Validated& v, const H1Data& h, const Generator& x,
                                         const Generator& y) {
  return h.quotient.reduce(h.cycle_coordinates(connecting_chain(v, h, x, y)));
}

bool epsilon_zero(const std::vector<std::pair<Int, Int>>& e) {
  for (const auto& [value, modulus] : e)
    if (value != 0) return false;
  return true;
}

SpincPartition partition_classes(const Validated& v, const H1Data& h,
                                 const std::vector<Generator>& gens) {
  SpincPartition part;
  part.class_of.assign(gens.size(), -1);
  std::vector<std::vector<std::pair<Int, Int>>> keys;
  for (int g = 0; g < int(gens.size()); ++g) {
    auto key = epsilon(v, h, gens[0], gens[g]);
    int cls = -1;
    for (int c = 0; c < int(keys.size()); ++c)
      if (keys[c] == key) {
        cls = c;
        break;
      }
    if (cls < 0) {
      cls = int(keys.size());
      keys.push_back(key);
      part.classes.emplace_back();
    }
    part.class_of[g] = cls;
    part.classes[cls].push_back(g);
  }
  return part;
}

}  // namespace hf

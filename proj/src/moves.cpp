#include "hf/moves.hpp"

#include <algorithm>
#include <set>

namespace hf {

namespace {

// A move that passed its preconditions must output a valid diagram; anything
// else is a bug in the surgery, not a user error.
Diagram checked(Diagram d, const char* move) {
  try {
    validate_diagram(d);
  } catch (const Error& e) {
    fail(Code::Internal, std::string(move) + " produced an invalid diagram: " + e.what());
  }
  return d;
}

std::string fresh_name(const std::set<std::string>& used, const std::string& stem) {
  for (int i = 0;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

std::string fresh_region_name(const Diagram& d, const std::string& base) {
  std::set<std::string> used;
  for (const Region& r : d.regions) used.insert(r.name);
  if (!used.count(base)) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

}  // namespace

Diagram swap_roles(const Diagram& d) {
  validate_diagram(d);
  Diagram out = d;
  std::swap(out.alpha, out.beta);
  for (Region& r : out.regions)
    for (auto& cyc : r.boundary)
      for (SegRef& s : cyc) s.kind = other_kind(s.kind);
  return checked(std::move(out), "swap_roles");
}

Diagram stabilize(const Diagram& d, const std::string& host_region) {
  Validated v = validate_diagram(d);
  auto it = v.region_id.find(host_region);
  require(it != v.region_id.end(), Code::UnknownRegion,
          "stabilize host region '" + host_region + "' does not exist");

  Diagram out = d;
  int g = d.genus;
  std::set<std::string> used(d.points.begin(), d.points.end());
  std::string q = fresh_name(used, "q");
  out.points.push_back(q);
  out.alpha.push_back({q});
  out.beta.push_back({q});
  out.genus = g + 1;
  out.regions[it->second].boundary.push_back(
      {aref(g, 0, false), bref(g, 0, false), aref(g, 0, true), bref(g, 0, true)});
  if (out.contact) out.contact->eh.push_back(q);
  return checked(std::move(out), "stabilize");
}

Diagram destabilize(const Diagram& d, int curve_index) {
  Validated v = validate_diagram(d);
  require(curve_index >= 0 && curve_index < d.genus, Code::Structure,
          "destabilize curve index out of range");
  require(d.genus >= 2, Code::NotDestabilizable,
          "destabilizing the last curve pair would leave an empty diagram");
  require(d.alpha[curve_index].size() == 1 && d.beta[curve_index].size() == 1 &&
              d.alpha[curve_index][0] == d.beta[curve_index][0],
          Code::NotDestabilizable, "curve pair does not intersect in a single shared point");

  // The pair's two segments must form one standalone square boundary cycle.
  Slot sq = v.slots.at({CurveKind::Alpha, curve_index, 0})[0];
  const auto& cyc = d.regions[sq.region].boundary[sq.cycle];
  std::set<SegRef> want = {aref(curve_index, 0, false), bref(curve_index, 0, false),
                           aref(curve_index, 0, true), bref(curve_index, 0, true)};
  require(cyc.size() == 4 && std::set<SegRef>(cyc.begin(), cyc.end()) == want,
          Code::NotDestabilizable, "curve pair does not bound a standalone square cycle");

  Diagram out = d;
  out.genus = d.genus - 1;
  out.regions[sq.region].boundary.erase(out.regions[sq.region].boundary.begin() + sq.cycle);
  std::string p = d.alpha[curve_index][0];
  out.points.erase(std::find(out.points.begin(), out.points.end(), p));
  out.alpha.erase(out.alpha.begin() + curve_index);
  out.beta.erase(out.beta.begin() + curve_index);
  for (Region& r : out.regions)
    for (auto& c : r.boundary)
      for (SegRef& s : c) {
        check_internal(s.curve != curve_index, "stray reference to destabilized curve");
        if (s.curve > curve_index) s.curve--;
      }
  if (out.contact) out.contact->eh.erase(out.contact->eh.begin() + curve_index);
  return checked(std::move(out), "destabilize");
}

Diagram finger_move(const Diagram& d, int alpha_curve, int alpha_segment,
                    const std::string& region, int beta_curve, int beta_segment) {
  Validated v = validate_diagram(d);
  auto it = v.region_id.find(region);
  require(it != v.region_id.end(), Code::UnknownRegion,
          "finger move region '" + region + "' does not exist");
  int rid = it->second;
  const Region& R = d.regions[rid];
  require(alpha_curve >= 0 && alpha_curve < d.genus &&
              alpha_segment >= 0 && alpha_segment < d.segment_count(CurveKind::Alpha, alpha_curve),
          Code::Structure, "alpha segment reference out of range");
  require(beta_curve >= 0 && beta_curve < d.genus &&
              beta_segment >= 0 && beta_segment < d.segment_count(CurveKind::Beta, beta_curve),
          Code::Structure, "beta segment reference out of range");
  require(R.genus == 0 && R.boundary.size() == 1, Code::RegionNotDisc,
          "finger move region '" + region + "' is not a disc");

  const int ca = alpha_curve, k = alpha_segment, cb = beta_curve, l = beta_segment;

  // Rotate the disc's cycle so the pushed-through alpha slot comes first, and
  // locate the pushed beta slot after it.
  std::vector<SegRef> cyc = R.boundary[0];
  auto at_s = std::find_if(cyc.begin(), cyc.end(), [&](const SegRef& e) {
    return e.kind == CurveKind::Alpha && e.curve == ca && e.segment == k;
  });
  require(at_s != cyc.end(), Code::SegmentsNotCoregional,
          "alpha segment is not on the region's boundary cycle");
  std::rotate(cyc.begin(), at_s, cyc.end());
  int i_t = -1;
  for (int i = 1; i < int(cyc.size()); ++i)
    if (cyc[i].kind == CurveKind::Beta && cyc[i].curve == cb && cyc[i].segment == l) {
      i_t = i;
      break;
    }
  require(i_t > 0, Code::SegmentsNotCoregional,
          "beta segment is not on the region's boundary cycle");
  const bool d_s = cyc[0].reversed, d_t = cyc[i_t].reversed;
  std::vector<SegRef> X(cyc.begin() + 1, cyc.begin() + i_t);
  std::vector<SegRef> Y(cyc.begin() + i_t + 1, cyc.end());

  // New points: the finger crosses the alpha segment on the way out and back.
  std::set<std::string> used(d.points.begin(), d.points.end());
  std::string u = fresh_name(used, "u");
  used.insert(u);
  std::string w = fresh_name(used, "v");

  Diagram out = d;
  out.points.push_back(u);
  out.points.push_back(w);
  out.alpha[ca].insert(out.alpha[ca].begin() + k + 1, {u, w});
  // Along beta the finger meets the two new points in an order fixed by the
  // two traversal directions: equal flags cross the alpha segment against its
  // orientation, unequal flags along it.
  if (d_s == d_t)
    out.beta[cb].insert(out.beta[cb].begin() + l + 1, {w, u});
  else
    out.beta[cb].insert(out.beta[cb].begin() + l + 1, {u, w});

  // Old segment indices past the insertions shift by two; the pushed
  // segments' far-side slots become three-segment detours around the finger.
  auto remap = [&](SegRef e) {
    if (e.kind == CurveKind::Alpha && e.curve == ca && e.segment > k) e.segment += 2;
    if (e.kind == CurveKind::Beta && e.curve == cb && e.segment > l) e.segment += 2;
    return e;
  };
  // Of the three pieces an invaded segment splits into, the one adjacent to
  // the traversal start of the disc-side slot:
  const int s_head = d_s ? k + 2 : k, s_tail = d_s ? k : k + 2;
  const int t_head = d_t ? l + 2 : l, t_tail = d_t ? l : l + 2;
  auto rewrite = [&](const SegRef& e) -> std::vector<SegRef> {
    if (e.kind == CurveKind::Alpha && e.curve == ca && e.segment == k) {
      check_internal(e.reversed == !d_s, "unexpected alpha slot during finger rewrite");
      return {aref(ca, s_tail, !d_s), bref(cb, l + 1, d_t), aref(ca, s_head, !d_s)};
    }
    if (e.kind == CurveKind::Beta && e.curve == cb && e.segment == l) {
      check_internal(e.reversed == !d_t, "unexpected beta slot during finger rewrite");
      return {bref(cb, t_tail, !d_t), aref(ca, k + 1, d_s), bref(cb, t_head, !d_t)};
    }
    return {remap(e)};
  };
  auto rewrite_all = [&](const std::vector<SegRef>& entries) {
    std::vector<SegRef> out_entries;
    for (const SegRef& e : entries)
      for (const SegRef& n : rewrite(e)) out_entries.push_back(n);
    return out_entries;
  };

  for (int r = 0; r < int(out.regions.size()); ++r) {
    if (r == rid) continue;
    for (auto& c : out.regions[r].boundary) c = rewrite_all(c);
  }
  // The disc splits into the piece keeping its name (and any basepoint) and
  // the piece cut off between the two pushed segments; the finger tip bounds
  // a fresh bigon on the far side of the alpha segment.
  std::vector<SegRef> kept = {aref(ca, s_head, d_s), bref(cb, t_tail, d_t)};
  for (const SegRef& e : rewrite_all(Y)) kept.push_back(e);
  std::vector<SegRef> cut = {aref(ca, s_tail, d_s)};
  for (const SegRef& e : rewrite_all(X)) cut.push_back(e);
  cut.push_back(bref(cb, t_head, d_t));
  out.regions[rid].boundary = {kept};

  Region r_cut;
  r_cut.name = fresh_region_name(out, region + "_cut");
  r_cut.boundary = {cut};
  out.regions.push_back(r_cut);
  Region r_tip;
  r_tip.name = fresh_region_name(out, region + "_tip");
  r_tip.boundary = {{bref(cb, l + 1, !d_t), aref(ca, k + 1, !d_s)}};
  out.regions.push_back(r_tip);

  return checked(std::move(out), "finger_move");
}

Diagram collapse_bigon(const Diagram& d, const std::string& bigon_region) {
  Validated v = validate_diagram(d);
  auto itb = v.region_id.find(bigon_region);
  require(itb != v.region_id.end(), Code::UnknownRegion,
          "bigon region '" + bigon_region + "' does not exist");
  int bid = itb->second;
  const Region& B = d.regions[bid];
  require(B.genus == 0 && B.boundary.size() == 1 && B.boundary[0].size() == 2 &&
              B.boundary[0][0].kind != B.boundary[0][1].kind,
          Code::NotCollapsible, "region '" + bigon_region + "' is not a bigon");

  const SegRef& ea = B.boundary[0][B.boundary[0][0].kind == CurveKind::Alpha ? 0 : 1];
  const SegRef& eb = B.boundary[0][B.boundary[0][0].kind == CurveKind::Alpha ? 1 : 0];
  const int ca = ea.curve, ma = ea.segment, cb = eb.curve, mb = eb.segment;
  const bool d_s = !ea.reversed, d_t = !eb.reversed;
  const int na = int(d.alpha[ca].size()), nb = int(d.beta[cb].size());

  // The bigon must sit mid-curve the way a finger leaves it: its two corner
  // points are consecutive interior points of both curves, crossing over.
  require(ma >= 1 && ma + 1 <= na - 1 && mb >= 1 && mb + 1 <= nb - 1, Code::NotCollapsible,
          "bigon segments wrap around a curve start");
  const std::string u = d.alpha[ca][ma], w = d.alpha[ca][ma + 1];
  const std::string b1 = d_s == d_t ? w : u, b2 = d_s == d_t ? u : w;
  require(d.beta[cb][mb] == b1 && d.beta[cb][mb + 1] == b2, Code::NotCollapsible,
          "bigon corner points are not consecutive on both curves in finger order");
  require(v.z_region != bid && v.w_region != bid, Code::NotCollapsible,
          "bigon region holds a basepoint");
  if (d.contact)
    for (const std::string& m : d.contact->eh)
      require(m != u && m != w, Code::NotCollapsible, "bigon corner carries a contact marking");

  // Expected flanking entries around the two mid-finger slots. Head and tail
  // pick the bigon-adjacent piece named from the disc-side traversal ends.
  const int s_head = d_s ? ma + 1 : ma - 1, s_tail = d_s ? ma - 1 : ma + 1;
  const int t_head = d_t ? mb + 1 : mb - 1, t_tail = d_t ? mb - 1 : mb + 1;
  const SegRef mid_t = aref(ca, ma, d_s);        // inside the pushed beta detour
  const SegRef mid_s = bref(cb, mb, d_t);        // inside the far-side alpha detour
  const SegRef t_prev = bref(cb, t_tail, !d_t), t_next = bref(cb, t_head, !d_t);
  const SegRef s_prev = aref(ca, s_tail, !d_s), s_next = aref(ca, s_head, !d_s);
  auto neighbors_ok = [&](const SegRef& mid, const SegRef& prev, const SegRef& next) {
    Slot s = v.slots.at(key_of(mid))[mid.reversed ? 1 : 0];
    const auto& cyc = d.regions[s.region].boundary[s.cycle];
    int n = int(cyc.size());
    return cyc[(s.entry + n - 1) % n] == prev && cyc[(s.entry + 1) % n] == next;
  };
  require(neighbors_ok(mid_t, t_prev, t_next) && neighbors_ok(mid_s, s_prev, s_next),
          Code::NotCollapsible, "surroundings do not match a finger pattern");

  // The two regions the finger separated, found from the flanking slots.
  Slot sA1 = v.slots.at({CurveKind::Alpha, ca, s_head})[d_s ? 1 : 0];
  Slot sA2 = v.slots.at({CurveKind::Alpha, ca, s_tail})[d_s ? 1 : 0];
  const auto& cycA1 = d.regions[sA1.region].boundary[sA1.cycle];
  const auto& cycA2 = d.regions[sA2.region].boundary[sA2.cycle];
  require(sA1.region != sA2.region, Code::NotCollapsible,
          "collapse would merge a region with itself");
  require(cycA1[(sA1.entry + 1) % cycA1.size()] == bref(cb, t_tail, d_t), Code::NotCollapsible,
          "kept region does not match a finger pattern");
  require(cycA2[(sA2.entry + int(cycA2.size()) - 1) % cycA2.size()] == bref(cb, t_head, d_t),
          Code::NotCollapsible, "cut-off region does not match a finger pattern");
  require(v.z_region != sA2.region && v.w_region != sA2.region, Code::NotCollapsible,
          "basepoint region would be merged away");

  // Raw merged cycle: restored alpha segment, the cut-off side, restored beta
  // segment, the kept side (indices still pre-renumbering).
  std::vector<SegRef> merged = {aref(ca, ma - 1, d_s)};
  for (int i = 1; i + 1 < int(cycA2.size()); ++i)
    merged.push_back(cycA2[(sA2.entry + i) % cycA2.size()]);
  merged.push_back(bref(cb, mb - 1, d_t));
  for (int i = 2; i < int(cycA1.size()); ++i) merged.push_back(cycA1[(sA1.entry + i) % cycA1.size()]);

  auto renumber = [&](SegRef e) {
    check_internal(!(e.kind == CurveKind::Alpha && e.curve == ca &&
                     (e.segment == ma || e.segment == ma + 1)),
                   "stray finger segment after collapse");
    check_internal(!(e.kind == CurveKind::Beta && e.curve == cb &&
                     (e.segment == mb || e.segment == mb + 1)),
                   "stray finger segment after collapse");
    if (e.kind == CurveKind::Alpha && e.curve == ca && e.segment > ma) e.segment -= 2;
    if (e.kind == CurveKind::Beta && e.curve == cb && e.segment > mb) e.segment -= 2;
    return e;
  };
  // Replace each three-entry detour by the segment it detoured around, then
  // renumber what remains.
  auto transform = [&](const std::vector<SegRef>& cyc) {
    std::vector<SegRef> out_entries;
    int n = int(cyc.size());
    std::vector<bool> skip(n, false);
    for (int i = 0; i < n; ++i) {
      if (cyc[i] == mid_t || cyc[i] == mid_s) {
        check_internal(n >= 3 && cyc[(i + n - 1) % n] == (cyc[i] == mid_t ? t_prev : s_prev) &&
                           cyc[(i + 1) % n] == (cyc[i] == mid_t ? t_next : s_next),
                       "detour split across a merge");
        skip[(i + n - 1) % n] = skip[(i + 1) % n] = true;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (skip[i]) continue;
      if (cyc[i] == mid_t)
        out_entries.push_back(renumber(bref(cb, mb - 1, !d_t)));
      else if (cyc[i] == mid_s)
        out_entries.push_back(renumber(aref(ca, ma - 1, !d_s)));
      else
        out_entries.push_back(renumber(cyc[i]));
    }
    return out_entries;
  };

  Diagram out;
  out.genus = d.genus;
  for (const std::string& p : d.points)
    if (p != u && p != w) out.points.push_back(p);
  out.alpha = d.alpha;
  out.beta = d.beta;
  out.alpha[ca].erase(out.alpha[ca].begin() + ma, out.alpha[ca].begin() + ma + 2);
  out.beta[cb].erase(out.beta[cb].begin() + mb, out.beta[cb].begin() + mb + 2);
  for (int r = 0; r < int(d.regions.size()); ++r) {
    if (r == bid || r == sA2.region) continue;
    Region nr;
    nr.name = d.regions[r].name;
    nr.genus = d.regions[r].genus;
    for (int c = 0; c < int(d.regions[r].boundary.size()); ++c) {
      if (r == sA1.region && c == sA1.cycle)
        nr.boundary.push_back(transform(merged));
      else
        nr.boundary.push_back(transform(d.regions[r].boundary[c]));
    }
    out.regions.push_back(std::move(nr));
  }
  out.basepoint_z = d.basepoint_z;
  out.basepoint_w = d.basepoint_w;
  out.contact = d.contact;
  return checked(std::move(out), "collapse_bigon");
}

}  // namespace hf

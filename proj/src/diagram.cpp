#include "hf/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hf {

using json = nlohmann::ordered_json;

namespace {

void expect_keys(const json& o, const std::vector<std::string>& required,
                 const std::vector<std::string>& optional, const std::string& where) {
  require(o.is_object(), Code::Syntax, where + " must be a JSON object");
  for (const auto& k : required)
    require(o.contains(k), Code::Syntax, where + " is missing required key '" + k + "'");
  for (auto it = o.begin(); it != o.end(); ++it) {
    const std::string& k = it.key();
    bool known = std::count(required.begin(), required.end(), k) ||
                 std::count(optional.begin(), optional.end(), k);
    require(known, Code::Syntax, where + " has unknown key '" + k + "'");
  }
}

std::string get_string(const json& o, const std::string& key, const std::string& where) {
  const json& v = o.at(key);
  require(v.is_string(), Code::Syntax, where + "." + key + " must be a string");
  return v.get<std::string>();
}

int get_int(const json& o, const std::string& key, const std::string& where) {
  const json& v = o.at(key);
  require(v.is_number_integer(), Code::Syntax, where + "." + key + " must be an integer");
  return v.get<int>();
}

std::vector<std::string> get_string_list(const json& v, const std::string& where) {
  require(v.is_array(), Code::Syntax, where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    require(e.is_string(), Code::Syntax, where + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

SegRef parse_segref(const json& e, const std::string& where) {
  expect_keys(e, {"curve", "index", "segment", "reversed"}, {}, where);
  SegRef s;
  std::string kind = get_string(e, "curve", where);
  if (kind == "alpha")
    s.kind = CurveKind::Alpha;
  else if (kind == "beta")
    s.kind = CurveKind::Beta;
  else
    fail(Code::Syntax, where + ".curve must be \"alpha\" or \"beta\"");
  s.curve = get_int(e, "index", where);
  s.segment = get_int(e, "segment", where);
  require(e.at("reversed").is_boolean(), Code::Syntax, where + ".reversed must be a boolean");
  s.reversed = e.at("reversed").get<bool>();
  return s;
}

json segref_to_json(const SegRef& s) {
  json e;
  e["curve"] = s.kind == CurveKind::Alpha ? "alpha" : "beta";
  e["index"] = s.curve;
  e["segment"] = s.segment;
  e["reversed"] = s.reversed;
  return e;
}

// Union-find over region indices, for complement connectivity.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram parse_diagram(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Code::Syntax, std::string("malformed JSON: ") + e.what());
  }
  expect_keys(doc, {"format", "genus", "points", "alpha", "beta", "regions", "basepoint_z"},
              {"basepoint_w", "contact"}, "document");
  require(get_string(doc, "format", "document") == "phd-1", Code::Syntax,
          "document.format must be \"phd-1\"");

  Diagram d;
  d.genus = get_int(doc, "genus", "document");
  d.points = get_string_list(doc.at("points"), "document.points");
  for (const char* fam : {"alpha", "beta"}) {
    const json& arr = doc.at(fam);
    require(arr.is_array(), Code::Syntax, std::string("document.") + fam + " must be an array");
    auto& curves = fam == std::string("alpha") ? d.alpha : d.beta;
    for (const auto& c : arr)
      curves.push_back(get_string_list(c, std::string("document.") + fam + " curve"));
  }
  const json& regions = doc.at("regions");
  require(regions.is_array(), Code::Syntax, "document.regions must be an array");
  for (const auto& r : regions) {
    expect_keys(r, {"name", "genus", "boundary"}, {}, "region");
    Region reg;
    reg.name = get_string(r, "name", "region");
    reg.genus = get_int(r, "genus", "region");
    const json& bd = r.at("boundary");
    require(bd.is_array(), Code::Syntax, "region.boundary must be an array of cycles");
    for (const auto& cyc : bd) {
      require(cyc.is_array(), Code::Syntax, "boundary cycle must be an array");
      std::vector<SegRef> cycle;
      for (const auto& e : cyc) cycle.push_back(parse_segref(e, "boundary entry"));
      reg.boundary.push_back(std::move(cycle));
    }
    d.regions.push_back(std::move(reg));
  }
  d.basepoint_z = get_string(doc, "basepoint_z", "document");
  if (doc.contains("basepoint_w")) d.basepoint_w = get_string(doc, "basepoint_w", "document");
  if (doc.contains("contact")) {
    const json& c = doc.at("contact");
    expect_keys(c, {"eh"}, {"loss_oriented"}, "contact");
    ContactMarking m;
    m.eh = get_string_list(c.at("eh"), "contact.eh");
    if (c.contains("loss_oriented")) {
      require(c.at("loss_oriented").is_boolean(), Code::Syntax,
              "contact.loss_oriented must be a boolean");
      m.loss_oriented = c.at("loss_oriented").get<bool>();
    }
    d.contact = std::move(m);
  }
  validate_diagram(d);
  return d;
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), Code::Syntax, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::string serialize_diagram(const Diagram& d) {
  json doc;
  doc["format"] = "phd-1";
  doc["genus"] = d.genus;
  doc["points"] = d.points;
  doc["alpha"] = d.alpha;
  doc["beta"] = d.beta;
  doc["regions"] = json::array();
  for (const Region& r : d.regions) {
    json jr;
    jr["name"] = r.name;
    jr["genus"] = r.genus;
    jr["boundary"] = json::array();
    for (const auto& cyc : r.boundary) {
      json jc = json::array();
      for (const SegRef& s : cyc) jc.push_back(segref_to_json(s));
      jr["boundary"].push_back(std::move(jc));
    }
    doc["regions"].push_back(std::move(jr));
  }
  doc["basepoint_z"] = d.basepoint_z;
  if (d.basepoint_w) doc["basepoint_w"] = *d.basepoint_w;
  if (d.contact) {
    json c;
    c["eh"] = d.contact->eh;
    if (d.contact->loss_oriented) c["loss_oriented"] = *d.contact->loss_oriented;
    doc["contact"] = std::move(c);
  }
  return doc.dump(2) + "\n";
}

int Validated::point_at(CurveKind k, int curve, int pos) const {
  const auto& pts = d.curves(k)[curve];
  return point_id.at(pts[pos]);
}

ArcKey Validated::incoming(CurveKind k, int p) const {
  auto [curve, pos] = k == CurveKind::Alpha ? on_alpha[p] : on_beta[p];
  int n = int(d.curves(k)[curve].size());
  return {k, curve, (pos + n - 1) % n};
}

ArcKey Validated::outgoing(CurveKind k, int p) const {
  auto [curve, pos] = k == CurveKind::Alpha ? on_alpha[p] : on_beta[p];
  return {k, curve, pos};
}

namespace {

// Endpoints of a point-bearing arc, as point ids.
struct ArcEnds {
  int src, dst;
};

ArcEnds arc_ends(const Validated& v, const ArcKey& a) {
  const auto& pts = v.d.curves(a.kind)[a.curve];
  int n = int(pts.size());
  return {v.point_id.at(pts[a.segment]), v.point_id.at(pts[(a.segment + 1) % n])};
}

bool is_circle(const Diagram& d, const ArcKey& a) { return d.curves(a.kind)[a.curve].empty(); }

// Start / end point of one oriented boundary entry.
int entry_start(const Validated& v, const SegRef& s) {
  ArcEnds e = arc_ends(v, key_of(s));
  return s.reversed ? e.dst : e.src;
}
int entry_end(const Validated& v, const SegRef& s) {
  ArcEnds e = arc_ends(v, key_of(s));
  return s.reversed ? e.src : e.dst;
}

}  // namespace

Validated validate_diagram(const Diagram& d) {
  Validated v;
  v.d = d;

  // Shape: curve counts match the genus, names are unique and nonempty.
  require(d.genus >= 0, Code::Structure, "genus must be nonnegative");
  require(int(d.alpha.size()) == d.genus, Code::Structure, "alpha must list genus-many curves");
  require(int(d.beta.size()) == d.genus, Code::Structure, "beta must list genus-many curves");
  for (int p = 0; p < int(d.points.size()); ++p) {
    require(!d.points[p].empty(), Code::Structure, "point names must be nonempty");
    require(v.point_id.emplace(d.points[p], p).second, Code::Structure,
            "duplicate point name '" + d.points[p] + "'");
  }
  require(!d.regions.empty(), Code::Structure, "diagram must have at least one region");
  for (int r = 0; r < int(d.regions.size()); ++r) {
    require(!d.regions[r].name.empty(), Code::Structure, "region names must be nonempty");
    require(v.region_id.emplace(d.regions[r].name, r).second, Code::Structure,
            "duplicate region name '" + d.regions[r].name + "'");
  }

  // Each point lies on exactly one curve of each family, exactly once.
  v.on_alpha.assign(d.points.size(), {-1, -1});
  v.on_beta.assign(d.points.size(), {-1, -1});
  for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta}) {
    auto& on = k == CurveKind::Alpha ? v.on_alpha : v.on_beta;
    const auto& curves = d.curves(k);
    for (int c = 0; c < int(curves.size()); ++c)
      for (int pos = 0; pos < int(curves[c].size()); ++pos) {
        auto it = v.point_id.find(curves[c][pos]);
        require(it != v.point_id.end(), Code::UnknownPoint,
                "curve references unknown point '" + curves[c][pos] + "'");
        require(on[it->second].first < 0, Code::PointCoverage,
                "point '" + curves[c][pos] + "' listed more than once in one curve family");
        on[it->second] = {c, pos};
      }
  }
  for (int p = 0; p < int(d.points.size()); ++p) {
    require(v.on_alpha[p].first >= 0, Code::PointCoverage,
            "point '" + d.points[p] + "' lies on no alpha curve");
    require(v.on_beta[p].first >= 0, Code::PointCoverage,
            "point '" + d.points[p] + "' lies on no beta curve");
  }

  // Basepoints name existing regions; z may coincide with w.
  {
    auto it = v.region_id.find(d.basepoint_z);
    require(it != v.region_id.end(), Code::UnknownRegion,
            "basepoint_z names unknown region '" + d.basepoint_z + "'");
    v.z_region = it->second;
    if (d.basepoint_w) {
      auto iw = v.region_id.find(*d.basepoint_w);
      require(iw != v.region_id.end(), Code::UnknownRegion,
              "basepoint_w names unknown region '" + *d.basepoint_w + "'");
      v.w_region = iw->second;
    }
  }

  // Contact marking: one point per curve index, on matching curves, distinct.
  if (d.contact) {
    const auto& eh = d.contact->eh;
    require(int(eh.size()) == d.genus, Code::InvalidMarking,
            "contact marking must list one point per curve index");
    std::set<std::string> seen;
    for (int i = 0; i < int(eh.size()); ++i) {
      auto it = v.point_id.find(eh[i]);
      require(it != v.point_id.end(), Code::UnknownPoint,
              "contact marking references unknown point '" + eh[i] + "'");
      require(seen.insert(eh[i]).second, Code::InvalidMarking,
              "contact marking repeats point '" + eh[i] + "'");
      require(v.on_alpha[it->second].first == i && v.on_beta[it->second].first == i,
              Code::InvalidMarking,
              "contact marking point '" + eh[i] + "' is not on alpha and beta curve " +
                  std::to_string(i));
    }
  }

  // Region shapes and boundary references.
  for (const Region& r : d.regions) {
    require(r.genus >= 0, Code::Structure, "region genus must be nonnegative");
    int chi = 2 - 2 * r.genus - int(r.boundary.size());
    require(chi <= 1, Code::Structure,
            "region '" + r.name + "' has Euler characteristic " + std::to_string(chi));
    for (const auto& cyc : r.boundary) {
      require(!cyc.empty(), Code::Structure, "empty boundary cycle in region '" + r.name + "'");
      for (const SegRef& s : cyc) {
        require(s.curve >= 0 && s.curve < d.genus, Code::Structure,
                "boundary entry references curve index out of range");
        require(s.segment >= 0 && s.segment < d.segment_count(s.kind, s.curve), Code::Structure,
                "boundary entry references segment index out of range");
      }
    }
  }

  // Slot table: every segment is used exactly twice, once per orientation.
  for (int r = 0; r < int(d.regions.size()); ++r)
    for (int c = 0; c < int(d.regions[r].boundary.size()); ++c) {
      const auto& cyc = d.regions[r].boundary[c];
      for (int e = 0; e < int(cyc.size()); ++e) {
        auto& pair = v.slots[key_of(cyc[e])];
        Slot& slot = pair[cyc[e].reversed ? 1 : 0];
        require(!slot.valid(), Code::ArcUsage,
                "segment used twice with the same orientation in region boundaries");
        slot = {r, c, e};
      }
    }
  for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
    for (int c = 0; c < d.genus; ++c)
      for (int s = 0; s < d.segment_count(k, c); ++s) {
        auto it = v.slots.find({k, c, s});
        require(it != v.slots.end() && it->second[0].valid() && it->second[1].valid(),
                Code::ArcUsage, "segment missing from region boundaries");
      }

  // Cycle shapes: consecutive entries chain head-to-tail, and every cycle is
  // either alternating, a full single closed curve, or a lone circle segment.
  for (const Region& r : d.regions)
    for (const auto& cyc : r.boundary) {
      bool has_circle = false;
      for (const SegRef& s : cyc) has_circle = has_circle || is_circle(d, key_of(s));
      if (has_circle) {
        require(cyc.size() == 1, Code::CycleBroken,
                "circle segment inside a longer boundary cycle in region '" + r.name + "'");
        continue;
      }
      for (int e = 0; e < int(cyc.size()); ++e) {
        const SegRef& cur = cyc[e];
        const SegRef& nxt = cyc[(e + 1) % cyc.size()];
        require(entry_end(v, cur) == entry_start(v, nxt), Code::CycleBroken,
                "boundary cycle of region '" + r.name + "' is not consecutive");
      }
      bool alternating = cyc.size() % 2 == 0;
      for (int e = 0; alternating && e < int(cyc.size()); ++e)
        alternating = cyc[e].kind != cyc[(e + 1) % cyc.size()].kind;
      if (alternating) continue;
      // Full closed curve: same curve and flag throughout, segments advancing
      // once around (zero corners).
      const SegRef& head = cyc[0];
      int n = int(d.curves(head.kind)[head.curve].size());
      bool full = int(cyc.size()) == n;
      for (int e = 0; full && e < n; ++e) {
        const SegRef& s = cyc[e];
        full = s.kind == head.kind && s.curve == head.curve && s.reversed == head.reversed &&
               s.segment == (head.reversed ? (head.segment - e % n + n) % n
                                           : (head.segment + e) % n);
      }
      require(full, Code::Alternation,
              "boundary cycle of region '" + r.name +
                  "' neither alternates between families nor closes up a full curve");
    }

  // Corners: each consecutive alpha/beta pair in a cycle occupies one quadrant
  // at its meeting point; across all regions the four quadrants of every point
  // are each hit exactly once.
  v.quadrant.assign(d.points.size(), {-1, -1, -1, -1});
  v.corner_count.assign(d.regions.size(), 0);
  for (int r = 0; r < int(d.regions.size()); ++r)
    for (const auto& cyc : d.regions[r].boundary) {
      if (cyc.size() == 1 && is_circle(d, key_of(cyc[0]))) continue;
      if (cyc[0].kind == cyc[1 % cyc.size()].kind) continue;  // full-curve cycle
      for (int e = 0; e < int(cyc.size()); ++e) {
        const SegRef& arrive = cyc[e];
        const SegRef& depart = cyc[(e + 1) % cyc.size()];
        int p = entry_end(v, arrive);
        const SegRef& on_a = arrive.kind == CurveKind::Alpha ? arrive : depart;
        const SegRef& on_b = arrive.kind == CurveKind::Alpha ? depart : arrive;
        // Arriving along a ray means entering at the arc's head end unless the
        // entry is reversed; departing is the mirror image.
        bool a_out = (&on_a == &arrive) ? on_a.reversed : !on_a.reversed;
        bool b_out = (&on_b == &arrive) ? on_b.reversed : !on_b.reversed;
        int q = a_out ? (b_out ? QNE : QSE) : (b_out ? QNW : QSW);
        require(v.quadrant[p][q] < 0, Code::CornerCount,
                "quadrant " + std::string(quadrant_name(q)) + " at point '" + d.points[p] +
                    "' is claimed by two corners");
        v.quadrant[p][q] = r;
        v.corner_count[r]++;
      }
    }
  for (int p = 0; p < int(d.points.size()); ++p)
    for (int q = 0; q < 4; ++q)
      require(v.quadrant[p][q] >= 0, Code::CornerCount,
              "quadrant " + std::string(quadrant_name(q)) + " at point '" + d.points[p] +
                  "' is not covered by any corner");

  // Euler count: points minus point-bearing segments plus region
  // characteristics must equal the characteristic of the closed surface.
  {
    long long edges = 0;
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
      for (int c = 0; c < d.genus; ++c) edges += int(d.curves(k)[c].size());
    long long chi_sum = 0;
    for (const Region& r : d.regions) chi_sum += 2 - 2 * r.genus - int(r.boundary.size());
    long long lhs = int(d.points.size()) - edges + chi_sum;
    require(lhs == 2 - 2 * d.genus, Code::EulerMismatch,
            "Euler count " + std::to_string(lhs) + " does not match surface characteristic " +
                std::to_string(2 - 2 * d.genus));
  }

  // Cutting along one curve family must leave the surface connected: regions
  // form one component under adjacency across the other family's segments.
  for (CurveKind cut : {CurveKind::Alpha, CurveKind::Beta}) {
    Dsu dsu(int(d.regions.size()));
    for (const auto& [key, pair] : v.slots)
      if (key.kind != cut) dsu.unite(pair[0].region, pair[1].region);
    for (int r = 1; r < int(d.regions.size()); ++r)
      require(dsu.find(r) == dsu.find(0), Code::ComplementDisconnected,
              std::string(cut == CurveKind::Alpha ? "alpha" : "beta") +
                  "-complement is disconnected");
  }

  return v;
}

std::map<std::string, std::array<std::string, 4>> quadrant_map(const Validated& v) {
  std::map<std::string, std::array<std::string, 4>> out;
  for (int p = 0; p < v.points(); ++p) {
    std::array<std::string, 4> names;
    for (int q = 0; q < 4; ++q) names[q] = v.region_name(v.quadrant[p][q]);
    out[v.point_name(p)] = names;
  }
  return out;
}

Diagram normalized(const Diagram& d) {
  Diagram out = d;
  for (Region& r : out.regions) {
    for (auto& cyc : r.boundary) {
      int n = int(cyc.size());
      int best = 0;
      for (int s = 1; s < n; ++s) {
        for (int e = 0; e < n; ++e) {
          const SegRef &a = cyc[(s + e) % n], &b = cyc[(best + e) % n];
          if (a != b) {
            if (a < b) best = s;
            break;
          }
        }
      }
      std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
    }
    std::sort(r.boundary.begin(), r.boundary.end());
  }
  return out;
}

bool normalized_equal(const Diagram& a, const Diagram& b) { return normalized(a) == normalized(b); }

}  // namespace hf

#pragma once

// Combinatorial pointed Heegaard diagrams and their validation.
//
// A diagram records a closed oriented genus-g surface by its intersection
// points, two systems of g curves (each a cyclic point list; segment k runs
// from the k-th listed point to the (k+1)-th), and the complementary regions.
// Region boundaries are cyclic lists of oriented segment references traversed
// with the region on the left; the two slots of every segment carry opposite
// orientation flags. A curve with no points contributes a single closed
// "circle" segment with index 0, usable only as a full-curve boundary cycle.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hf/error.hpp"

namespace hf {

enum class CurveKind { Alpha, Beta };
inline CurveKind other_kind(CurveKind k) {
  return k == CurveKind::Alpha ? CurveKind::Beta : CurveKind::Alpha;
}

struct SegRef {
  CurveKind kind = CurveKind::Alpha;
  int curve = 0;
  int segment = 0;
  bool reversed = false;
  auto operator<=>(const SegRef&) const = default;
};

inline SegRef aref(int curve, int segment, bool reversed) {
  return {CurveKind::Alpha, curve, segment, reversed};
}
inline SegRef bref(int curve, int segment, bool reversed) {
  return {CurveKind::Beta, curve, segment, reversed};
}

struct Region {
  std::string name;
  int genus = 0;
  std::vector<std::vector<SegRef>> boundary;
  bool operator==(const Region&) const = default;
};

struct ContactMarking {
  std::vector<std::string> eh;  // one point per curve index, on alpha_i and beta_i
  std::optional<bool> loss_oriented;
  bool operator==(const ContactMarking&) const = default;
};

struct Diagram {
  int genus = 0;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> alpha;
  std::vector<std::vector<std::string>> beta;
  std::vector<Region> regions;
  std::string basepoint_z;
  std::optional<std::string> basepoint_w;
  std::optional<ContactMarking> contact;
  bool operator==(const Diagram&) const = default;

  const std::vector<std::vector<std::string>>& curves(CurveKind k) const {
    return k == CurveKind::Alpha ? alpha : beta;
  }
  // Number of segment indices on a curve: one per point, or the single
  // closed circle segment when the curve has no points.
  int segment_count(CurveKind k, int curve) const {
    int n = int(curves(k)[curve].size());
    return n == 0 ? 1 : n;
  }
};

// Strict document I/O ("phd-1"): unknown keys are rejected at every level.
// parse_diagram also runs full validation, so a returned Diagram is valid.
Diagram parse_diagram(const std::string& text);
Diagram load_diagram_file(const std::string& path);
std::string serialize_diagram(const Diagram& d);

// A point-bearing segment or a circle segment, as a lookup key.
struct ArcKey {
  CurveKind kind = CurveKind::Alpha;
  int curve = 0;
  int segment = 0;
  auto operator<=>(const ArcKey&) const = default;
};
inline ArcKey key_of(const SegRef& s) { return {s.kind, s.curve, s.segment}; }

// One boundary-list position: regions[region].boundary[cycle][entry].
struct Slot {
  int region = -1, cycle = -1, entry = -1;
  bool valid() const { return region >= 0; }
};

// Quadrants around a point, in counterclockwise order: the alpha curve runs
// horizontally (out = East), the beta curve vertically (out = North).
enum Quadrant { QNE = 0, QNW = 1, QSW = 2, QSE = 3 };
inline const char* quadrant_name(int q) {
  static const char* names[4] = {"NE", "NW", "SW", "SE"};
  return names[q];
}

// Fully validated view of a diagram; construction throws a coded Error on
// the first violated invariant. All downstream math consumes this.
struct Validated {
  Diagram d;
  std::map<std::string, int> point_id;
  std::map<std::string, int> region_id;
  // Per point: (curve index, position) on its alpha / beta curve.
  std::vector<std::pair<int, int>> on_alpha, on_beta;
  // Slot pair per segment key: [0] = forward-flag slot, [1] = reversed.
  std::map<ArcKey, std::array<Slot, 2>> slots;
  // Per point: region id owning each of the 4 quadrants.
  std::vector<std::array<int, 4>> quadrant;
  std::vector<int> corner_count;  // per region
  int z_region = -1;
  int w_region = -1;  // -1 when basepoint_w is absent

  int points() const { return int(d.points.size()); }
  int regions() const { return int(d.regions.size()); }
  const std::string& point_name(int p) const { return d.points[p]; }
  const std::string& region_name(int r) const { return d.regions[r].name; }
  // Point at a (curve, position), and the arcs meeting a point.
  int point_at(CurveKind k, int curve, int pos) const;
  ArcKey incoming(CurveKind k, int p) const;  // arc arriving at p along its k-curve
  ArcKey outgoing(CurveKind k, int p) const;
};

Validated validate_diagram(const Diagram& d);

// Point name -> owning region name per quadrant [NE, NW, SW, SE].
std::map<std::string, std::array<std::string, 4>> quadrant_map(const Validated& v);

// Canonical form for move round-trip comparisons: every boundary cycle is
// rotated to its lexicographically least phase and cycles within a region
// are sorted; names and list orders are untouched (moves restore them).
Diagram normalized(const Diagram& d);
bool normalized_equal(const Diagram& a, const Diagram& b);

}  // namespace hf

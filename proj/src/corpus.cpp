#include "hf/corpus.hpp"

#include <functional>
#include <map>

#include "hf/moves.hpp"

namespace hf {
namespace corpus {

namespace {

Region region(std::string name, std::vector<std::vector<SegRef>> boundary, int genus = 0) {
  Region r;
  r.name = std::move(name);
  r.genus = genus;
  r.boundary = std::move(boundary);
  return r;
}

}  // namespace

Diagram s3_g1() {
  Diagram d;
  d.genus = 1;
  d.points = {"p"};
  d.alpha = {{"p"}};
  d.beta = {{"p"}};
  d.regions = {region("R", {{aref(0, 0, false), bref(0, 0, false), aref(0, 0, true),
                             bref(0, 0, true)}})};
  d.basepoint_z = "R";
  return d;
}

Diagram s2xs1_fig9() {
  Diagram d;
  d.genus = 1;
  d.points = {"x", "y"};
  d.alpha = {{"x", "y"}};
  d.beta = {{"x", "y"}};
  d.regions = {
      region("D1", {{bref(0, 0, false), aref(0, 0, true)}}),
      region("D2", {{aref(0, 1, false), bref(0, 1, true)}}),
      region("A", {{aref(0, 0, false), bref(0, 1, false)},
                   {aref(0, 1, true), bref(0, 0, true)}}),
  };
  d.basepoint_z = "A";
  return d;
}

Diagram s2xs1_fig9_w() {
  Diagram d = s2xs1_fig9();
  d.basepoint_w = "D1";
  return d;
}

Diagram s2xs1_sum_fig10() {
  Diagram d;
  d.genus = 2;
  d.points = {"x1", "y1", "x2", "y2"};
  d.alpha = {{"x1", "y1"}, {"x2", "y2"}};
  d.beta = {{"x1", "y1"}, {"x2", "y2"}};
  d.regions = {
      region("D1a", {{bref(0, 0, false), aref(0, 0, true)}}),
      region("D2a", {{aref(0, 1, false), bref(0, 1, true)}}),
      region("D1b", {{bref(1, 0, false), aref(1, 0, true)}}),
      region("D2b", {{aref(1, 1, false), bref(1, 1, true)}}),
      region("A", {{aref(0, 0, false), bref(0, 1, false)},
                   {aref(0, 1, true), bref(0, 0, true)},
                   {aref(1, 0, false), bref(1, 1, false)},
                   {aref(1, 1, true), bref(1, 0, true)}}),
  };
  d.basepoint_z = "A";
  return d;
}

Diagram lens_p_1(int p) {
  require(p >= 2, Code::Structure, "lens_p_1 needs p >= 2");
  Diagram d;
  d.genus = 1;
  for (int i = 0; i < p; ++i) d.points.push_back("x" + std::to_string(i));
  d.alpha = {d.points};
  d.beta = {d.points};
  for (int k = 0; k < p; ++k) {
    int k1 = (k + 1) % p;
    d.regions.push_back(region("S" + std::to_string(k),
                               {{aref(0, k, false), bref(0, k1, false), aref(0, k1, true),
                                 bref(0, k, true)}}));
  }
  d.basepoint_z = "S0";
  return d;
}

Diagram non_admissible_fixture() {
  Diagram d;
  d.genus = 1;
  d.alpha = {{}};
  d.beta = {{}};
  d.regions = {
      region("A1", {{aref(0, 0, false)}, {bref(0, 0, true)}}),
      region("A2", {{aref(0, 0, true)}, {bref(0, 0, false)}}),
  };
  d.basepoint_z = "A1";
  return d;
}

Diagram unknot() {
  Diagram d = s3_g1();
  d.basepoint_w = "R";
  return d;
}

Diagram trefoil_g1() {
  // Minimal genus-one picture of the trefoil: one alpha and one beta curve
  // crossing three times with net one, both basepoints in the bigons, the
  // remaining region an octagon.  Two finger moves through the octagon leave
  // every region without a basepoint a bigon or a square; neither move
  // crosses a basepoint, so the knot is unchanged.
  Diagram d;
  d.genus = 1;
  d.points = {"p0", "p1", "p2"};
  d.alpha = {{"p0", "p1", "p2"}};
  d.beta = {{"p0", "p1", "p2"}};
  d.regions = {
      region("Bz", {{aref(0, 0, false), bref(0, 0, true)}}),
      region("O", {{bref(0, 0, false), aref(0, 1, false), bref(0, 1, true),
                    aref(0, 0, true), bref(0, 2, true), aref(0, 1, true),
                    bref(0, 1, false), aref(0, 2, false)}}),
      region("Bw", {{aref(0, 2, true), bref(0, 2, false)}}),
  };
  d.basepoint_z = "Bz";
  d.basepoint_w = "Bw";
  d = finger_move(d, 0, 0, "O", 0, 0);
  d = finger_move(d, 0, 4, "O_cut", 0, 4);
  return d;
}

Diagram ob_ot_s3() {
  // Three crossings with net one and the basepoint in the octagon; the
  // marked generator bounds, so the associated class vanishes.
  Diagram d;
  d.genus = 1;
  d.points = {"p0", "p1", "p2"};
  d.alpha = {{"p0", "p1", "p2"}};
  d.beta = {{"p0", "p1", "p2"}};
  d.regions = {
      region("O", {{aref(0, 0, false), bref(0, 1, false), aref(0, 2, false),
                    bref(0, 0, false), aref(0, 0, true), bref(0, 2, true),
                    aref(0, 1, true), bref(0, 0, true)}}),
      region("B1", {{aref(0, 2, true), bref(0, 2, false)}}),
      region("B2", {{aref(0, 1, false), bref(0, 1, true)}}),
  };
  d.basepoint_z = "O";
  d.contact = ContactMarking{{"p2"}, std::nullopt};
  return d;
}

Diagram hexagon_fixture() {
  // Four crossings with net zero: two hexagons and two bigons.  The
  // basepoint exempts one hexagon; the other defeats niceness.
  Diagram d;
  d.genus = 1;
  d.points = {"p0", "p1", "p2", "p3"};
  d.alpha = {{"p0", "p1", "p2", "p3"}};
  d.beta = {{"p0", "p1", "p2", "p3"}};
  d.regions = {
      region("H1", {{aref(0, 0, false), bref(0, 1, false), aref(0, 2, false),
                     bref(0, 2, true), aref(0, 1, true), bref(0, 0, true)}}),
      region("H2", {{bref(0, 0, false), aref(0, 0, true), bref(0, 3, true),
                     aref(0, 2, true), bref(0, 2, false), aref(0, 3, false)}}),
      region("B1", {{aref(0, 3, true), bref(0, 3, false)}}),
      region("B2", {{aref(0, 1, false), bref(0, 1, true)}}),
  };
  d.basepoint_z = "H1";
  return d;
}

Diagram ob_tight_s3() {
  Diagram d = s3_g1();
  d.contact = ContactMarking{{"p"}, std::nullopt};
  return d;
}

Diagram ob_s2xs1_trivial() {
  Diagram d = s2xs1_fig9();
  d.contact = ContactMarking{{"x"}, std::nullopt};
  return d;
}

Diagram ob_legendrian_unknot() {
  // One-crossing torus diagram with the alpha curve wiggled twice across the
  // beta strand at the crossing.  The ten-sided region carries z, the marked
  // point u0 generates the swapped homology, and each finger-tip bigon is a
  // one-segment w placement tracing an unknot; this one crosses the beta
  // curve forward-side first.
  Diagram d = s3_g1();
  d = finger_move(d, 0, 0, "R", 0, 0);
  d = finger_move(d, 0, 0, "R", 0, 0);
  d.basepoint_z = "R_cut2";
  d.basepoint_w = "R_tip";
  d.contact = ContactMarking{{"u0"}, true};
  return d;
}

Diagram ob_legendrian_unknot_rev() {
  // Same marked diagram with w in the other finger tip: the traced knot
  // crosses the beta curve with the opposite sign, so the Alexander census
  // of the chain complex sits on the other side of the marked point.
  Diagram d = ob_legendrian_unknot();
  d.basepoint_w = "R_tip2";
  d.contact->loss_oriented = false;
  return d;
}

Diagram ob_ot_s3_w() {
  Diagram d = ob_ot_s3();
  d.basepoint_w = "B1";
  return d;
}

namespace {

const std::map<std::string, std::function<Diagram()>>& registry() {
  static const std::map<std::string, std::function<Diagram()>> reg = {
      {"s3_g1", s3_g1},
      {"s2xs1_fig9", s2xs1_fig9},
      {"s2xs1_fig9_w", s2xs1_fig9_w},
      {"s2xs1_sum_fig10", s2xs1_sum_fig10},
      {"lens_2_1", [] { return lens_p_1(2); }},
      {"lens_3_1", [] { return lens_p_1(3); }},
      {"lens_4_1", [] { return lens_p_1(4); }},
      {"lens_5_1", [] { return lens_p_1(5); }},
      {"non_admissible_fixture", non_admissible_fixture},
      {"unknot", unknot},
      {"trefoil_g1", trefoil_g1},
      {"ob_tight_s3", ob_tight_s3},
      {"ob_ot_s3", ob_ot_s3},
      {"ob_s2xs1_trivial", ob_s2xs1_trivial},
      {"ob_legendrian_unknot", ob_legendrian_unknot},
      {"ob_legendrian_unknot_rev", ob_legendrian_unknot_rev},
      {"ob_ot_s3_w", ob_ot_s3_w},
      {"hexagon_fixture", hexagon_fixture},
  };
  return reg;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

Diagram by_name(const std::string& name) {
  auto it = registry().find(name);
  require(it != registry().end(), Code::Syntax, "unknown corpus diagram '" + name + "'");
  return it->second();
}

}  // namespace corpus
}  // namespace hf

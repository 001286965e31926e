#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "hf/contact.hpp"
#include "hf/corpus.hpp"
#include "hf/moves.hpp"

using namespace hf;

namespace {

Diagram load(const std::string& name) { return corpus::by_name(name); }

Code code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code;
  }
  REQUIRE(false);
  return Code::Internal;
}

// Oracle: every {0,1} multiplicity vector is a counted polygon iff it solves
// the corner equations, avoids the pinned regions, covers exactly one
// quadrant at each moving coordinate and none at the shared ones, has
// edge-connected support, and has index one. Independent of the lattice
// enumeration in the library.
int scan_polygon_count(const Validated& v, const Generator& x, const Generator& y,
                       bool knot_mode) {
  IntMatrix ce = corner_equations(v);
  std::vector<Int> rhs = corner_rhs(v, x, y);
  int nr = v.regions();

  std::set<int> corners, shared;
  for (size_t i = 0; i < x.pts.size(); ++i) {
    if (x.pts[i] == y.pts[i]) {
      shared.insert(x.pts[i]);
    } else {
      corners.insert(x.pts[i]);
      corners.insert(y.pts[i]);
    }
  }

  int count = 0;
  REQUIRE(nr <= 20);
  for (unsigned long mask = 0; mask < (1ul << nr); ++mask) {
    std::vector<Int> m(nr);
    for (int r = 0; r < nr; ++r) m[r] = (mask >> r) & 1;
    if (m[v.z_region] != 0) continue;
    if (knot_mode && m[v.w_region] != 0) continue;
    if (ce.apply(m) != rhs) continue;

    bool ok = true;
    for (int p = 0; p < v.points() && ok; ++p) {
      Int s = 0;
      for (int q = 0; q < 4; ++q) s += m[v.quadrant[p][q]];
      if (corners.count(p)) ok = s == 1;
      else if (shared.count(p)) ok = s == 0;
    }
    if (!ok) continue;

    std::vector<int> supp;
    for (int r = 0; r < nr; ++r)
      if (m[r] == 1) supp.push_back(r);
    if (supp.empty()) continue;
    std::map<int, int> comp;
    for (int r : supp) comp[r] = r;
    std::function<int(int)> find = [&](int r) {
      while (comp[r] != r) r = comp[r] = comp[comp[r]];
      return r;
    };
    for (const auto& [key, slotpair] : v.slots) {
      int ra = slotpair[0].region, rb = slotpair[1].region;
      if (comp.count(ra) && comp.count(rb)) comp[find(ra)] = find(rb);
    }
    for (int r : supp)
      if (find(r) != find(supp[0])) ok = false;
    if (!ok) continue;

    if (maslov_index(v, x, y, m) != 1) continue;
    ++count;
  }
  return count;
}

// The full differential table of a swapped diagram assembled from the scan:
// an arrow x -> y per odd polygon count.
std::map<std::string, std::set<std::string>> brute_table(const Diagram& d, bool knot_mode) {
  Validated vs = validate_diagram(swap_roles(d));
  auto gens = enumerate_generators(vs);
  std::map<std::string, std::set<std::string>> table;
  for (const auto& x : gens)
    for (const auto& y : gens)
      if (scan_polygon_count(vs, x, y, knot_mode) % 2) table[x.name].insert(y.name);
  return table;
}

// Oracle: odometer over all integer domains from x to y with multiplicities
// in [-bound, bound], recording the Alexander difference n_z - n_w.
struct AlexScan {
  bool found = false;
  bool consistent = true;
  long long diff = 0;
};

AlexScan scan_alexander(const Validated& v, const Generator& x, const Generator& y, int bound) {
  IntMatrix cem = corner_equations(v);
  std::vector<Int> rhsm = corner_rhs(v, x, y);
  int nr = v.regions(), rows = cem.rows;
  std::vector<std::vector<long long>> ce(rows, std::vector<long long>(nr));
  std::vector<long long> rhs(rows);
  for (int i = 0; i < rows; ++i) {
    rhs[i] = rhsm[i].convert_to<long long>();
    for (int j = 0; j < nr; ++j) ce[i][j] = cem.at(i, j).convert_to<long long>();
  }
  std::vector<std::vector<long long>> slack(rows, std::vector<long long>(nr + 1, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = nr - 1; j >= 0; --j)
      slack[i][j] = slack[i][j + 1] + std::abs(ce[i][j]) * bound;

  AlexScan out;
  std::vector<long long> m(nr, 0), partial(rows, 0);
  std::function<void(int)> rec = [&](int k) {
    for (int i = 0; i < rows; ++i)
      if (std::abs(rhs[i] - partial[i]) > slack[i][k]) return;
    if (k == nr) {
      long long diff = m[v.z_region] - m[v.w_region];
      if (!out.found) {
        out.found = true;
        out.diff = diff;
      } else if (diff != out.diff) {
        out.consistent = false;
      }
      return;
    }
    for (long long val = -bound; val <= bound; ++val) {
      m[k] = val;
      for (int i = 0; i < rows; ++i) partial[i] += ce[i][k] * val;
      rec(k + 1);
      for (int i = 0; i < rows; ++i) partial[i] -= ce[i][k] * val;
    }
    m[k] = 0;
  };
  rec(0);
  return out;
}

// Census of Alexander degrees relative to the marked point, from the
// odometer alone.
std::map<long long, int> brute_census(const Diagram& d, const std::string& marked) {
  Validated vs = validate_diagram(swap_roles(d));
  auto gens = enumerate_generators(vs);
  const Generator* e = nullptr;
  for (const auto& g : gens)
    if (g.name == marked) e = &g;
  REQUIRE(e != nullptr);
  std::map<long long, int> census;
  for (const auto& g : gens) {
    AlexScan scan = scan_alexander(vs, *e, g, 6);
    REQUIRE(scan.found);
    REQUIRE(scan.consistent);
    census[scan.diff]++;
  }
  return census;
}

bool region_has(const Diagram& d, const std::string& region, const SegRef& want) {
  for (const auto& r : d.regions) {
    if (r.name != region) continue;
    for (const auto& cycle : r.boundary)
      for (const auto& s : cycle)
        if (s.kind == want.kind && s.curve == want.curve &&
            s.segment == want.segment && s.reversed == want.reversed)
          return true;
    return false;
  }
  REQUIRE(false);
  return false;
}

}  // namespace

TEST_CASE("markings validate before any computation") {
  Diagram bare = load("s3_g1");
  CHECK(code_of([&] { contact_cycle_check(bare); }) == Code::InvalidMarking);

  Diagram wrong_count = load("ob_tight_s3");
  wrong_count.contact->eh = {"p", "p"};
  CHECK(code_of([&] { contact_cycle_check(wrong_count); }) == Code::InvalidMarking);

  Diagram unknown = load("ob_tight_s3");
  unknown.contact->eh = {"nope"};
  CHECK(code_of([&] { contact_class(unknown); }) == Code::InvalidMarking);

  // two points on the same curve pair never form a generator
  Diagram split = giroux_stabilize_marked(load("ob_s2xs1_trivial"), "A");
  split.contact->eh = {"x", "y"};
  CHECK(code_of([&] { contact_cycle_check(split); }) == Code::InvalidMarking);

  CHECK(code_of([] { loss_class(load("ob_tight_s3")); }) == Code::MissingBasepoint);
}

TEST_CASE("overtwisted marking: brute table, cycle, and vanishing") {
  Diagram d = load("ob_ot_s3");

  // the swapped three-generator complex, from the direct polygon scan
  auto table = brute_table(d, false);
  CHECK(table == std::map<std::string, std::set<std::string>>{{"p0", {"p2"}},
                                                              {"p1", {"p2"}}});

  CHECK(contact_cycle_check(d));
  ContactVerdict cv = contact_class(d);
  CHECK(cv.cycle);
  CHECK_FALSE(cv.nonzero);
  CHECK(cv.coordinates.empty());

  // the corners that do not bound fail the cycle check and refuse the class
  for (const std::string pt : {"p0", "p1"}) {
    CAPTURE(pt);
    Diagram bad = load("ob_ot_s3");
    bad.contact->eh = {pt};
    CHECK_FALSE(contact_cycle_check(bad));
    CHECK(code_of([&] { contact_class(bad); }) == Code::NotACycle);
  }
}

TEST_CASE("tight and trivial markings carry nonzero classes") {
  ContactVerdict tight = contact_class(load("ob_tight_s3"));
  CHECK(tight.cycle);
  CHECK(tight.nonzero);
  CHECK(tight.basis == std::vector<std::string>{"p"});
  CHECK(tight.coordinates == std::vector<int>{1});

  ContactVerdict trivial = contact_class(load("ob_s2xs1_trivial"));
  CHECK(trivial.cycle);
  CHECK(trivial.nonzero);
  REQUIRE(trivial.basis.size() == 2);
  // coordinates are the marked generator inside its own structure class
  REQUIRE(trivial.coordinates.size() == 2);
  for (size_t i = 0; i < trivial.basis.size(); ++i)
    CHECK(trivial.coordinates[i] == (trivial.basis[i] == "x" ? 1 : 0));
}

TEST_CASE("every marked corpus diagram is a cycle in the swapped complex") {
  int marked = 0;
  for (const auto& name : corpus::names()) {
    Diagram d = load(name);
    if (!d.contact) continue;
    CAPTURE(name);
    ++marked;
    CHECK(contact_cycle_check(d));
  }
  CHECK(marked == 6);
}

TEST_CASE("marked unknot pair: both nonzero, censuses on opposite sides") {
  Diagram fwd = load("ob_legendrian_unknot");
  Diagram rev = load("ob_legendrian_unknot_rev");

  // same marked diagram except for the w placement
  Diagram fwd_stripped = fwd, rev_stripped = rev;
  fwd_stripped.basepoint_w.reset();
  rev_stripped.basepoint_w.reset();
  fwd_stripped.contact.reset();
  rev_stripped.contact.reset();
  CHECK(fwd_stripped == rev_stripped);
  CHECK(fwd.contact->eh == rev.contact->eh);

  LossVerdict lf = loss_class(fwd);
  CHECK(lf.contact.cycle);
  CHECK(lf.contact.nonzero);
  CHECK(lf.loss_oriented == std::optional<bool>(true));
  CHECK(lf.census == std::map<long long, int>{{0, 1}, {1, 4}});

  LossVerdict lr = loss_class(rev);
  CHECK(lr.contact.cycle);
  CHECK(lr.contact.nonzero);
  CHECK(lr.loss_oriented == std::optional<bool>(false));
  CHECK(lr.census == std::map<long long, int>{{-1, 2}, {0, 3}});

  // the odometer oracle reproduces both censuses
  CHECK(brute_census(fwd, "u0") == lf.census);
  CHECK(brute_census(rev, "u0") == lr.census);

  // the plain class is nonzero too, supported at the marked generator
  ContactVerdict cv = contact_class(fwd);
  CHECK(cv.nonzero);
  REQUIRE(cv.basis.size() == 5);
  for (size_t i = 0; i < cv.basis.size(); ++i)
    CHECK(cv.coordinates[i] == (cv.basis[i] == "u0" ? 1 : 0));

  // both underlying knots are trivial: one-dimensional homology on both
  // sides of the swap
  for (const Diagram* d : {&fwd, &rev}) {
    CHECK(hfk_hat(validate_diagram(*d)).total == 1);
    CHECK(hfk_hat(validate_diagram(swap_roles(*d))).total == 1);
  }

  // the swapped knot complexes, from the direct polygon scan
  CHECK(brute_table(fwd, true) ==
        std::map<std::string, std::set<std::string>>{
            {"p", {"u1"}}, {"v0", {"p", "v1"}}, {"v1", {"u1"}}});
  CHECK(brute_table(rev, true) ==
        std::map<std::string, std::set<std::string>>{
            {"p", {"u1"}}, {"v0", {"u0", "v1"}}});
}

TEST_CASE("the two w placements trace the knot across opposite sides") {
  Diagram fwd = load("ob_legendrian_unknot");
  Diagram rev = load("ob_legendrian_unknot_rev");

  KnotTrace tf = knot_trace(validate_diagram(fwd));
  KnotTrace tr = knot_trace(validate_diagram(rev));

  // both crossings sit on the single beta curve, on different segments
  CHECK(tf.crossed.kind == CurveKind::Beta);
  CHECK(tr.crossed.kind == CurveKind::Beta);
  CHECK(tf.crossed.curve == 0);
  CHECK(tr.crossed.curve == 0);
  CHECK(tf.crossed.segment == 3);
  CHECK(tr.crossed.segment == 1);
  CHECK(tf.gamma == std::vector<std::string>{"R_tip", "R_cut2"});
  CHECK(tr.gamma == std::vector<std::string>{"R_tip2", "R_cut", "R_cut2"});

  // the z region sees one crossed segment forward and the other reversed:
  // the two recovered knots cross the beta curve with opposite signs
  CHECK(region_has(fwd, "R_cut2", bref(0, 3, false)));
  CHECK_FALSE(region_has(fwd, "R_cut2", bref(0, 3, true)));
  CHECK(region_has(fwd, "R_cut2", bref(0, 1, true)));
  CHECK_FALSE(region_has(fwd, "R_cut2", bref(0, 1, false)));
}

TEST_CASE("loss verdict of the bounding marking") {
  LossVerdict lv = loss_class(load("ob_ot_s3_w"));
  CHECK(lv.contact.cycle);
  CHECK_FALSE(lv.contact.nonzero);
  CHECK_FALSE(lv.loss_oriented.has_value());
  CHECK(lv.census == std::map<long long, int>{{0, 2}, {1, 1}});
  CHECK(brute_census(load("ob_ot_s3_w"), "p2") == lv.census);
}

TEST_CASE("stabilization extends the marking and preserves every verdict") {
  Diagram tight = load("ob_tight_s3");
  Diagram once = giroux_stabilize_marked(tight, "R");
  CHECK(once.genus == 2);
  CHECK(once.contact->eh == std::vector<std::string>{"p", "q0"});
  CHECK(contact_class(once).nonzero);
  Diagram twice = giroux_stabilize_marked(once, once.basepoint_z);
  CHECK(twice.genus == 3);
  CHECK(twice.contact->eh == std::vector<std::string>{"p", "q0", "q1"});
  CHECK(contact_class(twice).nonzero);

  Diagram ot = giroux_stabilize_marked(load("ob_ot_s3"), "O");
  CHECK_FALSE(contact_class(ot).nonzero);

  // the doubly-pointed verdict and census survive as well
  for (const std::string name : {"ob_legendrian_unknot", "ob_legendrian_unknot_rev"}) {
    CAPTURE(name);
    Diagram d = load(name);
    Diagram s = giroux_stabilize_marked(d, d.basepoint_z);
    LossVerdict before = loss_class(d);
    LossVerdict after = loss_class(s);
    CHECK(after.contact.nonzero == before.contact.nonzero);
    CHECK(after.census == before.census);
  }
}

TEST_CASE("finger moves away from the marking never flip the verdict") {
  int computed = 0;
  for (const auto& name : corpus::names()) {
    Diagram d = load(name);
    if (!d.contact) continue;
    CAPTURE(name);
    std::set<std::string> marked(d.contact->eh.begin(), d.contact->eh.end());
    bool base = contact_class(d).nonzero;
    for (size_t ac = 0; ac < d.alpha.size(); ++ac) {
      for (int as = 0; as < int(d.alpha[ac].size()); ++as) {
        for (const auto& reg : d.regions) {
          for (size_t bc = 0; bc < d.beta.size(); ++bc) {
            for (int bs = 0; bs < int(d.beta[bc].size()); ++bs) {
              Diagram moved;
              try {
                moved = finger_move(d, int(ac), as, reg.name, int(bc), bs);
              } catch (const Error&) {
                continue;
              }
              auto touches = [&](const std::vector<std::string>& curve, int seg) {
                int n = int(curve.size());
                return marked.count(curve[seg % n]) > 0 ||
                       marked.count(curve[(seg + 1) % n]) > 0;
              };
              if (touches(d.alpha[ac], as) || touches(d.beta[bc], bs)) continue;
              try {
                CHECK(contact_class(moved).nonzero == base);
                ++computed;
              } catch (const Error& e) {
                // a wiggle may defeat niceness; the computation then refuses
                // loudly instead of answering
                CHECK(e.code == Code::NotNice);
              }
            }
          }
        }
      }
    }
  }
  CHECK(computed >= 5);
}

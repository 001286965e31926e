// Contact markings ask their questions of the role-swapped diagram: the swap
// reverses the boundary conditions, so the marked generator's cycle property
// and class membership live in the swapped differential.  The doubly-pointed
// variant uses the w-avoiding flavor and tabulates the Alexander census of
// the marked generator's class.

#include "hf/contact.hpp"

#include <set>

#include "hf/error.hpp"
#include "hf/moves.hpp"

namespace hf {

namespace {

struct Marked {
  Validated vs;                    // the validated swapped diagram
  std::set<std::string> marking;   // marked point names
};

// The marking must name one distinct intersection point per curve pair.
Marked build(const Diagram& d) {
  Marked m;
  require(d.contact.has_value(), Code::InvalidMarking,
          "diagram carries no contact marking");
  const auto& eh = d.contact->eh;
  require(eh.size() == d.alpha.size(), Code::InvalidMarking,
          "marking must name one point per curve pair");
  m.marking = std::set<std::string>(eh.begin(), eh.end());
  require(m.marking.size() == eh.size(), Code::InvalidMarking,
          "marking repeats a point");
  m.vs = validate_diagram(swap_roles(d));
  for (const auto& p : eh)
    require(m.vs.point_id.count(p) > 0, Code::InvalidMarking,
            "marked point '" + p + "' is not an intersection point");
  return m;
}

// Position of the marked generator inside its structure class.
struct Located {
  int class_index = -1;
  int column = -1;  // within the class
  const ClassComplex* cc = nullptr;
};

Located locate(const Marked& m, const HatDifferential& hd) {
  int gi = -1;
  for (size_t i = 0; i < hd.gens.size(); ++i) {
    std::set<std::string> names;
    for (int p : hd.gens[i].pts) names.insert(m.vs.point_name(p));
    if (names == m.marking) gi = int(i);
  }
  require(gi >= 0, Code::InvalidMarking, "marked points do not form a generator");
  for (size_t c = 0; c < hd.classes.size(); ++c)
    for (size_t j = 0; j < hd.classes[c].gens.size(); ++j)
      if (hd.classes[c].gens[j] == gi) return {int(c), int(j), &hd.classes[c]};
  check_internal(false, "generator missing from the class partition");
  return {};
}

bool is_cycle(const Located& at) {
  const F2Matrix& dm = at.cc->complex.d;
  for (size_t r = 0; r < at.cc->gens.size(); ++r)
    if (dm.at(int(r), at.column)) return false;
  return true;
}

ContactVerdict verdict_of(const Located& at) {
  ContactVerdict out;
  out.cycle = is_cycle(at);
  require(out.cycle, Code::NotACycle,
          "the marked generator is not a cycle in the swapped complex");
  out.class_index = at.class_index;
  out.basis = at.cc->complex.basis;
  F2Vec e(at.cc->gens.size(), 0);
  e[at.column] = 1;
  F2Vec residue = f2_reduce_mod_image(at.cc->complex.d, e);
  for (auto b : residue)
    if (b) out.nonzero = true;
  if (out.nonzero) {
    out.coordinates.assign(at.cc->gens.size(), 0);
    out.coordinates[at.column] = 1;
  }
  return out;
}

}  // namespace

bool contact_cycle_check(const Diagram& d) {
  Marked m = build(d);
  HatDifferential hd = differential(m.vs);
  return is_cycle(locate(m, hd));
}

ContactVerdict contact_class(const Diagram& d) {
  Marked m = build(d);
  HatDifferential hd = differential(m.vs);
  return verdict_of(locate(m, hd));
}

LossVerdict loss_class(const Diagram& d) {
  require(d.basepoint_w.has_value(), Code::MissingBasepoint,
          "the doubly-pointed class needs a w basepoint");
  Marked m = build(d);
  HatDifferential hd = differential(m.vs, true);
  Located at = locate(m, hd);
  LossVerdict out;
  out.contact = verdict_of(at);
  out.loss_oriented = d.contact->loss_oriented;
  const std::string marked = at.cc->complex.basis[at.column];
  KnotHomology kh = hfk_hat(m.vs);
  if (kh.refined) {
    for (const auto& kc : kh.classes) {
      auto it = kc.alexander.find(marked);
      if (it == kc.alexander.end()) continue;
      long long base = it->second;
      for (const auto& [gen, a] : kc.alexander) out.census[a - base]++;
    }
    check_internal(!out.census.empty(),
                   "refined homology must cover the marked generator");
  }
  return out;
}

Diagram giroux_stabilize_marked(const Diagram& d, const std::string& host_region) {
  ContactVerdict before = contact_class(d);
  Diagram out = stabilize(d, host_region);
  ContactVerdict after = contact_class(out);
  check_internal(before.nonzero == after.nonzero,
                 "stabilization must preserve the class verdict");
  return out;
}

}  // namespace hf

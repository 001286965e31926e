#pragma once

// Knot-flavor structures on doubly-pointed diagrams: the differential that
// additionally avoids the w-region, homology refined by relative Alexander
// degree, and the subordinate-convention trace recovering the knot from the
// two basepoints.

#include "hf/floer.hpp"

namespace hf {

// The hat differential counting only polygons with both basepoint regions
// untouched. Refusals as in the plain differential, in knot mode.
HatDifferential knot_differential(const Validated& v);

// One structure class of knot homology. Maslov and Alexander degrees are
// relative, with the first generator of the class at zero; when the
// Alexander refinement is unavailable only the Maslov tabulation is filled.
struct KnotClassHomology {
  std::vector<std::string> basis;
  Int delta = 0;  // Maslov grading modulus (0 = Z-graded)
  std::map<std::string, long long> alexander;            // per generator; refined only
  std::map<long long, std::map<long long, int>> table;   // A -> M -> dim; refined only
  std::map<long long, int> by_alexander;                 // refined only
  std::map<long long, int> by_maslov;
  int dim = 0;
};

struct KnotHomology {
  AbelianGroup h1;
  // The Alexander difference of a connecting domain is well defined exactly
  // when every unconstrained lattice element covers z and w equally.
  bool refined = false;
  // In a homology sphere with an even support span the degrees are shifted
  // so the dimension profile is symmetric about zero.
  bool centered = false;
  long long shift = 0;
  std::vector<KnotClassHomology> classes;
  int total = 0;
};

KnotHomology hfk_hat(const Validated& v);

// Subordinate-convention trace: the knot leaves z, crosses exactly one beta
// segment into the w-region while avoiding every other curve, and returns
// from w to z through alpha segments only.
struct KnotTrace {
  ArcKey crossed;                  // the single beta segment of the z->w leg
  std::vector<std::string> gamma;  // region path of the return leg, w first
  int gamma_crossings = 0;         // alpha segments the return leg crosses
};

KnotTrace knot_trace(const Validated& v);

}  // namespace hf

#pragma once

// Niceness checking, empty embedded polygon enumeration, the hat
// differential over F2, and homology per structure class with relative
// gradings.

#include <vector>

#include "hf/domains.hpp"
#include "hf/f2.hpp"
#include "hf/generators.hpp"

namespace hf {

// A passing region is a disc with two or four corners; the z-region is
// always exempt, the w-region additionally so in knot mode.
struct NicenessReport {
  bool nice = true;
  std::vector<int> offending;  // region ids, ascending
};

NicenessReport is_nice(const Validated& v, bool knot_mode = false);

// A counted class: multiplicities in {0,1}, disc support, exactly one
// covered quadrant at each corner coordinate, every other generator
// coordinate untouched, index one.
struct CountedPolygon {
  std::vector<Int> mult;
  std::vector<int> corners;  // point ids: moving coordinates of from, then of to
  int arity = 0;             // 2 = bigon, 4 = square
};

// All empty embedded polygons from x to y with n_z = 0 (and n_w = 0 in knot
// mode). prune skips pairs moving more than two coordinates; the unpruned
// path enumerates every arity and exists to cross-check that shortcut.
std::vector<CountedPolygon> empty_polygons(const Validated& v, const Generator& x,
                                           const Generator& y, bool knot_mode = false,
                                           bool prune = true);

// One structure class of the hat complex; the complex carries the relative
// grading mod delta with the first generator of the class at zero.
struct ClassComplex {
  std::vector<int> gens;  // indices into HatDifferential::gens
  F2Complex complex;
  Int delta = 0;
};

struct HatDifferential {
  std::vector<Generator> gens;
  H1Data h1;
  SpincPartition partition;
  std::vector<ClassComplex> classes;
};

// Full hat differential. Refuses diagrams that are not nice or not weakly
// admissible (with the w-region also pinned in knot mode) and fails loudly
// if the assembled matrix does not square to zero.
HatDifferential differential(const Validated& v, bool knot_mode = false);

struct ClassHomology {
  Int delta = 0;
  int dim = 0;
  std::map<long long, int> graded;  // relative grading -> dimension
};

struct HatHomology {
  AbelianGroup h1;
  std::vector<ClassHomology> classes;
  int total = 0;
};

HatHomology hf_hat(const Validated& v);

}  // namespace hf

#pragma once

// Generators (full matchings of alpha and beta curves through intersection
// points), first homology of the underlying closed 3-manifold, and the
// homological obstruction that partitions generators into structure classes.

#include <map>
#include <string>
#include <vector>

#include "hf/diagram.hpp"
#include "hf/zmatrix.hpp"

namespace hf {

struct Generator {
  std::vector<int> pts;   // point id chosen on alpha curve i
  std::vector<int> beta_of;  // beta curve matched to alpha curve i
  std::string name;       // point names in alpha-curve order, comma joined
};

// All generators, sorted by their point-id vectors. Empty when some curve
// carries no points or no full matching exists.
std::vector<Generator> enumerate_generators(const Validated& v);

// First homology of the closed 3-manifold, computed from a cell structure on
// the surface (intersection points, segments, one closing vertex per
// pointless circle, plus a center and spokes cutting each region into a
// disc), with both full curve systems killed.
struct H1Data {
  std::map<ArcKey, int> edge_id;   // curve segments, without spokes
  int cycle_rank = 0;              // rank of the surface 1-cycle lattice
  IntMatrix cycle_basis;           // primitive basis, columns in edge+spoke space
  LatticeQuotient quotient;        // cycle coordinates modulo region and curve classes
  AbelianGroup h1;                 // the resulting group

  // Coordinates of a 1-cycle given in edge+spoke space; must lie in the span.
  std::vector<Int> cycle_coordinates(const std::vector<Int>& chain) const;
};

H1Data first_homology(const Validated& v);

// Connecting 1-chain between two generators, in edge+spoke space: forward
// walks x->y along each alpha curve and y->x along each beta curve.
std::vector<Int> connecting_chain(const Validated& v, const H1Data& h,
                                  const Generator& x, const Generator& y);

// Reduced class of the connecting chain in H1: equal generators of the same
// structure class reduce to all-zero values.
std::vector<std::pair<Int, Int>> epsilon(const Validated& v, const H1Data& h,
                                         const Generator& x, const Generator& y);
bool epsilon_zero(const std::vector<std::pair<Int, Int>>& e);

// Generators grouped by the obstruction; classes ordered by first generator,
// each listing generator indices in enumeration order.
struct SpincPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // per generator
};

SpincPartition partition_classes(const Validated& v, const H1Data& h,
                                 const std::vector<Generator>& gens);

}  // namespace hf

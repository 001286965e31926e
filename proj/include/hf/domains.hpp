#pragma once

// Domains (integer 2-chains of regions) connecting generators, the exact
// index and grading measures on them, and admissibility of a diagram.

#include <optional>
#include <vector>

#include "hf/generators.hpp"
#include "hf/ratlp.hpp"
#include "hf/zmatrix.hpp"

namespace hf {

// Corner equations: two rows per point (one per curve family) in region
// multiplicities; a domain from x to y satisfies them with the corner
// right-hand side. Row p is the alpha-family equation at point p, row
// points+p the beta-family one.
IntMatrix corner_equations(const Validated& v);
std::vector<Int> corner_rhs(const Validated& v, const Generator& from, const Generator& to);

// All integer domains from x to y vanishing on the pinned regions: one
// particular solution plus a primitive basis of the homogeneous lattice.
// exists is false when the generators lie in different structure classes.
struct DomainSolution {
  bool exists = false;
  std::vector<Int> particular;
  std::vector<std::vector<Int>> lattice;
};
DomainSolution connecting_domains(const Validated& v, const Generator& x, const Generator& y,
                                  const std::vector<int>& pinned_regions);

// The homogeneous lattice alone (periodic domains when pinned at z).
std::vector<std::vector<Int>> domain_lattice(const Validated& v,
                                             const std::vector<int>& pinned_regions);

// Exact measures. The euler measure weights each region by its Euler
// characteristic minus a quarter per corner; the point measure averages the
// four quadrant multiplicities at each coordinate of a generator.
Rat euler_measure(const Validated& v, const std::vector<Int>& mult);
Rat point_measure(const Validated& v, const std::vector<Int>& mult, const Generator& g);
Rat maslov_index(const Validated& v, const Generator& x, const Generator& y,
                 const std::vector<Int>& mult);

// Pairing against a periodic-domain lattice element: the maslov index at a
// base generator (always an even integer), or the bare euler measure when
// the diagram has no generators (absent when that is not an even integer).
std::optional<Int> periodic_pairing(const Validated& v, const std::optional<Generator>& base,
                                    const std::vector<Int>& mult);

// Grading divisor of a structure class: the span of pairings over the
// periodic lattice is delta * Z (0 means Z-graded).
Int grading_divisor(const Validated& v, const Generator& base);

// Weak admissibility of the lattice seen from a base generator: no nonzero
// zero-pairing lattice element with all multiplicities of one sign. Decided
// exactly; a failure carries a sign-definite integer witness.
struct WeakAdmissibility {
  bool admissible = true;
  std::vector<Int> witness;
};
WeakAdmissibility check_weak_admissibility(const Validated& v,
                                           const std::optional<Generator>& base, bool pin_w);

// Bounded search for the stronger by-coefficient condition: every lattice
// element with pairing 2n >= 0 needs a multiplicity exceeding n. Coefficient
// vectors over the lattice basis are searched up to the given bound.
enum class StrongVerdict { Verified, CounterexampleFound, Inconclusive };
struct StrongAdmissibility {
  StrongVerdict verdict = StrongVerdict::Verified;
  int bound = 0;
  std::vector<Int> witness;  // offending lattice element when found
};
StrongAdmissibility check_strong_admissibility(const Validated& v,
                                               const std::optional<Generator>& base, int bound);

}  // namespace hf

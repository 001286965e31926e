#pragma once

// Built-in example diagrams. Every builder returns a diagram that passes
// validation; tests and the bundled JSON corpus are generated from these.

#include <string>
#include <vector>

#include "hf/diagram.hpp"

namespace hf {
namespace corpus {

// Genus-1 diagram of the three-sphere: one point, square region.
Diagram s3_g1();

// Genus-1 diagram of S2 x S1 with two points and two cancelling bigons.
Diagram s2xs1_fig9();

// Same manifold with an interior basepoint_w placed in one bigon; the
// Alexander refinement is unavailable on it.
Diagram s2xs1_fig9_w();

// Connected-sum style genus-2 diagram: two copies of the S2 x S1 picture
// sharing one annular region.
Diagram s2xs1_sum_fig10();

// Standard genus-1 diagram of the lens space L(p,1), p >= 2: p points, p
// square regions.
Diagram lens_p_1(int p);

// Parallel alpha/beta circles on the torus: valid but not weakly admissible.
Diagram non_admissible_fixture();

// Unknot in the three-sphere: s3_g1 with both basepoints in its one region.
Diagram unknot();

// Trefoil on a genus-1 surface: three crossings made nice by two finger
// moves through the octagonal region.
Diagram trefoil_g1();

// Open book markings: a tight three-sphere, an overtwisted-style marking
// whose class bounds, and the trivial S2 x S1 marking.
Diagram ob_tight_s3();
Diagram ob_ot_s3();
Diagram ob_s2xs1_trivial();

// Marked unknot on the wiggled one-crossing torus diagram: the two finger-tip
// bigons are the two w placements, tracing the knot across the beta curve
// with opposite signs.  The _rev variant moves w to the other tip.
Diagram ob_legendrian_unknot();
Diagram ob_legendrian_unknot_rev();

// Overtwisted-style marking with a w basepoint in one of its bigons.
Diagram ob_ot_s3_w();

// Four crossings with a hexagonal region away from the basepoint: valid but
// not nice.
Diagram hexagon_fixture();

// Names of all bundled diagrams, in presentation order, with their builders.
std::vector<std::string> names();
Diagram by_name(const std::string& name);  // UnknownRegion-style lookup: Syntax on miss

}  // namespace corpus
}  // namespace hf

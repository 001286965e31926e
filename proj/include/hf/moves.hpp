#pragma once

// Elementary diagram moves. Diagrams are immutable: every move validates its
// input, builds a new diagram, and re-validates the result before returning.

#include <string>

#include "hf/diagram.hpp"

namespace hf {

// Exchange the two curve families; basepoints and markings are kept.
Diagram swap_roles(const Diagram& d);

// Add a once-intersecting curve pair at a fresh point inside host_region,
// raising the genus by one. A contact marking is extended by the new point.
Diagram stabilize(const Diagram& d, const std::string& host_region);

// Inverse of stabilize at the given curve index: the pair must intersect in
// a single point whose four quadrants lie in one region bounded there by the
// standalone square cycle. Later curves shift down by one.
Diagram destabilize(const Diagram& d, int curve_index);

// Push the interior of beta segment (beta_curve, beta_segment) across the
// disc region and through alpha segment (alpha_curve, alpha_segment), both of
// which must lie on that region's single boundary cycle. Creates two new
// points, splits the region in two and adds a small bigon on the far side of
// the alpha segment.
Diagram finger_move(const Diagram& d, int alpha_curve, int alpha_segment,
                    const std::string& region, int beta_curve, int beta_segment);

// Inverse of finger_move: remove the named bigon region, deleting its two
// corner points and merging the two regions the finger had separated. Refused
// unless the surrounding picture matches the finger pattern exactly, or when
// the bigon holds a basepoint or a corner point carries a contact marking.
Diagram collapse_bigon(const Diagram& d, const std::string& bigon_region);

}  // namespace hf

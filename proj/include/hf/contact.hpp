#pragma once

// Contact markings on open-book-induced diagrams: the cycle property of the
// marked generator in the role-swapped complex, vanishing of its class over
// F2, the doubly-pointed variant with its Alexander census, and the marked
// stabilization move.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hf/knot.hpp"

namespace hf {

// Membership answer for the marked generator's class.  Coordinates are an
// indicator over the basis of the structure class containing the marked
// generator; they are filled only when the class is nonzero.
struct ContactVerdict {
  bool cycle = false;
  bool nonzero = false;
  int class_index = -1;
  std::vector<std::string> basis;
  std::vector<int> coordinates;
};

// Doubly-pointed verdict.  The census tabulates chain dimensions of the
// marked generator's class by Alexander degree relative to the marked
// generator; it is empty when the refinement is unavailable.  The
// orientation flag is carried verbatim from the marking.
struct LossVerdict {
  ContactVerdict contact;
  std::map<long long, int> census;
  std::optional<bool> loss_oriented;
};

// True iff the differential of swap_roles(d) kills the marked generator.
// Errors: NotNice (swapped diagram not nice), InvalidMarking.
bool contact_cycle_check(const Diagram& d);

// Decides over F2 whether the marked generator bounds in the swapped
// complex.  Pre: contact_cycle_check(d).  Errors: NotACycle and the above.
ContactVerdict contact_class(const Diagram& d);

// Same question for the w-avoiding differential of the swapped diagram.
// Errors: MissingBasepoint without w, NotACycle, NotNiceForKnot.
LossVerdict loss_class(const Diagram& d);

// stabilize(d, host_region) with the marking extended by the fresh point;
// asserts the contact_class verdict is unchanged.
Diagram giroux_stabilize_marked(const Diagram& d, const std::string& host_region);

}  // namespace hf

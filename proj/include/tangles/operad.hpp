#pragma once

#include <string>

#include "tangles/dias.hpp"
#include "tangles/gauss_diagram.hpp"
#include "tangles/pairing.hpp"

namespace tangles {

/// A tangle with one designated string reaching the bottom. The Gauss
/// diagram carries all the data; the trunk is an annotation.
struct TreeTangle {
  GaussDiagram gauss;
  int trunk = 1;
  bool operator==(const TreeTangle&) const = default;
};

/// Designate string j as the trunk. The diagram is untouched, so every
/// invariant of the capped tangle equals the corresponding one of g.
TreeTangle cap(const GaussDiagram& g, int j);

/// Satellite composition realized as diagram stacking: the inner block
/// replaces outer string i contiguously (inner string s becomes i+s-1,
/// outer strings above i shift up), the inner trunk string is fused with
/// outer string i with the inner endpoints first, and all arrows keep
/// their signs and directions. The result trunk is the re-indexed outer
/// trunk, or the fused string when i is the outer trunk.
TreeTangle compose(const TreeTangle& outer, int i, const TreeTangle& inner);

/// Compare the invariant of a composite against the grafting of the two
/// factors' invariants: outer terms carrying leaf i pair with every inner
/// term via class grafting, terms without leaf i pair only with the inner
/// unit. Both sides are truncated at max_degree.
struct MorphismReport {
  DiasElement computed;
  DiasElement predicted;
  bool agree = false;
};

MorphismReport morphism_check(const TreeTangle& outer, int i, const TreeTangle& inner,
                              int max_degree);

} // namespace tangles

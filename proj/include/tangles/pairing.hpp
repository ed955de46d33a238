#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tangles/dias.hpp"
#include "tangles/gauss_diagram.hpp"
#include "tangles/trees.hpp"

namespace tangles {

/// <A, G>: the sum of sign products over all embeddings of the template
/// into the diagram. An embedding sends each string to the same string,
/// arrows to arrows role-for-role, strictly preserving endpoint order
/// within every string. Zero when nothing embeds. String counts must
/// agree.
std::int64_t pairing(const ArrowTemplate& a, const GaussDiagram& g);

/// Signs of all crossings where `under` passes under `over`: the pairing
/// of the single-arrow template tail-on-over, head-on-under.
std::int64_t linking_number(const GaussDiagram& g, int under, int over);

/// Coefficient of the tree invariant for leaf set I and trunk j: the
/// signed template count summed over all planar decorated trees on (I, j).
/// With lower set, arrows are reversed first (lower invariants of virtual
/// tangles). I must be disjoint from j.
std::int64_t z_coefficient(const GaussDiagram& g, const std::vector<int>& I, int j,
                           bool lower = false);

/// All coefficients for one trunk up to a degree cap.
struct TreeInvariantResult {
  int trunk = 0;
  int max_degree = 0;
  bool lower = false;
  // Keyed by the sorted leaf set I; the empty set carries the unit 1.
  // Zero coefficients are not stored.
  std::map<std::vector<int>, std::int64_t> coefficients;

  DiasElement as_dias() const;
  bool operator==(const TreeInvariantResult&) const = default;
};

/// Compute Z for trunk j and all I inside {1..n} minus j with |I| bounded
/// by max_degree (default n-1).
TreeInvariantResult z_invariant(const GaussDiagram& g, int j, int max_degree = -1,
                                bool lower = false);

/// A transcription of one displayed low-degree summand: its sign and the
/// template (arrows with the vertical level they were drawn at; a higher
/// level sits earlier along each string).
struct SignedTemplate {
  int sign = 1;
  ArrowTemplate tmpl;
};

/// Fixed tables of the displayed formulas in degrees 1..3: the two degree-1
/// templates, the three/two/three degree-2 lists for trunks 1..3, and the
/// thirteen degree-3 templates for trunk 1. Transcribed literally; used as
/// an independent oracle against enumerate_trees. Throws for any other
/// (I, j).
std::vector<SignedTemplate> low_degree_table(const std::vector<int>& I, int j);

} // namespace tangles

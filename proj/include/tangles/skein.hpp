#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangles/gauss_diagram.hpp"

namespace tangles {

/// Switch one crossing: the arrow's tail and head exchange roles and its
/// sign flips. Involution.
GaussDiagram switch_crossing(const GaussDiagram& g, const std::string& label);

/// Orientation-respecting smoothing of a crossing between two distinct
/// strings u, v: the arrow disappears, u's prefix continues into v's
/// suffix and vice versa. Strings keep the index of their beginning.
/// Self-crossings are rejected (smoothing one would close a component).
GaussDiagram smooth_oriented(const GaussDiagram& g, const std::string& label);

/// Reverse the orientation of string ik, then smooth the same crossing.
/// ik must carry one end of the arrow.
GaussDiagram smooth_infinity(const GaussDiagram& g, const std::string& label, int ik);

/// The four diagrams differing only at one crossing between strings j and
/// ik: positive, negative, smoothed, and reversed-then-smoothed.
struct SkeinQuadruple {
  GaussDiagram plus, minus, zero, infinity;
  int j = 0, ik = 0;
  std::string label;
};

/// plus is whichever of g / switch(g) carries the positive sign at the
/// crossing; ik designates the leaf-side string, j is the other one.
SkeinQuadruple make_skein_quadruple(const GaussDiagram& g, const std::string& label,
                                    int ik);

/// Evaluation of the two crossing-change identities at one crossing.
/// Both express Z_{I,j}(plus) - Z_{I,j}(minus): the product form uses the
/// reversed smoothing once, the sum form accumulates split products over
/// the leaves below the crossing index and checks that its plus/minus
/// factors agree.
struct SkeinReport {
  std::int64_t lhs = 0;            // Z_{I,j}(plus) - Z_{I,j}(minus)
  std::int64_t rhs_product = 0;    // Z_{Ik-,j}(infinity) * Z_{Ik+,ik}(zero)
  std::int64_t rhs_sum = 0;        // sum_m Z_{Im-,j}(plus) * Z_{Im+,ik}(zero)
  bool product_ok = false;
  bool sum_ok = false;
  bool pm_agree = false;           // Z_{Im-,j}(plus) == Z_{Im-,j}(minus) for all m
  int j = 0, ik = 0, k = 0;
  std::vector<int> I;

  bool all_ok() const { return product_ok && sum_ok && pm_agree; }
};

/// Requires the arrow to join j and ik with j below every index of I and
/// ik inside I.
SkeinReport check_skein(const GaussDiagram& g, const std::string& label,
                        const std::vector<int>& I, int j);

} // namespace tangles

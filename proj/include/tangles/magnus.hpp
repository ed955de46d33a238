#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tangles/gauss_diagram.hpp"

namespace tangles {

/// Element of the reduced power-series ring: an integer combination of
/// square-free words in the noncommuting generators X_1..X_n. Any word
/// with a repeated letter dies, which makes every 1+N invertible by a
/// finite geometric series.
class ReducedSeries {
public:
  ReducedSeries() = default;

  static ReducedSeries one();
  static ReducedSeries generator(int i);  // X_i
  static ReducedSeries meridian(int i);   // 1 + X_i

  std::int64_t coefficient(const std::vector<int>& word) const;
  std::int64_t constant_term() const { return coefficient({}); }
  const std::map<std::vector<int>, std::int64_t>& terms() const { return terms_; }

  ReducedSeries operator+(const ReducedSeries& o) const;
  ReducedSeries operator-(const ReducedSeries& o) const;
  bool operator==(const ReducedSeries&) const = default;

  void add_term(std::vector<int> word, std::int64_t coeff);

private:
  std::map<std::vector<int>, std::int64_t> terms_;
};

/// Product in the reduced ring: words concatenate, anything with a repeated
/// letter or longer than max_len is dropped.
ReducedSeries series_mul(const ReducedSeries& a, const ReducedSeries& b, int max_len);

/// Inverse of a series with constant term +1 or -1 (geometric series; the
/// nonconstant part is nilpotent here). Throws on any other constant term.
ReducedSeries series_inv(const ReducedSeries& a, int max_len);

/// Wirtinger data of a diagram in the reduced ring: per string, the
/// meridians of its arcs (the segments between consecutive heads). Arc 0 of
/// string i is 1 + X_i; each head conjugates the running meridian by the
/// meridian of the arc its arrow's tail sits on. The table is iterated to a
/// fixpoint, which the length filtration reaches within string-count
/// sweeps.
struct ArcTable {
  std::vector<std::vector<ReducedSeries>> meridians; // [string-1][arc]
  int sweeps_used = 0;
};

/// reverse_sweep only changes the order strings are visited in while
/// iterating; the fixpoint is the same either way.
ArcTable arc_meridians(const GaussDiagram& g, bool reverse_sweep = false);

/// Milnor invariant of the diagram: the coefficient of X_{i1}..X_{ir} in
/// the longitude of string j, the ordered product over the heads on j of
/// the over-arc meridian raised to the crossing sign. The self-framing
/// factor is omitted: it only touches words containing X_j, and j is not
/// in I. I is increasing and must not contain j.
std::int64_t mu(const GaussDiagram& g, const std::vector<int>& I, int j);

/// Batch interface sharing one stabilized arc table across queries.
class MagnusOracle {
public:
  explicit MagnusOracle(const GaussDiagram& g);
  std::int64_t mu(const std::vector<int>& I, int j) const;
  const ArcTable& table() const { return table_; }

private:
  ReducedSeries longitude(int j) const;
  GaussDiagram diagram_;
  ArcTable table_;
};

} // namespace tangles

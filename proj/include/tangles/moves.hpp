#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tangles/gauss_diagram.hpp"
#include "tangles/rng.hpp"

namespace tangles {

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

/// Insert one arrow with both ends adjacent on a string (any sign, either
/// direction). `slot` counts insertion points in the current sequence.
struct R1InsertSite {
  int string = 1;
  int slot = 0;
  int sign = 1;
  bool head_first = false;
};

/// Remove an isolated self-arrow (ends adjacent on one string).
struct R1DeleteSite {
  std::string label;
};

/// Insert two arrows of opposite sign: tails adjacent on one fragment,
/// heads adjacent on another (possibly the same string). heads_reversed
/// flips the head pair relative to the tail pair, covering both fragment
/// orientations. On a shared string the pair with the smaller slot lands
/// first; equal slots put the tails first.
struct R2InsertSite {
  int tail_string = 1;
  int tail_slot = 0;
  int head_string = 1;
  int head_slot = 0;
  int first_sign = 1;
  bool heads_reversed = false;
};

/// Remove a cancelling pair created by the second move: a's tail directly
/// before b's tail, heads adjacent in either order, opposite signs.
struct R2DeleteSite {
  std::string label_a;
  std::string label_b;
};

/// Slide three positive arrows across each other. The site matches the
/// pattern of the braid word s1 s2 s1 (or its mirror after one
/// application): fragment 1 holds the tails of x and y, fragment 2 the
/// head of x next to the tail of z, fragment 3 the heads of y and z, the
/// two ends adjacent on each fragment. Applying swaps both ends on every
/// fragment; doing it twice restores the diagram.
struct R3Site {
  std::string x, y, z;
  bool mirrored = false; // true once the pairs have been swapped
};

struct MoveSite {
  std::variant<R1InsertSite, R1DeleteSite, R2InsertSite, R2DeleteSite, R3Site> data;
  MoveKind kind() const;
  std::string to_string() const;
};

/// Apply one move. Throws std::invalid_argument when the pattern is not
/// present or a slot is out of range. Insert followed by its matching
/// delete restores the original value.
GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& m);

struct EnumerateOptions {
  // Insert-site enumeration is complete for single-string sites; sites
  // whose two fragments lie on different strings are sampled up to this
  // bound to keep fuzzing cheap.
  int cross_string_samples = 200;
  std::uint64_t sample_seed = 0;
};

std::vector<MoveSite> enumerate_moves(const GaussDiagram& g, MoveKind kind,
                                      const EnumerateOptions& opts = {});

/// Seed-deterministic virtual diagram: m arrows with uniformly chosen
/// endpoint slots, directions and signs on n strings.
GaussDiagram random_diagram(int n, int m, std::uint64_t seed);
GaussDiagram random_diagram(int n, int m, Rng& rng);

} // namespace tangles

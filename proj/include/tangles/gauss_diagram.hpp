#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tangles {

/// Error raised by the text-format parsers; carries the offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

enum class EndRole { Tail, Head };

/// One slot on a string: which arrow ends here and in which role.
struct StringEnd {
  std::string label;
  EndRole role;
  bool operator==(const StringEnd&) const = default;
};

/// (string, position) address of an arrow end. Strings are 1-based,
/// positions 0-based along the string in the direction of orientation.
struct EndpointRef {
  int string = 0;
  int position = 0;
  bool operator==(const EndpointRef&) const = default;
  auto operator<=>(const EndpointRef&) const = default;
};

/// Gauss diagram of an ordered oriented tangle: n strings, each an ordered
/// sequence of arrow ends, plus signed directed arrows. Arrows point from
/// the over-passing string to the under-passing one; the sign is the local
/// writhe of the crossing. Strings are stored in orientation order, so
/// reversing an orientation rewrites the sequence.
///
/// Values are immutable after construction; every operation returns a new
/// diagram. Self-arrows (both ends on one string) are legal.
class GaussDiagram {
public:
  struct Arrow {
    EndpointRef tail;
    EndpointRef head;
    int sign = 1;
    bool operator==(const Arrow&) const = default;
  };

  GaussDiagram() = default;
  explicit GaussDiagram(int n);

  /// Validates the parts (every label once as tail and once as head, signs
  /// in {+1,-1}) and builds the endpoint index. Throws std::invalid_argument
  /// on inconsistency.
  static GaussDiagram from_parts(int n,
                                 std::vector<std::vector<StringEnd>> strings,
                                 std::map<std::string, int> signs);

  int string_count() const { return n_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<StringEnd>& string_sequence(int s) const;
  const std::map<std::string, Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(const std::string& label) const;
  bool has_arrow(const std::string& label) const;

  /// A label not yet used in this diagram, of the form <prefix><k>.
  std::string fresh_label(const std::string& prefix = "m") const;

  bool operator==(const GaussDiagram&) const = default;

private:
  int n_ = 0;
  std::vector<std::vector<StringEnd>> strings_;
  std::map<std::string, Arrow> arrows_;
};

/// Parse the `gauss 1` text format. `#` starts a comment, blank lines are
/// ignored. Reports malformed input with line numbers.
GaussDiagram parse_gauss(std::string_view text);

/// Canonical text form: arrows sorted by label, strings in index order.
/// parse_gauss is a left inverse of this.
std::string serialize_gauss(const GaussDiagram& g);

/// Build the Gauss diagram of a braid word on n strands. Letter +i crosses
/// the strand currently in position i over the strand in position i+1 with
/// sign +1; letter -i exchanges over/under and takes sign -1, so the sign
/// always equals the local writhe. Strings are numbered by their starting
/// position at the top; endpoints appear in chronological order.
GaussDiagram braid_to_gauss(int n, const std::vector<int>& word);

/// Parse `braid <n>: <w1> <w2> ...` (`n: ...` also accepted).
std::pair<int, std::vector<int>> parse_braid(std::string_view text);

/// Reverse the orientation of string s: its sequence is reversed and every
/// arrow with exactly one end on s flips sign. Involution.
GaussDiagram reverse_orientation(const GaussDiagram& g, int s);

/// String k of the result is string perm[k-1] of the input. perm must be a
/// bijection of 1..n.
GaussDiagram relabel_strings(const GaussDiagram& g, const std::vector<int>& perm);

/// Exchange tail/head roles of every arrow, signs unchanged. Turns the
/// upper invariants of a virtual tangle into the lower ones. Involution.
GaussDiagram reverse_all_arrows(const GaussDiagram& g);

/// Drop one arrow and its two endpoints.
GaussDiagram remove_arrow(const GaussDiagram& g, const std::string& label);

/// Equality up to a relabeling of the arrows (string indices, sequences,
/// roles, directions and signs must all correspond).
bool structurally_equal(const GaussDiagram& a, const GaussDiagram& b);

} // namespace tangles

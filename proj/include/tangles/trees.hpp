#pragma once

#include <string>
#include <vector>

#include "tangles/gauss_diagram.hpp"

namespace tangles {

/// Vertex decoration of a planar binary tree: which product formed it.
/// Left (a -| b) keeps the left factor's string as the result; Right
/// (a |- b) keeps the right one.
enum class Decor { Left, Right };

/// Planar rooted binary tree whose leaves carry strictly increasing string
/// indices and whose internal vertices carry a product decoration.
class DecoratedTree {
public:
  struct Node {
    int leaf = 0; // >= 1 for leaf nodes, 0 for internal
    Decor decor = Decor::Left;
    int left = -1;
    int right = -1;
  };

  static DecoratedTree make_leaf(int label);
  static DecoratedTree combine(Decor d, const DecoratedTree& l, const DecoratedTree& r);

  const Node& node(int idx) const { return nodes_[static_cast<size_t>(idx)]; }
  int root() const { return root_; }
  bool is_leaf(int idx) const { return node(idx).leaf >= 1; }

  std::vector<int> leaf_labels() const;   // left to right
  int leaf_count() const;
  int internal_count() const { return leaf_count() - 1; }

  /// Compact form like "(1<(2>3))"; '<' is the left product, '>' the right.
  std::string to_string() const;

  bool operator==(const DecoratedTree&) const;

private:
  std::vector<Node> nodes_;
  int root_ = -1;

  int clone_into(const DecoratedTree& src, int idx);
  std::string node_string(int idx) const;
};

/// Unsigned arrow diagram used as the counting pattern of the pairing.
/// Same shape as a Gauss diagram minus signs; arrows are indexed, not
/// labeled.
struct ArrowTemplate {
  struct End {
    int arrow = 0; // index into arrows
    EndRole role = EndRole::Tail;
    bool operator==(const End&) const = default;
  };
  struct TArrow {
    EndpointRef tail;
    EndpointRef head;
    bool operator==(const TArrow&) const = default;
  };

  int n = 0;
  std::vector<std::vector<End>> strings;
  std::vector<TArrow> arrows;

  /// Same template viewed on a larger string count (extra strings empty).
  ArrowTemplate extended_to(int n) const;
  bool operator==(const ArrowTemplate&) const = default;
};

/// The leaf reached from the root by always descending into the product's
/// result side. This string carries the trunk of the associated tree class.
int spine_leaf(const DecoratedTree& t);

/// All planar decorated trees over leaf sequence sorted(I + {j}) whose spine
/// ends at j. Every binary shape (in left-split-first order) is paired with
/// every decoration (a binary counter over the pre-order internal vertices,
/// bit 0 = Left), then filtered by spine; the order is deterministic.
/// I empty yields the single-leaf tree. j must not lie in I.
std::vector<DecoratedTree> enumerate_trees(const std::vector<int>& I, int j);

/// Arrow diagram of a decorated tree. Each internal vertex contributes one
/// arrow: the tail ends the spine string of the vertex's secondary child
/// (after all heads there), the head lands on the spine string of the
/// primary child. Heads sharing a string are ordered leaf-nearest first;
/// the trunk string carries heads only.
ArrowTemplate tree_to_template(const DecoratedTree& t);

/// (-1)^q where q counts arrows pointing towards a higher string index.
int template_sign(const ArrowTemplate& a);
int template_sign(const DecoratedTree& t);

/// Check the four tree-diagram conditions against (I, j): ends of each
/// arrow on distinct strings, exactly one tail on each i in I and none
/// elsewhere, heads confined to I + {j}, and heads before the tail on
/// every string of I.
bool is_tree_template(const ArrowTemplate& a, const std::vector<int>& I, int j);

/// Debug dump, `template 1` header, mirrors the gauss format without signs.
std::string serialize_template(const ArrowTemplate& a);

} // namespace tangles

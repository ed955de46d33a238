#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tangles/trees.hpp"

namespace tangles {

/// Normal-form class of a decorated tree modulo the five diassociative
/// relations: the sorted leaf sequence plus the distinguished trunk leaf.
struct DiasClass {
  std::vector<int> leaves; // sorted, contains trunk
  int trunk = 0;
  auto operator<=>(const DiasClass&) const = default;
  int degree() const { return static_cast<int>(leaves.size()) - 1; }
};

/// Integer combination of normal-form classes. Zero coefficients are never
/// stored; arithmetic is exact and raises on overflow.
class DiasElement {
public:
  DiasElement() = default;

  static DiasElement unit(int trunk); // 1 * [single leaf = trunk]

  void add_term(const DiasClass& c, std::int64_t coeff);
  DiasElement operator+(const DiasElement& o) const;
  DiasElement operator-(const DiasElement& o) const;
  DiasElement scaled(std::int64_t k) const;

  std::int64_t coefficient(const DiasClass& c) const;
  const std::map<DiasClass, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const DiasElement&) const = default;

private:
  std::map<DiasClass, std::int64_t> terms_;
};

/// Class of a tree: trunk = spine leaf, leaves = its leaf sequence.
DiasClass class_of(const DecoratedTree& t);

/// True iff the trees are connected by a chain of single-relation rewrites
/// applied at arbitrary subtrees (breadth-first closure). Both trees must
/// have the same leaf sequence. Intended for small sizes; this is the
/// independent oracle certifying the spine rule.
bool rewrite_equiv(const DecoratedTree& t1, const DecoratedTree& t2);

/// All single-step rewrites of t under the five relations.
std::vector<DecoratedTree> rewrite_neighbors(const DecoratedTree& t);

/// Class-level grafting: replace leaf `at` of the outer class by the inner
/// class. Labels follow the satellite rule for an inner tangle on
/// inner_strings strings: outer labels above `at` shift up by
/// inner_strings-1, inner label s becomes at+s-1. The result trunk is the
/// outer trunk unless `at` is the outer trunk, in which case it is the
/// inner trunk.
DiasClass graft(const DiasClass& outer, int at, const DiasClass& inner, int inner_strings);

/// Representative-level grafting used to validate the class rule: the same
/// substitution performed on decorated trees.
DecoratedTree graft_trees(const DecoratedTree& outer, int at, const DecoratedTree& inner,
                          int inner_strings);

} // namespace tangles

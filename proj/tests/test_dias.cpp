#include "doctest.h"

#include "tangles/dias.hpp"

using namespace tangles;

namespace {

DecoratedTree leaf(int v) { return DecoratedTree::make_leaf(v); }
DecoratedTree L(const DecoratedTree& a, const DecoratedTree& b) {
  return DecoratedTree::combine(Decor::Left, a, b);
}
DecoratedTree R(const DecoratedTree& a, const DecoratedTree& b) {
  return DecoratedTree::combine(Decor::Right, a, b);
}

} // namespace

TEST_CASE("class collapses same-spine trees") {
  auto trees = enumerate_trees({2, 3}, 1);
  DiasClass expect{{1, 2, 3}, 1};
  for (const auto& t : trees) CHECK(class_of(t) == expect);
  CHECK(class_of(L(leaf(1), leaf(2))) == DiasClass{{1, 2}, 1});
  CHECK(class_of(R(leaf(1), leaf(2))) == DiasClass{{1, 2}, 2});
}

TEST_CASE("single rewrites connect the defining relations") {
  DecoratedTree x = leaf(1), y = leaf(2), z = leaf(3);
  CHECK(rewrite_equiv(L(L(x, y), z), L(x, R(y, z))));
  CHECK(rewrite_equiv(L(L(x, y), z), L(x, L(y, z))));
  CHECK(rewrite_equiv(L(R(x, y), z), R(x, L(y, z))));
  CHECK(rewrite_equiv(R(L(x, y), z), R(x, R(y, z))));
  CHECK(rewrite_equiv(R(R(x, y), z), R(x, R(y, z))));
  CHECK(!rewrite_equiv(L(x, L(y, z)), L(R(x, y), z))); // spines 1 vs 2
  CHECK_THROWS_AS(rewrite_equiv(L(leaf(1), leaf(2)), L(leaf(1), leaf(3))),
                  std::invalid_argument);
}

TEST_CASE("rewrite closure equals the spine partition at four leaves") {
  std::vector<DecoratedTree> all;
  for (int j = 1; j <= 4; ++j) {
    std::vector<int> I;
    for (int s = 1; s <= 4; ++s)
      if (s != j) I.push_back(s);
    auto trees = enumerate_trees(I, j);
    all.insert(all.end(), trees.begin(), trees.end());
  }
  REQUIRE(all.size() == 40);
  for (size_t a = 0; a < all.size(); ++a)
    for (size_t b = a; b < all.size(); ++b) {
      bool same_class = class_of(all[a]) == class_of(all[b]);
      CHECK(rewrite_equiv(all[a], all[b]) == same_class);
    }
}

TEST_CASE("rewrites never move the spine") {
  for (int j = 1; j <= 5; ++j) {
    std::vector<int> I;
    for (int s = 1; s <= 5; ++s)
      if (s != j) I.push_back(s);
    for (const auto& t : enumerate_trees(I, j))
      for (const auto& u : rewrite_neighbors(t)) CHECK(class_of(u) == class_of(t));
  }
}

TEST_CASE("element arithmetic is exact and drops zeros") {
  DiasClass c{{1, 2}, 1};
  DiasElement x;
  x.add_term(c, 3);
  DiasElement zero = x + x.scaled(-1);
  CHECK(zero.is_zero());
  CHECK(zero.coefficient(c) == 0);

  DiasElement a, b;
  a.add_term(c, 1);
  a.add_term(DiasClass{{1, 2, 3}, 2}, -4);
  b.add_term(DiasClass{{1, 2, 3}, 2}, -4);
  b.add_term(c, 1);
  CHECK(a == b);
  CHECK(DiasElement::unit(3).coefficient(DiasClass{{3}, 3}) == 1);
}

TEST_CASE("grafting keeps the right trunk") {
  DiasClass outer{{1, 2, 3}, 2};
  DiasClass inner{{1, 2}, 2};
  // Grafting at a non-trunk leaf keeps the outer trunk (shifted past the
  // inserted block).
  DiasClass at3 = graft(outer, 3, inner, 2);
  CHECK(at3 == DiasClass{{1, 2, 3, 4}, 2});
  DiasClass at1 = graft(outer, 1, inner, 2);
  CHECK(at1 == DiasClass{{1, 2, 3, 4}, 3});
  // Grafting at the trunk adopts the inner trunk: position m+m'-1.
  DiasClass at_trunk = graft(outer, 2, inner, 2);
  CHECK(at_trunk == DiasClass{{1, 2, 3, 4}, 3});
  // Single-leaf inner is a relabeling identity.
  CHECK(graft(outer, 3, DiasClass{{1}, 1}, 1) == outer);
  CHECK_THROWS_AS(graft(outer, 4, inner, 2), std::invalid_argument);
}

TEST_CASE("class grafting matches representative grafting") {
  // Exhaust small shapes: outer on up to 3 leaves over strings 1..3, inner
  // on up to 2 leaves over strings 1..2, grafted at every outer leaf.
  std::vector<std::pair<std::vector<int>, int>> outers = {
      {{}, 1}, {{2}, 1}, {{1}, 2}, {{2, 3}, 1}, {{1, 3}, 2}, {{1, 2}, 3}};
  std::vector<std::pair<std::vector<int>, int>> inners = {
      {{}, 1}, {{2}, 1}, {{1}, 2}};
  for (const auto& [io, jo] : outers) {
    for (const auto& [ii, ji] : inners) {
      int m = 1;
      for (int v : ii) m = std::max(m, v);
      m = std::max(m, ji);
      for (const auto& t_out : enumerate_trees(io, jo)) {
        std::vector<int> leaves = t_out.leaf_labels();
        for (int at : leaves) {
          DiasClass want = graft(class_of(t_out), at, DiasClass{[&] {
                                   std::vector<int> l = ii;
                                   l.push_back(ji);
                                   std::sort(l.begin(), l.end());
                                   return l;
                                 }(),
                                 ji},
                                 m);
          for (const auto& t_in : enumerate_trees(ii, ji)) {
            DecoratedTree grafted = graft_trees(t_out, at, t_in, m);
            CHECK(class_of(grafted) == want);
          }
        }
      }
    }
  }
}

TEST_CASE("representative grafts of one class stay equivalent") {
  auto outs = enumerate_trees({2, 3}, 1);
  auto ins = enumerate_trees({2}, 1);
  DecoratedTree a = graft_trees(outs[0], 2, ins[0], 2);
  DecoratedTree b = graft_trees(outs[1], 2, ins[0], 2);
  CHECK(rewrite_equiv(a, b));
}

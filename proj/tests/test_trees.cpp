#include <set>

#include "doctest.h"

#include "tangles/trees.hpp"

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

TEST_CASE("spine descends the result side of each product") {
  CHECK(spine_leaf(leaf(4)) == 4);
  CHECK(spine_leaf(L(leaf(1), leaf(2))) == 1);
  CHECK(spine_leaf(R(leaf(1), leaf(2))) == 2);
  CHECK(spine_leaf(L(leaf(1), R(leaf(2), leaf(3)))) == 1);
  CHECK(spine_leaf(R(leaf(1), L(leaf(2), leaf(3)))) == 2);
}

TEST_CASE("enumeration counts match the degree-2 and degree-3 tables") {
  CHECK(enumerate_trees({2, 3}, 1).size() == 3);
  CHECK(enumerate_trees({1, 3}, 2).size() == 2);
  CHECK(enumerate_trees({1, 2}, 3).size() == 3);
  CHECK(enumerate_trees({2, 3, 4}, 1).size() == 13);
  CHECK(enumerate_trees({}, 5).size() == 1);
  CHECK(enumerate_trees({}, 5)[0].to_string() == "5");
  CHECK_THROWS_AS(enumerate_trees({1, 2}, 1), std::invalid_argument);
}

TEST_CASE("enumeration order is frozen") {
  auto trees = enumerate_trees({2, 3}, 1);
  REQUIRE(trees.size() == 3);
  CHECK(trees[0].to_string() == "(1<(2<3))");
  CHECK(trees[1].to_string() == "(1<(2>3))");
  CHECK(trees[2].to_string() == "((1<2)<3)");
}

TEST_CASE("every enumerated tree has the requested spine") {
  for (int j = 1; j <= 4; ++j) {
    std::vector<int> I;
    for (int s = 1; s <= 4; ++s)
      if (s != j) I.push_back(s);
    for (const auto& t : enumerate_trees(I, j)) CHECK(spine_leaf(t) == j);
  }
}

TEST_CASE("spine counts partition all decorated trees") {
  // 3 leaves: Catalan(2)*4 = 8 split as 3+2+3.
  CHECK(enumerate_trees({2, 3}, 1).size() + enumerate_trees({1, 3}, 2).size() +
            enumerate_trees({1, 2}, 3).size() ==
        8);
  // 4 leaves: Catalan(3)*8 = 40 split as 13+7+7+13.
  CHECK(enumerate_trees({1, 3, 4}, 2).size() == 7);
  CHECK(enumerate_trees({1, 2, 4}, 3).size() == 7);
  CHECK(enumerate_trees({1, 2, 3}, 4).size() == 13);
}

TEST_CASE("elementary trees give the degree-1 templates") {
  ArrowTemplate a = tree_to_template(L(leaf(1), leaf(2)));
  REQUIRE(a.arrows.size() == 1);
  CHECK(a.arrows[0].tail.string == 2);
  CHECK(a.arrows[0].head.string == 1);
  CHECK(template_sign(a) == 1);

  ArrowTemplate b = tree_to_template(R(leaf(1), leaf(2)));
  REQUIRE(b.arrows.size() == 1);
  CHECK(b.arrows[0].tail.string == 1);
  CHECK(b.arrows[0].head.string == 2);
  CHECK(template_sign(b) == -1);
}

TEST_CASE("nested tree unfolds with heads before tails") {
  // 1 <- (2 -> 3): arrows 2->3 and 3->1, the head preceding the tail on 3.
  ArrowTemplate a = tree_to_template(L(leaf(1), R(leaf(2), leaf(3))));
  REQUIRE(a.arrows.size() == 2);
  const auto& s3 = a.strings[2];
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].role == EndRole::Head);
  CHECK(s3[1].role == EndRole::Tail);
  std::multiset<std::pair<int, int>> dirs;
  for (const auto& ar : a.arrows) dirs.insert({ar.tail.string, ar.head.string});
  CHECK(dirs == std::multiset<std::pair<int, int>>{{2, 3}, {3, 1}});
  CHECK(template_sign(a) == -1);
}

TEST_CASE("heads on a shared string sit leaf-nearest first") {
  // 1 <- (2 -> (3 <- 4)): on string 3 the head from the inner vertex comes
  // before the one from the outer vertex, then the tail.
  ArrowTemplate a = tree_to_template(L(leaf(1), R(leaf(2), L(leaf(3), leaf(4)))));
  const auto& s3 = a.strings[2];
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].role == EndRole::Head);
  CHECK(s3[1].role == EndRole::Head);
  CHECK(s3[2].role == EndRole::Tail);
  CHECK(a.arrows[static_cast<size_t>(s3[0].arrow)].tail.string == 4);
  CHECK(a.arrows[static_cast<size_t>(s3[1].arrow)].tail.string == 2);
}

TEST_CASE("generated templates satisfy the tree-diagram conditions") {
  std::vector<std::pair<std::vector<int>, int>> cases = {
      {{2}, 1}, {{1}, 2}, {{2, 3}, 1}, {{1, 3}, 2}, {{1, 2}, 3},
      {{2, 3, 4}, 1}, {{1, 3, 4}, 2}, {{2, 3, 4, 5}, 1}};
  for (const auto& [I, j] : cases) {
    auto trees = enumerate_trees(I, j);
    std::set<std::string> dumps;
    for (const auto& t : trees) {
      ArrowTemplate a = tree_to_template(t);
      CHECK(is_tree_template(a, I, j));
      dumps.insert(serialize_template(a));
    }
    CHECK(dumps.size() == trees.size()); // distinct trees, distinct templates
  }
}

TEST_CASE("template dump mirrors the diagram format without signs") {
  ArrowTemplate a = tree_to_template(L(leaf(1), leaf(2)));
  CHECK(serialize_template(a) ==
        "template 1\nstrings 2\narrows a1\nstring 1: a1.h\nstring 2: a1.t\n");
}

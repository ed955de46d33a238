#include "doctest.h"

#include "tangles/skein.hpp"

#include "tangles/pairing.hpp"

using namespace tangles;

namespace {
const std::vector<int> kBorromeanWord{1, -2, 1, -2, 1, -2};
}

TEST_CASE("switching a crossing flips role and sign") {
  GaussDiagram g = braid_to_gauss(2, {1});
  GaussDiagram s = switch_crossing(g, "c1");
  CHECK(s.arrow("c1").tail.string == 2);
  CHECK(s.arrow("c1").head.string == 1);
  CHECK(s.arrow("c1").sign == -1);
  CHECK(switch_crossing(s, "c1") == g);
  CHECK(structurally_equal(s, braid_to_gauss(2, {-1})));
  CHECK_THROWS_AS(switch_crossing(g, "nope"), std::invalid_argument);
}

TEST_CASE("oriented smoothing reconnects prefix to suffix") {
  GaussDiagram g = braid_to_gauss(2, {1});
  CHECK(smooth_oriented(g, "c1") == GaussDiagram(2));
  CHECK(smooth_infinity(g, "c1", 2) == GaussDiagram(2));

  // Smoothing a switched crossing gives the same diagram.
  GaussDiagram h = braid_to_gauss(3, kBorromeanWord);
  for (const char* label : {"c1", "c4"}) {
    CHECK(smooth_oriented(h, label) == smooth_oriented(switch_crossing(h, label), label));
    GaussDiagram sm = smooth_oriented(h, label);
    size_t before = 0, after = 0;
    for (int s = 1; s <= 3; ++s) {
      before += h.string_sequence(s).size();
      after += sm.string_sequence(s).size();
    }
    CHECK(after == before - 2);
    CHECK(sm.arrow_count() == h.arrow_count() - 1);
  }

  const char* self_arrow =
      "gauss 1\n"
      "strings 1\n"
      "arrows a:+\n"
      "string 1: a.t a.h\n";
  CHECK_THROWS_AS(smooth_oriented(parse_gauss(self_arrow), "a"), std::invalid_argument);
  CHECK_THROWS_AS(smooth_infinity(braid_to_gauss(3, {1}), "c1", 3), std::invalid_argument);
}

TEST_CASE("the quadruple puts the positive crossing in plus") {
  GaussDiagram g = braid_to_gauss(2, {-1});
  SkeinQuadruple q = make_skein_quadruple(g, "c1", 2);
  CHECK(q.j == 1);
  CHECK(q.ik == 2);
  CHECK(q.minus == g);
  CHECK(q.plus.arrow("c1").sign == 1);
  CHECK(q.zero == GaussDiagram(2));
}

TEST_CASE("one-crossing tangles satisfy the degree-1 relation") {
  // Z_{2,1}(L+) - Z_{2,1}(L-) = 1 for a crossing of the two strings.
  for (const std::vector<int>& word : {std::vector<int>{1}, std::vector<int>{-1}}) {
    GaussDiagram g = braid_to_gauss(2, word);
    SkeinReport r = check_skein(g, "c1", {2}, 1);
    CHECK(r.lhs == 1);
    CHECK(r.all_ok());
  }
}

TEST_CASE("the Borromean crossing reproduces the worked derivation") {
  GaussDiagram g = braid_to_gauss(3, kBorromeanWord);
  // The fourth crossing joins strings 1 and 2; switching it unlinks the
  // third string on one side.
  SkeinReport r = check_skein(g, "c4", {2, 3}, 1);
  CHECK(r.k == 1);
  CHECK(r.lhs == 1);
  CHECK(r.rhs_product == 1);
  CHECK(r.rhs_sum == 1);
  CHECK(r.all_ok());
  GaussDiagram zero = smooth_oriented(g, "c4");
  CHECK(z_coefficient(zero, {3}, 2) == 1);
}

TEST_CASE("a crossing split off from everything gives zero on both sides") {
  // Four strings, one arrow joining 1 and 2; querying degree 2 across the
  // crossing stays zero on both sides of the relation.
  const char* text =
      "gauss 1\n"
      "strings 4\n"
      "arrows a:+\n"
      "string 1: a.h\n"
      "string 2: a.t\n"
      "string 3:\n"
      "string 4:\n";
  GaussDiagram g = parse_gauss(text);
  SkeinReport r = check_skein(g, "a", {2, 3}, 1);
  CHECK(r.lhs == 0);
  CHECK(r.rhs_product == 0);
  CHECK(r.rhs_sum == 0);
  CHECK(r.all_ok());
}

TEST_CASE("hypothesis violations are rejected") {
  GaussDiagram g = braid_to_gauss(3, {1});
  // The crossing joins strings 1 and 2.
  CHECK_THROWS_AS(check_skein(g, "c1", {3}, 1), std::invalid_argument);    // 2 not in I
  CHECK_THROWS_AS(check_skein(g, "c1", {1, 2}, 1), std::invalid_argument); // I not above j
  CHECK_THROWS_AS(check_skein(g, "c1", {}, 1), std::invalid_argument);
  GaussDiagram g4 = braid_to_gauss(4, {1});
  CHECK_THROWS_AS(check_skein(g4, "c1", {4}, 3), std::invalid_argument); // j off the crossing
}

// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "tangles/magnus.hpp"
#include "tangles/moves.hpp"
#include "tangles/operad.hpp"
#include "tangles/pairing.hpp"
#include "tangles/rng.hpp"
#include "tangles/skein.hpp"
#include "tangles/trees.hpp"
#include "tangles/verify.hpp"

using namespace tangles;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail,
            double seconds) {
  std::ostringstream line;
  line << name << (ok ? " PASS" : " FAIL") << " (" << detail << ") ["
       << static_cast<int>(seconds * 1000) << " ms]";
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(const std::string& name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    detail = fn(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(name, ok, detail, secs);
}

const std::vector<int> kBorromeanWord{1, -2, 1, -2, 1, -2};

std::string suite_detail(const verify::SuiteReport& rep) {
  std::ostringstream out;
  out << rep.cases_run << " cases, " << rep.failures.size() << " failures";
  if (!rep.failures.empty()) {
    out << "; first: " << rep.failures.front().detail;
  }
  return out.str();
}

} // namespace

int main() {
  // AC-1: tree enumeration against the transcribed formula tables.
  criterion("AC-1", [](bool& ok) {
    std::vector<std::pair<std::vector<int>, int>> cases = {
        {{2, 3}, 1}, {{1, 3}, 2}, {{1, 2}, 3}, {{2, 3, 4}, 1}};
    std::vector<size_t> expected = {3, 2, 3, 13};
    bool all = true;
    std::ostringstream detail;
    for (size_t c = 0; c < cases.size(); ++c) {
      const auto& [I, j] = cases[c];
      auto trees = enumerate_trees(I, j);
      if (trees.size() != expected[c]) all = false;

      auto table = low_degree_table(I, j);
      int n = 0;
      for (const auto& st : table) n = std::max(n, st.tmpl.n);
      std::multiset<std::pair<int, std::string>> want, got;
      for (const auto& st : table)
        want.insert({st.sign, serialize_template(st.tmpl.extended_to(n))});
      for (const auto& t : trees) {
        ArrowTemplate a = tree_to_template(t).extended_to(n);
        got.insert({template_sign(a), serialize_template(a)});
      }
      if (want != got) all = false;
      detail << (c ? " " : "") << trees.size();
    }
    ok = all;
    return "template counts " + detail.str() + ", signed sets match the tables";
  });

  // AC-2: invariance under one random move on 1000 random diagrams.
  criterion("AC-2", [](bool& ok) {
    verify::SuiteConfig cfg;
    cfg.seed = 7;
    cfg.cases = 1000;
    cfg.max_strings = 4;
    cfg.max_arrows = 10;
    cfg.max_degree = 3;
    auto rep = verify::run_suite("reidemeister", cfg);
    ok = rep.passed();
    return suite_detail(rep);
  });

  // AC-3: rewrite closure against the spine rule through five leaves.
  criterion("AC-3", [](bool& ok) {
    verify::SuiteConfig cfg;
    auto rep = verify::run_suite("dias", cfg);
    ok = rep.passed();
    std::string detail = suite_detail(rep);
    for (const std::string& n : rep.notes)
      if (n.rfind("3 leaves", 0) == 0) detail += "; " + n;
    return detail;
  });

  // AC-4: the Borromean braid value and its worked skein derivation.
  criterion("AC-4", [](bool& ok) {
    GaussDiagram g = braid_to_gauss(3, kBorromeanWord);
    std::int64_t z = z_coefficient(g, {2, 3}, 1);
    bool magnitude = (z == 1 || z == -1);
    bool recorded_sign = (z == -1); // fixed for this representative
    SkeinReport r = check_skein(g, "c4", {2, 3}, 1);
    std::int64_t smoothed = z_coefficient(smooth_oriented(g, "c4"), {3}, 2);
    ok = magnitude && recorded_sign && r.all_ok() && r.lhs == 1 && smoothed == 1;
    std::ostringstream detail;
    detail << "Z_{23,1} = " << z << ", skein lhs = " << r.lhs
           << ", smoothed degree-1 factor = " << smoothed;
    return detail.str();
  });

  // AC-5: tree coefficients equal the Magnus oracle (200 random + 100 braids).
  criterion("AC-5", [](bool& ok) {
    verify::SuiteConfig cfg;
    cfg.seed = 5;
    cfg.cases = 300; // every third case is a braid word
    cfg.max_strings = 4;
    cfg.max_arrows = 8;
    cfg.max_degree = 3;
    auto rep = verify::run_suite("mu-equality", cfg);
    ok = rep.passed();
    return suite_detail(rep);
  });

  // AC-6: both crossing-change identities on 500 instances.
  criterion("AC-6", [](bool& ok) {
    verify::SuiteConfig cfg;
    cfg.seed = 6;
    cfg.cases = 500;
    cfg.max_strings = 4;
    cfg.max_arrows = 8;
    auto rep = verify::run_suite("skein", cfg);
    ok = rep.passed();
    return suite_detail(rep);
  });

  // AC-7: ordering, reflection, cyclic and orientation identities.
  criterion("AC-7", [](bool& ok) {
    verify::SuiteConfig cfg;
    cfg.seed = 77;
    cfg.cases = 200;
    cfg.max_strings = 4;
    cfg.max_arrows = 8;
    auto rep = verify::run_suite("properties", cfg);
    ok = rep.passed();
    return suite_detail(rep);
  });

  // AC-8: grafting prediction on the fixed examples; random pairs logged.
  criterion("AC-8", [](bool& ok) {
    verify::SuiteConfig cfg;
    cfg.seed = 8;
    cfg.cases = 50;
    cfg.max_degree = 3;
    auto rep = verify::run_suite("operad", cfg);
    ok = rep.passed();
    std::string detail = suite_detail(rep);
    for (const std::string& n : rep.notes) detail += "; " + n;
    return detail;
  });

  // AC-9: both degree-1 pairings agree on pure braids, split on a tangle.
  criterion("AC-9", [](bool& ok) {
    bool all = true;
    for (int c = 0; c < 100; ++c) {
      Rng rng = Rng::for_case(9, static_cast<std::uint64_t>(c));
      int n = rng.range(2, 4);
      int len = rng.range(0, 5);
      std::vector<int> word;
      for (int t = 0; t < len; ++t) word.push_back(rng.range(1, n - 1) * rng.sign());
      // A word followed by its reverse has the identity permutation, so the
      // diagram is a pure braid (a string link).
      std::vector<int> pure = word;
      pure.insert(pure.end(), word.rbegin(), word.rend());
      GaussDiagram g = braid_to_gauss(n, pure);
      if (linking_number(g, 1, 2) != linking_number(g, 2, 1)) all = false;
    }
    // One crossing with string 1 in front of string 2, each sign.
    GaussDiagram pos = braid_to_gauss(2, {1});
    bool tangle_case =
        linking_number(pos, 2, 1) == 1 && linking_number(pos, 1, 2) == 0;
    GaussDiagram neg = parse_gauss(
        "gauss 1\nstrings 2\narrows a:-\nstring 1: a.t\nstring 2: a.h\n");
    tangle_case = tangle_case && linking_number(neg, 2, 1) == -1 &&
                  linking_number(neg, 1, 2) == 0;
    ok = all && tangle_case;
    std::ostringstream detail;
    detail << "pure-braid symmetry " << (all ? "holds" : "broken")
           << ", one-crossing tangle gives 0 and +-1: " << (tangle_case ? "yes" : "no");
    return detail.str();
  });

  // AC-10: degree cap 4 on a 5-string, 60-arrow diagram inside 10 s.
  criterion("AC-10", [](bool& ok) {
    GaussDiagram g = random_diagram(5, 60, 1010);
    auto start = std::chrono::steady_clock::now();
    TreeInvariantResult res = z_invariant(g, 1, 4);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = secs < 10.0 && res.coefficients.count({}) == 1;
    std::ostringstream detail;
    detail << res.coefficients.size() << " coefficients in " << secs << " s";
    return detail.str();
  });

  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

#include "tangles/operad.hpp"

#include <algorithm>
#include <stdexcept>

#include "tangles/checked.hpp"

namespace tangles {

TreeTangle cap(const GaussDiagram& g, int j) {
  if (j < 1 || j > g.string_count())
    throw std::invalid_argument("trunk index out of range");
  return TreeTangle{g, j};
}

TreeTangle compose(const TreeTangle& outer, int i, const TreeTangle& inner) {
  int n = outer.gauss.string_count();
  int m = inner.gauss.string_count();
  if (i < 1 || i > n) throw std::invalid_argument("composition index out of range");

  // Index map: inner strings occupy i..i+m-1, outer strings above i shift.
  auto outer_index = [&](int s) { return s < i ? s : s + m - 1; };
  int fused = i + inner.trunk - 1;

  std::vector<std::vector<StringEnd>> strings(static_cast<size_t>(n + m - 1));
  std::map<std::string, int> signs;

  // Arrow labels get a block prefix so the two diagrams cannot collide.
  auto inner_label = [](const std::string& l) { return "i_" + l; };
  auto outer_label = [](const std::string& l) { return "o_" + l; };

  for (int s = 1; s <= m; ++s) {
    auto& dst = strings[static_cast<size_t>(i + s - 1 - 1)];
    for (const StringEnd& e : inner.gauss.string_sequence(s))
      dst.push_back({inner_label(e.label), e.role});
  }
  for (int s = 1; s <= n; ++s) {
    auto& dst = strings[static_cast<size_t>((s == i ? fused : outer_index(s)) - 1)];
    for (const StringEnd& e : outer.gauss.string_sequence(s))
      dst.push_back({outer_label(e.label), e.role});
  }
  for (const auto& [l, a] : inner.gauss.arrows()) signs[inner_label(l)] = a.sign;
  for (const auto& [l, a] : outer.gauss.arrows()) signs[outer_label(l)] = a.sign;

  TreeTangle out;
  out.gauss = GaussDiagram::from_parts(n + m - 1, std::move(strings), std::move(signs));
  out.trunk = outer.trunk == i ? fused : outer_index(outer.trunk);
  return out;
}

MorphismReport morphism_check(const TreeTangle& outer, int i, const TreeTangle& inner,
                              int max_degree) {
  TreeTangle comp = compose(outer, i, inner);
  int m = inner.gauss.string_count();

  MorphismReport rep;
  rep.computed = z_invariant(comp.gauss, comp.trunk, max_degree).as_dias();

  DiasElement z_outer = z_invariant(outer.gauss, outer.trunk, max_degree).as_dias();
  DiasElement z_inner = z_invariant(inner.gauss, inner.trunk, max_degree).as_dias();

  DiasElement predicted;
  for (const auto& [c_out, k_out] : z_outer.terms()) {
    bool has_i = std::find(c_out.leaves.begin(), c_out.leaves.end(), i) !=
                 c_out.leaves.end();
    if (has_i) {
      for (const auto& [c_in, k_in] : z_inner.terms()) {
        DiasClass grafted = graft(c_out, i, c_in, m);
        if (grafted.degree() <= max_degree)
          predicted.add_term(grafted, checked_mul(k_out, k_in));
      }
    } else {
      // Without leaf i the outer class only meets the inner unit; the
      // labels still shift around the inserted block.
      DiasClass shifted;
      for (int v : c_out.leaves) shifted.leaves.push_back(v < i ? v : v + m - 1);
      shifted.trunk = c_out.trunk < i ? c_out.trunk : c_out.trunk + m - 1;
      if (shifted.degree() <= max_degree) predicted.add_term(shifted, k_out);
    }
  }
  rep.predicted = std::move(predicted);
  rep.agree = rep.computed == rep.predicted;
  return rep;
}

} // namespace tangles

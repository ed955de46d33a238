#include "tangles/pairing.hpp"

#include <algorithm>
#include <stdexcept>

#include "tangles/checked.hpp"

namespace tangles {

namespace {

struct GArrow {
  EndpointRef tail, head;
  int sign;
};

// Backtracking over template arrows. Candidates are pre-bucketed by the
// (tail string, head string) pair; a partial assignment keeps, per string,
// the chosen (template position, diagram position) pairs, and consistency
// means the map is strictly order-preserving.
class EmbeddingCounter {
public:
  EmbeddingCounter(const ArrowTemplate& a, const GaussDiagram& g) : a_(a) {
    buckets_.resize(static_cast<size_t>(a.n) * static_cast<size_t>(a.n));
    for (const auto& [label, ar] : g.arrows()) {
      (void)label;
      buckets_[bucket_index(ar.tail.string, ar.head.string)].push_back(
          GArrow{ar.tail, ar.head, ar.sign});
    }
    chosen_.resize(static_cast<size_t>(a.n));
  }

  std::int64_t count() {
    total_ = 0;
    descend(0, 1);
    return total_;
  }

private:
  size_t bucket_index(int tail_string, int head_string) const {
    return static_cast<size_t>(tail_string - 1) * static_cast<size_t>(a_.n) +
           static_cast<size_t>(head_string - 1);
  }

  bool consistent(const EndpointRef& tmpl, const EndpointRef& diag) const {
    for (const auto& [tp, gp] : chosen_[static_cast<size_t>(tmpl.string - 1)]) {
      if (gp == diag.position) return false;
      if ((tp < tmpl.position) != (gp < diag.position)) return false;
    }
    return true;
  }

  void place(const EndpointRef& tmpl, const EndpointRef& diag) {
    chosen_[static_cast<size_t>(tmpl.string - 1)].push_back({tmpl.position, diag.position});
  }

  void unplace(const EndpointRef& tmpl) {
    chosen_[static_cast<size_t>(tmpl.string - 1)].pop_back();
  }

  void descend(size_t arrow_idx, int sign_so_far) {
    if (arrow_idx == a_.arrows.size()) {
      total_ = checked_add(total_, sign_so_far);
      return;
    }
    const auto& ta = a_.arrows[arrow_idx];
    for (const GArrow& cand :
         buckets_[bucket_index(ta.tail.string, ta.head.string)]) {
      if (!consistent(ta.tail, cand.tail)) continue;
      place(ta.tail, cand.tail);
      if (consistent(ta.head, cand.head)) {
        place(ta.head, cand.head);
        descend(arrow_idx + 1, sign_so_far * cand.sign);
        unplace(ta.head);
      }
      unplace(ta.tail);
    }
  }

  const ArrowTemplate& a_;
  std::vector<std::vector<GArrow>> buckets_;
  std::vector<std::vector<std::pair<int, int>>> chosen_; // per string
  std::int64_t total_ = 0;
};

} // namespace

std::int64_t pairing(const ArrowTemplate& a, const GaussDiagram& g) {
  if (a.n != g.string_count())
    throw std::invalid_argument("template and diagram string counts differ");
  if (a.arrows.empty()) return 1; // the empty template embeds once
  return EmbeddingCounter(a, g).count();
}

std::int64_t linking_number(const GaussDiagram& g, int under, int over) {
  if (under == over) throw std::invalid_argument("linking number needs two distinct strings");
  int n = g.string_count();
  if (under < 1 || under > n || over < 1 || over > n)
    throw std::invalid_argument("string index out of range");
  ArrowTemplate a;
  a.n = n;
  a.strings.resize(static_cast<size_t>(n));
  a.arrows.push_back({EndpointRef{over, 0}, EndpointRef{under, 0}});
  a.strings[static_cast<size_t>(over - 1)].push_back({0, EndRole::Tail});
  a.strings[static_cast<size_t>(under - 1)].push_back({0, EndRole::Head});
  return pairing(a, g);
}

namespace {

void validate_index_set(const GaussDiagram& g, const std::vector<int>& I, int j) {
  int n = g.string_count();
  if (j < 1 || j > n) throw std::invalid_argument("trunk index out of range");
  for (size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 1 || I[k] > n) throw std::invalid_argument("leaf index out of range");
    if (I[k] == j) throw std::invalid_argument("leaf set overlaps the trunk");
    if (k > 0 && I[k] <= I[k - 1])
      throw std::invalid_argument("leaf set must be strictly increasing");
  }
}

} // namespace

std::int64_t z_coefficient(const GaussDiagram& g, const std::vector<int>& I, int j,
                           bool lower) {
  validate_index_set(g, I, j);
  if (I.empty()) return 1;
  GaussDiagram reversed;
  if (lower) reversed = reverse_all_arrows(g);
  const GaussDiagram& gg = lower ? reversed : g;
  std::int64_t total = 0;
  for (const DecoratedTree& t : enumerate_trees(I, j)) {
    ArrowTemplate a = tree_to_template(t).extended_to(g.string_count());
    total = checked_add(total, checked_mul(template_sign(a), pairing(a, gg)));
  }
  return total;
}

DiasElement TreeInvariantResult::as_dias() const {
  DiasElement e;
  for (const auto& [I, c] : coefficients) {
    std::vector<int> leaves = I;
    leaves.push_back(trunk);
    std::sort(leaves.begin(), leaves.end());
    e.add_term(DiasClass{std::move(leaves), trunk}, c);
  }
  return e;
}

TreeInvariantResult z_invariant(const GaussDiagram& g, int j, int max_degree, bool lower) {
  int n = g.string_count();
  if (j < 1 || j > n) throw std::invalid_argument("trunk index out of range");
  if (max_degree < 0) max_degree = n - 1;

  TreeInvariantResult res;
  res.trunk = j;
  res.max_degree = max_degree;
  res.lower = lower;
  res.coefficients[{}] = 1;

  std::vector<int> others;
  for (int s = 1; s <= n; ++s)
    if (s != j) others.push_back(s);

  GaussDiagram reversed;
  if (lower) reversed = reverse_all_arrows(g);
  const GaussDiagram& gg = lower ? reversed : g;

  // All nonempty subsets of the other strings, capped by degree.
  int m = static_cast<int>(others.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) > max_degree) continue;
    std::vector<int> I;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) I.push_back(others[static_cast<size_t>(b)]);
    std::int64_t c = 0;
    for (const DecoratedTree& t : enumerate_trees(I, j)) {
      ArrowTemplate a = tree_to_template(t).extended_to(n);
      c = checked_add(c, checked_mul(template_sign(a), pairing(a, gg)));
    }
    if (c != 0) res.coefficients[I] = c;
  }
  return res;
}

namespace {

// One displayed arrow: tail string, head string, and the vertical level it
// was drawn at (level 3 highest). Strings read top to bottom, so a higher
// level comes earlier in the endpoint sequence.
struct DrawnArrow {
  int tail, head, level;
};

ArrowTemplate build_drawn(int n, std::initializer_list<DrawnArrow> arrows) {
  ArrowTemplate a;
  a.n = n;
  a.strings.resize(static_cast<size_t>(n));
  struct Slot {
    int level;
    int arrow;
    EndRole role;
  };
  std::vector<std::vector<Slot>> slots(static_cast<size_t>(n));
  int idx = 0;
  for (const DrawnArrow& d : arrows) {
    slots[static_cast<size_t>(d.tail - 1)].push_back({d.level, idx, EndRole::Tail});
    slots[static_cast<size_t>(d.head - 1)].push_back({d.level, idx, EndRole::Head});
    ++idx;
  }
  a.arrows.resize(static_cast<size_t>(idx));
  for (int s = 1; s <= n; ++s) {
    auto& v = slots[static_cast<size_t>(s - 1)];
    std::stable_sort(v.begin(), v.end(),
                     [](const Slot& x, const Slot& y) { return x.level > y.level; });
    for (int p = 0; p < static_cast<int>(v.size()); ++p) {
      const Slot& sl = v[static_cast<size_t>(p)];
      a.strings[static_cast<size_t>(s - 1)].push_back({sl.arrow, sl.role});
      if (sl.role == EndRole::Tail)
        a.arrows[static_cast<size_t>(sl.arrow)].tail = EndpointRef{s, p};
      else
        a.arrows[static_cast<size_t>(sl.arrow)].head = EndpointRef{s, p};
    }
  }
  return a;
}

} // namespace

std::vector<SignedTemplate> low_degree_table(const std::vector<int>& I, int j) {
  auto is = [&](std::initializer_list<int> want, int trunk) {
    return j == trunk && I == std::vector<int>(want);
  };
  // Degree 1.
  if (is({2}, 1)) return {{+1, build_drawn(2, {{2, 1, 1}})}};
  if (is({1}, 2)) return {{-1, build_drawn(2, {{1, 2, 1}})}};
  // Degree 2, three/two/three summands for trunks 1..3.
  if (is({2, 3}, 1))
    return {{+1, build_drawn(3, {{3, 2, 2}, {2, 1, 1}})},
            {+1, build_drawn(3, {{2, 1, 2}, {3, 1, 1}})},
            {-1, build_drawn(3, {{2, 3, 2}, {3, 1, 1}})}};
  if (is({1, 3}, 2))
    return {{-1, build_drawn(3, {{1, 2, 2}, {3, 2, 1}})},
            {-1, build_drawn(3, {{3, 2, 2}, {1, 2, 1}})}};
  if (is({1, 2}, 3))
    return {{+1, build_drawn(3, {{1, 2, 2}, {2, 3, 1}})},
            {+1, build_drawn(3, {{2, 3, 2}, {1, 3, 1}})},
            {-1, build_drawn(3, {{2, 1, 2}, {1, 3, 1}})}};
  // Degree 3, the thirteen summands for trunk 1.
  if (is({2, 3, 4}, 1))
    return {{+1, build_drawn(4, {{2, 1, 3}, {3, 1, 2}, {4, 1, 1}})},
            {-1, build_drawn(4, {{2, 1, 2}, {3, 4, 2}, {4, 1, 1}})},
            {+1, build_drawn(4, {{3, 4, 3}, {2, 4, 2}, {4, 1, 1}})},
            {+1, build_drawn(4, {{3, 2, 3}, {2, 1, 2}, {4, 1, 1}})},
            {-1, build_drawn(4, {{3, 2, 3}, {2, 4, 2}, {4, 1, 1}})},
            {-1, build_drawn(4, {{2, 3, 3}, {3, 1, 2}, {4, 1, 1}})},
            {+1, build_drawn(4, {{2, 1, 2}, {4, 3, 2}, {3, 1, 1}})},
            {-1, build_drawn(4, {{2, 3, 3}, {4, 3, 2}, {3, 1, 1}})},
            {-1, build_drawn(4, {{4, 3, 3}, {2, 3, 2}, {3, 1, 1}})},
            {+1, build_drawn(4, {{2, 3, 3}, {3, 4, 2}, {4, 1, 1}})},
            {+1, build_drawn(4, {{3, 2, 3}, {4, 2, 2}, {2, 1, 1}})},
            {+1, build_drawn(4, {{4, 3, 3}, {3, 2, 2}, {2, 1, 1}})},
            {-1, build_drawn(4, {{3, 4, 3}, {4, 2, 2}, {2, 1, 1}})}};
  throw std::invalid_argument("no fixed table for this index set");
}

} // namespace tangles

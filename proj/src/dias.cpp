#include "tangles/dias.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "tangles/checked.hpp"

namespace tangles {

DiasElement DiasElement::unit(int trunk) {
  DiasElement e;
  e.add_term(DiasClass{{trunk}, trunk}, 1);
  return e;
}

void DiasElement::add_term(const DiasClass& c, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(c, coeff);
  if (!fresh) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

DiasElement DiasElement::operator+(const DiasElement& o) const {
  DiasElement out = *this;
  for (const auto& [c, k] : o.terms_) out.add_term(c, k);
  return out;
}

DiasElement DiasElement::operator-(const DiasElement& o) const {
  DiasElement out = *this;
  for (const auto& [c, k] : o.terms_) out.add_term(c, -k);
  return out;
}

DiasElement DiasElement::scaled(std::int64_t k) const {
  DiasElement out;
  if (k == 0) return out;
  for (const auto& [c, v] : terms_) out.add_term(c, checked_mul(v, k));
  return out;
}

std::int64_t DiasElement::coefficient(const DiasClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

DiasClass class_of(const DecoratedTree& t) {
  return DiasClass{t.leaf_labels(), spine_leaf(t)};
}

namespace {

// The five defining relations, written as rotation pairs: the left-combed
// tree (x a y) b z matches the right-combed x c (y d z).
struct Relation {
  Decor a, b; // decorations of ((x a y) b z): a inner, b outer
  Decor c, d; // decorations of (x c (y d z)): c outer, d inner
};
constexpr Relation kRelations[] = {
    {Decor::Left, Decor::Left, Decor::Left, Decor::Right},
    {Decor::Left, Decor::Left, Decor::Left, Decor::Left},
    {Decor::Right, Decor::Left, Decor::Right, Decor::Left},
    {Decor::Left, Decor::Right, Decor::Right, Decor::Right},
    {Decor::Right, Decor::Right, Decor::Right, Decor::Right},
};

DecoratedTree subtree_copy(const DecoratedTree& t, int idx) {
  if (t.is_leaf(idx)) return DecoratedTree::make_leaf(t.node(idx).leaf);
  const auto& n = t.node(idx);
  return DecoratedTree::combine(n.decor, subtree_copy(t, n.left), subtree_copy(t, n.right));
}

// Rebuild t with the subtree at `target` replaced by `repl`.
DecoratedTree replace_subtree(const DecoratedTree& t, int idx, int target,
                              const DecoratedTree& repl) {
  if (idx == target) return repl;
  const auto& n = t.node(idx);
  if (t.is_leaf(idx)) return DecoratedTree::make_leaf(n.leaf);
  return DecoratedTree::combine(n.decor, replace_subtree(t, n.left, target, repl),
                                replace_subtree(t, n.right, target, repl));
}

void collect_internal(const DecoratedTree& t, int idx, std::vector<int>& out) {
  if (t.is_leaf(idx)) return;
  out.push_back(idx);
  collect_internal(t, t.node(idx).left, out);
  collect_internal(t, t.node(idx).right, out);
}

} // namespace

std::vector<DecoratedTree> rewrite_neighbors(const DecoratedTree& t) {
  std::vector<DecoratedTree> out;
  std::vector<int> internals;
  collect_internal(t, t.root(), internals);
  for (int v : internals) {
    const auto& n = t.node(v);
    // left-combed at v: (x a y) b z  ->  x c (y d z)
    if (!t.is_leaf(n.left)) {
      const auto& ln = t.node(n.left);
      for (const Relation& rel : kRelations) {
        if (ln.decor == rel.a && n.decor == rel.b) {
          DecoratedTree x = subtree_copy(t, ln.left);
          DecoratedTree y = subtree_copy(t, ln.right);
          DecoratedTree z = subtree_copy(t, n.right);
          DecoratedTree repl = DecoratedTree::combine(
              rel.c, x, DecoratedTree::combine(rel.d, y, z));
          out.push_back(replace_subtree(t, t.root(), v, repl));
        }
      }
    }
    // right-combed at v: x c (y d z)  ->  (x a y) b z
    if (!t.is_leaf(n.right)) {
      const auto& rn = t.node(n.right);
      for (const Relation& rel : kRelations) {
        if (n.decor == rel.c && rn.decor == rel.d) {
          DecoratedTree x = subtree_copy(t, n.left);
          DecoratedTree y = subtree_copy(t, rn.left);
          DecoratedTree z = subtree_copy(t, rn.right);
          DecoratedTree repl = DecoratedTree::combine(
              rel.b, DecoratedTree::combine(rel.a, x, y), z);
          out.push_back(replace_subtree(t, t.root(), v, repl));
        }
      }
    }
  }
  return out;
}

bool rewrite_equiv(const DecoratedTree& t1, const DecoratedTree& t2) {
  if (t1.leaf_labels() != t2.leaf_labels())
    throw std::invalid_argument("trees have different leaf sequences");
  std::string goal = t2.to_string();
  std::set<std::string> seen{t1.to_string()};
  std::deque<DecoratedTree> queue{t1};
  while (!queue.empty()) {
    DecoratedTree cur = queue.front();
    queue.pop_front();
    if (cur.to_string() == goal) return true;
    for (const DecoratedTree& next : rewrite_neighbors(cur)) {
      if (seen.insert(next.to_string()).second) queue.push_back(next);
    }
  }
  return false;
}

DiasClass graft(const DiasClass& outer, int at, const DiasClass& inner, int inner_strings) {
  if (std::find(outer.leaves.begin(), outer.leaves.end(), at) == outer.leaves.end())
    throw std::invalid_argument("graft point is not a leaf of the outer class");
  int shift = inner_strings - 1;
  DiasClass out;
  for (int v : outer.leaves) {
    if (v == at) {
      for (int w : inner.leaves) out.leaves.push_back(at + w - 1);
    } else {
      out.leaves.push_back(v < at ? v : v + shift);
    }
  }
  std::sort(out.leaves.begin(), out.leaves.end());
  out.trunk = outer.trunk == at ? at + inner.trunk - 1
                                : (outer.trunk < at ? outer.trunk : outer.trunk + shift);
  return out;
}

namespace {

DecoratedTree relabel_tree(const DecoratedTree& t, int idx, int at, int shift) {
  if (t.is_leaf(idx)) {
    int v = t.node(idx).leaf;
    return DecoratedTree::make_leaf(v < at ? v : v + shift);
  }
  const auto& n = t.node(idx);
  return DecoratedTree::combine(n.decor, relabel_tree(t, n.left, at, shift),
                                relabel_tree(t, n.right, at, shift));
}

DecoratedTree substitute_leaf(const DecoratedTree& t, int idx, int at,
                              const DecoratedTree& repl, int shift) {
  if (t.is_leaf(idx)) {
    int v = t.node(idx).leaf;
    if (v == at) return repl;
    return DecoratedTree::make_leaf(v < at ? v : v + shift);
  }
  const auto& n = t.node(idx);
  return DecoratedTree::combine(n.decor, substitute_leaf(t, n.left, at, repl, shift),
                                substitute_leaf(t, n.right, at, repl, shift));
}

} // namespace

DecoratedTree graft_trees(const DecoratedTree& outer, int at, const DecoratedTree& inner,
                          int inner_strings) {
  std::vector<int> labels = outer.leaf_labels();
  if (std::find(labels.begin(), labels.end(), at) == labels.end())
    throw std::invalid_argument("graft point is not a leaf of the outer tree");
  int shift = inner_strings - 1;
  // inner label s -> at + s - 1
  DecoratedTree shifted_inner = relabel_tree(inner, inner.root(), 1, at - 1);
  return substitute_leaf(outer, outer.root(), at, shifted_inner, shift);
}

} // namespace tangles

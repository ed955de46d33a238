#include "tangles/trees.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tangles {

DecoratedTree DecoratedTree::make_leaf(int label) {
  if (label < 1) throw std::invalid_argument("leaf label must be positive");
  DecoratedTree t;
  t.nodes_.push_back(Node{label, Decor::Left, -1, -1});
  t.root_ = 0;
  return t;
}

int DecoratedTree::clone_into(const DecoratedTree& src, int idx) {
  const Node& n = src.node(idx);
  if (n.leaf >= 1) {
    nodes_.push_back(Node{n.leaf, Decor::Left, -1, -1});
    return static_cast<int>(nodes_.size()) - 1;
  }
  int l = clone_into(src, n.left);
  int r = clone_into(src, n.right);
  nodes_.push_back(Node{0, n.decor, l, r});
  return static_cast<int>(nodes_.size()) - 1;
}

DecoratedTree DecoratedTree::combine(Decor d, const DecoratedTree& l, const DecoratedTree& r) {
  DecoratedTree t;
  int li = t.clone_into(l, l.root());
  int ri = t.clone_into(r, r.root());
  t.nodes_.push_back(Node{0, d, li, ri});
  t.root_ = static_cast<int>(t.nodes_.size()) - 1;
  return t;
}

std::vector<int> DecoratedTree::leaf_labels() const {
  std::vector<int> out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int idx = stack.back();
    stack.pop_back();
    const Node& n = node(idx);
    if (n.leaf >= 1) {
      out.push_back(n.leaf);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return out;
}

int DecoratedTree::leaf_count() const {
  return static_cast<int>((nodes_.size() + 1) / 2);
}

std::string DecoratedTree::node_string(int idx) const {
  const Node& n = node(idx);
  if (n.leaf >= 1) return std::to_string(n.leaf);
  return "(" + node_string(n.left) + (n.decor == Decor::Left ? "<" : ">") +
         node_string(n.right) + ")";
}

std::string DecoratedTree::to_string() const { return node_string(root_); }

bool DecoratedTree::operator==(const DecoratedTree& o) const {
  return to_string() == o.to_string();
}

int spine_leaf(const DecoratedTree& t) {
  int idx = t.root();
  while (!t.is_leaf(idx)) {
    const auto& n = t.node(idx);
    idx = n.decor == Decor::Left ? n.left : n.right;
  }
  return t.node(idx).leaf;
}

namespace {

// All binary shapes over labels[lo..hi], split position increasing.
std::vector<DecoratedTree> shapes_over(const std::vector<int>& labels, int lo, int hi) {
  std::vector<DecoratedTree> out;
  if (lo == hi) {
    out.push_back(DecoratedTree::make_leaf(labels[static_cast<size_t>(lo)]));
    return out;
  }
  for (int k = lo; k < hi; ++k) {
    auto lefts = shapes_over(labels, lo, k);
    auto rights = shapes_over(labels, k + 1, hi);
    for (const auto& l : lefts)
      for (const auto& r : rights)
        out.push_back(DecoratedTree::combine(Decor::Left, l, r));
  }
  return out;
}

void preorder_internal(const DecoratedTree& t, int idx, std::vector<int>& out) {
  if (t.is_leaf(idx)) return;
  out.push_back(idx);
  preorder_internal(t, t.node(idx).left, out);
  preorder_internal(t, t.node(idx).right, out);
}

DecoratedTree with_decoration(const DecoratedTree& shape, unsigned bits) {
  std::vector<int> order;
  preorder_internal(shape, shape.root(), order);
  // Rebuild with decorations taken from the bit pattern.
  struct Builder {
    const DecoratedTree& src;
    const std::vector<int>& order;
    unsigned bits;
    DecoratedTree build(int idx) const {
      if (src.is_leaf(idx)) return DecoratedTree::make_leaf(src.node(idx).leaf);
      size_t pos = static_cast<size_t>(
          std::find(order.begin(), order.end(), idx) - order.begin());
      Decor d = (bits >> pos) & 1u ? Decor::Right : Decor::Left;
      return DecoratedTree::combine(d, build(src.node(idx).left), build(src.node(idx).right));
    }
  };
  return Builder{shape, order, bits}.build(shape.root());
}

} // namespace

std::vector<DecoratedTree> enumerate_trees(const std::vector<int>& I, int j) {
  std::vector<int> labels = I;
  for (int v : labels)
    if (v == j) throw std::invalid_argument("trunk index occurs in the leaf set");
  labels.push_back(j);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("leaf indices must be distinct");

  std::vector<DecoratedTree> out;
  auto shapes = shapes_over(labels, 0, static_cast<int>(labels.size()) - 1);
  unsigned r = static_cast<unsigned>(labels.size()) - 1;
  for (const auto& shape : shapes) {
    for (unsigned bits = 0; bits < (1u << r); ++bits) {
      DecoratedTree t = with_decoration(shape, bits);
      if (spine_leaf(t) == j) out.push_back(t);
    }
  }
  return out;
}

ArrowTemplate tree_to_template(const DecoratedTree& t) {
  std::vector<int> labels = t.leaf_labels();
  int n = *std::max_element(labels.begin(), labels.end());

  // Per string: the upward path from its leaf. While the string stays on
  // the primary side it collects heads (leaf-nearest first); the first
  // vertex reaching it from the secondary side plants the tail and cuts
  // the string.
  struct PendingEnd {
    int vertex; // internal node index
    EndRole role;
  };
  std::vector<std::vector<PendingEnd>> per_string(static_cast<size_t>(n));

  struct Walk {
    const DecoratedTree& t;
    std::vector<std::vector<PendingEnd>>& per_string;
    // Returns the spine leaf of the subtree.
    int run(int idx) const {
      if (t.is_leaf(idx)) return t.node(idx).leaf;
      const auto& nd = t.node(idx);
      int left_spine = run(nd.left);
      int right_spine = run(nd.right);
      int primary = nd.decor == Decor::Left ? left_spine : right_spine;
      int secondary = nd.decor == Decor::Left ? right_spine : left_spine;
      per_string[static_cast<size_t>(secondary - 1)].push_back({idx, EndRole::Tail});
      per_string[static_cast<size_t>(primary - 1)].push_back({idx, EndRole::Head});
      return primary;
    }
  };
  Walk{t, per_string}.run(t.root());

  // Post-order recursion visits a string's vertices from the leaf upward,
  // so each per-string list is already heads (ascending) then the tail.
  ArrowTemplate a;
  a.n = n;
  a.strings.resize(static_cast<size_t>(n));
  std::map<int, int> vertex_to_arrow;
  struct RawEnd {
    int vertex;
    EndRole role;
    EndpointRef at;
  };
  std::vector<RawEnd> raw;
  for (int s = 1; s <= n; ++s) {
    const auto& pend = per_string[static_cast<size_t>(s - 1)];
    for (int p = 0; p < static_cast<int>(pend.size()); ++p)
      raw.push_back({pend[static_cast<size_t>(p)].vertex,
                     pend[static_cast<size_t>(p)].role, EndpointRef{s, p}});
  }
  for (const RawEnd& e : raw)
    if (!vertex_to_arrow.count(e.vertex)) {
      int id = static_cast<int>(a.arrows.size());
      vertex_to_arrow[e.vertex] = id;
      a.arrows.push_back({});
    }
  for (const RawEnd& e : raw) {
    int id = vertex_to_arrow[e.vertex];
    if (e.role == EndRole::Tail)
      a.arrows[static_cast<size_t>(id)].tail = e.at;
    else
      a.arrows[static_cast<size_t>(id)].head = e.at;
    a.strings[static_cast<size_t>(e.at.string - 1)].push_back({id, e.role});
  }
  return a;
}

ArrowTemplate ArrowTemplate::extended_to(int m) const {
  if (m < n) throw std::invalid_argument("cannot shrink a template");
  ArrowTemplate out = *this;
  out.n = m;
  out.strings.resize(static_cast<size_t>(m));
  return out;
}

int template_sign(const ArrowTemplate& a) {
  int q = 0;
  for (const auto& ar : a.arrows)
    if (ar.head.string > ar.tail.string) ++q;
  return q % 2 == 0 ? 1 : -1;
}

int template_sign(const DecoratedTree& t) { return template_sign(tree_to_template(t)); }

bool is_tree_template(const ArrowTemplate& a, const std::vector<int>& I, int j) {
  std::vector<int> tails_on(static_cast<size_t>(a.n) + 1, 0);
  for (const auto& ar : a.arrows) {
    if (ar.tail.string == ar.head.string) return false;
    ++tails_on[static_cast<size_t>(ar.tail.string)];
    bool head_ok = ar.head.string == j ||
                   std::find(I.begin(), I.end(), ar.head.string) != I.end();
    if (!head_ok) return false;
  }
  for (int s = 1; s <= a.n; ++s) {
    bool in_I = std::find(I.begin(), I.end(), s) != I.end();
    if (tails_on[static_cast<size_t>(s)] != (in_I ? 1 : 0)) return false;
    bool tail_seen = false;
    for (const auto& e : a.strings[static_cast<size_t>(s - 1)]) {
      if (e.role == EndRole::Tail)
        tail_seen = true;
      else if (tail_seen)
        return false; // head after the tail
    }
  }
  return true;
}

std::string serialize_template(const ArrowTemplate& a) {
  // Arrows are renamed by first appearance along the strings, so equal
  // templates dump identically regardless of internal numbering.
  std::map<int, int> renumber;
  for (int s = 1; s <= a.n; ++s)
    for (const auto& e : a.strings[static_cast<size_t>(s - 1)])
      renumber.try_emplace(e.arrow, static_cast<int>(renumber.size()) + 1);
  std::ostringstream out;
  out << "template 1\n";
  out << "strings " << a.n << "\n";
  out << "arrows";
  for (size_t k = 0; k < a.arrows.size(); ++k) out << " a" << k + 1;
  out << "\n";
  for (int s = 1; s <= a.n; ++s) {
    out << "string " << s << ":";
    for (const auto& e : a.strings[static_cast<size_t>(s - 1)])
      out << " a" << renumber.at(e.arrow) << (e.role == EndRole::Tail ? ".t" : ".h");
    out << "\n";
  }
  return out.str();
}

} // namespace tangles

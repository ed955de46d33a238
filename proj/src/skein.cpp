#include "tangles/skein.hpp"

#include <algorithm>
#include <stdexcept>

#include "tangles/checked.hpp"
#include "tangles/pairing.hpp"

namespace tangles {

GaussDiagram switch_crossing(const GaussDiagram& g, const std::string& label) {
  const auto& target = g.arrow(label);
  (void)target;
  std::vector<std::vector<StringEnd>> strings;
  for (int s = 1; s <= g.string_count(); ++s) {
    std::vector<StringEnd> seq = g.string_sequence(s);
    for (StringEnd& e : seq)
      if (e.label == label)
        e.role = e.role == EndRole::Tail ? EndRole::Head : EndRole::Tail;
    strings.push_back(std::move(seq));
  }
  std::map<std::string, int> signs;
  for (const auto& [l, a] : g.arrows()) signs[l] = l == label ? -a.sign : a.sign;
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), std::move(signs));
}

GaussDiagram smooth_oriented(const GaussDiagram& g, const std::string& label) {
  const auto& a = g.arrow(label);
  int u = a.tail.string, v = a.head.string;
  if (u == v)
    throw std::invalid_argument("cannot smooth a self-crossing (would close a component)");
  int p = a.tail.position, q = a.head.position;

  std::vector<std::vector<StringEnd>> strings;
  for (int s = 1; s <= g.string_count(); ++s) strings.push_back(g.string_sequence(s));
  const auto& su = strings[static_cast<size_t>(u - 1)];
  const auto& sv = strings[static_cast<size_t>(v - 1)];
  std::vector<StringEnd> new_u(su.begin(), su.begin() + p);
  new_u.insert(new_u.end(), sv.begin() + q + 1, sv.end());
  std::vector<StringEnd> new_v(sv.begin(), sv.begin() + q);
  new_v.insert(new_v.end(), su.begin() + p + 1, su.end());
  strings[static_cast<size_t>(u - 1)] = std::move(new_u);
  strings[static_cast<size_t>(v - 1)] = std::move(new_v);

  std::map<std::string, int> signs;
  for (const auto& [l, ar] : g.arrows())
    if (l != label) signs[l] = ar.sign;
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), std::move(signs));
}

GaussDiagram smooth_infinity(const GaussDiagram& g, const std::string& label, int ik) {
  const auto& a = g.arrow(label);
  if (a.tail.string != ik && a.head.string != ik)
    throw std::invalid_argument("string " + std::to_string(ik) +
                                " carries no end of arrow " + label);
  return smooth_oriented(reverse_orientation(g, ik), label);
}

SkeinQuadruple make_skein_quadruple(const GaussDiagram& g, const std::string& label,
                                    int ik) {
  const auto& a = g.arrow(label);
  if (a.tail.string == a.head.string)
    throw std::invalid_argument("the crossing must join two distinct strings");
  int other = a.tail.string == ik ? a.head.string : a.tail.string;
  if (a.tail.string != ik && a.head.string != ik)
    throw std::invalid_argument("string " + std::to_string(ik) +
                                " carries no end of arrow " + label);
  SkeinQuadruple q;
  q.label = label;
  q.ik = ik;
  q.j = other;
  GaussDiagram switched = switch_crossing(g, label);
  if (a.sign > 0) {
    q.plus = g;
    q.minus = std::move(switched);
  } else {
    q.plus = std::move(switched);
    q.minus = g;
  }
  q.zero = smooth_oriented(g, label);
  q.infinity = smooth_infinity(g, label, ik);
  return q;
}

SkeinReport check_skein(const GaussDiagram& g, const std::string& label,
                        const std::vector<int>& I, int j) {
  const auto& a = g.arrow(label);
  if (I.empty()) throw std::invalid_argument("the index set must be nonempty");
  for (size_t t = 0; t < I.size(); ++t) {
    if (I[t] <= j) throw std::invalid_argument("hypothesis needs j below every index of I");
    if (t > 0 && I[t] <= I[t - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  }
  int ik;
  {
    int s1 = a.tail.string, s2 = a.head.string;
    bool j1 = s1 == j, j2 = s2 == j;
    if (j1 == j2)
      throw std::invalid_argument("the crossing must join j and one index of I");
    ik = j1 ? s2 : s1;
  }
  auto pos = std::find(I.begin(), I.end(), ik);
  if (pos == I.end())
    throw std::invalid_argument("the crossing's other string is not in the index set");
  int k = static_cast<int>(pos - I.begin()) + 1;

  SkeinQuadruple q = make_skein_quadruple(g, label, ik);

  SkeinReport rep;
  rep.j = j;
  rep.ik = ik;
  rep.k = k;
  rep.I = I;

  rep.lhs = z_coefficient(q.plus, I, j) - z_coefficient(q.minus, I, j);

  std::vector<int> ik_minus(I.begin(), I.begin() + (k - 1));
  std::vector<int> ik_plus(I.begin() + k, I.end());
  rep.rhs_product = checked_mul(z_coefficient(q.infinity, ik_minus, j),
                                z_coefficient(q.zero, ik_plus, ik));
  rep.product_ok = rep.lhs == rep.rhs_product;

  rep.pm_agree = true;
  std::int64_t sum = 0;
  for (int m = 1; m <= k; ++m) {
    std::vector<int> im_minus(I.begin(), I.begin() + (m - 1));
    std::vector<int> im_plus;
    for (int t = m - 1; t < static_cast<int>(I.size()); ++t)
      if (t != k - 1) im_plus.push_back(I[static_cast<size_t>(t)]);
    std::int64_t left_plus = z_coefficient(q.plus, im_minus, j);
    std::int64_t left_minus = z_coefficient(q.minus, im_minus, j);
    if (left_plus != left_minus) rep.pm_agree = false;
    sum = checked_add(sum, checked_mul(left_plus, z_coefficient(q.zero, im_plus, ik)));
  }
  rep.rhs_sum = sum;
  rep.sum_ok = rep.lhs == rep.rhs_sum;
  return rep;
}

} // namespace tangles

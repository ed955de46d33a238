#include "tangles/magnus.hpp"

#include <algorithm>
#include <stdexcept>

#include "tangles/checked.hpp"

namespace tangles {

ReducedSeries ReducedSeries::one() {
  ReducedSeries s;
  s.add_term({}, 1);
  return s;
}

ReducedSeries ReducedSeries::generator(int i) {
  ReducedSeries s;
  s.add_term({i}, 1);
  return s;
}

ReducedSeries ReducedSeries::meridian(int i) {
  ReducedSeries s;
  s.add_term({}, 1);
  s.add_term({i}, 1);
  return s;
}

std::int64_t ReducedSeries::coefficient(const std::vector<int>& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? 0 : it->second;
}

void ReducedSeries::add_term(std::vector<int> word, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(std::move(word), coeff);
  if (!fresh) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

ReducedSeries ReducedSeries::operator+(const ReducedSeries& o) const {
  ReducedSeries out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

ReducedSeries ReducedSeries::operator-(const ReducedSeries& o) const {
  ReducedSeries out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

namespace {

bool square_free_concat(const std::vector<int>& a, const std::vector<int>& b,
                        int max_len, std::vector<int>& out) {
  if (static_cast<int>(a.size() + b.size()) > max_len) return false;
  for (int x : b)
    if (std::find(a.begin(), a.end(), x) != a.end()) return false;
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  return true;
}

} // namespace

ReducedSeries series_mul(const ReducedSeries& a, const ReducedSeries& b, int max_len) {
  ReducedSeries out;
  std::vector<int> word;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      if (square_free_concat(wa, wb, max_len, word))
        out.add_term(word, checked_mul(ca, cb));
  return out;
}

ReducedSeries series_inv(const ReducedSeries& a, int max_len) {
  std::int64_t c = a.constant_term();
  if (c != 1 && c != -1)
    throw std::invalid_argument("series is invertible only with constant term +1 or -1");
  // a = c (1 + cN) with N the nonconstant part, so 1/a = c sum (-cN)^k.
  ReducedSeries n = a;
  n.add_term({}, -c);
  ReducedSeries minus_cn;
  for (const auto& [w, k] : n.terms()) minus_cn.add_term(w, checked_mul(-c, k));
  ReducedSeries out = ReducedSeries::one();
  ReducedSeries power = ReducedSeries::one();
  for (int deg = 1; deg <= max_len; ++deg) {
    power = series_mul(power, minus_cn, max_len);
    if (power.terms().empty()) break;
    out = out + power;
  }
  if (c == -1) {
    ReducedSeries neg;
    for (const auto& [w, k] : out.terms()) neg.add_term(w, -k);
    out = neg;
  }
  return out;
}

namespace {

struct HeadSite {
  int position;       // position of the head on its string
  int arc_after;      // index of the arc that starts past this head
  int over_string;    // string carrying the arrow's tail
  int over_arc;       // arc of that string containing the tail
  int sign;
};

// Heads on each string in order, each annotated with its over-arc.
std::vector<std::vector<HeadSite>> head_sites(const GaussDiagram& g) {
  int n = g.string_count();
  // Arc of an endpoint = number of heads strictly before it on its string.
  auto arc_of = [&](const EndpointRef& e) {
    const auto& seq = g.string_sequence(e.string);
    int arcs = 0;
    for (int p = 0; p < e.position; ++p)
      if (seq[static_cast<size_t>(p)].role == EndRole::Head) ++arcs;
    return arcs;
  };
  std::vector<std::vector<HeadSite>> out(static_cast<size_t>(n));
  for (int s = 1; s <= n; ++s) {
    const auto& seq = g.string_sequence(s);
    int arc = 0;
    for (int p = 0; p < static_cast<int>(seq.size()); ++p) {
      const StringEnd& e = seq[static_cast<size_t>(p)];
      if (e.role != EndRole::Head) continue;
      const auto& ar = g.arrow(e.label);
      out[static_cast<size_t>(s - 1)].push_back(
          {p, arc + 1, ar.tail.string, arc_of(ar.tail), ar.sign});
      ++arc;
    }
  }
  return out;
}

} // namespace

ArcTable arc_meridians(const GaussDiagram& g, bool reverse_sweep) {
  int n = g.string_count();
  auto sites = head_sites(g);

  ArcTable table;
  table.meridians.resize(static_cast<size_t>(n));
  for (int s = 1; s <= n; ++s)
    table.meridians[static_cast<size_t>(s - 1)].assign(
        sites[static_cast<size_t>(s - 1)].size() + 1, ReducedSeries::meridian(s));

  std::vector<int> order(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s)
    order[static_cast<size_t>(s)] = reverse_sweep ? n - s : s + 1;

  // Sweep to a fixpoint. Each sweep settles one more degree of the length
  // filtration, so n sweeps suffice; exceeding the cap means a bug.
  for (int sweep = 1; sweep <= n + 2; ++sweep) {
    bool changed = false;
    for (int s : order) {
      auto& arcs = table.meridians[static_cast<size_t>(s - 1)];
      for (const HeadSite& h : sites[static_cast<size_t>(s - 1)]) {
        const ReducedSeries& w =
            table.meridians[static_cast<size_t>(h.over_string - 1)]
                           [static_cast<size_t>(h.over_arc)];
        const ReducedSeries& m = arcs[static_cast<size_t>(h.arc_after - 1)];
        // Conjugation by the over-arc meridian, oriented by the sign:
        // next = w^-sign * m * w^sign.
        ReducedSeries winv = series_inv(w, n);
        const ReducedSeries& left = h.sign > 0 ? winv : w;
        const ReducedSeries& right = h.sign > 0 ? w : winv;
        ReducedSeries next = series_mul(series_mul(left, m, n), right, n);
        if (!(next == arcs[static_cast<size_t>(h.arc_after)])) {
          arcs[static_cast<size_t>(h.arc_after)] = std::move(next);
          changed = true;
        }
      }
    }
    table.sweeps_used = sweep;
    if (!changed) return table;
  }
  throw std::runtime_error("meridian iteration did not stabilize (convention bug)");
}

MagnusOracle::MagnusOracle(const GaussDiagram& g)
    : diagram_(g), table_(arc_meridians(g)) {}

ReducedSeries MagnusOracle::longitude(int j) const {
  int n = diagram_.string_count();
  ReducedSeries l = ReducedSeries::one();
  const auto& seq = diagram_.string_sequence(j);
  for (const StringEnd& e : seq) {
    if (e.role != EndRole::Head) continue;
    const auto& ar = diagram_.arrow(e.label);
    int over_arc = 0;
    {
      const auto& tseq = diagram_.string_sequence(ar.tail.string);
      for (int p = 0; p < ar.tail.position; ++p)
        if (tseq[static_cast<size_t>(p)].role == EndRole::Head) ++over_arc;
    }
    const ReducedSeries& w = table_.meridians[static_cast<size_t>(ar.tail.string - 1)]
                                             [static_cast<size_t>(over_arc)];
    l = series_mul(l, ar.sign > 0 ? w : series_inv(w, n), n);
  }
  return l;
}

std::int64_t MagnusOracle::mu(const std::vector<int>& I, int j) const {
  int n = diagram_.string_count();
  if (j < 1 || j > n) throw std::invalid_argument("trunk index out of range");
  for (size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 1 || I[k] > n) throw std::invalid_argument("index out of range");
    if (I[k] == j) throw std::invalid_argument("index set overlaps j");
    if (k > 0 && I[k] <= I[k - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  }
  return longitude(j).coefficient(I);
}

std::int64_t mu(const GaussDiagram& g, const std::vector<int>& I, int j) {
  return MagnusOracle(g).mu(I, j);
}

} // namespace tangles

#include "tangles/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tangles {

MoveKind MoveSite::kind() const {
  switch (data.index()) {
    case 0: return MoveKind::R1Insert;
    case 1: return MoveKind::R1Delete;
    case 2: return MoveKind::R2Insert;
    case 3: return MoveKind::R2Delete;
    default: return MoveKind::R3;
  }
}

std::string MoveSite::to_string() const {
  std::ostringstream out;
  if (auto* s = std::get_if<R1InsertSite>(&data)) {
    out << "R1-insert string " << s->string << " slot " << s->slot << " sign "
        << (s->sign > 0 ? "+" : "-") << (s->head_first ? " head-first" : " tail-first");
  } else if (auto* s = std::get_if<R1DeleteSite>(&data)) {
    out << "R1-delete " << s->label;
  } else if (auto* s = std::get_if<R2InsertSite>(&data)) {
    out << "R2-insert tails " << s->tail_string << "@" << s->tail_slot << " heads "
        << s->head_string << "@" << s->head_slot << " sign "
        << (s->first_sign > 0 ? "+" : "-") << (s->heads_reversed ? " reversed" : "");
  } else if (auto* s = std::get_if<R2DeleteSite>(&data)) {
    out << "R2-delete " << s->label_a << "," << s->label_b;
  } else if (auto* s = std::get_if<R3Site>(&data)) {
    out << "R3 " << s->x << "," << s->y << "," << s->z << (s->mirrored ? " mirrored" : "");
  }
  return out.str();
}

namespace {

std::vector<std::vector<StringEnd>> copy_strings(const GaussDiagram& g) {
  std::vector<std::vector<StringEnd>> out;
  for (int s = 1; s <= g.string_count(); ++s) out.push_back(g.string_sequence(s));
  return out;
}

std::map<std::string, int> copy_signs(const GaussDiagram& g) {
  std::map<std::string, int> out;
  for (const auto& [label, a] : g.arrows()) out[label] = a.sign;
  return out;
}

void check_slot(const GaussDiagram& g, int string, int slot) {
  if (string < 1 || string > g.string_count())
    throw std::invalid_argument("string index out of range");
  int len = static_cast<int>(g.string_sequence(string).size());
  if (slot < 0 || slot > len) throw std::invalid_argument("slot out of range");
}

GaussDiagram apply_r1_insert(const GaussDiagram& g, const R1InsertSite& m) {
  check_slot(g, m.string, m.slot);
  if (m.sign != 1 && m.sign != -1) throw std::invalid_argument("bad sign");
  auto strings = copy_strings(g);
  auto signs = copy_signs(g);
  std::string label = g.fresh_label();
  auto& seq = strings[static_cast<size_t>(m.string - 1)];
  StringEnd first{label, m.head_first ? EndRole::Head : EndRole::Tail};
  StringEnd second{label, m.head_first ? EndRole::Tail : EndRole::Head};
  seq.insert(seq.begin() + m.slot, {first, second});
  signs[label] = m.sign;
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), std::move(signs));
}

GaussDiagram apply_r1_delete(const GaussDiagram& g, const R1DeleteSite& m) {
  const auto& a = g.arrow(m.label);
  if (a.tail.string != a.head.string ||
      std::abs(a.tail.position - a.head.position) != 1)
    throw std::invalid_argument("arrow " + m.label + " is not an isolated self-arrow");
  return remove_arrow(g, m.label);
}

GaussDiagram apply_r2_insert(const GaussDiagram& g, const R2InsertSite& m) {
  check_slot(g, m.tail_string, m.tail_slot);
  check_slot(g, m.head_string, m.head_slot);
  if (m.first_sign != 1 && m.first_sign != -1) throw std::invalid_argument("bad sign");
  auto strings = copy_strings(g);
  auto signs = copy_signs(g);
  std::string la, lb;
  for (int k = 1; lb.empty(); ++k) {
    std::string cand = "m" + std::to_string(k);
    if (g.has_arrow(cand)) continue;
    (la.empty() ? la : lb) = cand;
  }
  std::vector<StringEnd> tails{{la, EndRole::Tail}, {lb, EndRole::Tail}};
  std::vector<StringEnd> heads{{la, EndRole::Head}, {lb, EndRole::Head}};
  if (m.heads_reversed) std::swap(heads[0], heads[1]);
  if (m.tail_string != m.head_string) {
    auto& ts = strings[static_cast<size_t>(m.tail_string - 1)];
    ts.insert(ts.begin() + m.tail_slot, tails.begin(), tails.end());
    auto& hs = strings[static_cast<size_t>(m.head_string - 1)];
    hs.insert(hs.begin() + m.head_slot, heads.begin(), heads.end());
  } else {
    // Both pairs on one string. Slots refer to the original sequence; the
    // pair with the smaller slot goes first, tails first on a tie.
    auto& seq = strings[static_cast<size_t>(m.tail_string - 1)];
    if (m.tail_slot <= m.head_slot) {
      seq.insert(seq.begin() + m.head_slot, heads.begin(), heads.end());
      seq.insert(seq.begin() + m.tail_slot, tails.begin(), tails.end());
    } else {
      seq.insert(seq.begin() + m.tail_slot, tails.begin(), tails.end());
      seq.insert(seq.begin() + m.head_slot, heads.begin(), heads.end());
    }
  }
  signs[la] = m.first_sign;
  signs[lb] = -m.first_sign;
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), std::move(signs));
}

GaussDiagram apply_r2_delete(const GaussDiagram& g, const R2DeleteSite& m) {
  const auto& a = g.arrow(m.label_a);
  const auto& b = g.arrow(m.label_b);
  bool tails_ok = a.tail.string == b.tail.string &&
                  b.tail.position == a.tail.position + 1;
  bool heads_ok = a.head.string == b.head.string &&
                  std::abs(a.head.position - b.head.position) == 1;
  if (!tails_ok || !heads_ok || a.sign != -b.sign)
    throw std::invalid_argument("arrows " + m.label_a + "," + m.label_b +
                                " do not form a cancelling pair");
  return remove_arrow(remove_arrow(g, m.label_a), m.label_b);
}

GaussDiagram apply_r3(const GaussDiagram& g, const R3Site& m) {
  if (m.x == m.y || m.y == m.z || m.x == m.z)
    throw std::invalid_argument("the three arrows must be distinct");
  const auto& ax = g.arrow(m.x);
  const auto& ay = g.arrow(m.y);
  const auto& az = g.arrow(m.z);
  if (ax.sign != 1 || ay.sign != 1 || az.sign != 1)
    throw std::invalid_argument("pattern not present: signs must all be positive");

  // Fragments: (x.t y.t) (x.h z.t) (y.h z.h), adjacent in this order or
  // all three reversed.
  auto adjacent = [](const EndpointRef& a, const EndpointRef& b, bool reversed) {
    return a.string == b.string &&
           (reversed ? a.position == b.position + 1 : b.position == a.position + 1);
  };
  bool plain = adjacent(ax.tail, ay.tail, false) && adjacent(ax.head, az.tail, false) &&
               adjacent(ay.head, az.head, false);
  bool mirrored = adjacent(ax.tail, ay.tail, true) && adjacent(ax.head, az.tail, true) &&
                  adjacent(ay.head, az.head, true);
  if (!plain && !mirrored) throw std::invalid_argument("pattern not present");

  auto strings = copy_strings(g);
  auto swap_pair = [&](const EndpointRef& a, const EndpointRef& b) {
    auto& seq = strings[static_cast<size_t>(a.string - 1)];
    std::swap(seq[static_cast<size_t>(a.position)], seq[static_cast<size_t>(b.position)]);
  };
  swap_pair(ax.tail, ay.tail);
  swap_pair(ax.head, az.tail);
  swap_pair(ay.head, az.head);
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), copy_signs(g));
}

} // namespace

GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& m) {
  if (auto* s = std::get_if<R1InsertSite>(&m.data)) return apply_r1_insert(g, *s);
  if (auto* s = std::get_if<R1DeleteSite>(&m.data)) return apply_r1_delete(g, *s);
  if (auto* s = std::get_if<R2InsertSite>(&m.data)) return apply_r2_insert(g, *s);
  if (auto* s = std::get_if<R2DeleteSite>(&m.data)) return apply_r2_delete(g, *s);
  return apply_r3(g, std::get<R3Site>(m.data));
}

namespace {

void enumerate_r1_inserts(const GaussDiagram& g, std::vector<MoveSite>& out) {
  for (int s = 1; s <= g.string_count(); ++s) {
    int len = static_cast<int>(g.string_sequence(s).size());
    for (int slot = 0; slot <= len; ++slot)
      for (int sign : {1, -1})
        for (bool head_first : {false, true})
          out.push_back({R1InsertSite{s, slot, sign, head_first}});
  }
}

void enumerate_r1_deletes(const GaussDiagram& g, std::vector<MoveSite>& out) {
  for (const auto& [label, a] : g.arrows())
    if (a.tail.string == a.head.string &&
        std::abs(a.tail.position - a.head.position) == 1)
      out.push_back({R1DeleteSite{label}});
}

void enumerate_r2_inserts(const GaussDiagram& g, const EnumerateOptions& opts,
                          std::vector<MoveSite>& out) {
  int n = g.string_count();
  for (int s = 1; s <= n; ++s) {
    int len = static_cast<int>(g.string_sequence(s).size());
    for (int pt = 0; pt <= len; ++pt)
      for (int ph = 0; ph <= len; ++ph)
        for (int sign : {1, -1})
          for (bool rev : {false, true})
            out.push_back({R2InsertSite{s, pt, s, ph, sign, rev}});
  }
  if (n < 2 || opts.cross_string_samples <= 0) return;
  Rng rng(opts.sample_seed);
  std::set<std::tuple<int, int, int, int, int, bool>> seen;
  for (int k = 0; k < opts.cross_string_samples; ++k) {
    int st = rng.range(1, n);
    int sh = rng.range(1, n - 1);
    if (sh >= st) ++sh;
    int pt = rng.range(0, static_cast<int>(g.string_sequence(st).size()));
    int ph = rng.range(0, static_cast<int>(g.string_sequence(sh).size()));
    int sign = rng.sign();
    bool rev = rng.coin();
    if (seen.insert({st, pt, sh, ph, sign, rev}).second)
      out.push_back({R2InsertSite{st, pt, sh, ph, sign, rev}});
  }
}

void enumerate_r2_deletes(const GaussDiagram& g, std::vector<MoveSite>& out) {
  for (int s = 1; s <= g.string_count(); ++s) {
    const auto& seq = g.string_sequence(s);
    for (size_t p = 0; p + 1 < seq.size(); ++p) {
      if (seq[p].role != EndRole::Tail || seq[p + 1].role != EndRole::Tail) continue;
      const auto& a = g.arrow(seq[p].label);
      const auto& b = g.arrow(seq[p + 1].label);
      if (a.head.string == b.head.string &&
          std::abs(a.head.position - b.head.position) == 1 && a.sign == -b.sign)
        out.push_back({R2DeleteSite{seq[p].label, seq[p + 1].label}});
    }
  }
}

void enumerate_r3(const GaussDiagram& g, std::vector<MoveSite>& out) {
  auto end_at = [&](int s, int p) -> const StringEnd* {
    const auto& seq = g.string_sequence(s);
    if (p < 0 || p >= static_cast<int>(seq.size())) return nullptr;
    return &seq[static_cast<size_t>(p)];
  };
  for (const auto& [x, ax] : g.arrows()) {
    if (ax.sign != 1) continue;
    for (bool mirrored : {false, true}) {
      int dir = mirrored ? -1 : 1;
      const StringEnd* zt = end_at(ax.head.string, ax.head.position + dir);
      if (!zt || zt->role != EndRole::Tail || zt->label == x) continue;
      const StringEnd* yt = end_at(ax.tail.string, ax.tail.position + dir);
      if (!yt || yt->role != EndRole::Tail || yt->label == x || yt->label == zt->label)
        continue;
      const auto& ay = g.arrow(yt->label);
      const auto& az = g.arrow(zt->label);
      if (ay.sign != 1 || az.sign != 1) continue;
      if (az.head.string != ay.head.string ||
          az.head.position != ay.head.position + dir)
        continue;
      out.push_back({R3Site{x, yt->label, zt->label, mirrored}});
    }
  }
}

} // namespace

std::vector<MoveSite> enumerate_moves(const GaussDiagram& g, MoveKind kind,
                                      const EnumerateOptions& opts) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1Insert: enumerate_r1_inserts(g, out); break;
    case MoveKind::R1Delete: enumerate_r1_deletes(g, out); break;
    case MoveKind::R2Insert: enumerate_r2_inserts(g, opts, out); break;
    case MoveKind::R2Delete: enumerate_r2_deletes(g, out); break;
    case MoveKind::R3: enumerate_r3(g, out); break;
  }
  return out;
}

GaussDiagram random_diagram(int n, int m, Rng& rng) {
  if (n < 1) throw std::invalid_argument("string count must be positive");
  if (m < 0) throw std::invalid_argument("arrow count must be nonnegative");
  std::vector<std::vector<StringEnd>> strings(static_cast<size_t>(n));
  std::map<std::string, int> signs;
  for (int k = 1; k <= m; ++k) {
    std::string label = "a" + std::to_string(k);
    int ts = rng.range(1, n);
    auto& tseq = strings[static_cast<size_t>(ts - 1)];
    tseq.insert(tseq.begin() + rng.range(0, static_cast<int>(tseq.size())),
                {label, EndRole::Tail});
    int hs = rng.range(1, n);
    auto& hseq = strings[static_cast<size_t>(hs - 1)];
    hseq.insert(hseq.begin() + rng.range(0, static_cast<int>(hseq.size())),
                {label, EndRole::Head});
    signs[label] = rng.sign();
  }
  return GaussDiagram::from_parts(n, std::move(strings), std::move(signs));
}

GaussDiagram random_diagram(int n, int m, std::uint64_t seed) {
  Rng rng(seed);
  return random_diagram(n, m, rng);
}

} // namespace tangles

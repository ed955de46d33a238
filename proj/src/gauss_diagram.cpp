#include "tangles/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace tangles {

GaussDiagram::GaussDiagram(int n) : n_(n), strings_(static_cast<size_t>(n)) {
  if (n < 1) throw std::invalid_argument("string count must be positive");
}

GaussDiagram GaussDiagram::from_parts(int n,
                                      std::vector<std::vector<StringEnd>> strings,
                                      std::map<std::string, int> signs) {
  if (n < 1) throw std::invalid_argument("string count must be positive");
  if (static_cast<int>(strings.size()) != n)
    throw std::invalid_argument("string sequence count does not match n");

  GaussDiagram g;
  g.n_ = n;
  g.strings_ = std::move(strings);

  struct Seen {
    bool tail = false, head = false;
    EndpointRef tail_at, head_at;
  };
  std::map<std::string, Seen> seen;
  for (int s = 1; s <= n; ++s) {
    const auto& seq = g.strings_[static_cast<size_t>(s - 1)];
    for (int p = 0; p < static_cast<int>(seq.size()); ++p) {
      const StringEnd& e = seq[static_cast<size_t>(p)];
      auto it = signs.find(e.label);
      if (it == signs.end())
        throw std::invalid_argument("label " + e.label + ": not declared");
      Seen& sn = seen[e.label];
      if (e.role == EndRole::Tail) {
        if (sn.tail) throw std::invalid_argument("label " + e.label + ": two tails");
        sn.tail = true;
        sn.tail_at = EndpointRef{s, p};
      } else {
        if (sn.head) throw std::invalid_argument("label " + e.label + ": two heads");
        sn.head = true;
        sn.head_at = EndpointRef{s, p};
      }
    }
  }
  for (const auto& [label, sign] : signs) {
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("label " + label + ": sign must be +1 or -1");
    auto it = seen.find(label);
    if (it == seen.end() || !it->second.tail || !it->second.head)
      throw std::invalid_argument("label " + label + ": missing tail or head");
    g.arrows_[label] = Arrow{it->second.tail_at, it->second.head_at, sign};
  }
  return g;
}

const std::vector<StringEnd>& GaussDiagram::string_sequence(int s) const {
  if (s < 1 || s > n_) throw std::invalid_argument("string index out of range");
  return strings_[static_cast<size_t>(s - 1)];
}

const GaussDiagram::Arrow& GaussDiagram::arrow(const std::string& label) const {
  auto it = arrows_.find(label);
  if (it == arrows_.end()) throw std::invalid_argument("unknown arrow label " + label);
  return it->second;
}

bool GaussDiagram::has_arrow(const std::string& label) const {
  return arrows_.count(label) != 0;
}

std::string GaussDiagram::fresh_label(const std::string& prefix) const {
  for (int k = 1;; ++k) {
    std::string cand = prefix + std::to_string(k);
    if (!arrows_.count(cand)) return cand;
  }
}

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

} // namespace

GaussDiagram parse_gauss(std::string_view text) {
  // Collect logical lines: strip comments, skip blanks, remember numbers.
  std::vector<std::pair<int, std::string>> lines;
  {
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        lines.emplace_back(lineno, line);
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  size_t i = 0;
  auto need_line = [&](const char* what) -> const std::pair<int, std::string>& {
    if (i >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back().first;
      throw ParseError(last, std::string("unexpected end of input, expected ") + what);
    }
    return lines[i++];
  };

  {
    const auto& [no, line] = need_line("`gauss 1` header");
    if (tokenize(line) != std::vector<std::string>{"gauss", "1"})
      throw ParseError(no, "expected `gauss 1` header");
  }

  int n = 0;
  {
    const auto& [no, line] = need_line("`strings <n>`");
    auto toks = tokenize(line);
    if (toks.size() != 2 || toks[0] != "strings")
      throw ParseError(no, "expected `strings <n>`");
    try {
      n = std::stoi(toks[1]);
    } catch (...) {
      throw ParseError(no, "bad string count `" + toks[1] + "`");
    }
    if (n < 1) throw ParseError(no, "string count must be positive");
  }

  std::map<std::string, int> signs;
  {
    const auto& [no, line] = need_line("`arrows ...`");
    auto toks = tokenize(line);
    if (toks.empty() || toks[0] != "arrows")
      throw ParseError(no, "expected `arrows ...`");
    for (size_t k = 1; k < toks.size(); ++k) {
      const std::string& t = toks[k];
      auto colon = t.find(':');
      if (colon == std::string::npos || colon + 2 != t.size() ||
          (t[colon + 1] != '+' && t[colon + 1] != '-'))
        throw ParseError(no, "bad arrow declaration `" + t + "`, expected <label>:<+|->");
      std::string label = t.substr(0, colon);
      if (!valid_label(label))
        throw ParseError(no, "bad label `" + label + "`, expected [a-z0-9_]+");
      if (signs.count(label))
        throw ParseError(no, "duplicate arrow label `" + label + "`");
      signs[label] = t[colon + 1] == '+' ? 1 : -1;
    }
  }

  std::vector<std::vector<StringEnd>> strings(static_cast<size_t>(n));
  struct RoleSeen {
    bool tail = false, head = false;
  };
  std::map<std::string, RoleSeen> roles;
  for (int k = 1; k <= n; ++k) {
    const auto& [no, line] = need_line("`string <k>: ...`");
    auto toks = tokenize(line);
    if (toks.size() < 2 || toks[0] != "string" || toks[1] != std::to_string(k) + ":")
      throw ParseError(no, "expected `string " + std::to_string(k) + ": ...`");
    for (size_t t = 2; t < toks.size(); ++t) {
      const std::string& e = toks[t];
      auto dot = e.rfind('.');
      if (dot == std::string::npos || dot + 2 != e.size() ||
          (e[dot + 1] != 't' && e[dot + 1] != 'h'))
        throw ParseError(no, "bad endpoint `" + e + "`, expected <label>.<t|h>");
      std::string label = e.substr(0, dot);
      if (!signs.count(label))
        throw ParseError(no, "label " + label + ": not declared on the arrows line");
      RoleSeen& r = roles[label];
      if (e[dot + 1] == 't') {
        if (r.tail) throw ParseError(no, "label " + label + ": two tails");
        r.tail = true;
        strings[static_cast<size_t>(k - 1)].push_back({label, EndRole::Tail});
      } else {
        if (r.head) throw ParseError(no, "label " + label + ": two heads");
        r.head = true;
        strings[static_cast<size_t>(k - 1)].push_back({label, EndRole::Head});
      }
    }
  }
  if (i < lines.size())
    throw ParseError(lines[i].first, "unexpected trailing content");
  for (const auto& [label, r] : roles)
    (void)label, (void)r;
  for (const auto& [label, sign] : signs) {
    (void)sign;
    auto it = roles.find(label);
    if (it == roles.end() || !it->second.tail || !it->second.head)
      throw ParseError(lines.back().first,
                       "label " + label + ": missing tail or head on the string lines");
  }
  return GaussDiagram::from_parts(n, std::move(strings), std::move(signs));
}

std::string serialize_gauss(const GaussDiagram& g) {
  std::ostringstream out;
  out << "gauss 1\n";
  out << "strings " << g.string_count() << "\n";
  out << "arrows";
  for (const auto& [label, a] : g.arrows())
    out << " " << label << ":" << (a.sign > 0 ? '+' : '-');
  out << "\n";
  for (int s = 1; s <= g.string_count(); ++s) {
    out << "string " << s << ":";
    for (const StringEnd& e : g.string_sequence(s))
      out << " " << e.label << (e.role == EndRole::Tail ? ".t" : ".h");
    out << "\n";
  }
  return out.str();
}

GaussDiagram braid_to_gauss(int n, const std::vector<int>& word) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
  std::vector<std::vector<StringEnd>> strings(static_cast<size_t>(n));
  std::map<std::string, int> signs;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1); // perm[p] = string currently at position p+1

  int k = 0;
  for (int w : word) {
    ++k;
    int pos = std::abs(w);
    if (pos < 1 || pos > n - 1)
      throw std::invalid_argument("braid letter " + std::to_string(w) + " out of range");
    int upper = perm[static_cast<size_t>(pos - 1)];
    int lower = perm[static_cast<size_t>(pos)];
    std::string label = "c" + std::to_string(k);
    int over = w > 0 ? upper : lower;
    int under = w > 0 ? lower : upper;
    signs[label] = w > 0 ? 1 : -1;
    strings[static_cast<size_t>(over - 1)].push_back({label, EndRole::Tail});
    strings[static_cast<size_t>(under - 1)].push_back({label, EndRole::Head});
    std::swap(perm[static_cast<size_t>(pos - 1)], perm[static_cast<size_t>(pos)]);
  }
  return GaussDiagram::from_parts(n, std::move(strings), std::move(signs));
}

std::pair<int, std::vector<int>> parse_braid(std::string_view text) {
  std::string body;
  int lineno = 0;
  {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        if (!body.empty()) throw ParseError(lineno, "unexpected trailing content");
        body = line;
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (body.empty()) throw ParseError(1, "empty braid input");
  std::istringstream iss(body);
  std::string first;
  iss >> first;
  if (first == "braid") iss >> first;
  if (first.empty() || first.back() != ':')
    throw ParseError(1, "expected `braid <n>: <letters>`");
  int n = 0;
  try {
    n = std::stoi(first.substr(0, first.size() - 1));
  } catch (...) {
    throw ParseError(1, "bad strand count `" + first + "`");
  }
  std::vector<int> word;
  std::string tok;
  while (iss >> tok) {
    try {
      word.push_back(std::stoi(tok));
    } catch (...) {
      throw ParseError(1, "bad braid letter `" + tok + "`");
    }
    if (word.back() == 0) throw ParseError(1, "braid letter must be nonzero");
  }
  return {n, word};
}

GaussDiagram reverse_orientation(const GaussDiagram& g, int s) {
  if (s < 1 || s > g.string_count())
    throw std::invalid_argument("string index out of range");
  std::vector<std::vector<StringEnd>> strings;
  for (int k = 1; k <= g.string_count(); ++k) strings.push_back(g.string_sequence(k));
  auto& seq = strings[static_cast<size_t>(s - 1)];
  std::reverse(seq.begin(), seq.end());
  std::map<std::string, int> signs;
  for (const auto& [label, a] : g.arrows()) {
    int ends_on_s = (a.tail.string == s ? 1 : 0) + (a.head.string == s ? 1 : 0);
    signs[label] = ends_on_s == 1 ? -a.sign : a.sign;
  }
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), std::move(signs));
}

GaussDiagram relabel_strings(const GaussDiagram& g, const std::vector<int>& perm) {
  int n = g.string_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size does not match string count");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || hit[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1..n");
    hit[static_cast<size_t>(v - 1)] = true;
  }
  std::vector<std::vector<StringEnd>> strings;
  strings.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k)
    strings.push_back(g.string_sequence(perm[static_cast<size_t>(k - 1)]));
  std::map<std::string, int> signs;
  for (const auto& [label, a] : g.arrows()) signs[label] = a.sign;
  return GaussDiagram::from_parts(n, std::move(strings), std::move(signs));
}

GaussDiagram reverse_all_arrows(const GaussDiagram& g) {
  std::vector<std::vector<StringEnd>> strings;
  for (int k = 1; k <= g.string_count(); ++k) {
    std::vector<StringEnd> seq = g.string_sequence(k);
    for (StringEnd& e : seq)
      e.role = e.role == EndRole::Tail ? EndRole::Head : EndRole::Tail;
    strings.push_back(std::move(seq));
  }
  std::map<std::string, int> signs;
  for (const auto& [label, a] : g.arrows()) signs[label] = a.sign;
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), std::move(signs));
}

GaussDiagram remove_arrow(const GaussDiagram& g, const std::string& label) {
  g.arrow(label); // raises on unknown label
  std::vector<std::vector<StringEnd>> strings;
  for (int k = 1; k <= g.string_count(); ++k) {
    std::vector<StringEnd> seq;
    for (const StringEnd& e : g.string_sequence(k))
      if (e.label != label) seq.push_back(e);
    strings.push_back(std::move(seq));
  }
  std::map<std::string, int> signs;
  for (const auto& [l, a] : g.arrows())
    if (l != label) signs[l] = a.sign;
  return GaussDiagram::from_parts(g.string_count(), std::move(strings), std::move(signs));
}

bool structurally_equal(const GaussDiagram& a, const GaussDiagram& b) {
  if (a.string_count() != b.string_count()) return false;
  if (a.arrow_count() != b.arrow_count()) return false;
  std::map<std::string, std::string> fwd, bwd;
  for (int s = 1; s <= a.string_count(); ++s) {
    const auto& sa = a.string_sequence(s);
    const auto& sb = b.string_sequence(s);
    if (sa.size() != sb.size()) return false;
    for (size_t p = 0; p < sa.size(); ++p) {
      if (sa[p].role != sb[p].role) return false;
      auto [itf, newf] = fwd.try_emplace(sa[p].label, sb[p].label);
      if (!newf && itf->second != sb[p].label) return false;
      auto [itb, newb] = bwd.try_emplace(sb[p].label, sa[p].label);
      if (!newb && itb->second != sa[p].label) return false;
    }
  }
  for (const auto& [la, lb] : fwd)
    if (a.arrow(la).sign != b.arrow(lb).sign) return false;
  return true;
}

} // namespace tangles

#include "rnashape/diagram.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "rnashape/errors.h"

namespace rnashape {

Diagram::Diagram(std::vector<int> backbone_lengths, std::span<const Arc> arcs,
                 bool planted) {
  if (backbone_lengths.empty()) {
    throw PreconditionError("diagram needs at least one backbone");
  }
  int n = 0;
  for (int len : backbone_lengths) {
    if (len <= 0) throw PreconditionError("backbone lengths must be positive");
    n += len;
  }
  lengths_ = std::move(backbone_lengths);
  partner_.assign(n + 1, 0);
  for (const Arc& a : arcs) {
    if (a.left < 1 || a.right > n || a.left > n || a.right < 1) {
      throw PreconditionError("arc endpoint out of range 1.." +
                              std::to_string(n));
    }
    if (a.left == a.right) throw PreconditionError("self-pairing");
    if (a.left > a.right) throw PreconditionError("arc must satisfy i < j");
    if (partner_[a.left] != 0 || partner_[a.right] != 0) {
      throw PreconditionError("vertex paired more than once");
    }
    partner_[a.left] = a.right;
    partner_[a.right] = a.left;
  }
  planted_ = planted;
  Index();
  if (planted_ && !HasRainbows(*this)) {
    throw PreconditionError("planted diagram lacks a rainbow");
  }
}

Diagram Diagram::FromPartners(std::vector<int> backbone_lengths,
                              std::vector<Vertex> partner, bool planted) {
  Diagram d;
  int n = std::accumulate(backbone_lengths.begin(), backbone_lengths.end(), 0);
  if (backbone_lengths.empty() ||
      static_cast<int>(partner.size()) != n + 1) {
    throw PreconditionError("partner array does not match backbone lengths");
  }
  for (int len : backbone_lengths) {
    if (len <= 0) throw PreconditionError("backbone lengths must be positive");
  }
  for (Vertex v = 1; v <= n; ++v) {
    Vertex w = partner[v];
    if (w == 0) continue;
    if (w < 1 || w > n || w == v || partner[w] != v) {
      throw PreconditionError("partner array is not an involution");
    }
  }
  d.lengths_ = std::move(backbone_lengths);
  d.partner_ = std::move(partner);
  d.partner_[0] = 0;
  d.planted_ = planted;
  d.Index();
  if (planted && !HasRainbows(d)) {
    throw PreconditionError("planted diagram lacks a rainbow");
  }
  return d;
}

void Diagram::Index() {
  const int n = size();
  backbone_.assign(n + 1, -1);
  first_.clear();
  Vertex v = 1;
  for (int k = 0; k < backbones(); ++k) {
    first_.push_back(v);
    for (int i = 0; i < lengths_[k]; ++i) backbone_[v++] = k;
  }
  arc_count_ = 0;
  for (Vertex u = 1; u <= n; ++u) {
    if (partner_[u] > u) ++arc_count_;
  }
}

std::vector<Arc> Diagram::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex v = 1; v <= size(); ++v) {
    if (partner_[v] > v) out.push_back({v, partner_[v]});
  }
  return out;
}

Diagram Diagram::AssumePlanted() const {
  if (!HasRainbows(*this)) {
    throw PreconditionError("diagram has no rainbow over every backbone");
  }
  Diagram d = *this;
  d.planted_ = true;
  return d;
}

namespace {

struct Line {
  std::string_view text;
  int number;
};

std::string_view StripComment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c == ' ' || c == '\t'; });
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view s, int column_offset) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) {
      out.push_back({s.substr(start, i - start),
                     column_offset + static_cast<int>(start) + 1});
    }
  }
  return out;
}

std::optional<int> ToInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<int> ParseLengths(std::string_view s, int line, int offset) {
  std::vector<int> lengths;
  for (const Token& t : Tokenize(s, offset)) {
    auto v = ToInt(t.text);
    if (!v) throw ParseError("expected a backbone length", line, t.column);
    if (*v <= 0) {
      throw ParseError("backbone length must be positive", line, t.column);
    }
    lengths.push_back(*v);
  }
  if (lengths.empty()) throw ParseError("missing backbone lengths", line, 0);
  return lengths;
}

std::vector<Arc> ParseArcs(std::string_view s, int line, int offset, int n) {
  std::vector<Arc> arcs;
  std::vector<char> used(n + 1, 0);
  for (const Token& t : Tokenize(s, offset)) {
    auto dash = t.text.find('-');
    if (dash == std::string_view::npos) {
      throw ParseError("expected an arc of the form i-j", line, t.column);
    }
    auto a = ToInt(t.text.substr(0, dash));
    auto b = ToInt(t.text.substr(dash + 1));
    if (!a || !b) {
      throw ParseError("expected an arc of the form i-j", line, t.column);
    }
    if (*a == *b) throw ParseError("self-pairing", line, t.column);
    if (*a < 1 || *b < 1 || *a > n || *b > n) {
      throw ParseError("endpoint out of range 1.." + std::to_string(n), line,
                       t.column);
    }
    if (used[*a] || used[*b]) {
      throw ParseError("vertex paired more than once", line, t.column);
    }
    used[*a] = used[*b] = 1;
    arcs.push_back({std::min(*a, *b), std::max(*a, *b)});
  }
  return arcs;
}

Diagram ParseLines(std::span<const Line> lines) {
  if (lines.empty()) throw ParseError("empty diagram", 1, 0);
  const Line& head = lines[0];
  std::string_view lengths_text = head.text;
  std::optional<Line> arc_line;
  int arc_offset = 0;
  auto bar = head.text.find('|');
  if (bar != std::string_view::npos) {
    lengths_text = head.text.substr(0, bar);
    arc_line = Line{head.text.substr(bar + 1), head.number};
    arc_offset = static_cast<int>(bar) + 1;
    if (lines.size() > 1) {
      throw ParseError("unexpected content after one-line diagram",
                       lines[1].number, 0);
    }
  } else if (lines.size() > 1) {
    arc_line = lines[1];
    if (lines.size() > 2) {
      throw ParseError("unexpected content after arc line", lines[2].number, 0);
    }
  }
  std::vector<int> lengths = ParseLengths(lengths_text, head.number, 0);
  int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  std::vector<Arc> arcs;
  if (arc_line) arcs = ParseArcs(arc_line->text, arc_line->number, arc_offset, n);
  return Diagram(std::move(lengths), arcs);
}

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    lines.push_back({text.substr(pos, end - pos), number});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool IsCommentOnly(std::string_view raw) {
  return raw.find('#') != std::string_view::npos &&
         IsBlank(StripComment(raw));
}

}  // namespace

Diagram ParseDiagram(std::string_view text) {
  std::vector<Line> content;
  bool have_lengths = false;
  for (const Line& raw : SplitLines(text)) {
    if (IsCommentOnly(raw.text)) continue;
    std::string_view s = StripComment(raw.text);
    if (!have_lengths) {
      if (IsBlank(s)) continue;
      have_lengths = true;
      content.push_back({s, raw.number});
    } else if (content.size() == 1 &&
               content[0].text.find('|') == std::string_view::npos) {
      // The line right after the lengths is the arc line, even when blank.
      content.push_back({s, raw.number});
    } else if (!IsBlank(s)) {
      content.push_back({s, raw.number});
    }
  }
  return ParseLines(content);
}

std::vector<Diagram> ParseDiagramBatch(std::string_view text) {
  std::vector<Diagram> out;
  std::vector<Line> paragraph;
  auto flush = [&] {
    if (!paragraph.empty()) out.push_back(ParseLines(paragraph));
    paragraph.clear();
  };
  for (const Line& raw : SplitLines(text)) {
    if (IsCommentOnly(raw.text)) continue;
    std::string_view s = StripComment(raw.text);
    if (IsBlank(s)) {
      flush();
    } else {
      paragraph.push_back({s, raw.number});
    }
  }
  flush();
  return out;
}

std::string SerializeDiagram(const Diagram& d) {
  std::ostringstream out;
  for (int k = 0; k < d.backbones(); ++k) {
    if (k) out << ' ';
    out << d.backbone_lengths()[k];
  }
  out << '\n';
  bool first = true;
  for (const Arc& a : d.arcs()) {
    if (!first) out << ' ';
    first = false;
    out << a.left << '-' << a.right;
  }
  out << '\n';
  return out.str();
}

std::string CanonicalCode(const Diagram& d) {
  std::string s = SerializeDiagram(d);
  auto nl = s.find('\n');
  std::string arcs = s.substr(nl + 1);
  arcs.pop_back();
  return s.substr(0, nl) + " | " + arcs;
}

bool CanonicalLess(const Diagram& a, const Diagram& b) {
  if (a.arc_count() != b.arc_count()) return a.arc_count() < b.arc_count();
  if (a.backbone_lengths() != b.backbone_lengths()) {
    return a.backbone_lengths() < b.backbone_lengths();
  }
  return a.partners() < b.partners();
}

bool HasRainbows(const Diagram& d) {
  for (int k = 0; k < d.backbones(); ++k) {
    Vertex f = d.backbone_first(k);
    Vertex l = d.backbone_last(k);
    if (f == l || d.partner(f) != l) return false;
  }
  return true;
}

Diagram Plant(const Diagram& d) {
  if (d.planted()) throw PreconditionError("diagram is already planted");
  const int n = d.size();
  std::vector<int> lengths;
  std::vector<Vertex> relabel(n + 1, 0);
  Vertex next = 1;
  for (int k = 0; k < d.backbones(); ++k) {
    lengths.push_back(d.backbone_lengths()[k] + 2);
    ++next;  // rainbow start
    for (Vertex v = d.backbone_first(k); v <= d.backbone_last(k); ++v) {
      relabel[v] = next++;
    }
    ++next;  // rainbow end
  }
  std::vector<Vertex> partner(next, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (d.paired(v)) partner[relabel[v]] = relabel[d.partner(v)];
  }
  Vertex start = 1;
  for (int len : lengths) {
    partner[start] = start + len - 1;
    partner[start + len - 1] = start;
    start += len;
  }
  return Diagram::FromPartners(std::move(lengths), std::move(partner), true);
}

Diagram StripPlants(const Diagram& d) {
  if (!d.planted()) throw PreconditionError("diagram is not planted");
  std::vector<int> lengths;
  std::vector<Vertex> relabel(d.size() + 1, 0);
  Vertex next = 1;
  for (int k = 0; k < d.backbones(); ++k) {
    if (d.backbone_lengths()[k] < 3) {
      throw PreconditionError("stripping would leave an empty backbone");
    }
    lengths.push_back(d.backbone_lengths()[k] - 2);
    for (Vertex v = d.backbone_first(k) + 1; v < d.backbone_last(k); ++v) {
      relabel[v] = next++;
    }
  }
  std::vector<Vertex> partner(next, 0);
  for (Vertex v = 1; v <= d.size(); ++v) {
    if (relabel[v] && d.paired(v)) partner[relabel[v]] = relabel[d.partner(v)];
  }
  return Diagram::FromPartners(std::move(lengths), std::move(partner), false);
}

namespace {

// Component label per backbone (union-find over backbones joined by arcs).
std::vector<int> BackboneComponents(const Diagram& d) {
  std::vector<int> parent(d.backbones());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex v = 1; v <= d.size(); ++v) {
    if (d.partner(v) > v) {
      int a = find(d.backbone_of(v));
      int b = find(d.backbone_of(d.partner(v)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (int k = 0; k < d.backbones(); ++k) parent[k] = find(k);
  return parent;
}

}  // namespace

bool IsConnected(const Diagram& d) {
  auto comp = BackboneComponents(d);
  return std::all_of(comp.begin(), comp.end(),
                     [&](int c) { return c == comp[0]; });
}

std::vector<Diagram> Components(const Diagram& d) {
  auto comp = BackboneComponents(d);
  std::vector<Diagram> out;
  for (int root = 0; root < d.backbones(); ++root) {
    if (comp[root] != root) continue;
    std::vector<int> lengths;
    std::vector<Vertex> relabel(d.size() + 1, 0);
    Vertex next = 1;
    for (int k = 0; k < d.backbones(); ++k) {
      if (comp[k] != root) continue;
      lengths.push_back(d.backbone_lengths()[k]);
      for (Vertex v = d.backbone_first(k); v <= d.backbone_last(k); ++v) {
        relabel[v] = next++;
      }
    }
    std::vector<Vertex> partner(next, 0);
    for (Vertex v = 1; v <= d.size(); ++v) {
      if (relabel[v] && d.paired(v)) {
        partner[relabel[v]] = relabel[d.partner(v)];
      }
    }
    out.push_back(Diagram::FromPartners(std::move(lengths), std::move(partner),
                                        d.planted()));
  }
  return out;
}

namespace {

// (i,j) and (i+1,j-1) are both arcs with i+1 < j-1.
bool NestedAdjacent(const Diagram& d, Vertex i) {
  Vertex j = d.partner(i);
  if (j <= i + 2 || i + 1 > d.size()) return false;
  return d.partner(i + 1) == j - 1;
}

}  // namespace

std::vector<IntervalKind> IntervalKinds(const Diagram& d) {
  std::vector<IntervalKind> kinds;
  for (Vertex p = 1; p < d.size(); ++p) {
    if (!d.same_backbone(p, p + 1)) {
      kinds.push_back(IntervalKind::kGap);
      continue;
    }
    // Left flank of a stack: (p,x),(p+1,x-1). Right flank: (y,p+1),(y+1,p).
    bool left = d.paired(p) && d.partner(p) > p && NestedAdjacent(d, p);
    bool right = d.paired(p + 1) && d.partner(p + 1) < p &&
                 NestedAdjacent(d, d.partner(p + 1));
    kinds.push_back(left || right ? IntervalKind::kPInterval
                                  : IntervalKind::kSigmaInterval);
  }
  return kinds;
}

std::vector<Stack> Stacks(const Diagram& d) {
  std::vector<Stack> out;
  for (const Arc& a : d.arcs()) {
    // Skip arcs that continue a stack opened further out.
    if (a.left > 1 && a.right < d.size() && d.partner(a.left - 1) == a.right + 1)
      continue;
    Stack s{a, 1, !d.same_backbone(a.left, a.right)};
    Vertex i = a.left;
    while (NestedAdjacent(d, i)) {
      ++s.length;
      ++i;
    }
    out.push_back(s);
  }
  return out;
}

std::string_view ToString(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::kGap:
      return "gap";
    case IntervalKind::kPInterval:
      return "P";
    case IntervalKind::kSigmaInterval:
      return "sigma";
  }
  return "?";
}

}  // namespace rnashape

#ifndef RNASHAPE_DIAGRAM_H_
#define RNASHAPE_DIAGRAM_H_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rnashape {

// Global 1-based vertex index. Backbones are laid out left to right, so
// backbone k occupies a contiguous block of indices.
using Vertex = int;

struct Arc {
  Vertex left = 0;
  Vertex right = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A partial pairing on the vertices of b backbones. Unpaired vertices are
// allowed. Instances are immutable; the surgeries below return new values.
class Diagram {
 public:
  // Validates: b >= 1, positive lengths, left < right, endpoints in range,
  // every vertex used at most once. Throws PreconditionError otherwise.
  Diagram(std::vector<int> backbone_lengths, std::span<const Arc> arcs,
          bool planted = false);
  Diagram(std::vector<int> backbone_lengths, std::initializer_list<Arc> arcs,
          bool planted = false)
      : Diagram(std::move(backbone_lengths),
                std::span<const Arc>(arcs.begin(), arcs.size()), planted) {}

  // `partner` has size n+1; partner[0] is ignored, 0 marks an unpaired
  // vertex. Checked for involution consistency.
  static Diagram FromPartners(std::vector<int> backbone_lengths,
                              std::vector<Vertex> partner,
                              bool planted = false);

  int backbones() const { return static_cast<int>(lengths_.size()); }
  int size() const { return static_cast<int>(partner_.size()) - 1; }
  const std::vector<int>& backbone_lengths() const { return lengths_; }
  int arc_count() const { return arc_count_; }
  bool planted() const { return planted_; }

  Vertex partner(Vertex v) const { return partner_[v]; }
  bool paired(Vertex v) const { return partner_[v] != 0; }
  // 0-based backbone index of v.
  int backbone_of(Vertex v) const { return backbone_[v]; }
  Vertex backbone_first(int k) const { return first_[k]; }
  Vertex backbone_last(int k) const { return first_[k] + lengths_[k] - 1; }
  bool same_backbone(Vertex u, Vertex v) const {
    return backbone_[u] == backbone_[v];
  }
  const std::vector<Vertex>& partners() const { return partner_; }

  // Arcs sorted by left endpoint.
  std::vector<Arc> arcs() const;

  // Returns a copy with the planted flag set. Throws PreconditionError if
  // some backbone's first and last vertices are not paired to each other.
  Diagram AssumePlanted() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.lengths_ == b.lengths_ && a.partner_ == b.partner_;
  }

 private:
  Diagram() = default;
  void Index();

  std::vector<int> lengths_;
  std::vector<Vertex> partner_;
  std::vector<int> backbone_;
  std::vector<Vertex> first_;
  int arc_count_ = 0;
  bool planted_ = false;
};

enum class IntervalKind { kGap, kPInterval, kSigmaInterval };

// A maximal run of nested-adjacent arcs (i,j),(i+1,j-1),...
struct Stack {
  Arc outer;
  int length = 0;
  bool exterior = false;  // outer arc joins two backbones
};

// Two-line text format:
//   <backbone lengths, space separated>
//   <arcs "i-j", space separated; may be blank>
// '#' starts a comment. A single line "<lengths> | <arcs>" is accepted too.
// Throws ParseError with line/column on malformed input.
Diagram ParseDiagram(std::string_view text);
std::string SerializeDiagram(const Diagram& d);

// Splits text into paragraphs separated by blank lines and parses each. A
// paragraph with only a lengths line has no arcs.
std::vector<Diagram> ParseDiagramBatch(std::string_view text);

// Adds a rainbow over every backbone: a new first and last vertex joined by
// an arc. Throws PreconditionError on planted input.
Diagram Plant(const Diagram& d);
// Inverse of Plant. Throws PreconditionError on unplanted input.
Diagram StripPlants(const Diagram& d);
// True if the first and last vertex of every backbone are paired together
// (independent of the planted flag).
bool HasRainbows(const Diagram& d);

// Connectivity of the graph formed by backbone edges plus arcs.
bool IsConnected(const Diagram& d);
// Components in order of their first backbone. Each keeps its backbones in
// the original relative order and inherits the planted flag.
std::vector<Diagram> Components(const Diagram& d);

// One-line text form "<lengths> | <arcs>". Equal diagrams give equal codes.
std::string CanonicalCode(const Diagram& d);
// Total order used for tabulation: arc count, then backbone lengths, then
// the partner sequence.
bool CanonicalLess(const Diagram& a, const Diagram& b);

// Kind of each interval [i, i+1], i = 1..n-1. Gap takes precedence over
// PInterval.
std::vector<IntervalKind> IntervalKinds(const Diagram& d);

std::vector<Stack> Stacks(const Diagram& d);

std::string_view ToString(IntervalKind kind);

}  // namespace rnashape

#endif  // RNASHAPE_DIAGRAM_H_

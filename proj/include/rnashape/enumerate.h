#ifndef RNASHAPE_ENUMERATE_H_
#define RNASHAPE_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rnashape/diagram.h"

namespace rnashape {

// What to enumerate. Arc counts never include rainbows.
struct EnumSpec {
  int backbones = 1;
  int min_arcs = 0;
  int max_arcs = 0;
  int genus_cap = 0;
  // Keep only diagrams whose (formal) genus equals genus_cap.
  bool exact_genus = false;
  // Planted diagrams satisfying the shape predicate.
  bool shapes_only = false;
  bool connected_only = false;
  // Every vertex paired. When false, diagrams on up to max_vertices
  // (unplanted) vertices with unpaired vertices are included.
  bool matching_only = true;
  int max_vertices = 0;
  // Backbone lengths (unplanted) to cover; empty means every composition
  // with positive parts.
  std::vector<std::vector<int>> splits;
  // Search nodes before InfeasibleError; 0 disables the bound.
  std::uint64_t node_limit = 0;
};

// Visits every diagram meeting `spec` exactly once, in a deterministic
// order: by vertex count, then split, then left-to-right choice of partners.
// Returns the number of visits. Partial genus is monotone under arc
// insertion, so branches above the cap are cut.
std::uint64_t EnumerateMatchings(
    const EnumSpec& spec, const std::function<void(const Diagram&)>& visit);

struct ShapeEnumOptions {
  // For two backbones, also keep pairs of one-backbone shapes.
  bool include_disconnected = false;
  std::uint64_t node_limit = 0;
  int threads = 1;
};

// Arc bound (rainbows included) used by EnumerateShapes: 6(g+b-1)-1.
int ShapeArcBound(int backbones, int genus);

// All shapes over b in {1,2} backbones of genus g, sorted by CanonicalLess,
// without duplicates. Throws InfeasibleError when the node limit is hit.
std::vector<Diagram> EnumerateShapes(int backbones, int genus,
                                     const ShapeEnumOptions& options = {});

// Degree profile: total arc count -> number of diagrams.
std::map<int, std::uint64_t> ArcProfile(const std::vector<Diagram>& diagrams);

// Connected two-backbone matchings with n arcs, over all splits, whose
// planted projection equals `shape` and whose genus equals the shape's.
std::uint64_t CountFiber(const Diagram& shape, int n,
                         std::uint64_t node_limit = 0);

}  // namespace rnashape

#endif  // RNASHAPE_ENUMERATE_H_

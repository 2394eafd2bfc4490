#ifndef RNASHAPE_FATGRAPH_H_
#define RNASHAPE_FATGRAPH_H_

#include <span>
#include <string_view>
#include <vector>

#include "rnashape/diagram.h"

namespace rnashape {

// Boundary cycles of the polygonal model: each backbone collapsed to one
// vertex whose half-edges are its paired vertices in left-to-right order.
//
// With sigma the per-backbone rotation and alpha the arc involution, the
// cycles are those of phi = sigma o alpha. A half-edge is named by its
// vertex. Unpaired vertices carry no half-edge. A backbone without any
// paired vertex contributes one empty cycle (the boundary of a bare disc).
struct BoundaryDecomposition {
  // Each cycle starts at its smallest half-edge; cycles are ordered by that
  // element, empty cycles last.
  std::vector<std::vector<Vertex>> cycles;
  int r = 0;
  // Formal genus from 2 - 2g - r = b - n, applied even when disconnected.
  int genus = 0;
  std::vector<int> component_genera;
};

BoundaryDecomposition BoundaryComponents(const Diagram& d);
int Genus(const Diagram& d);

enum class LoopType { kPlant, kHairpin, kInterior, kMulti, kEmpty };

struct Loop {
  LoopType type = LoopType::kEmpty;
  int length = 0;
  bool pseudoknot = false;
  // Every traversed arc has both endpoints on one backbone. Loops of an
  // isolated backbone count as alpha.
  bool alpha = true;
};

struct LoopProfile {
  std::vector<Loop> loops;  // parallel to BoundaryDecomposition::cycles
  int plant = 0;
  int hairpin = 0;
  int interior = 0;
  int multi = 0;
  int pseudoknot = 0;
  int empty = 0;
  int alpha = 0;
  int beta = 0;
};

// A length-1 cycle through the first paired vertex of a backbone is that
// backbone's exterior boundary and counts as a plant; other length-1 cycles
// are hairpins.
LoopProfile ClassifyLoops(const Diagram& d);
LoopProfile ClassifyLoops(const Diagram& d, const BoundaryDecomposition& bd);

std::string_view ToString(LoopType type);

// Allocation-free boundary counting on a raw partner array, for search
// loops. `lengths` are backbone lengths, `partner` has size n+1 with 0 for
// unpaired vertices. Buffers are reused across calls.
class BoundaryCounter {
 public:
  int CountCycles(std::span<const int> lengths, std::span<const Vertex> partner);
  // Formal genus of the partial pairing, unpaired vertices ignored.
  int FormalGenus(std::span<const int> lengths,
                  std::span<const Vertex> partner);

 private:
  std::vector<Vertex> next_;
  std::vector<char> seen_;
};

}  // namespace rnashape

#endif  // RNASHAPE_FATGRAPH_H_

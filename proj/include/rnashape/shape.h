#ifndef RNASHAPE_SHAPE_H_
#define RNASHAPE_SHAPE_H_

#include <string_view>

#include "rnashape/diagram.h"

namespace rnashape {

struct ProjectedShape {
  Diagram shape;  // planted
  // No arc survived apart from the rainbows.
  bool empty_pure_preshape = false;
};

// Plants d, then iterates {collapse stacks, delete same-backbone 1-arcs,
// delete unpaired vertices} to a fixpoint. Collapsing keeps the outermost
// arc of each stack, so an arc spanning a whole backbone merges into that
// backbone's rainbow. Arcs joining two backbones are never 1-arcs.
// Throws PreconditionError on planted input.
ProjectedShape ProjectShape(const Diagram& d);

enum class ReductionOrder {
  kCollapseFirst,  // the projection order
  kDeleteFirst,    // 1-arcs and unpaired vertices first; used for confluence
};

// The fixpoint reduction on an already planted diagram.
Diagram ReducePlanted(const Diagram& planted,
                      ReductionOrder order = ReductionOrder::kCollapseFirst);

// Rainbow over every backbone, no same-backbone 1-arcs (a rainbow over an
// otherwise empty backbone is one), no stacks, no unpaired vertices.
bool IsShape(const Diagram& d);

enum class ShapeClass { kA, kB };

// For a one-backbone shape with vertices R,1..m,S: A iff the vertex after
// the partner of 1 is an inner vertex paired with m. Throws
// PreconditionError for non-shapes, b != 1, or a rainbow-only shape.
ShapeClass ClassifyShape(const Diagram& s);

std::string_view ToString(ShapeClass c);

}  // namespace rnashape

#endif  // RNASHAPE_SHAPE_H_

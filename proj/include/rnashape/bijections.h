#ifndef RNASHAPE_BIJECTIONS_H_
#define RNASHAPE_BIJECTIONS_H_

#include "rnashape/diagram.h"

namespace rnashape {

// A-shapes with n+2 arcs <-> B-shapes with n+1 arcs, genus preserved.
// Theta deletes the arc (partner(1)+1, last inner vertex) with its two
// vertices. ThetaInverse inserts an arc from just after partner(1) to just
// before the closing rainbow vertex. All outputs are planted and relabeled
// left to right. Both throw PreconditionError when the input is not a
// one-backbone shape of the expected class.
Diagram Theta(const Diagram& a_shape);
Diagram ThetaInverse(const Diagram& b_shape);

// Two-backbone shapes of formal genus g, connected or a pair of
// one-backbone shapes side by side, <-> one-backbone A-shapes of genus g+1.
// Eta glues backbone 2 after backbone 1 and adds a rainbow over the result;
// the old rainbows become ordinary arcs. EtaInverse removes the rainbow and
// cuts after partner(1), turning (1, partner(1)) and (partner(1)+1, last)
// into the two new rainbows.
Diagram Eta(const Diagram& two_backbone_shape);
Diagram EtaInverse(const Diagram& a_shape);

}  // namespace rnashape

#endif  // RNASHAPE_BIJECTIONS_H_

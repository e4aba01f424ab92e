#pragma once

#include "ttg/complex.hpp"
#include "ttg/shape.hpp"

namespace ttg {

/// Total fibre of a full cube by successive fibres along each direction.
Complex total_fibre(const CubeDiagram& D);
/// Homotopy limit of a punctured cube: the suspended total fibre of the cube extended
/// by zero at the empty set. Throws ShapeMismatch, MissingArrow.
Complex holim_punctured(const CubeDiagram& D);

}  // namespace ttg

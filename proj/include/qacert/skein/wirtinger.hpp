#pragma once

#include "qacert/foxcalc/presentation.hpp"
#include "qacert/skein/link_diagram.hpp"

namespace qacert {

/// Wirtinger presentation: one generator per over-arc, one relation per
/// crossing (the last one dropped, leaving deficiency one), every generator
/// sent to t in Z.
Presentation wirtinger_presentation(const LinkDiagram& d);

}  // namespace qacert

#pragma once

#include <string>
#include <string_view>

#include "qacert/skein/link_diagram.hpp"

namespace qacert {

/// Reads `X[a,b,c,d]` entries (separated by commas and/or whitespace, an
/// optional PD[...] wrapper is ignored) and optional `O[k: a1, a2, ...]`
/// lines giving the traversal order of component k. `#` starts a comment.
LinkDiagram parse_pd(std::string_view text);

/// Canonical text: "X[1,4,2,5], X[3,6,4,1], ..." plus one O[] line per component.
std::string format_pd(const LinkDiagram& d);

}  // namespace qacert

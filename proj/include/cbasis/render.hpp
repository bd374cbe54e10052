#pragma once

// ASCII rendering of a monomial's diagonal-path strip: the color triangle
// and its transposed copy glued along the diagonal, one pair of triangles
// per pair of degrees, occupied cells marked.

#include <string>

#include "cbasis/monomial.hpp"

namespace cbasis {

std::string render_strip(const Monomial& p);

}  // namespace cbasis

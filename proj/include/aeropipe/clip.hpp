#pragma once

#include <array>

#include "aeropipe/mesh.hpp"

namespace aeropipe {

/// Volume of the convex intersection of two tetrahedra.
///
/// tetA's polytope is clipped successively against the four face half-spaces
/// of tetB; the resulting convex polytope volume comes from a fan
/// decomposition of its faces. Returns 0 for empty intersections.
/// Symmetric in its arguments to 1e-10 relative.
double tet_clip_volume(const std::array<Vec3, 4>& tet_a, const std::array<Vec3, 4>& tet_b);

} // namespace aeropipe

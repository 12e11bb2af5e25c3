#pragma once

#include <vector>

#include "aeropipe/mesh.hpp"

namespace aeropipe {

/// Uniform-grid acceleration structure over element bounding boxes.
/// Immutable after construction; queries are safe to run concurrently.
class SpatialIndex {
public:
  explicit SpatialIndex(const Mesh& mesh);

  /// Indices of all elements whose bounding box intersects `box`,
  /// ascending and duplicate-free.
  std::vector<int> query(const AxisBox& box) const;

  const AxisBox& bounds() const { return bounds_; }

private:
  AxisBox bounds_;
  std::array<int, 3> dims_{{1, 1, 1}};
  Vec3 cell_size_{1.0, 1.0, 1.0};
  std::vector<std::vector<int>> cells_;
  std::vector<AxisBox> boxes_;

  int cell_of(int ix, int iy, int iz) const { return (iz * dims_[1] + iy) * dims_[0] + ix; }
  std::array<int, 3> clamp_cell(const Vec3& p) const;
};

} // namespace aeropipe

#include "aeropipe/spatial_index.hpp"

#include <algorithm>
#include <cmath>

namespace aeropipe {

SpatialIndex::SpatialIndex(const Mesh& mesh) {
  const int ne = mesh.num_elements();
  if (ne == 0 || mesh.num_nodes() == 0) throw ValidationError("spatial index over empty mesh");

  boxes_.reserve(ne);
  bounds_ = AxisBox::around(mesh.nodes[0]);
  for (int ei = 0; ei < ne; ++ei) {
    boxes_.push_back(element_bounding_box(mesh, ei));
    bounds_.expand(boxes_.back().min);
    bounds_.expand(boxes_.back().max);
  }

  // Aim for about one element per grid cell.
  const double target = std::cbrt(static_cast<double>(ne));
  const Vec3 extent = bounds_.extent();
  for (int d = 0; d < 3; ++d) {
    dims_[d] = std::max(1, static_cast<int>(target));
    cell_size_[d] = extent[d] > 0.0 ? extent[d] / dims_[d] : 1.0;
  }
  cells_.resize(static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2]);

  for (int ei = 0; ei < ne; ++ei) {
    const auto lo = clamp_cell(boxes_[ei].min);
    const auto hi = clamp_cell(boxes_[ei].max);
    for (int iz = lo[2]; iz <= hi[2]; ++iz)
      for (int iy = lo[1]; iy <= hi[1]; ++iy)
        for (int ix = lo[0]; ix <= hi[0]; ++ix) cells_[cell_of(ix, iy, iz)].push_back(ei);
  }
}

std::array<int, 3> SpatialIndex::clamp_cell(const Vec3& p) const {
  std::array<int, 3> c;
  for (int d = 0; d < 3; ++d) {
    int i = static_cast<int>(std::floor((p[d] - bounds_.min[d]) / cell_size_[d]));
    c[d] = std::clamp(i, 0, dims_[d] - 1);
  }
  return c;
}

std::vector<int> SpatialIndex::query(const AxisBox& box) const {
  std::vector<int> result;
  if (!box.intersects(bounds_)) return result;
  const auto lo = clamp_cell(box.min);
  const auto hi = clamp_cell(box.max);
  for (int iz = lo[2]; iz <= hi[2]; ++iz)
    for (int iy = lo[1]; iy <= hi[1]; ++iy)
      for (int ix = lo[0]; ix <= hi[0]; ++ix)
        for (int ei : cells_[cell_of(ix, iy, iz)])
          if (boxes_[ei].intersects(box)) result.push_back(ei);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

} // namespace aeropipe

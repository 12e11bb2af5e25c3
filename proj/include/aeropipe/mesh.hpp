#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aeropipe/errors.hpp"

namespace aeropipe {

using Vec3 = Eigen::Vector3d;

/// Axis-aligned box, min <= max componentwise.
struct AxisBox {
  Vec3 min{0.0, 0.0, 0.0};
  Vec3 max{0.0, 0.0, 0.0};

  bool intersects(const AxisBox& other) const {
    for (int d = 0; d < 3; ++d) {
      if (max[d] < other.min[d] || other.max[d] < min[d]) return false;
    }
    return true;
  }
  bool contains(const Vec3& p) const {
    for (int d = 0; d < 3; ++d) {
      if (p[d] < min[d] || p[d] > max[d]) return false;
    }
    return true;
  }
  Vec3 extent() const { return max - min; }
  double volume() const {
    const Vec3 e = extent();
    return e[0] * e[1] * e[2];
  }
  void expand(const Vec3& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  static AxisBox around(const Vec3& p) { return AxisBox{p, p}; }
};

enum class ElementKind : std::int32_t { Tet4 = 0, Hex8 = 1 };

inline int node_count(ElementKind kind) { return kind == ElementKind::Tet4 ? 4 : 8; }
inline const char* kind_name(ElementKind kind) { return kind == ElementKind::Tet4 ? "tet4" : "hex8"; }

/// One volume element: kind plus connectivity. Unused slots stay -1.
struct Element {
  ElementKind kind = ElementKind::Tet4;
  std::array<std::int32_t, 8> conn{{-1, -1, -1, -1, -1, -1, -1, -1}};

  int num_nodes() const { return node_count(kind); }
};

/// Canonical decomposition of a hex8 into 6 tets sharing the 0-6 diagonal.
/// All six are positively oriented for the standard vertex ordering.
inline constexpr std::array<std::array<int, 4>, 6> kHexTetDecomposition = {{
    {{0, 1, 2, 6}},
    {{0, 2, 3, 6}},
    {{0, 3, 7, 6}},
    {{0, 7, 4, 6}},
    {{0, 4, 5, 6}},
    {{0, 5, 1, 6}},
}};

/// Unstructured 3D mesh: nodes, tet4/hex8 elements, named element regions
/// and named node sets. Regions partition the element list.
struct Mesh {
  std::vector<Vec3> nodes;
  std::vector<Element> elements;
  std::map<std::string, std::vector<int>> regions;    // region name -> element indices
  std::map<std::string, std::vector<int>> node_sets;  // set name -> node indices

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_elements() const { return static_cast<int>(elements.size()); }

  bool has_region(const std::string& name) const { return regions.count(name) > 0; }

  const std::vector<int>& region(const std::string& name) const {
    auto it = regions.find(name);
    if (it == regions.end()) throw UnknownRegion("unknown mesh region '" + name + "'");
    return it->second;
  }

  /// Checks connectivity bounds, positive element volumes and that regions
  /// form a partition of the element list. Throws on violation.
  void validate() const;
};

/// Signed volume of the tet (a,b,c,d): triple product / 6.
inline double tet_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return (b - a).dot((c - a).cross(d - a)) / 6.0;
}

/// Volume of an element. Hexahedra use the fixed 6-tet decomposition.
/// Throws DegenerateElement when the volume is not positive relative to the
/// element's bounding box (tolerance 1e-14).
double element_volume(const Mesh& mesh, int element_index);

/// Tight axis-aligned bounding box over the element's vertices.
AxisBox element_bounding_box(const Mesh& mesh, int element_index);

/// Element corner positions in connectivity order.
std::vector<Vec3> element_corners(const Mesh& mesh, int element_index);

/// Decomposes an element into tets (identity for tet4, 6 tets for hex8),
/// returned as corner quadruples.
std::vector<std::array<Vec3, 4>> element_tets(const Mesh& mesh, int element_index);

} // namespace aeropipe

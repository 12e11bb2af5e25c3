#include "aeropipe/mesh.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace aeropipe {

namespace {

double raw_element_volume(const Mesh& mesh, const Element& e) {
  if (e.kind == ElementKind::Tet4) {
    return tet_volume(mesh.nodes[e.conn[0]], mesh.nodes[e.conn[1]], mesh.nodes[e.conn[2]],
                      mesh.nodes[e.conn[3]]);
  }
  double volume = 0.0;
  for (const auto& tet : kHexTetDecomposition) {
    volume += tet_volume(mesh.nodes[e.conn[tet[0]]], mesh.nodes[e.conn[tet[1]]],
                         mesh.nodes[e.conn[tet[2]]], mesh.nodes[e.conn[tet[3]]]);
  }
  return volume;
}

} // namespace

double element_volume(const Mesh& mesh, int element_index) {
  const Element& e = mesh.elements.at(element_index);
  const double volume = raw_element_volume(mesh, e);
  const double box_volume = element_bounding_box(mesh, element_index).volume();
  if (!(volume > 1e-14 * box_volume)) {
    std::ostringstream msg;
    msg << "degenerate " << kind_name(e.kind) << " element " << element_index << " (volume "
        << volume << ", bounding-box volume " << box_volume << ")";
    throw DegenerateElement(msg.str());
  }
  return volume;
}

AxisBox element_bounding_box(const Mesh& mesh, int element_index) {
  const Element& e = mesh.elements.at(element_index);
  AxisBox box = AxisBox::around(mesh.nodes[e.conn[0]]);
  for (int i = 1; i < e.num_nodes(); ++i) box.expand(mesh.nodes[e.conn[i]]);
  return box;
}

std::vector<Vec3> element_corners(const Mesh& mesh, int element_index) {
  const Element& e = mesh.elements.at(element_index);
  std::vector<Vec3> corners(e.num_nodes());
  for (int i = 0; i < e.num_nodes(); ++i) corners[i] = mesh.nodes[e.conn[i]];
  return corners;
}

std::vector<std::array<Vec3, 4>> element_tets(const Mesh& mesh, int element_index) {
  const Element& e = mesh.elements.at(element_index);
  std::vector<std::array<Vec3, 4>> tets;
  if (e.kind == ElementKind::Tet4) {
    tets.push_back({mesh.nodes[e.conn[0]], mesh.nodes[e.conn[1]], mesh.nodes[e.conn[2]],
                    mesh.nodes[e.conn[3]]});
  } else {
    tets.reserve(6);
    for (const auto& tet : kHexTetDecomposition) {
      tets.push_back({mesh.nodes[e.conn[tet[0]]], mesh.nodes[e.conn[tet[1]]],
                      mesh.nodes[e.conn[tet[2]]], mesh.nodes[e.conn[tet[3]]]});
    }
  }
  return tets;
}

void Mesh::validate() const {
  const int nn = num_nodes();
  for (int ei = 0; ei < num_elements(); ++ei) {
    const Element& e = elements[ei];
    for (int i = 0; i < e.num_nodes(); ++i) {
      if (e.conn[i] < 0 || e.conn[i] >= nn) {
        std::ostringstream msg;
        msg << "element " << ei << " references node " << e.conn[i] << " outside [0," << nn << ")";
        throw ValidationError(msg.str());
      }
    }
    element_volume(*this, ei); // throws DegenerateElement for non-positive volume
  }
  std::vector<char> covered(elements.size(), 0);
  for (const auto& [name, indices] : regions) {
    for (int ei : indices) {
      if (ei < 0 || ei >= num_elements())
        throw ValidationError("region '" + name + "' references element out of range");
      if (covered[ei])
        throw ValidationError("regions overlap at element " + std::to_string(ei));
      covered[ei] = 1;
    }
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw ValidationError("regions do not cover all elements");
  for (const auto& [name, indices] : node_sets) {
    for (int ni : indices) {
      if (ni < 0 || ni >= nn)
        throw ValidationError("node set '" + name + "' references node out of range");
    }
  }
}

} // namespace aeropipe

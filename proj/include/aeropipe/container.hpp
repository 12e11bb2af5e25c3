#pragma once

#include <filesystem>
#include <vector>

#include "aeropipe/field_series.hpp"
#include "aeropipe/mesh.hpp"

namespace aeropipe {

/// Self-contained result container: mesh plus any number of scalar field
/// series over a shared time grid. On disk this is a line-oriented text
/// manifest followed by raw little-endian binary blocks (format
/// documented in docs/container-format.md). Round-trips bit-exactly.
struct ContainerDataset {
  Mesh mesh;
  TimeGrid grid;                        // meaningful when series exist
  std::vector<CellFieldSeries> series;  // covered lists derived from mesh regions

  const CellFieldSeries& find_series(const std::string& quantity) const;
  bool has_series(const std::string& quantity) const;

  void validate() const;
};

/// Builds the coverage list for a quantity: concatenated region element
/// lists for element fields, all node indices for node fields.
std::vector<int> coverage_for(const Mesh& mesh, FieldLocation location,
                              const std::vector<std::string>& region_names);

void write_container(const ContainerDataset& dataset, const std::filesystem::path& path);
ContainerDataset read_container(const std::filesystem::path& path);

} // namespace aeropipe

#pragma once

#include <string>
#include <vector>

#include "aeropipe/field_series.hpp"
#include "aeropipe/mesh.hpp"

namespace aeropipe {

/// Exact source/target intersection volumes for conservative transfer.
/// Rows follow the target coverage order; per-row entries are sorted by
/// source coverage slot. Immutable once built.
struct OverlapTable {
  struct Entry {
    int source_slot;
    double volume;
  };

  std::vector<int> source_covered;  // global source element indices, coverage order
  std::vector<int> target_covered;  // global target element indices, coverage order
  std::vector<std::vector<Entry>> rows;  // [target slot] -> intersections
  std::vector<double> covered_volume;    // [target slot] -> sum of intersection volumes
  std::vector<double> target_volume;     // [target slot] -> full element volume

  int num_sources() const { return static_cast<int>(source_covered.size()); }
  int num_targets() const { return static_cast<int>(target_covered.size()); }

  /// Total intersection volume seen by each source slot.
  std::vector<double> source_intersection_volume() const;
};

/// Builds the intersection table between the named source regions and the
/// named target regions. Candidate pairs come from a spatial index over the
/// source mesh; every surviving pair is clipped exactly on tet
/// decompositions (hex8 -> 6 tets).
OverlapTable build_overlap_table(const Mesh& source, const std::vector<std::string>& source_regions,
                                 const Mesh& target, const std::vector<std::string>& target_regions);

struct InterpolationResult {
  std::vector<double> values;        // per target slot
  std::vector<char> covered;         // per target slot, 0 where no source volume reached
  int uncovered_count = 0;
};

/// Volume-weighted conservative transfer: each target receives the mean of
/// the intersecting source values weighted by intersection volume,
/// normalized by the covered (not full) target volume. Targets without any
/// coverage get 0 and are flagged.
InterpolationResult conservative_interpolate(const OverlapTable& table,
                                             const std::vector<double>& source_values);

/// Kahan-compensated sum; used wherever the conservation identity is
/// checked at 1e-12.
double compensated_sum(const std::vector<double>& values);

/// Second-order time differentiation: central differences inside, one-sided
/// three-point stencils at both ends. The result carries `output_quantity`.
CellFieldSeries time_derivative(const CellFieldSeries& series, const std::string& output_quantity);

} // namespace aeropipe

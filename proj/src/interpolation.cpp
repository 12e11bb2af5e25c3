#include "aeropipe/interpolation.hpp"

#include <algorithm>

#include "aeropipe/clip.hpp"
#include "aeropipe/spatial_index.hpp"

namespace aeropipe {

namespace {

std::vector<int> coverage_list(const Mesh& mesh, const std::vector<std::string>& region_names) {
  std::vector<int> covered;
  for (const auto& name : region_names) {
    const auto& indices = mesh.region(name);
    covered.insert(covered.end(), indices.begin(), indices.end());
  }
  return covered;
}

} // namespace

double compensated_sum(const std::vector<double>& values) {
  double sum = 0.0, compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      compensation += (sum - t) + v;
    else
      compensation += (v - t) + sum;
    sum = t;
  }
  return sum + compensation;
}

std::vector<double> OverlapTable::source_intersection_volume() const {
  std::vector<double> volume(source_covered.size(), 0.0);
  for (const auto& row : rows)
    for (const Entry& e : row) volume[e.source_slot] += e.volume;
  return volume;
}

OverlapTable build_overlap_table(const Mesh& source, const std::vector<std::string>& source_regions,
                                 const Mesh& target,
                                 const std::vector<std::string>& target_regions) {
  OverlapTable table;
  table.source_covered = coverage_list(source, source_regions);
  table.target_covered = coverage_list(target, target_regions);

  // Slot lookup for source elements; -1 marks elements outside the coverage.
  std::vector<int> slot_of_source(source.num_elements(), -1);
  for (int s = 0; s < table.num_sources(); ++s) slot_of_source[table.source_covered[s]] = s;

  const SpatialIndex index(source);

  const int nt = table.num_targets();
  table.rows.resize(nt);
  table.covered_volume.resize(nt);
  table.target_volume.resize(nt);
  for (int t = 0; t < nt; ++t) {
    const int te = table.target_covered[t];
    table.target_volume[t] = element_volume(target, te);
    const auto target_tets = element_tets(target, te);

    std::vector<OverlapTable::Entry> row;
    for (int se : index.query(element_bounding_box(target, te))) {
      const int slot = slot_of_source[se];
      if (slot < 0) continue;
      double volume = 0.0;
      for (const auto& st : element_tets(source, se))
        for (const auto& tt : target_tets) volume += tet_clip_volume(st, tt);
      if (volume > 0.0) row.push_back({slot, volume});
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.source_slot < b.source_slot; });

    std::vector<double> volumes;
    volumes.reserve(row.size());
    for (const auto& e : row) volumes.push_back(e.volume);
    table.covered_volume[t] = compensated_sum(volumes);
    table.rows[t] = std::move(row);
  }
  return table;
}

InterpolationResult conservative_interpolate(const OverlapTable& table,
                                             const std::vector<double>& source_values) {
  if (static_cast<int>(source_values.size()) != table.num_sources())
    throw ShapeError("source value array length " + std::to_string(source_values.size()) +
                     " does not match source coverage " + std::to_string(table.num_sources()));

  InterpolationResult result;
  const int nt = table.num_targets();
  result.values.resize(nt);
  result.covered.resize(nt);
  std::vector<double> terms;
  for (int t = 0; t < nt; ++t) {
    const auto& row = table.rows[t];
    if (row.empty() || table.covered_volume[t] <= 0.0) {
      result.values[t] = 0.0;
      result.covered[t] = 0;
      ++result.uncovered_count;
      continue;
    }
    terms.clear();
    terms.reserve(row.size());
    for (const auto& e : row) terms.push_back(e.volume * source_values[e.source_slot]);
    result.values[t] = compensated_sum(terms) / table.covered_volume[t];
    result.covered[t] = 1;
  }
  return result;
}

CellFieldSeries time_derivative(const CellFieldSeries& series, const std::string& output_quantity) {
  series.validate();
  const int n = series.grid.num_steps;
  if (n < 3)
    throw InsufficientSteps("time derivative needs at least 3 steps, got " + std::to_string(n));

  CellFieldSeries out = series;
  out.quantity = output_quantity;
  const double two_dt = 2.0 * series.grid.delta;
  const int m = series.values_per_step();
  for (int k = 0; k < n; ++k) {
    auto& dst = out.steps[k];
    if (k == 0) {
      const auto& p0 = series.steps[0];
      const auto& p1 = series.steps[1];
      const auto& p2 = series.steps[2];
      for (int i = 0; i < m; ++i) dst[i] = (-3.0 * p0[i] + 4.0 * p1[i] - p2[i]) / two_dt;
    } else if (k == n - 1) {
      const auto& p0 = series.steps[n - 1];
      const auto& p1 = series.steps[n - 2];
      const auto& p2 = series.steps[n - 3];
      for (int i = 0; i < m; ++i) dst[i] = (3.0 * p0[i] - 4.0 * p1[i] + p2[i]) / two_dt;
    } else {
      const auto& prev = series.steps[k - 1];
      const auto& next = series.steps[k + 1];
      for (int i = 0; i < m; ++i) dst[i] = (next[i] - prev[i]) / two_dt;
    }
  }
  return out;
}

} // namespace aeropipe

#pragma once

#include <string>
#include <vector>

#include "aeropipe/errors.hpp"
#include "aeropipe/time_grid.hpp"

namespace aeropipe {

enum class FieldLocation { Element, Node };

/// Scalar field over a time grid, one value per covered entity and step.
/// For element fields the coverage is the concatenation of the covered
/// regions' element lists; node fields cover all mesh nodes.
struct CellFieldSeries {
  std::string quantity;
  FieldLocation location = FieldLocation::Element;
  std::vector<std::string> region_names;
  std::vector<int> covered;                 // global entity indices, coverage order
  std::vector<std::vector<double>> steps;   // [step][covered slot]
  TimeGrid grid;

  int values_per_step() const { return static_cast<int>(covered.size()); }

  void validate() const {
    grid.validate();
    if (static_cast<int>(steps.size()) != grid.num_steps)
      throw ShapeError("field series '" + quantity + "': step count " +
                       std::to_string(steps.size()) + " does not match time grid " +
                       std::to_string(grid.num_steps));
    for (const auto& step : steps) {
      if (step.size() != covered.size())
        throw ShapeError("field series '" + quantity + "': step array length " +
                         std::to_string(step.size()) + " does not match coverage " +
                         std::to_string(covered.size()));
    }
  }
};

} // namespace aeropipe

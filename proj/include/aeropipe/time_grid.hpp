#pragma once

#include "aeropipe/errors.hpp"

namespace aeropipe {

/// Uniform step/time axis shared by the data pipeline and the solver.
/// With delete_offset false, step k carries the upstream CFD time
/// start_time + k*delta; with delete_offset true the output axis restarts
/// at delta (step k carries (k+1)*delta).
struct TimeGrid {
  int start_step = 0;
  int num_steps = 1;
  double start_time = 0.0;
  double delta = 0.0;
  bool delete_offset = false;

  double time_of_step(int k) const {
    return delete_offset ? delta * (k + 1) : start_time + delta * k;
  }

  void validate() const {
    if (num_steps < 1) throw ValidationError("time grid needs at least one step");
    if (!(delta > 0.0)) throw ValidationError("time grid delta must be positive");
  }

  bool operator==(const TimeGrid&) const = default;
};

} // namespace aeropipe

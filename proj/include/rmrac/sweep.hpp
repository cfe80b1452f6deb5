#pragma once

#include <map>
#include <string>
#include <vector>

#include "rmrac/scenario.hpp"

namespace rmrac {

// Cartesian grid over scenario overrides. Supported keys: theta0, x_p0,
// x_m0, gamma, dt, t_end. Key order is alphabetical, last key fastest.
struct SweepGrid {
  std::map<std::string, std::vector<double>> axes;
  std::size_t points() const;
};

struct SweepSummary {
  std::size_t index = 0;
  std::map<std::string, double> overrides;
  std::string final_region;      // region label of the last sample
  std::string label;             // diverged | limit_cycle | settled_in_<region>
  bool ever_entered_B = false;
  bool diverged = false;
  double divergence_time = 0.0;
  double max_abs_e = 0.0;
  double max_abs_theta = 0.0;
};

// Runs every grid point; points execute concurrently (capped by max_threads,
// or by ROBUST_MRAC_THREADS when max_threads <= 0) and the summaries come
// back in grid order regardless of scheduling. Per-point failures are
// captured in the label as "error: ...".
std::vector<SweepSummary> run_sweep(const Scenario& base, const SweepGrid& grid,
                                    int max_threads = 0);

Scenario apply_override(Scenario sc, const std::string& key, double value);

std::string sweep_to_json(const std::vector<SweepSummary>& results);
SweepGrid sweep_grid_from_json(const std::string& text);

}  // namespace rmrac

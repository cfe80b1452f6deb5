#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rmrac/scenario.hpp"

namespace rmrac {

// Uniformly sampled closed-loop trajectory. e is the derived column
// x_p - x_m, never integrated separately; region labels come from the
// scenario's projection geometry. A diverged trace is a valid result: it
// simply ends at the step where a state left the finite/1e9 envelope.
struct SimTrace {
  std::vector<double> t, r, u, v, x_p, x_m, e, theta;
  std::vector<ThetaRegion> region;

  bool diverged = false;
  double divergence_time = 0.0;
  double max_abs_e_at_divergence = 0.0;
  long clamp_events = 0;

  double dt = 0.0;
  int stride = 1;

  std::size_t samples() const { return t.size(); }
  double max_abs_e() const;
  double max_abs_theta() const;
};

// Classic fixed-step fourth-order Runge-Kutta over the full state
// [x_p, x_eta..., x_m, theta]. The projection branch is evaluated at every
// stage; a post-step clamp to [-theta_max, theta_max] removes the O(dt^5)
// stage overshoot (counted in clamp_events).
SimTrace simulate(const Scenario& sc);

// Same loop with theta frozen: the fixed-gain LTI closed loop.
SimTrace simulate_fixed_theta(const Scenario& sc, double theta_fixed);

// CSV: header t,r,u,v,x_p,x_m,e,theta,region, 12 significant digits, LF.
void write_trace_csv(const SimTrace& trace, std::ostream& os);
void write_trace_csv(const SimTrace& trace, const std::string& path);
SimTrace read_trace_csv(std::istream& is, const ProjectionConfig& cfg);
SimTrace read_trace_csv(const std::string& path, const ProjectionConfig& cfg);

}  // namespace rmrac

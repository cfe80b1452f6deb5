#include "rmrac/presets.hpp"

#include <stdexcept>

namespace rmrac {

namespace {

// xi0 for the study: the Lyapunov margin bound for the pinned realization
// with Q = I evaluates to xi0_max = 1.123e-8 at the known pole, so the
// configured strip 8e-9 sits inside it with ~40% to spare. (The published
// 4.57e-8 traces back to a differently scaled realization; it would fail
// the self-computed margin check here.)
constexpr double kXi0 = 8e-9;
constexpr double kEpsilon0 = 1.7;

Scenario rohrs_base() {
  Scenario sc;
  sc.plant = PlantSpec::gain_matched(-1.0, 1.0, 2.0, -3.0, 3.0);  // k_r = 1.5
  sc.unmodeled = UnmodeledDynamics::second_order(0.9912, 15.1327);
  sc.cfg = ProjectionConfig::make(16.7 - kEpsilon0, kEpsilon0, kXi0 / kEpsilon0, 1.0);
  sc.theta0 = -0.65;
  sc.dt = 1e-4;
  sc.stride = 10;
  // the plant pole is known exactly in the study, so the class check is
  // anchored there rather than swept over [-a_bar, a_bar]
  sc.analysis.a_p_interval = std::make_pair(-1.0, -1.0);
  return sc;
}

}  // namespace

Scenario preset(const std::string& name) {
  Scenario sc = rohrs_base();
  if (name == "rohrs_main") {
    sc.signal = ReferenceSignal::biased_sine(0.3, 1.85, 16.1);
    sc.t_end = 1500.0;
  } else if (name == "rohrs_unprotected") {
    // divergence takes ~1381 s at gamma = 1: the parameter drift to the
    // stability edge is as slow as the protected settling
    sc.signal = ReferenceSignal::biased_sine(0.3, 1.85, 16.1);
    sc.t_end = 1500.0;
    sc.projection_enabled = false;
  } else if (name == "rohrs_i") {
    sc.signal = ReferenceSignal::biased_sine(0.3, 2.0, 8.0);
    sc.t_end = 60.0;
  } else if (name == "rohrs_ii") {
    sc.signal = ReferenceSignal::pulse(12.0, 1.0);
    sc.t_end = 60.0;
  } else if (name == "rohrs_iii") {
    sc.signal = ReferenceSignal::constant(10.0);
    sc.t_end = 120.0;
  } else if (name == "rohrs_iv") {
    sc.signal = ReferenceSignal::chirp(0.0, 2.0, 16.1, 2.0, 60.0);
    sc.t_end = 60.0;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  sc.validate();
  return sc;
}

std::vector<std::string> preset_names() {
  return {"rohrs_main", "rohrs_unprotected", "rohrs_i", "rohrs_ii", "rohrs_iii", "rohrs_iv"};
}

// Representative spread over the parameter range at the sweep horizon of
// 60 s: the first three settle against the lower boundary, -10 visits the
// boundary region and returns to A, the last two never leave A.
std::vector<double> rohrs_iv_initial_thetas() {
  return {-16.5, -16.0, -15.5, -10.0, -5.0, -0.65};
}

}  // namespace rmrac

#pragma once

#include <string>
#include <vector>

#include "rmrac/scenario.hpp"

namespace rmrac {

// Built-in scenarios for the counterexample study: the damped second-order
// actuator zeta = 0.9912, omega_n = 15.1327 behind the stable plant
// 2/(s+1), reference model 3/(s+3), theta_max = 16.7, epsilon0 = 1.7.
//
//   rohrs_main         r = 0.3 + 1.85 sin(16.1 t), 1500 s
//   rohrs_unprotected  same input with the projection disabled (diverges)
//   rohrs_i            r = 0.3 + 2 sin(8 t), 60 s
//   rohrs_ii           r = 12 pulse for 1 s, 60 s
//   rohrs_iii          r = 10, 120 s
//   rohrs_iv           r = 2 sin(w t), w swept 16.1 -> 2 rad/s over 60 s
Scenario preset(const std::string& name);

std::vector<std::string> preset_names();

// The six documented case-(iv) initial parameter values theta(0); see the
// preset header comment in presets.cpp.
std::vector<double> rohrs_iv_initial_thetas();

}  // namespace rmrac

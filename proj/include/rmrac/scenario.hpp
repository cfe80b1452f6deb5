#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmrac/lti.hpp"
#include "rmrac/projection.hpp"
#include "rmrac/reference.hpp"
#include "rmrac/synthesis.hpp"

namespace rmrac {

// The dynamics between controller output and plant input: the identity
// (pass-through), the damped second-order family, or an arbitrary stable
// state-space triple. The second-order form keeps zeta/omega_n so condition
// reports can be produced; its realization is pinned at construction.
struct UnmodeledDynamics {
  enum class Form { PassThrough, SecondOrder, Custom };

  Form form = Form::PassThrough;
  double zeta = 0.0;
  double omega_n = 0.0;
  std::optional<StateSpace> ss;  // empty for pass-through

  static UnmodeledDynamics pass_through();
  static UnmodeledDynamics second_order(double zeta, double omega_n);
  static UnmodeledDynamics custom(StateSpace ss);

  bool is_pass_through() const { return form == Form::PassThrough; }
  std::size_t n() const { return ss ? ss->n() : 0; }

  // Throws unless A is Hurwitz (checked through the characteristic polynomial).
  void validate() const;
};

// Verification knobs carried alongside the physical scenario: the constants
// delta and alpha of the boundedness argument and the pole interval for the
// class check. Defaults: delta = 0.5 x_m_bar, alpha = epsilon0, interval
// [-a_bar, a_bar], Q = I.
struct AnalysisOptions {
  std::optional<double> delta;
  std::optional<double> alpha;
  std::optional<std::pair<double, double>> a_p_interval;
  int grid_points = 21;

  SynthesisOptions synthesis() const {
    SynthesisOptions s;
    s.a_p_interval = a_p_interval;
    s.grid_points = grid_points;
    return s;
  }
};

struct Scenario {
  PlantSpec plant;
  UnmodeledDynamics unmodeled;
  ProjectionConfig cfg;
  ReferenceSignal signal;

  double x_p0 = 0.0;
  double x_m0 = 0.0;
  std::vector<double> x_eta0;  // sized to unmodeled.n() (resized with zeros on validate)
  double theta0 = 0.0;

  double t_end = 10.0;
  double dt = 1e-4;
  int stride = 10;
  bool projection_enabled = true;

  AnalysisOptions analysis;

  void validate();  // normalizes x_eta0 and throws on broken invariants

  double delta_default() const;  // analysis.delta or 0.5 * x_m_bar
  double alpha_default() const;  // analysis.alpha or epsilon0
};

// Membership verification for a scenario; fills the A-condition block when
// the unmodeled dynamics are the second-order family. Pass-through is a
// degenerate member: B-i reduces to a_p - k_p theta_max < 0.
MembershipReport verify_scenario(const Scenario& sc);

// Ledger for a scenario, using its reference r_max and initial conditions.
BoundLedger scenario_ledger(const Scenario& sc);

}  // namespace rmrac

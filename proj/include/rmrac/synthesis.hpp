#pragma once

#include <optional>
#include <utility>

#include "rmrac/lti.hpp"
#include "rmrac/projection.hpp"

namespace rmrac {

// First-order plant x_p' = a_p x_p + k_p v with pole magnitude bound a_bar,
// reference model x_m' = a_m x_m + k_m r, feedforward gain k_r.
struct PlantSpec {
  double a_p = 0.0;
  double a_bar = 0.0;  // >= |a_p|
  double k_p = 1.0;
  double a_m = -1.0;   // < 0
  double k_m = 1.0;
  double k_r = 1.0;

  static PlantSpec gain_matched(double a_p, double a_bar, double k_p, double a_m, double k_m);

  void validate() const;
};

// Stability-window conditions for the second-order unmodeled-dynamics family
// w_n^2 / (s^2 + 2 z w_n s + w_n^2). Pass/fail gates at the given a_p; the
// margins at a_p = +/- a_bar are reported alongside for the uncertainty
// interval. When k_p != 1 the gain variants apply:
//   (ii)  theta_max > a_p / k_p
//   (iii) theta_max < (a_p + theta_bar_star(a_p)) / k_p
struct ConditionReport {
  bool uses_gain_variant = false;
  bool a_i = false, a_ii = false, a_iii = false;
  double a_i_margin = 0.0;    // min(2 z w_n, w_n / 2 z) - a_p
  double a_ii_margin = 0.0;   // theta_max - a_p / k_p
  double a_iii_margin = 0.0;  // upper bound - theta_max
  double a_iii_upper = 0.0;   // (a_p + theta_bar_star) / k_p at the given a_p
  double theta_bar_star = 0.0;
  // the same three margins evaluated at a_p = -a_bar and +a_bar
  double a_i_margin_at[2] = {0.0, 0.0};
  double a_ii_margin_at[2] = {0.0, 0.0};
  double a_iii_margin_at[2] = {0.0, 0.0};
  bool all_pass() const { return a_i && a_ii && a_iii; }
};

// Membership verification against the admissible class: the fixed-gain loop
// must be Hurwitz over the plant-pole interval (B-i), the boundary strip must
// be thinner than the annulus (B-ii), and thin enough for the Lyapunov margin
// (B-iii).
struct MembershipReport {
  bool b_i = false, b_ii = false, b_iii = false;
  bool verdict = false;
  double b_i_min_margin = 0.0;  // min Routh first-column entry over the a_p grid
  double worst_a_p = 0.0;       // grid point with the smallest margin
  double lambda_Qmin = 0.0;
  double lambda_Pmax = 0.0;
  double lambda_Pmin = 0.0;
  double k_b_norm = 0.0;   // ||b_eta||
  double xi0 = 0.0;        // the value under test, c * epsilon0
  double xi0_max = 0.0;    // lambda_Qmin / (2 k lambda_Pmax)
  double epsilon0 = 0.0;
  std::optional<ConditionReport> conditions;  // present for the second-order family
};

// Every explicit constant of the boundedness argument, computable before any
// simulation. Signal-amplitude units unless noted.
struct BoundLedger {
  double k_eta = 0.0;     // ||G_eta||_inf
  double x_m_bar = 0.0;   // reference-model envelope bound
  double r_max = 0.0;
  double delta = 0.0;     // in (0, x_m_bar)
  double alpha = 0.0;     // in (0, epsilon0]
  double theta_star = 0.0;  // (a_m - a_p) / k_p
  double eta_slope = 0.0;   // |eta| <= eta_slope |e| + eta_offset
  double eta_offset = 0.0;
  double b0 = 0.0, b1 = 0.0;
  double c_bar = 0.0, c_bar2 = 0.0;
  double e0 = 0.0, e1 = 0.0, e_bar = 0.0;  // e_bar = max(e0, e1)
  double Delta_T = 0.0;     // delta / (b0 e_bar + b1)
  double Delta_T_B = 0.0;   // time to cross the annulus
  double Delta_T_BL = 0.0;  // max residence outside the strip before re-entry
  double lambda_Qmin = 0.0, lambda_Pmax = 0.0, k_b_norm = 0.0;
  double lambda_bar = 0.0;  // lambda_Qmin - 2 lambda_Pmax k xi0
  double x0 = 0.0;          // ultimate bound on ||x_bar|| in the strip
  double e2 = 0.0, e3 = 0.0, e_bar2 = 0.0, e_bar3 = 0.0;
  double final_bound() const;  // max(e_bar, e_bar2, e_bar3)
};

// Options shared by the verification ops. a_p_interval defaults to
// [-a_bar, a_bar]; the Rohrs presets pin it to the known pole.
struct SynthesisOptions {
  std::optional<std::pair<double, double>> a_p_interval;
  int grid_points = 21;
  std::optional<Matrix> Q;  // defaults to identity
};

// Strict lower bound a_bar + |a_m| for theta_max_prime.
double theta_max_prime_lower(double a_bar, double a_m);

// (2 z w_n - a_p)(1 - 2 z a_p / w_n): width of the admissible theta_max
// window above a_p for the second-order family.
double theta_bar_star(double zeta, double omega_n, double a_p);

ConditionReport check_conditions_A(double zeta, double omega_n, const PlantSpec& plant,
                                   double theta_max);

// (n+1)x(n+1) closed-loop matrix [[a_p, c^T], [-b k_p theta_max, A]]; its
// characteristic polynomial equals closed_loop_qc of the realized dynamics.
Matrix build_Abar(const PlantSpec& plant, const StateSpace& unmodeled, double theta_max);

MembershipReport check_membership(const PlantSpec& plant, const StateSpace& unmodeled,
                                  double theta_max, double epsilon0, double c,
                                  const SynthesisOptions& opts = {});

// lambda_bar = lambda_Qmin - 2 lambda_Pmax k xi0 must be positive, else the
// strip is too thick and this throws; x0 = 2 lambda_Pmax ||b_bar|| r_max / lambda_bar.
double x0_bound(double lambda_Pmax, double b_bar_norm, double r_max, double lambda_Qmin,
                double k, double xi0);

// Assembles the full ledger. `unmodeled` may be null for the pass-through
// case G_eta == 1 (then the loop matrix degenerates to [a_p - k_p theta_max]).
BoundLedger bound_ledger(const PlantSpec& plant, const StateSpace* unmodeled,
                         const ProjectionConfig& cfg, double r_max, double x_p_init,
                         double x_m_init, double delta, double alpha,
                         const SynthesisOptions& opts = {});

}  // namespace rmrac

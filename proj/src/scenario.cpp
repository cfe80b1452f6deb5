#include "rmrac/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace rmrac {

UnmodeledDynamics UnmodeledDynamics::pass_through() { return UnmodeledDynamics{}; }

UnmodeledDynamics UnmodeledDynamics::second_order(double zeta, double omega_n) {
  if (!(zeta > 0.0 && omega_n > 0.0))
    throw std::invalid_argument("unmodeled: zeta and omega_n must be > 0");
  UnmodeledDynamics u;
  u.form = Form::SecondOrder;
  u.zeta = zeta;
  u.omega_n = omega_n;
  const double wn2 = omega_n * omega_n;
  u.ss = realize_controllable(
      TransferFunction(Polynomial({wn2}), Polynomial({1.0, 2.0 * zeta * omega_n, wn2})));
  return u;
}

UnmodeledDynamics UnmodeledDynamics::custom(StateSpace ss) {
  UnmodeledDynamics u;
  u.form = Form::Custom;
  u.ss = std::move(ss);
  u.validate();
  return u;
}

void UnmodeledDynamics::validate() const {
  if (is_pass_through()) return;
  if (!ss || ss->n() == 0) throw std::invalid_argument("unmodeled: missing state space");
  if (!roots_in_lhp(char_poly(ss->A)).hurwitz)
    throw std::invalid_argument("unmodeled: A_eta must be Hurwitz");
}

void Scenario::validate() {
  plant.validate();
  cfg.validate();
  signal.validate();
  unmodeled.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("scenario: dt must be > 0");
  if (!(t_end > 0.0)) throw std::invalid_argument("scenario: t_end must be > 0");
  if (stride < 1) throw std::invalid_argument("scenario: stride must be >= 1");
  if (projection_enabled && std::abs(theta0) > cfg.theta_max + 1e-12)
    throw std::invalid_argument("scenario: |theta(0)| must be <= theta_max when projection is on");
  if (x_eta0.empty()) x_eta0.assign(unmodeled.n(), 0.0);
  if (x_eta0.size() != unmodeled.n())
    throw std::invalid_argument("scenario: x_eta(0) dimension mismatch");
  if (analysis.delta && !(*analysis.delta > 0.0))
    throw std::invalid_argument("scenario: delta must be > 0");
  if (analysis.alpha && !(*analysis.alpha > 0.0 && *analysis.alpha <= cfg.epsilon0))
    throw std::invalid_argument("scenario: alpha must lie in (0, epsilon0]");
  if (analysis.grid_points < 1) throw std::invalid_argument("scenario: grid_points must be >= 1");
}

double Scenario::delta_default() const {
  if (analysis.delta) return *analysis.delta;
  const double x_m_bar =
      std::abs(x_m0) + std::abs(plant.k_m) * signal.r_max() / std::abs(plant.a_m);
  return 0.5 * x_m_bar;
}

double Scenario::alpha_default() const { return analysis.alpha.value_or(cfg.epsilon0); }

MembershipReport verify_scenario(const Scenario& sc) {
  if (sc.unmodeled.is_pass_through()) {
    // G_eta == 1: q_c = (s - a_p) + k_p theta_max, a first-order check
    MembershipReport rep;
    rep.epsilon0 = sc.cfg.epsilon0;
    rep.xi0 = sc.cfg.xi0;
    const SynthesisOptions opts = sc.analysis.synthesis();
    const double lo = opts.a_p_interval ? opts.a_p_interval->first : -sc.plant.a_bar;
    const double hi = opts.a_p_interval ? opts.a_p_interval->second : sc.plant.a_bar;
    const int pts = std::max(1, opts.grid_points);
    rep.b_i = true;
    bool first = true;
    for (int i = 0; i < pts; ++i) {
      const double a_p = pts == 1 ? lo : lo + (hi - lo) * i / (pts - 1);
      const double margin = sc.plant.k_p * sc.cfg.theta_max - a_p;
      if (!(margin > 0.0)) rep.b_i = false;
      if (first || margin < rep.b_i_min_margin) {
        rep.b_i_min_margin = margin;
        rep.worst_a_p = a_p;
        first = false;
      }
    }
    rep.k_b_norm = std::abs(sc.plant.k_p);
    rep.b_ii = rep.xi0 < rep.epsilon0;
    if (rep.b_i) {
      const double pole = rep.worst_a_p - sc.plant.k_p * sc.cfg.theta_max;
      rep.lambda_Qmin = 1.0;
      rep.lambda_Pmax = rep.lambda_Pmin = 1.0 / (2.0 * std::abs(pole));
      rep.xi0_max = rep.lambda_Qmin / (2.0 * rep.k_b_norm * rep.lambda_Pmax);
      rep.b_iii = rep.xi0 < rep.xi0_max;
    }
    rep.verdict = rep.b_i && rep.b_ii && rep.b_iii;
    return rep;
  }

  MembershipReport rep = check_membership(sc.plant, *sc.unmodeled.ss, sc.cfg.theta_max,
                                          sc.cfg.epsilon0, sc.cfg.c, sc.analysis.synthesis());
  if (sc.unmodeled.form == UnmodeledDynamics::Form::SecondOrder)
    rep.conditions =
        check_conditions_A(sc.unmodeled.zeta, sc.unmodeled.omega_n, sc.plant, sc.cfg.theta_max);
  return rep;
}

BoundLedger scenario_ledger(const Scenario& sc) {
  const StateSpace* ss = sc.unmodeled.is_pass_through() ? nullptr : &*sc.unmodeled.ss;
  return bound_ledger(sc.plant, ss, sc.cfg, sc.signal.r_max(), sc.x_p0, sc.x_m0,
                      sc.delta_default(), sc.alpha_default(), sc.analysis.synthesis());
}

}  // namespace rmrac

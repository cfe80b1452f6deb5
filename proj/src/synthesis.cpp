#include "rmrac/synthesis.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rmrac {

PlantSpec PlantSpec::gain_matched(double a_p, double a_bar, double k_p, double a_m, double k_m) {
  PlantSpec p;
  p.a_p = a_p;
  p.a_bar = a_bar;
  p.k_p = k_p;
  p.a_m = a_m;
  p.k_m = k_m;
  p.k_r = k_m / k_p;
  p.validate();
  return p;
}

void PlantSpec::validate() const {
  if (!(a_m < 0.0)) throw std::invalid_argument("plant: a_m must be < 0");
  if (k_p == 0.0) throw std::invalid_argument("plant: k_p must be nonzero");
  if (!(a_bar >= std::abs(a_p)))
    throw std::invalid_argument("plant: a_bar must be >= |a_p|");
}

double BoundLedger::final_bound() const { return std::max({e_bar, e_bar2, e_bar3}); }

double theta_max_prime_lower(double a_bar, double a_m) {
  if (a_bar < 0.0) throw std::invalid_argument("theta_max_prime_lower: a_bar must be >= 0");
  return a_bar + std::abs(a_m);
}

double theta_bar_star(double zeta, double omega_n, double a_p) {
  if (!(zeta > 0.0 && omega_n > 0.0))
    throw std::invalid_argument("theta_bar_star: zeta and omega_n must be > 0");
  return (2.0 * zeta * omega_n - a_p) * (1.0 - 2.0 * zeta * a_p / omega_n);
}

namespace {

struct ConditionMargins {
  double i, ii, iii;
};

ConditionMargins margins_at(double zeta, double omega_n, double a_p, double k_p,
                            double theta_max) {
  ConditionMargins m;
  m.i = std::min(2.0 * zeta * omega_n, omega_n / (2.0 * zeta)) - a_p;
  m.ii = theta_max - a_p / k_p;
  m.iii = (a_p + theta_bar_star(zeta, omega_n, a_p)) / k_p - theta_max;
  return m;
}

}  // namespace

ConditionReport check_conditions_A(double zeta, double omega_n, const PlantSpec& plant,
                                   double theta_max) {
  if (!(zeta > 0.0 && omega_n > 0.0))
    throw std::invalid_argument("check_conditions_A: zeta and omega_n must be > 0");
  ConditionReport rep;
  rep.uses_gain_variant = plant.k_p != 1.0;
  rep.theta_bar_star = theta_bar_star(zeta, omega_n, plant.a_p);
  rep.a_iii_upper = (plant.a_p + rep.theta_bar_star) / plant.k_p;

  const ConditionMargins m = margins_at(zeta, omega_n, plant.a_p, plant.k_p, theta_max);
  rep.a_i_margin = m.i;
  rep.a_ii_margin = m.ii;
  rep.a_iii_margin = m.iii;
  rep.a_i = m.i > 0.0;
  rep.a_ii = m.ii > 0.0;
  rep.a_iii = m.iii > 0.0;

  const double ends[2] = {-plant.a_bar, plant.a_bar};
  for (int s = 0; s < 2; ++s) {
    const ConditionMargins me = margins_at(zeta, omega_n, ends[s], plant.k_p, theta_max);
    rep.a_i_margin_at[s] = me.i;
    rep.a_ii_margin_at[s] = me.ii;
    rep.a_iii_margin_at[s] = me.iii;
  }
  return rep;
}

Matrix build_Abar(const PlantSpec& plant, const StateSpace& unmodeled, double theta_max) {
  const std::size_t n = unmodeled.n();
  Matrix M(n + 1, n + 1);
  M(0, 0) = plant.a_p;
  for (std::size_t j = 0; j < n; ++j) M(0, 1 + j) = unmodeled.c[j];
  for (std::size_t i = 0; i < n; ++i) M(1 + i, 0) = -unmodeled.b[i] * plant.k_p * theta_max;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(1 + i, 1 + j) = unmodeled.A(i, j);
  return M;
}

namespace {

std::pair<double, double> interval_from(const PlantSpec& plant, const SynthesisOptions& opts) {
  if (opts.a_p_interval) {
    const auto [lo, hi] = *opts.a_p_interval;
    if (lo > hi) throw std::invalid_argument("synthesis: a_p interval lower bound exceeds upper");
    return {lo, hi};
  }
  return {-plant.a_bar, plant.a_bar};
}

Matrix q_matrix(std::size_t dim, const SynthesisOptions& opts) {
  if (!opts.Q) return Matrix::identity(dim);
  if (opts.Q->rows() != dim || opts.Q->cols() != dim)
    throw std::invalid_argument("synthesis: Q dimension mismatch");
  return *opts.Q;
}

}  // namespace

MembershipReport check_membership(const PlantSpec& plant, const StateSpace& unmodeled,
                                  double theta_max, double epsilon0, double c,
                                  const SynthesisOptions& opts) {
  if (!(epsilon0 > 0.0)) throw std::invalid_argument("check_membership: epsilon0 must be > 0");
  MembershipReport rep;
  rep.epsilon0 = epsilon0;
  rep.xi0 = c * epsilon0;

  const TransferFunction g_eta = ss_to_tf(unmodeled);
  const auto [lo, hi] = interval_from(plant, opts);
  const int pts = std::max(1, opts.grid_points);

  // B-i: q_c Hurwitz across the pole interval; track the worst margin
  rep.b_i = true;
  bool first = true;
  for (int i = 0; i < pts; ++i) {
    const double a_p = pts == 1 ? lo : lo + (hi - lo) * i / (pts - 1);
    const Polynomial qc = closed_loop_qc(g_eta.den, g_eta.num, a_p, plant.k_p, theta_max);
    const RouthReport routh = roots_in_lhp(qc);
    if (!routh.hurwitz) rep.b_i = false;
    if (first || routh.margin < rep.b_i_min_margin) {
      rep.b_i_min_margin = routh.margin;
      rep.worst_a_p = a_p;
      first = false;
    }
  }

  rep.k_b_norm = norm2(unmodeled.b);
  rep.b_ii = rep.xi0 < epsilon0;

  if (rep.b_i) {
    const Matrix Abar = build_Abar(plant, unmodeled, theta_max);
    // pole value with the thinnest Hurwitz margin decides P
    PlantSpec worst = plant;
    worst.a_p = rep.worst_a_p;
    worst.a_bar = std::max(plant.a_bar, std::abs(rep.worst_a_p));
    const Matrix Aw = build_Abar(worst, unmodeled, theta_max);
    const Matrix Q = q_matrix(Aw.rows(), opts);
    const Matrix P = lyapunov_solve(Aw, Q);
    const auto [qmin, qmax] = sym_eig_extrema(Q);
    const auto [pmin, pmax] = sym_eig_extrema(P);
    (void)qmax;
    rep.lambda_Qmin = qmin;
    rep.lambda_Pmax = pmax;
    rep.lambda_Pmin = pmin;
    if (!(pmin > 0.0))
      throw std::runtime_error("check_membership: Lyapunov solution is not positive definite");
    rep.xi0_max = rep.lambda_Qmin / (2.0 * rep.k_b_norm * rep.lambda_Pmax);
    rep.b_iii = rep.xi0 < rep.xi0_max;
    (void)Abar;
  } else {
    rep.b_iii = false;
  }

  rep.verdict = rep.b_i && rep.b_ii && rep.b_iii;
  return rep;
}

double x0_bound(double lambda_Pmax, double b_bar_norm, double r_max, double lambda_Qmin,
                double k, double xi0) {
  const double lambda_bar = lambda_Qmin - 2.0 * lambda_Pmax * k * xi0;
  if (!(lambda_bar > 0.0))
    throw std::runtime_error("x0_bound: lambda_bar <= 0 (xi0 violates the Lyapunov margin)");
  return 2.0 * lambda_Pmax * b_bar_norm * r_max / lambda_bar;
}

BoundLedger bound_ledger(const PlantSpec& plant, const StateSpace* unmodeled,
                         const ProjectionConfig& cfg, double r_max, double x_p_init,
                         double x_m_init, double delta, double alpha,
                         const SynthesisOptions& opts) {
  cfg.validate();
  plant.validate();
  BoundLedger led;
  led.r_max = r_max;

  led.k_eta = unmodeled ? hinf_norm(ss_to_tf(*unmodeled)) : 1.0;
  // envelope |x_m(0)| e^{a_m t} + k_m r_max / |a_m|, maximized at t = 0
  led.x_m_bar = std::abs(x_m_init) + std::abs(plant.k_m) * r_max / std::abs(plant.a_m);

  if (!(delta > 0.0 && delta < led.x_m_bar))
    throw std::invalid_argument("bound_ledger: delta must lie in (0, x_m_bar)");
  if (!(alpha > 0.0 && alpha <= cfg.epsilon0))
    throw std::invalid_argument("bound_ledger: alpha must lie in (0, epsilon0]");
  led.delta = delta;
  led.alpha = alpha;

  led.theta_star = (plant.a_m - plant.a_p) / plant.k_p;
  led.eta_slope = (led.k_eta + 1.0) * cfg.theta_max;
  led.eta_offset = (led.k_eta + 1.0) * (cfg.theta_max * led.x_m_bar + r_max);

  led.b0 = std::abs(plant.a_m) + (led.k_eta + 2.0) * cfg.theta_max + std::abs(led.theta_star);
  led.b1 = ((led.k_eta + 2.0) * cfg.theta_max + std::abs(led.theta_star)) * led.x_m_bar +
           (led.k_eta + 2.0) * r_max;

  led.c_bar = (2.0 * cfg.theta_max_prime + alpha + cfg.epsilon0 / cfg.c) / (delta * cfg.gamma);
  led.e0 = std::abs(x_p_init) + led.x_m_bar + 2.0 * delta;
  led.e1 = 0.5 * (led.c_bar * led.b0 +
                  std::sqrt(led.c_bar * led.c_bar * led.b0 * led.b0 + 4.0 * led.c_bar * led.b1));
  led.e_bar = std::max(led.e0, led.e1);

  led.Delta_T = delta / (led.b0 * led.e_bar + led.b1);
  assert(led.Delta_T * led.b0 < 1.0);

  const double drive = cfg.gamma * (led.e_bar - 2.0 * delta) * (led.e_bar - 2.0 * delta - led.x_m_bar);
  led.Delta_T_B = (2.0 * cfg.theta_max - cfg.epsilon0 + alpha) / drive;
  led.Delta_T_BL = (1.0 - cfg.c) * cfg.epsilon0 / (cfg.c * drive);

  // Lyapunov side: P for the fixed-gain loop at the worst-case pole
  Matrix Abar(1, 1);
  double b_bar_norm;
  if (unmodeled) {
    const TransferFunction g_eta = ss_to_tf(*unmodeled);
    const auto [lo, hi] = interval_from(plant, opts);
    const int pts = std::max(1, opts.grid_points);
    double worst_a_p = lo;
    double worst_margin = 0.0;
    bool first = true;
    for (int i = 0; i < pts; ++i) {
      const double a_p = pts == 1 ? lo : lo + (hi - lo) * i / (pts - 1);
      const RouthReport routh =
          roots_in_lhp(closed_loop_qc(g_eta.den, g_eta.num, a_p, plant.k_p, cfg.theta_max));
      if (first || routh.margin < worst_margin) {
        worst_margin = routh.margin;
        worst_a_p = a_p;
        first = false;
      }
    }
    PlantSpec worst = plant;
    worst.a_p = worst_a_p;
    worst.a_bar = std::max(plant.a_bar, std::abs(worst_a_p));
    Abar = build_Abar(worst, *unmodeled, cfg.theta_max);
    led.k_b_norm = norm2(unmodeled->b);
    b_bar_norm = led.k_b_norm;
  } else {
    // pass-through G_eta == 1: loop collapses to x_p' = (a_p - k_p theta_max) x_p + ...
    Abar(0, 0) = plant.a_p - plant.k_p * cfg.theta_max;
    led.k_b_norm = std::abs(plant.k_p);
    b_bar_norm = std::abs(plant.k_p * plant.k_r);
  }
  const Matrix Q = q_matrix(Abar.rows(), opts);
  const Matrix P = lyapunov_solve(Abar, Q);
  const auto [qmin, qmax] = sym_eig_extrema(Q);
  const auto [pmin, pmax] = sym_eig_extrema(P);
  (void)qmax;
  (void)pmin;
  led.lambda_Qmin = qmin;
  led.lambda_Pmax = pmax;
  led.lambda_bar = led.lambda_Qmin - 2.0 * led.lambda_Pmax * led.k_b_norm * cfg.xi0;
  led.x0 = x0_bound(led.lambda_Pmax, b_bar_norm, r_max, led.lambda_Qmin, led.k_b_norm, cfg.xi0);

  led.e_bar2 = led.x0 + led.x_m_bar;
  led.e2 = 2.0 * led.x_m_bar + 2.0 * delta;
  led.c_bar2 = (1.0 - cfg.c) * cfg.epsilon0 / (delta * cfg.gamma * cfg.c);
  led.e3 = 0.5 * (led.c_bar2 * led.b0 +
                  std::sqrt(led.c_bar2 * led.c_bar2 * led.b0 * led.b0 + 4.0 * led.c_bar2 * led.b1));
  led.e_bar3 = std::max(led.e2, led.e3);
  return led;
}

}  // namespace rmrac

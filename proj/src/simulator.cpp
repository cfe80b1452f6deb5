#include "rmrac/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rmrac {

namespace {

constexpr double kBlowup = 1e9;

struct Rig {
  const Scenario& sc;
  const StateSpace* eta;  // null for pass-through
  std::size_t n;          // unmodeled order
  std::size_t dim;        // n + 3
  bool freeze_theta;

  // state layout: [x_p, x_eta..., x_m, theta]
  void rhs(const std::vector<double>& s, double r, std::vector<double>& ds) const {
    const double x_p = s[0];
    const double x_m = s[n + 1];
    double th = s[n + 2];
    if (sc.projection_enabled && !freeze_theta)
      th = std::clamp(th, -sc.cfg.theta_max, sc.cfg.theta_max);

    const double u = th * x_p + sc.plant.k_r * r;
    double v;
    if (eta) {
      v = 0.0;
      for (std::size_t i = 0; i < n; ++i) v += eta->c[i] * s[1 + i];
    } else {
      v = u;
    }

    ds[0] = sc.plant.a_p * x_p + sc.plant.k_p * v;
    if (eta) {
      for (std::size_t i = 0; i < n; ++i) {
        double acc = eta->b[i] * u;
        for (std::size_t j = 0; j < n; ++j) acc += eta->A(i, j) * s[1 + j];
        ds[1 + i] = acc;
      }
    }
    ds[n + 1] = sc.plant.a_m * x_m + sc.plant.k_m * r;

    if (freeze_theta) {
      ds[n + 2] = 0.0;
    } else {
      const double e = x_p - x_m;
      ds[n + 2] = sc.projection_enabled ? theta_dot(th, e, x_p, sc.cfg)
                                        : -sc.cfg.gamma * e * x_p;
    }
  }
};

SimTrace run(const Scenario& sc, bool freeze_theta, double theta_fixed) {
  Rig rig{sc, sc.unmodeled.is_pass_through() ? nullptr : &*sc.unmodeled.ss,
          sc.unmodeled.n(), sc.unmodeled.n() + 3, freeze_theta};

  SimTrace tr;
  tr.dt = sc.dt;
  tr.stride = sc.stride;

  const long steps = static_cast<long>(std::floor(sc.t_end / sc.dt + 1e-9));
  const std::size_t reserve = static_cast<std::size_t>(steps / sc.stride) + 2;
  for (auto* col : {&tr.t, &tr.r, &tr.u, &tr.v, &tr.x_p, &tr.x_m, &tr.e, &tr.theta})
    col->reserve(reserve);
  tr.region.reserve(reserve);

  std::vector<double> s(rig.dim, 0.0);
  s[0] = sc.x_p0;
  for (std::size_t i = 0; i < rig.n; ++i) s[1 + i] = sc.x_eta0[i];
  s[rig.n + 1] = sc.x_m0;
  s[rig.n + 2] = freeze_theta ? theta_fixed : sc.theta0;

  std::vector<double> k1(rig.dim), k2(rig.dim), k3(rig.dim), k4(rig.dim), tmp(rig.dim);

  auto store = [&](double t) {
    const double r = sc.signal.eval(t);
    const double x_p = s[0], x_m = s[rig.n + 1], th = s[rig.n + 2];
    const double u = th * x_p + sc.plant.k_r * r;
    double v = u;
    if (rig.eta) {
      v = 0.0;
      for (std::size_t i = 0; i < rig.n; ++i) v += rig.eta->c[i] * s[1 + i];
    }
    tr.t.push_back(t);
    tr.r.push_back(r);
    tr.u.push_back(u);
    tr.v.push_back(v);
    tr.x_p.push_back(x_p);
    tr.x_m.push_back(x_m);
    tr.e.push_back(x_p - x_m);
    tr.theta.push_back(th);
    tr.region.push_back(region_of(th, sc.cfg));
  };

  const double dt = sc.dt;
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (k % sc.stride == 0) store(t);
    if (k == steps) break;

    rig.rhs(s, sc.signal.eval(t), k1);
    for (std::size_t i = 0; i < rig.dim; ++i) tmp[i] = s[i] + 0.5 * dt * k1[i];
    rig.rhs(tmp, sc.signal.eval(t + 0.5 * dt), k2);
    for (std::size_t i = 0; i < rig.dim; ++i) tmp[i] = s[i] + 0.5 * dt * k2[i];
    rig.rhs(tmp, sc.signal.eval(t + 0.5 * dt), k3);
    for (std::size_t i = 0; i < rig.dim; ++i) tmp[i] = s[i] + dt * k3[i];
    rig.rhs(tmp, sc.signal.eval(t + dt), k4);
    for (std::size_t i = 0; i < rig.dim; ++i)
      s[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);

    if (sc.projection_enabled && !freeze_theta) {
      double& th = s[rig.n + 2];
      if (std::abs(th) > sc.cfg.theta_max) {
        th = std::clamp(th, -sc.cfg.theta_max, sc.cfg.theta_max);
        ++tr.clamp_events;
      }
    }

    bool bad = false;
    for (double si : s)
      if (!std::isfinite(si) || std::abs(si) > kBlowup) bad = true;
    if (bad) {
      tr.diverged = true;
      tr.divergence_time = t + dt;
      tr.max_abs_e_at_divergence = tr.max_abs_e();
      break;
    }
  }
  return tr;
}

}  // namespace

double SimTrace::max_abs_e() const {
  double m = 0.0;
  for (double ev : e)
    if (std::isfinite(ev)) m = std::max(m, std::abs(ev));
  return m;
}

double SimTrace::max_abs_theta() const {
  double m = 0.0;
  for (double tv : theta)
    if (std::isfinite(tv)) m = std::max(m, std::abs(tv));
  return m;
}

SimTrace simulate(const Scenario& sc) { return run(sc, false, 0.0); }

SimTrace simulate_fixed_theta(const Scenario& sc, double theta_fixed) {
  return run(sc, true, theta_fixed);
}

void write_trace_csv(const SimTrace& trace, std::ostream& os) {
  os << "t,r,u,v,x_p,x_m,e,theta,region\n";
  char buf[256];
  for (std::size_t i = 0; i < trace.samples(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%s\n",
                  trace.t[i], trace.r[i], trace.u[i], trace.v[i], trace.x_p[i], trace.x_m[i],
                  trace.e[i], trace.theta[i], to_string(trace.region[i]));
    os << buf;
  }
}

void write_trace_csv(const SimTrace& trace, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open trace file for writing: " + path);
  write_trace_csv(trace, f);
  if (!f.good()) throw std::runtime_error("error while writing trace file: " + path);
}

SimTrace read_trace_csv(std::istream& is, const ProjectionConfig& cfg) {
  SimTrace tr;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("trace csv: empty file");
  if (line.rfind("t,r,u,v,x_p,x_m,e,theta", 0) != 0)
    throw std::runtime_error("trace csv: unexpected header: " + line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double vals[8];
    std::string cell;
    for (int c = 0; c < 8; ++c) {
      if (!std::getline(ls, cell, ',')) throw std::runtime_error("trace csv: short row: " + line);
      vals[c] = std::stod(cell);
    }
    tr.t.push_back(vals[0]);
    tr.r.push_back(vals[1]);
    tr.u.push_back(vals[2]);
    tr.v.push_back(vals[3]);
    tr.x_p.push_back(vals[4]);
    tr.x_m.push_back(vals[5]);
    tr.e.push_back(vals[6]);
    tr.theta.push_back(vals[7]);
    tr.region.push_back(region_of(vals[7], cfg));
  }
  if (tr.samples() >= 2) tr.dt = tr.t[1] - tr.t[0];
  return tr;
}

SimTrace read_trace_csv(const std::string& path, const ProjectionConfig& cfg) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open trace file: " + path);
  return read_trace_csv(f, cfg);
}

}  // namespace rmrac

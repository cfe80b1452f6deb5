#include "rmrac/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rmrac {

using nlohmann::json;

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* ctx) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw std::invalid_argument(std::string("scenario: unknown key \"") + key + "\" in " + ctx);
  }
}

double num_at(const json& j, const char* key, const char* ctx) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("scenario: missing \"") + key + "\" in " + ctx);
  if (!j.at(key).is_number())
    throw std::invalid_argument(std::string("scenario: \"") + key + "\" must be a number in " + ctx);
  return j.at(key).get<double>();
}

double num_or(const json& j, const char* key, double def) {
  if (!j.contains(key)) return def;
  return j.at(key).get<double>();
}

StateSpace state_space_from(const json& j) {
  check_keys(j, {"kind", "A", "b", "c"}, "unmodeled");
  const auto rows = j.at("A").get<std::vector<std::vector<double>>>();
  const auto b = j.at("b").get<std::vector<double>>();
  const auto c = j.at("c").get<std::vector<double>>();
  const std::size_t n = rows.size();
  Matrix A(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("scenario: unmodeled A must be square");
    for (std::size_t k = 0; k < n; ++k) A(i, k) = rows[i][k];
  }
  return StateSpace(std::move(A), b, c);
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario: invalid JSON: ") + e.what());
  }
  check_keys(j, {"plant", "unmodeled", "projection", "reference", "initial", "integration",
                 "analysis"},
             "top level");

  Scenario sc;
  {
    const json& p = j.at("plant");
    check_keys(p, {"a_p", "a_bar", "k_p", "a_m", "k_m", "k_r"}, "plant");
    sc.plant.a_p = num_at(p, "a_p", "plant");
    sc.plant.a_bar = num_at(p, "a_bar", "plant");
    sc.plant.k_p = num_or(p, "k_p", 1.0);
    sc.plant.a_m = num_at(p, "a_m", "plant");
    sc.plant.k_m = num_or(p, "k_m", 1.0);
    sc.plant.k_r = p.contains("k_r") ? p.at("k_r").get<double>() : sc.plant.k_m / sc.plant.k_p;
  }
  {
    const json& u = j.at("unmodeled");
    const std::string kind = u.at("kind").get<std::string>();
    if (kind == "pass_through") {
      check_keys(u, {"kind"}, "unmodeled");
      sc.unmodeled = UnmodeledDynamics::pass_through();
    } else if (kind == "second_order") {
      check_keys(u, {"kind", "zeta", "omega_n"}, "unmodeled");
      sc.unmodeled =
          UnmodeledDynamics::second_order(num_at(u, "zeta", "unmodeled"), num_at(u, "omega_n", "unmodeled"));
    } else if (kind == "state_space") {
      sc.unmodeled = UnmodeledDynamics::custom(state_space_from(u));
    } else {
      throw std::invalid_argument("scenario: unknown unmodeled kind \"" + kind + "\"");
    }
  }
  {
    const json& p = j.at("projection");
    check_keys(p, {"theta_max_prime", "epsilon0", "c", "xi0", "gamma", "enabled"}, "projection");
    const double prime = num_at(p, "theta_max_prime", "projection");
    const double eps0 = num_at(p, "epsilon0", "projection");
    double c = num_or(p, "c", 0.5);
    if (p.contains("xi0")) {
      const double xi0 = p.at("xi0").get<double>();
      if (p.contains("c") && std::abs(c * eps0 - xi0) > 1e-12 * eps0)
        throw std::invalid_argument("scenario: projection c and xi0 are inconsistent");
      c = xi0 / eps0;
    }
    sc.cfg = ProjectionConfig::make(prime, eps0, c, num_or(p, "gamma", 1.0));
    sc.projection_enabled = p.contains("enabled") ? p.at("enabled").get<bool>() : true;
  }
  {
    const json& r = j.at("reference");
    const std::string kind = r.at("kind").get<std::string>();
    if (kind == "constant") {
      check_keys(r, {"kind", "value"}, "reference");
      sc.signal = ReferenceSignal::constant(num_at(r, "value", "reference"));
    } else if (kind == "biased_sine") {
      check_keys(r, {"kind", "offset", "amplitude", "omega"}, "reference");
      sc.signal = ReferenceSignal::biased_sine(num_or(r, "offset", 0.0),
                                               num_at(r, "amplitude", "reference"),
                                               num_at(r, "omega", "reference"));
    } else if (kind == "pulse") {
      check_keys(r, {"kind", "level", "duration"}, "reference");
      sc.signal = ReferenceSignal::pulse(num_at(r, "level", "reference"),
                                         num_at(r, "duration", "reference"));
    } else if (kind == "chirp") {
      check_keys(r, {"kind", "offset", "amplitude", "omega_start", "omega_end", "sweep_duration"},
                 "reference");
      sc.signal = ReferenceSignal::chirp(num_or(r, "offset", 0.0), num_at(r, "amplitude", "reference"),
                                         num_at(r, "omega_start", "reference"),
                                         num_at(r, "omega_end", "reference"),
                                         num_at(r, "sweep_duration", "reference"));
    } else {
      throw std::invalid_argument("scenario: unknown reference kind \"" + kind + "\"");
    }
  }
  if (j.contains("initial")) {
    const json& i = j.at("initial");
    check_keys(i, {"x_p", "x_m", "x_eta", "theta"}, "initial");
    sc.x_p0 = num_or(i, "x_p", 0.0);
    sc.x_m0 = num_or(i, "x_m", 0.0);
    sc.theta0 = num_or(i, "theta", 0.0);
    if (i.contains("x_eta")) sc.x_eta0 = i.at("x_eta").get<std::vector<double>>();
  }
  {
    const json& g = j.at("integration");
    check_keys(g, {"dt", "t_end", "stride"}, "integration");
    sc.dt = num_or(g, "dt", 1e-4);
    sc.t_end = num_at(g, "t_end", "integration");
    sc.stride = g.contains("stride") ? g.at("stride").get<int>() : 10;
  }
  if (j.contains("analysis")) {
    const json& a = j.at("analysis");
    check_keys(a, {"delta", "alpha", "a_p_interval", "grid_points"}, "analysis");
    if (a.contains("delta")) sc.analysis.delta = a.at("delta").get<double>();
    if (a.contains("alpha")) sc.analysis.alpha = a.at("alpha").get<double>();
    if (a.contains("a_p_interval")) {
      const auto iv = a.at("a_p_interval").get<std::vector<double>>();
      if (iv.size() != 2) throw std::invalid_argument("scenario: a_p_interval must be [lo, hi]");
      sc.analysis.a_p_interval = std::make_pair(iv[0], iv[1]);
    }
    if (a.contains("grid_points")) sc.analysis.grid_points = a.at("grid_points").get<int>();
  }
  sc.validate();
  return sc;
}

Scenario scenario_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return scenario_from_json(ss.str());
}

std::string scenario_to_json(const Scenario& sc) {
  json j;
  j["plant"] = {{"a_p", sc.plant.a_p}, {"a_bar", sc.plant.a_bar}, {"k_p", sc.plant.k_p},
                {"a_m", sc.plant.a_m}, {"k_m", sc.plant.k_m},     {"k_r", sc.plant.k_r}};
  switch (sc.unmodeled.form) {
    case UnmodeledDynamics::Form::PassThrough:
      j["unmodeled"] = {{"kind", "pass_through"}};
      break;
    case UnmodeledDynamics::Form::SecondOrder:
      j["unmodeled"] = {{"kind", "second_order"}, {"zeta", sc.unmodeled.zeta},
                        {"omega_n", sc.unmodeled.omega_n}};
      break;
    case UnmodeledDynamics::Form::Custom: {
      const StateSpace& ss = *sc.unmodeled.ss;
      std::vector<std::vector<double>> rows(ss.n(), std::vector<double>(ss.n()));
      for (std::size_t i = 0; i < ss.n(); ++i)
        for (std::size_t k = 0; k < ss.n(); ++k) rows[i][k] = ss.A(i, k);
      j["unmodeled"] = {{"kind", "state_space"}, {"A", rows}, {"b", ss.b}, {"c", ss.c}};
      break;
    }
  }
  j["projection"] = {{"theta_max_prime", sc.cfg.theta_max_prime},
                     {"epsilon0", sc.cfg.epsilon0},
                     {"c", sc.cfg.c},
                     {"gamma", sc.cfg.gamma},
                     {"enabled", sc.projection_enabled}};
  switch (sc.signal.kind) {
    case ReferenceSignal::Kind::Constant:
      j["reference"] = {{"kind", "constant"}, {"value", sc.signal.offset}};
      break;
    case ReferenceSignal::Kind::BiasedSine:
      j["reference"] = {{"kind", "biased_sine"}, {"offset", sc.signal.offset},
                        {"amplitude", sc.signal.amplitude}, {"omega", sc.signal.omega}};
      break;
    case ReferenceSignal::Kind::Pulse:
      j["reference"] = {{"kind", "pulse"}, {"level", sc.signal.level},
                        {"duration", sc.signal.duration}};
      break;
    case ReferenceSignal::Kind::Chirp:
      j["reference"] = {{"kind", "chirp"},
                        {"offset", sc.signal.offset},
                        {"amplitude", sc.signal.amplitude},
                        {"omega_start", sc.signal.omega_start},
                        {"omega_end", sc.signal.omega_end},
                        {"sweep_duration", sc.signal.sweep_duration}};
      break;
  }
  j["initial"] = {{"x_p", sc.x_p0}, {"x_m", sc.x_m0}, {"x_eta", sc.x_eta0}, {"theta", sc.theta0}};
  j["integration"] = {{"dt", sc.dt}, {"t_end", sc.t_end}, {"stride", sc.stride}};
  json a;
  if (sc.analysis.delta) a["delta"] = *sc.analysis.delta;
  if (sc.analysis.alpha) a["alpha"] = *sc.analysis.alpha;
  if (sc.analysis.a_p_interval)
    a["a_p_interval"] = {sc.analysis.a_p_interval->first, sc.analysis.a_p_interval->second};
  a["grid_points"] = sc.analysis.grid_points;
  j["analysis"] = a;
  return j.dump(2);
}

namespace {

json membership_json(const MembershipReport& rep) {
  json j{{"b_i", rep.b_i},
         {"b_ii", rep.b_ii},
         {"b_iii", rep.b_iii},
         {"verdict", rep.verdict},
         {"b_i_min_margin", rep.b_i_min_margin},
         {"worst_a_p", rep.worst_a_p},
         {"lambda_Qmin", rep.lambda_Qmin},
         {"lambda_Pmax", rep.lambda_Pmax},
         {"lambda_Pmin", rep.lambda_Pmin},
         {"k", rep.k_b_norm},
         {"xi0", rep.xi0},
         {"xi0_max", rep.xi0_max},
         {"epsilon0", rep.epsilon0}};
  return j;
}

json conditions_json(const ConditionReport& c) {
  return json{{"uses_gain_variant", c.uses_gain_variant},
              {"theta_bar_star", c.theta_bar_star},
              {"a_i", {{"pass", c.a_i}, {"margin", c.a_i_margin}}},
              {"a_ii", {{"pass", c.a_ii}, {"margin", c.a_ii_margin}}},
              {"a_iii", {{"pass", c.a_iii}, {"margin", c.a_iii_margin}, {"upper_bound", c.a_iii_upper}}},
              {"endpoint_margins",
               {{"minus_a_bar",
                 {{"a_i", c.a_i_margin_at[0]}, {"a_ii", c.a_ii_margin_at[0]}, {"a_iii", c.a_iii_margin_at[0]}}},
                {"plus_a_bar",
                 {{"a_i", c.a_i_margin_at[1]}, {"a_ii", c.a_ii_margin_at[1]}, {"a_iii", c.a_iii_margin_at[1]}}}}}};
}

json ledger_json(const BoundLedger& led) {
  return json{{"k_eta", led.k_eta},
              {"x_m_bar", led.x_m_bar},
              {"r_max", led.r_max},
              {"delta", led.delta},
              {"alpha", led.alpha},
              {"theta_star", led.theta_star},
              {"eta_slope", led.eta_slope},
              {"eta_offset", led.eta_offset},
              {"b0", led.b0},
              {"b1", led.b1},
              {"c_bar", led.c_bar},
              {"c_bar2", led.c_bar2},
              {"e0", led.e0},
              {"e1", led.e1},
              {"e_bar", led.e_bar},
              {"Delta_T", led.Delta_T},
              {"Delta_T_B", led.Delta_T_B},
              {"Delta_T_BL", led.Delta_T_BL},
              {"lambda_Qmin", led.lambda_Qmin},
              {"lambda_Pmax", led.lambda_Pmax},
              {"k", led.k_b_norm},
              {"lambda_bar", led.lambda_bar},
              {"x0", led.x0},
              {"e2", led.e2},
              {"e3", led.e3},
              {"e_bar2", led.e_bar2},
              {"e_bar3", led.e_bar3},
              {"final_bound", led.final_bound()}};
}

}  // namespace

std::string membership_to_json(const MembershipReport& rep) { return membership_json(rep).dump(2); }

std::string ledger_to_json(const BoundLedger& led) { return ledger_json(led).dump(2); }

std::string verify_report_json(const Scenario& sc, const MembershipReport& rep) {
  json j;
  j["verdict"] = rep.verdict;
  j["membership"] = membership_json(rep);
  j["conditions"] = rep.conditions ? conditions_json(*rep.conditions) : json(nullptr);
  try {
    j["ledger"] = ledger_json(scenario_ledger(sc));
  } catch (const std::exception& e) {
    j["ledger"] = nullptr;
    j["ledger_error"] = e.what();
  }
  return j.dump(2);
}

std::string trace_summary_json(const SimTrace& trace) {
  json j{{"samples", trace.samples()},
         {"diverged", trace.diverged},
         {"max_abs_e", trace.max_abs_e()},
         {"max_abs_theta", trace.max_abs_theta()},
         {"clamp_events", trace.clamp_events},
         {"dt", trace.dt},
         {"stride", trace.stride}};
  if (trace.diverged) {
    j["divergence_time"] = trace.divergence_time;
    j["max_abs_e_at_divergence"] = trace.max_abs_e_at_divergence;
  } else {
    j["divergence_time"] = nullptr;
  }
  return j.dump(2);
}

std::string timeline_to_json(const PhaseTimeline& tl) {
  json events = json::array();
  for (const auto& ev : tl.events) {
    json e{{"kind", to_string(ev.kind)}, {"t", ev.t}, {"e", ev.e_value}, {"theta", ev.theta_value}};
    if (!ev.role.empty()) e["role"] = ev.role;
    events.push_back(e);
  }
  json phases = json::array();
  for (const auto& ph : tl.phases)
    phases.push_back({{"label", ph.label},
                      {"t_start", ph.t_start},
                      {"t_end", ph.t_end},
                      {"max_abs_e", ph.max_abs_e}});
  json props = json::array();
  for (const auto& pc : tl.prop_checks)
    props.push_back({{"name", pc.name},
                     {"applicable", pc.applicable},
                     {"pass", pc.pass},
                     {"observed", pc.observed},
                     {"bound", pc.bound}});
  const LimitCycleSummary lc = detect_limit_cycle(tl);
  json lcj{{"found", lc.found}};
  if (lc.found) {
    lcj["period"] = lc.period;
    lcj["consistent_enters"] = lc.consistent_enters;
    lcj["first_enter_t"] = lc.first_enter_t;
    lcj["spread"] = lc.spread;
  }
  json tir;
  for (int r = 0; r < 5; ++r)
    tir[to_string(static_cast<ThetaRegion>(r))] = tl.time_in_region[static_cast<std::size_t>(r)];
  return json{{"events", events},
              {"phases", phases},
              {"proposition_checks", props},
              {"repeat_count", tl.repeat_count},
              {"max_abs_e", tl.max_abs_e},
              {"final_bound", tl.final_bound},
              {"final_bound_ok", tl.final_bound_ok},
              {"time_in_region", tir},
              {"limit_cycle", lcj}}
      .dump(2);
}

void write_timeline_csv(const SimTrace& trace, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open timeline csv for writing: " + path);
  f << "t,e,theta,region_code\n";
  char buf[128];
  for (std::size_t i = 0; i < trace.samples(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%d\n", trace.t[i], trace.e[i],
                  trace.theta[i], static_cast<int>(trace.region[i]));
    f << buf;
  }
  if (!f.good()) throw std::runtime_error("error while writing timeline csv: " + path);
}

}  // namespace rmrac

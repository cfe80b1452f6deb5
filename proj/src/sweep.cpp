#include "rmrac/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "rmrac/phases.hpp"

namespace rmrac {

std::size_t SweepGrid::points() const {
  std::size_t n = 1;
  for (const auto& [_, vals] : axes) n *= vals.size();
  return n;
}

Scenario apply_override(Scenario sc, const std::string& key, double value) {
  if (key == "theta0") sc.theta0 = value;
  else if (key == "x_p0") sc.x_p0 = value;
  else if (key == "x_m0") sc.x_m0 = value;
  else if (key == "gamma") sc.cfg.gamma = value;
  else if (key == "dt") sc.dt = value;
  else if (key == "t_end") sc.t_end = value;
  else throw std::invalid_argument("sweep: unknown override key \"" + key + "\"");
  return sc;
}

namespace {

int thread_cap(int max_threads) {
  if (max_threads <= 0) {
    if (const char* env = std::getenv("ROBUST_MRAC_THREADS")) {
      const int v = std::atoi(env);
      if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 4;
  }
  return max_threads;
}

SweepSummary run_point(const Scenario& base, std::size_t index,
                       const std::map<std::string, double>& overrides) {
  SweepSummary sum;
  sum.index = index;
  sum.overrides = overrides;
  try {
    Scenario sc = base;
    for (const auto& [k, v] : overrides) sc = apply_override(std::move(sc), k, v);
    sc.validate();
    const SimTrace tr = simulate(sc);
    sum.diverged = tr.diverged;
    sum.max_abs_e = tr.max_abs_e();
    sum.max_abs_theta = tr.max_abs_theta();
    if (tr.diverged) {
      sum.divergence_time = tr.divergence_time;
      sum.label = "diverged";
      sum.final_region = "OUTSIDE";
      return sum;
    }
    const auto runs = classify_trace(tr, sc.cfg);
    for (const auto& run : runs)
      if (run.region == ThetaRegion::BU || run.region == ThetaRegion::BL) sum.ever_entered_B = true;
    sum.final_region = to_string(runs.back().region);

    // reuse the event machinery for cycle detection only; the ledger fields
    // it needs are just e_bar/delta, irrelevant to boundary entries
    BoundLedger dummy;
    dummy.e_bar = 2.0;
    dummy.delta = 1.0;
    const PhaseTimeline tl = detect_phases(tr, dummy, sc.cfg);
    if (detect_limit_cycle(tl).found) sum.label = "limit_cycle";
    else sum.label = std::string("settled_in_") + sum.final_region;
  } catch (const std::exception& e) {
    sum.label = std::string("error: ") + e.what();
  }
  return sum;
}

}  // namespace

std::vector<SweepSummary> run_sweep(const Scenario& base, const SweepGrid& grid, int max_threads) {
  const std::size_t total = grid.points();
  std::vector<std::map<std::string, double>> pts(total);
  {
    std::size_t rep = total;
    for (const auto& [key, vals] : grid.axes) {
      rep /= vals.size();
      for (std::size_t i = 0; i < total; ++i)
        pts[i][key] = vals[(i / rep) % vals.size()];
    }
  }

  std::vector<SweepSummary> results(total);
  const int workers = std::min<int>(thread_cap(max_threads), static_cast<int>(total));
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) results[i] = run_point(base, i, pts[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
        results[i] = run_point(base, i, pts[i]);
    });
  for (auto& th : pool) th.join();
  return results;
}

std::string sweep_to_json(const std::vector<SweepSummary>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : results) {
    nlohmann::json j{{"index", s.index},
                     {"overrides", s.overrides},
                     {"final_region", s.final_region},
                     {"label", s.label},
                     {"ever_entered_B", s.ever_entered_B},
                     {"diverged", s.diverged},
                     {"max_abs_e", s.max_abs_e},
                     {"max_abs_theta", s.max_abs_theta}};
    if (s.diverged) j["divergence_time"] = s.divergence_time;
    arr.push_back(j);
  }
  return arr.dump(2);
}

SweepGrid sweep_grid_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sweep grid: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("sweep grid: expected an object of arrays");
  SweepGrid grid;
  for (const auto& [key, vals] : j.items()) {
    if (!vals.is_array() || vals.empty())
      throw std::invalid_argument("sweep grid: \"" + key + "\" must be a nonempty array");
    grid.axes[key] = vals.get<std::vector<double>>();
  }
  if (grid.axes.empty()) throw std::invalid_argument("sweep grid: no axes given");
  return grid;
}

}  // namespace rmrac

#include "rmrac/rmrac.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "rmrac/json_io.hpp"
#include "rmrac/phases.hpp"
#include "rmrac/presets.hpp"
#include "rmrac/scenario.hpp"
#include "rmrac/simulator.hpp"
#include "rmrac/sweep.hpp"

extern "C" {
struct rmrac_scenario {
  rmrac::Scenario impl;
};
struct rmrac_trace {
  rmrac::SimTrace impl;
};
struct rmrac_report {
  rmrac::MembershipReport impl;
};
struct rmrac_timeline {
  rmrac::PhaseTimeline impl;
};
}

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating C++ failures into status codes.
template <typename Fn>
rmrac_status_t guarded(rmrac_status_t failure_code, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return failure_code == RMRAC_OK ? RMRAC_ERR_INVALID_ARGUMENT : failure_code;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return failure_code == RMRAC_OK ? RMRAC_ERR_NUMERIC : failure_code;
  } catch (const std::exception& e) {
    set_error(e.what());
    return RMRAC_ERR_NUMERIC;
  }
}

}  // namespace

extern "C" {

const char* rmrac_version(void) { return "1.0.0"; }

const char* rmrac_status_name(rmrac_status_t status) {
  switch (status) {
    case RMRAC_OK: return "ok";
    case RMRAC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RMRAC_ERR_PARSE: return "parse error";
    case RMRAC_ERR_IO: return "i/o error";
    case RMRAC_ERR_NUMERIC: return "numeric error";
    case RMRAC_ERR_UNKNOWN_PRESET: return "unknown preset";
  }
  return "?";
}

const char* rmrac_last_error(void) { return g_last_error.c_str(); }

void rmrac_string_free(char* s) { delete[] s; }

rmrac_status_t rmrac_scenario_preset(const char* name, rmrac_scenario_t** out) {
  if (!name || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_UNKNOWN_PRESET, [&] {
    *out = new rmrac_scenario{rmrac::preset(name)};
    return RMRAC_OK;
  });
}

rmrac_status_t rmrac_scenario_parse_json(const char* json_text, rmrac_scenario_t** out) {
  if (!json_text || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_PARSE, [&] {
    *out = new rmrac_scenario{rmrac::scenario_from_json(json_text)};
    return RMRAC_OK;
  });
}

rmrac_status_t rmrac_scenario_load_file(const char* path, rmrac_scenario_t** out) {
  if (!path || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_PARSE, [&] {
    *out = new rmrac_scenario{rmrac::scenario_from_file(path)};
    return RMRAC_OK;
  });
}

char* rmrac_preset_names(void) {
  std::string joined;
  for (const auto& n : rmrac::preset_names()) {
    if (!joined.empty()) joined += ",";
    joined += n;
  }
  return dup_string(joined);
}

rmrac_status_t rmrac_scenario_set_number(rmrac_scenario_t* sc, const char* key, double value) {
  if (!sc || !key) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_INVALID_ARGUMENT, [&] {
    const std::string k = key;
    if (k == "stride") {
      if (value < 1.0) throw std::invalid_argument("stride must be >= 1");
      sc->impl.stride = static_cast<int>(value);
    } else {
      sc->impl = rmrac::apply_override(std::move(sc->impl), k, value);
    }
    sc->impl.validate();
    return RMRAC_OK;
  });
}

rmrac_status_t rmrac_scenario_set_projection_enabled(rmrac_scenario_t* sc, int enabled) {
  if (!sc) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  sc->impl.projection_enabled = enabled != 0;
  return RMRAC_OK;
}

char* rmrac_scenario_to_json(const rmrac_scenario_t* sc) {
  if (!sc) return nullptr;
  return dup_string(rmrac::scenario_to_json(sc->impl));
}

void rmrac_scenario_free(rmrac_scenario_t* sc) { delete sc; }

rmrac_status_t rmrac_verify(const rmrac_scenario_t* sc, rmrac_report_t** out) {
  if (!sc || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_OK, [&] {
    *out = new rmrac_report{rmrac::verify_scenario(sc->impl)};
    return RMRAC_OK;
  });
}

int rmrac_report_verdict(const rmrac_report_t* rep) { return rep && rep->impl.verdict ? 1 : 0; }

char* rmrac_report_to_json(const rmrac_scenario_t* sc, const rmrac_report_t* rep) {
  if (!sc || !rep) return nullptr;
  return dup_string(rmrac::verify_report_json(sc->impl, rep->impl));
}

void rmrac_report_free(rmrac_report_t* rep) { delete rep; }

rmrac_status_t rmrac_simulate(const rmrac_scenario_t* sc, rmrac_trace_t** out) {
  if (!sc || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_OK, [&] {
    *out = new rmrac_trace{rmrac::simulate(sc->impl)};
    return RMRAC_OK;
  });
}

rmrac_status_t rmrac_simulate_fixed_theta(const rmrac_scenario_t* sc, double theta_fixed,
                                          rmrac_trace_t** out) {
  if (!sc || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_OK, [&] {
    *out = new rmrac_trace{rmrac::simulate_fixed_theta(sc->impl, theta_fixed)};
    return RMRAC_OK;
  });
}

int rmrac_trace_diverged(const rmrac_trace_t* tr) { return tr && tr->impl.diverged ? 1 : 0; }

double rmrac_trace_divergence_time(const rmrac_trace_t* tr) {
  return tr ? tr->impl.divergence_time : 0.0;
}

long rmrac_trace_sample_count(const rmrac_trace_t* tr) {
  return tr ? static_cast<long>(tr->impl.samples()) : 0;
}

double rmrac_trace_max_abs_e(const rmrac_trace_t* tr) { return tr ? tr->impl.max_abs_e() : 0.0; }

double rmrac_trace_max_abs_theta(const rmrac_trace_t* tr) {
  return tr ? tr->impl.max_abs_theta() : 0.0;
}

char* rmrac_trace_summary_json(const rmrac_trace_t* tr) {
  if (!tr) return nullptr;
  return dup_string(rmrac::trace_summary_json(tr->impl));
}

rmrac_status_t rmrac_trace_write_csv(const rmrac_trace_t* tr, const char* path) {
  if (!tr || !path) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_IO, [&] {
    rmrac::write_trace_csv(tr->impl, path);
    return RMRAC_OK;
  });
}

rmrac_status_t rmrac_trace_load_csv(const char* path, const rmrac_scenario_t* sc,
                                    rmrac_trace_t** out) {
  if (!path || !sc || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_IO, [&] {
    *out = new rmrac_trace{rmrac::read_trace_csv(path, sc->impl.cfg)};
    return RMRAC_OK;
  });
}

void rmrac_trace_free(rmrac_trace_t* tr) { delete tr; }

rmrac_status_t rmrac_phases(const rmrac_scenario_t* sc, const rmrac_trace_t* tr,
                            rmrac_timeline_t** out) {
  if (!sc || !tr || !out) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_OK, [&] {
    const rmrac::BoundLedger ledger = rmrac::scenario_ledger(sc->impl);
    *out = new rmrac_timeline{rmrac::detect_phases(tr->impl, ledger, sc->impl.cfg)};
    return RMRAC_OK;
  });
}

char* rmrac_timeline_to_json(const rmrac_timeline_t* tl) {
  if (!tl) return nullptr;
  return dup_string(rmrac::timeline_to_json(tl->impl));
}

int rmrac_timeline_limit_cycle(const rmrac_timeline_t* tl) {
  return tl && rmrac::detect_limit_cycle(tl->impl).found ? 1 : 0;
}

rmrac_status_t rmrac_timeline_write_csv(const rmrac_trace_t* tr, const char* path) {
  if (!tr || !path) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_IO, [&] {
    rmrac::write_timeline_csv(tr->impl, path);
    return RMRAC_OK;
  });
}

void rmrac_timeline_free(rmrac_timeline_t* tl) { delete tl; }

rmrac_status_t rmrac_sweep(const rmrac_scenario_t* sc, const char* grid_json, int max_threads,
                           char** out_json) {
  if (!sc || !grid_json || !out_json) {
    set_error("null argument");
    return RMRAC_ERR_INVALID_ARGUMENT;
  }
  return guarded(RMRAC_ERR_PARSE, [&] {
    const rmrac::SweepGrid grid = rmrac::sweep_grid_from_json(grid_json);
    const auto results = rmrac::run_sweep(sc->impl, grid, max_threads);
    *out_json = dup_string(rmrac::sweep_to_json(results));
    return RMRAC_OK;
  });
}

}  // extern "C"

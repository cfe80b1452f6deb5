/* C interface to the robust-MRAC toolkit: opaque handles, integer status
 * codes, JSON/CSV exchange. Every function that can fail returns a
 * rmrac_status_t; rmrac_last_error() carries the detail message for the most
 * recent failure on the calling thread. Strings returned as char* are owned
 * by the caller and released with rmrac_string_free(). */
#ifndef RMRAC_H
#define RMRAC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rmrac_status {
  RMRAC_OK = 0,
  RMRAC_ERR_INVALID_ARGUMENT = 1,
  RMRAC_ERR_PARSE = 2,
  RMRAC_ERR_IO = 3,
  RMRAC_ERR_NUMERIC = 4,
  RMRAC_ERR_UNKNOWN_PRESET = 5
} rmrac_status_t;

typedef struct rmrac_scenario rmrac_scenario_t;
typedef struct rmrac_trace rmrac_trace_t;
typedef struct rmrac_report rmrac_report_t;
typedef struct rmrac_timeline rmrac_timeline_t;

const char* rmrac_version(void);
const char* rmrac_status_name(rmrac_status_t status);
const char* rmrac_last_error(void);

void rmrac_string_free(char* s);

/* ---- scenarios ---- */

rmrac_status_t rmrac_scenario_preset(const char* name, rmrac_scenario_t** out);
rmrac_status_t rmrac_scenario_parse_json(const char* json_text, rmrac_scenario_t** out);
rmrac_status_t rmrac_scenario_load_file(const char* path, rmrac_scenario_t** out);

/* comma-separated preset names */
char* rmrac_preset_names(void);

/* keys: dt, t_end, gamma, stride, theta0, x_p0, x_m0 */
rmrac_status_t rmrac_scenario_set_number(rmrac_scenario_t* sc, const char* key, double value);
rmrac_status_t rmrac_scenario_set_projection_enabled(rmrac_scenario_t* sc, int enabled);
char* rmrac_scenario_to_json(const rmrac_scenario_t* sc);
void rmrac_scenario_free(rmrac_scenario_t* sc);

/* ---- verification ---- */

rmrac_status_t rmrac_verify(const rmrac_scenario_t* sc, rmrac_report_t** out);
int rmrac_report_verdict(const rmrac_report_t* rep); /* 1 = member of the class */
char* rmrac_report_to_json(const rmrac_scenario_t* sc, const rmrac_report_t* rep);
void rmrac_report_free(rmrac_report_t* rep);

/* ---- simulation ---- */

/* Divergence is a result, not an error: the call returns RMRAC_OK with the
 * trace flagged. */
rmrac_status_t rmrac_simulate(const rmrac_scenario_t* sc, rmrac_trace_t** out);
rmrac_status_t rmrac_simulate_fixed_theta(const rmrac_scenario_t* sc, double theta_fixed,
                                          rmrac_trace_t** out);
int rmrac_trace_diverged(const rmrac_trace_t* tr);
double rmrac_trace_divergence_time(const rmrac_trace_t* tr);
long rmrac_trace_sample_count(const rmrac_trace_t* tr);
double rmrac_trace_max_abs_e(const rmrac_trace_t* tr);
double rmrac_trace_max_abs_theta(const rmrac_trace_t* tr);
char* rmrac_trace_summary_json(const rmrac_trace_t* tr);
rmrac_status_t rmrac_trace_write_csv(const rmrac_trace_t* tr, const char* path);
rmrac_status_t rmrac_trace_load_csv(const char* path, const rmrac_scenario_t* sc,
                                    rmrac_trace_t** out);
void rmrac_trace_free(rmrac_trace_t* tr);

/* ---- phase analysis ---- */

rmrac_status_t rmrac_phases(const rmrac_scenario_t* sc, const rmrac_trace_t* tr,
                            rmrac_timeline_t** out);
char* rmrac_timeline_to_json(const rmrac_timeline_t* tl);
int rmrac_timeline_limit_cycle(const rmrac_timeline_t* tl); /* 1 when a cycle was found */
rmrac_status_t rmrac_timeline_write_csv(const rmrac_trace_t* tr, const char* path);
void rmrac_timeline_free(rmrac_timeline_t* tl);

/* ---- sweeps ---- */

/* grid_json: object of arrays, e.g. {"theta0": [-16.5, -0.65]}. max_threads
 * <= 0 defers to ROBUST_MRAC_THREADS / hardware. *out_json is the summary
 * array in grid order. */
rmrac_status_t rmrac_sweep(const rmrac_scenario_t* sc, const char* grid_json, int max_threads,
                           char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* RMRAC_H */

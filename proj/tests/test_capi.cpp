#include <cstring>
#include <string>

#include "doctest.h"
#include "rmrac/rmrac.h"

namespace {
struct Free {
  void operator()(char* s) const { rmrac_string_free(s); }
};
}  // namespace

TEST_CASE("version and status strings") {
  CHECK(rmrac_version() != nullptr);
  CHECK(std::string(rmrac_status_name(RMRAC_OK)) == "ok");
  CHECK(std::string(rmrac_status_name(RMRAC_ERR_PARSE)) == "parse error");
}

TEST_CASE("unknown preset reports cleanly") {
  rmrac_scenario_t* sc = nullptr;
  CHECK(rmrac_scenario_preset("nope", &sc) == RMRAC_ERR_UNKNOWN_PRESET);
  CHECK(sc == nullptr);
  CHECK(std::string(rmrac_last_error()).find("nope") != std::string::npos);
  CHECK(rmrac_scenario_preset(nullptr, &sc) == RMRAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("preset names are exposed") {
  char* names = rmrac_preset_names();
  REQUIRE(names != nullptr);
  CHECK(std::string(names).find("rohrs_main") != std::string::npos);
  rmrac_string_free(names);
}

TEST_CASE("verify on the main preset") {
  rmrac_scenario_t* sc = nullptr;
  REQUIRE(rmrac_scenario_preset("rohrs_main", &sc) == RMRAC_OK);
  rmrac_report_t* rep = nullptr;
  REQUIRE(rmrac_verify(sc, &rep) == RMRAC_OK);
  CHECK(rmrac_report_verdict(rep) == 1);
  char* json = rmrac_report_to_json(sc, rep);
  REQUIRE(json != nullptr);
  CHECK(std::string(json).find("theta_bar_star") != std::string::npos);
  rmrac_string_free(json);
  rmrac_report_free(rep);
  rmrac_scenario_free(sc);
}

TEST_CASE("simulate, summarize, round-trip a trace file") {
  rmrac_scenario_t* sc = nullptr;
  REQUIRE(rmrac_scenario_preset("rohrs_i", &sc) == RMRAC_OK);
  REQUIRE(rmrac_scenario_set_number(sc, "t_end", 5.0) == RMRAC_OK);
  REQUIRE(rmrac_scenario_set_number(sc, "dt", 1e-3) == RMRAC_OK);
  REQUIRE(rmrac_scenario_set_number(sc, "stride", 1) == RMRAC_OK);

  rmrac_trace_t* tr = nullptr;
  REQUIRE(rmrac_simulate(sc, &tr) == RMRAC_OK);
  CHECK(rmrac_trace_diverged(tr) == 0);
  CHECK(rmrac_trace_sample_count(tr) == 5001);
  CHECK(rmrac_trace_max_abs_e(tr) < 1.0);
  CHECK(rmrac_trace_max_abs_theta(tr) <= 16.7 + 1e-12);

  char* summary = rmrac_trace_summary_json(tr);
  REQUIRE(summary != nullptr);
  CHECK(std::string(summary).find("\"diverged\": false") != std::string::npos);
  rmrac_string_free(summary);

  const char* path = "capi_trace_tmp.csv";
  REQUIRE(rmrac_trace_write_csv(tr, path) == RMRAC_OK);
  rmrac_trace_t* back = nullptr;
  REQUIRE(rmrac_trace_load_csv(path, sc, &back) == RMRAC_OK);
  CHECK(rmrac_trace_sample_count(back) == rmrac_trace_sample_count(tr));
  std::remove(path);

  rmrac_trace_free(back);
  rmrac_trace_free(tr);
  rmrac_scenario_free(sc);
}

TEST_CASE("bad override keys are invalid arguments") {
  rmrac_scenario_t* sc = nullptr;
  REQUIRE(rmrac_scenario_preset("rohrs_i", &sc) == RMRAC_OK);
  CHECK(rmrac_scenario_set_number(sc, "bogus", 1.0) == RMRAC_ERR_INVALID_ARGUMENT);
  CHECK(rmrac_scenario_set_number(sc, "dt", -1.0) == RMRAC_ERR_INVALID_ARGUMENT);
  rmrac_scenario_free(sc);
}

TEST_CASE("phases timeline through the C surface") {
  rmrac_scenario_t* sc = nullptr;
  REQUIRE(rmrac_scenario_preset("rohrs_ii", &sc) == RMRAC_OK);
  REQUIRE(rmrac_scenario_set_number(sc, "t_end", 10.0) == RMRAC_OK);
  rmrac_trace_t* tr = nullptr;
  REQUIRE(rmrac_simulate(sc, &tr) == RMRAC_OK);
  rmrac_timeline_t* tl = nullptr;
  REQUIRE(rmrac_phases(sc, tr, &tl) == RMRAC_OK);
  char* json = rmrac_timeline_to_json(tl);
  REQUIRE(json != nullptr);
  CHECK(std::string(json).find("ENTER_B") != std::string::npos);
  rmrac_string_free(json);
  rmrac_timeline_free(tl);
  rmrac_trace_free(tr);
  rmrac_scenario_free(sc);
}

TEST_CASE("single-point sweep agrees with a direct run") {
  rmrac_scenario_t* sc = nullptr;
  REQUIRE(rmrac_scenario_preset("rohrs_i", &sc) == RMRAC_OK);
  REQUIRE(rmrac_scenario_set_number(sc, "t_end", 3.0) == RMRAC_OK);
  REQUIRE(rmrac_scenario_set_number(sc, "dt", 1e-3) == RMRAC_OK);

  rmrac_trace_t* tr = nullptr;
  REQUIRE(rmrac_simulate(sc, &tr) == RMRAC_OK);
  const double direct = rmrac_trace_max_abs_e(tr);
  rmrac_trace_free(tr);

  char* out = nullptr;
  REQUIRE(rmrac_sweep(sc, "{\"theta0\": [-0.65]}", 1, &out) == RMRAC_OK);
  REQUIRE(out != nullptr);
  const std::string body(out);
  rmrac_string_free(out);
  char expect[64];
  std::snprintf(expect, sizeof expect, "%.6g", direct);
  CHECK(body.find("\"max_abs_e\"") != std::string::npos);
  CHECK(body.find(expect) != std::string::npos);

  char* bad = nullptr;
  CHECK(rmrac_sweep(sc, "{\"theta0\": []}", 1, &bad) == RMRAC_ERR_PARSE);
  CHECK(rmrac_sweep(sc, "[1,2]", 1, &bad) == RMRAC_ERR_PARSE);
  rmrac_scenario_free(sc);
}

TEST_CASE("scenario JSON export through the C surface parses back") {
  rmrac_scenario_t* sc = nullptr;
  REQUIRE(rmrac_scenario_preset("rohrs_iv", &sc) == RMRAC_OK);
  char* json = rmrac_scenario_to_json(sc);
  REQUIRE(json != nullptr);
  rmrac_scenario_t* back = nullptr;
  CHECK(rmrac_scenario_parse_json(json, &back) == RMRAC_OK);
  rmrac_string_free(json);
  rmrac_scenario_free(back);
  rmrac_scenario_free(sc);
}

#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "rmrac/json_io.hpp"
#include "rmrac/presets.hpp"

using namespace rmrac;
using nlohmann::json;

TEST_CASE("every preset round-trips through its JSON form") {
  for (const auto& name : preset_names()) {
    const Scenario sc = preset(name);
    const std::string a = scenario_to_json(sc);
    Scenario back = scenario_from_json(a);
    const std::string b = scenario_to_json(back);
    CAPTURE(name);
    CHECK(a == b);
  }
}

TEST_CASE("unknown keys are rejected at every level") {
  Scenario sc = preset("rohrs_i");
  json j = json::parse(scenario_to_json(sc));
  SUBCASE("top level") { j["surprise"] = 1; }
  SUBCASE("plant") { j["plant"]["pole"] = 1; }
  SUBCASE("projection") { j["projection"]["theta"] = 1; }
  SUBCASE("reference") { j["reference"]["freq"] = 1; }
  SUBCASE("integration") { j["integration"]["step"] = 1; }
  SUBCASE("analysis") { j["analysis"]["q"] = 1; }
  CHECK_THROWS_AS(scenario_from_json(j.dump()), std::invalid_argument);
}

TEST_CASE("physical invariants are enforced at load") {
  const json base = json::parse(scenario_to_json(preset("rohrs_i")));
  auto mutate = [&](auto&& fn) {
    json j = base;
    fn(j);
    return j.dump();
  };
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["integration"]["dt"] = 0.0; })));
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["integration"]["t_end"] = -1.0; })));
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["plant"]["a_m"] = 0.5; })));
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["plant"]["a_bar"] = 0.1; })));
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["projection"]["c"] = 1.0; })));
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["initial"]["theta"] = 99.0; })));
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["unmodeled"]["zeta"] = -1.0; })));
  // inconsistent xi0 next to c
  CHECK_THROWS(scenario_from_json(mutate([](json& j) { j["projection"]["xi0"] = 0.9; })));
  CHECK_THROWS(scenario_from_json("not json"));
}

TEST_CASE("custom state-space dynamics load and must be Hurwitz") {
  const std::string good = R"({
    "plant": {"a_p": 0.0, "a_bar": 0.5, "k_p": 1.0, "a_m": -1.0, "k_m": 1.0},
    "unmodeled": {"kind": "state_space", "A": [[-1.0]], "b": [1.0], "c": [1.0]},
    "projection": {"theta_max_prime": 1.5, "epsilon0": 0.5, "c": 0.5},
    "reference": {"kind": "constant", "value": 1.0},
    "integration": {"dt": 0.001, "t_end": 1.0}
  })";
  const Scenario sc = scenario_from_json(good);
  CHECK(sc.unmodeled.n() == 1);
  const std::string unstable = R"({
    "plant": {"a_p": 0.0, "a_bar": 0.5, "k_p": 1.0, "a_m": -1.0, "k_m": 1.0},
    "unmodeled": {"kind": "state_space", "A": [[1.0]], "b": [1.0], "c": [1.0]},
    "projection": {"theta_max_prime": 1.5, "epsilon0": 0.5, "c": 0.5},
    "reference": {"kind": "constant", "value": 1.0},
    "integration": {"dt": 0.001, "t_end": 1.0}
  })";
  CHECK_THROWS(scenario_from_json(unstable));
}

TEST_CASE("verify report carries conditions, margins and the ledger") {
  const Scenario sc = preset("rohrs_main");
  const MembershipReport rep = verify_scenario(sc);
  CHECK(rep.verdict);
  const json j = json::parse(verify_report_json(sc, rep));
  CHECK(j.at("verdict").get<bool>());
  CHECK(j.at("membership").at("xi0_max").get<double>() > 0.0);
  CHECK(j.at("conditions").at("theta_bar_star").get<double>() == doctest::Approx(35.06).epsilon(1e-3));
  CHECK(j.at("ledger").at("e_bar").get<double>() > 0.0);
  CHECK(j.at("ledger").at("k_eta").get<double>() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("timeline JSON structure") {
  Scenario sc = preset("rohrs_ii");
  sc.t_end = 5.0;
  sc.validate();
  const SimTrace tr = simulate(sc);
  const PhaseTimeline tl = detect_phases(tr, scenario_ledger(sc), sc.cfg);
  const json j = json::parse(timeline_to_json(tl));
  CHECK(j.contains("events"));
  CHECK(j.contains("phases"));
  CHECK(j.contains("proposition_checks"));
  CHECK(j.at("events").is_array());
  REQUIRE(!j.at("events").empty());
  const auto& first = j.at("events").front();
  CHECK(first.contains("kind"));
  CHECK(first.contains("t"));
  CHECK(first.contains("e"));
  CHECK(first.contains("theta"));
  CHECK(j.at("limit_cycle").contains("found"));
}

TEST_CASE("trace summary flags divergence in-band") {
  Scenario sc = preset("rohrs_i");
  sc.t_end = 1.0;
  sc.validate();
  const SimTrace tr = simulate(sc);
  const json j = json::parse(trace_summary_json(tr));
  CHECK_FALSE(j.at("diverged").get<bool>());
  CHECK(j.at("divergence_time").is_null());
  CHECK(j.at("max_abs_e").get<double>() >= 0.0);
}

#pragma once

#include <string>

#include "rmrac/phases.hpp"
#include "rmrac/scenario.hpp"
#include "rmrac/simulator.hpp"

namespace rmrac {

// Scenario files are strict: unknown keys anywhere are rejected, and every
// physical invariant is enforced on load.
Scenario scenario_from_json(const std::string& text);
Scenario scenario_from_file(const std::string& path);
std::string scenario_to_json(const Scenario& sc);

std::string membership_to_json(const MembershipReport& rep);
std::string ledger_to_json(const BoundLedger& led);

// Combined verify report: A/B conditions, margins, and the bound ledger
// (ledger errors are reported in-band, not thrown).
std::string verify_report_json(const Scenario& sc, const MembershipReport& rep);

std::string trace_summary_json(const SimTrace& trace);
std::string timeline_to_json(const PhaseTimeline& tl);

// Plot companion: t, e, theta, region-code (0=A 1=B_UPPER 2=B_U 3=B_L 4=OUTSIDE)
void write_timeline_csv(const SimTrace& trace, const std::string& path);

}  // namespace rmrac

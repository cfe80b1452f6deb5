#pragma once

#include <array>
#include <string>
#include <vector>

#include "rmrac/simulator.hpp"
#include "rmrac/synthesis.hpp"

namespace rmrac {

enum class PhaseEventKind {
  EThresholdHit,  // |e| crossed e_bar - delta upward (t_a / t_g / t_d')
  EnterB,         // theta crossed -theta_max_prime downward (t_b)
  EnterBL,        // first entry into the lower strip since EnterB (t_c)
  ExitBLToBU,     // theta left the strip upward (t_d)
  ExitBToA,       // theta crossed -theta_max_prime upward (t_e)
  ReenterBL,      // strip re-entry within the same boundary visit (t_f)
};

const char* to_string(PhaseEventKind k);

struct PhaseEvent {
  PhaseEventKind kind;
  double t = 0.0;
  double e_value = 0.0;
  double theta_value = 0.0;
  double local_e_step = 0.0;  // |e_{i+1} - e_i| of the straddling sample pair
  std::string role;           // "t_a", "t_g", "t_d_prime" for threshold hits
};

// Run-length-encoded region residence; crossing times are linearly
// interpolated between samples, so t_end of one run equals t_start of the
// next.
struct RegionRun {
  ThetaRegion region;
  double t_start = 0.0, t_end = 0.0;
  std::size_t i_start = 0, i_end = 0;  // inclusive sample range
};

std::vector<RegionRun> classify_trace(const SimTrace& trace, const ProjectionConfig& cfg);

struct PhaseInterval {
  std::string label;  // "I", "II", "III"
  double t_start = 0.0, t_end = 0.0;
  double max_abs_e = 0.0;
};

struct PropositionCheck {
  std::string name;
  bool applicable = false;
  bool pass = true;
  double observed = 0.0;
  double bound = 0.0;
};

struct PhaseTimeline {
  std::vector<PhaseEvent> events;
  std::vector<PhaseInterval> phases;   // partitions [t0, t_end]
  std::vector<PropositionCheck> prop_checks;
  int repeat_count = 0;                // phase-IV bookkeeping: returns to II / I->II cycles
  double max_abs_e = 0.0;
  double final_bound = 0.0;            // max(e_bar, e_bar2, e_bar3)
  bool final_bound_ok = true;
  std::array<double, 5> time_in_region{};  // indexed by ThetaRegion order A, B_UPPER, B_U, B_L, OUTSIDE
};

// Event extraction, phase labeling per the four-phase narrative, and
// empirical checks of the residence propositions against the ledger.
PhaseTimeline detect_phases(const SimTrace& trace, const BoundLedger& ledger,
                            const ProjectionConfig& cfg);

struct LimitCycleSummary {
  bool found = false;
  double period = 0.0;
  int consistent_enters = 0;  // events in the agreeing run
  double first_enter_t = 0.0;
  double spread = 0.0;  // (max - min) / mean of the agreeing inter-arrivals
};

// A cycle is reported when >= 3 consecutive boundary entries have
// inter-arrival times agreeing within 5%.
LimitCycleSummary detect_limit_cycle(const PhaseTimeline& timeline);

}  // namespace rmrac

#include "rmrac/phases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmrac {

const char* to_string(PhaseEventKind k) {
  switch (k) {
    case PhaseEventKind::EThresholdHit: return "E_THRESHOLD_HIT";
    case PhaseEventKind::EnterB: return "ENTER_B";
    case PhaseEventKind::EnterBL: return "ENTER_BL";
    case PhaseEventKind::ExitBLToBU: return "EXIT_BL_TO_BU";
    case PhaseEventKind::ExitBToA: return "EXIT_B_TO_A";
    case PhaseEventKind::ReenterBL: return "REENTER_BL";
  }
  return "?";
}

namespace {

// theta bands in ascending order; boundaries[i] separates band i and i+1
// 0: (-inf, -theta_max)   1: [-theta_max, -theta_max+xi0]   2: (.., -theta_max')
// 3: [-theta_max', theta_max']   4: (theta_max', theta_max]   5: (theta_max, inf)
int band_of(double theta, const ProjectionConfig& cfg) {
  if (theta < -cfg.theta_max) return 0;
  if (theta <= -cfg.theta_max + cfg.xi0) return 1;
  if (theta < -cfg.theta_max_prime) return 2;
  if (theta <= cfg.theta_max_prime) return 3;
  if (theta <= cfg.theta_max) return 4;
  return 5;
}

std::array<double, 5> boundaries(const ProjectionConfig& cfg) {
  return {-cfg.theta_max, -cfg.theta_max + cfg.xi0, -cfg.theta_max_prime, cfg.theta_max_prime,
          cfg.theta_max};
}

ThetaRegion band_region(int band) {
  switch (band) {
    case 1: return ThetaRegion::BL;
    case 2: return ThetaRegion::BU;
    case 3: return ThetaRegion::A;
    case 4: return ThetaRegion::BUpper;
    default: return ThetaRegion::Outside;
  }
}

double interp_time(const SimTrace& tr, std::size_t i, double frac) {
  return tr.t[i] + frac * (tr.t[i + 1] - tr.t[i]);
}

}  // namespace

std::vector<RegionRun> classify_trace(const SimTrace& trace, const ProjectionConfig& cfg) {
  if (trace.samples() == 0) throw std::invalid_argument("classify_trace: empty trace");
  const auto bnd = boundaries(cfg);
  std::vector<RegionRun> runs;
  RegionRun cur{band_region(band_of(trace.theta[0], cfg)), trace.t[0], trace.t[0], 0, 0};
  for (std::size_t i = 0; i + 1 < trace.samples(); ++i) {
    const int b0 = band_of(trace.theta[i], cfg);
    const int b1 = band_of(trace.theta[i + 1], cfg);
    if (b0 == b1) {
      cur.i_end = i + 1;
      cur.t_end = trace.t[i + 1];
      continue;
    }
    // cross each separating boundary in travel order
    const int step = b1 > b0 ? 1 : -1;
    for (int b = b0; b != b1; b += step) {
      const double beta = bnd[static_cast<std::size_t>(step > 0 ? b : b - 1)];
      const double th0 = trace.theta[i], th1 = trace.theta[i + 1];
      double frac = th1 != th0 ? (beta - th0) / (th1 - th0) : 0.5;
      frac = std::clamp(frac, 0.0, 1.0);
      const double tc = interp_time(trace, i, frac);
      cur.t_end = tc;
      runs.push_back(cur);
      cur = RegionRun{band_region(b + step), tc, trace.t[i + 1], i + 1, i + 1};
    }
    cur.i_end = i + 1;
    cur.t_end = trace.t[i + 1];
  }
  runs.push_back(cur);
  return runs;
}

PhaseTimeline detect_phases(const SimTrace& trace, const BoundLedger& ledger,
                            const ProjectionConfig& cfg) {
  if (trace.samples() == 0) throw std::invalid_argument("detect_phases: empty trace");
  PhaseTimeline tl;
  tl.max_abs_e = trace.max_abs_e();
  tl.final_bound = ledger.final_bound();
  tl.final_bound_ok = tl.max_abs_e <= tl.final_bound;

  const auto bnd = boundaries(cfg);
  const double thr = ledger.e_bar - ledger.delta;

  // boundary-crossing and threshold events, sample pair by sample pair
  bool in_B = band_of(trace.theta[0], cfg) <= 2 && band_of(trace.theta[0], cfg) >= 1;
  bool seen_BL = band_of(trace.theta[0], cfg) == 1;
  bool exited_since_BL = false;
  for (std::size_t i = 0; i + 1 < trace.samples(); ++i) {
    const double th0 = trace.theta[i], th1 = trace.theta[i + 1];
    const double e0 = trace.e[i], e1 = trace.e[i + 1];
    const double de = std::abs(e1 - e0);

    // |e| crossing of e_bar - delta, upward
    if (std::abs(e0) < thr && std::abs(e1) >= thr) {
      const double a0 = std::abs(e0), a1 = std::abs(e1);
      const double frac = (thr - a0) / (a1 - a0);
      PhaseEvent ev{PhaseEventKind::EThresholdHit, interp_time(trace, i, frac),
                    e0 + frac * (e1 - e0), th0 + frac * (th1 - th0), de, ""};
      tl.events.push_back(ev);
    }

    const int b0 = band_of(th0, cfg);
    const int b1 = band_of(th1, cfg);
    if (b0 == b1) continue;
    const int step = b1 > b0 ? 1 : -1;
    for (int b = b0; b != b1; b += step) {
      const std::size_t bi = static_cast<std::size_t>(step > 0 ? b : b - 1);
      const double beta = bnd[bi];
      double frac = th1 != th0 ? (beta - th0) / (th1 - th0) : 0.5;
      frac = std::clamp(frac, 0.0, 1.0);
      PhaseEvent ev;
      ev.t = interp_time(trace, i, frac);
      ev.theta_value = beta;
      ev.e_value = e0 + frac * (e1 - e0);
      ev.local_e_step = de;

      if (bi == 2 && step < 0) {  // crossed -theta_max' downward
        ev.kind = PhaseEventKind::EnterB;
        in_B = true;
        seen_BL = false;
        tl.events.push_back(ev);
      } else if (bi == 1 && step < 0) {  // into the strip
        ev.kind = seen_BL ? PhaseEventKind::ReenterBL : PhaseEventKind::EnterBL;
        seen_BL = true;
        exited_since_BL = false;
        tl.events.push_back(ev);
      } else if (bi == 1 && step > 0) {  // out of the strip
        ev.kind = PhaseEventKind::ExitBLToBU;
        exited_since_BL = true;
        tl.events.push_back(ev);
      } else if (bi == 2 && step > 0) {  // back to A
        ev.kind = PhaseEventKind::ExitBToA;
        in_B = false;
        tl.events.push_back(ev);
      }
      // +theta_max' and +/-theta_max crossings carry no event
    }
  }
  (void)exited_since_BL;
  std::stable_sort(tl.events.begin(), tl.events.end(),
                   [](const PhaseEvent& a, const PhaseEvent& b) { return a.t < b.t; });

  // threshold-hit roles: first is t_a; after an A-return it is t_g; while in
  // the upper part of the boundary region after leaving the strip it is t_d'
  {
    bool saw_hit = false, after_exit_to_A = false, in_BU_after_strip = false;
    for (auto& ev : tl.events) {
      switch (ev.kind) {
        case PhaseEventKind::ExitBToA: after_exit_to_A = true; in_BU_after_strip = false; break;
        case PhaseEventKind::ExitBLToBU: in_BU_after_strip = true; break;
        case PhaseEventKind::EnterBL:
        case PhaseEventKind::ReenterBL: in_BU_after_strip = false; break;
        case PhaseEventKind::EnterB: after_exit_to_A = false; break;
        case PhaseEventKind::EThresholdHit:
          if (!saw_hit) ev.role = "t_a";
          else if (in_BU_after_strip) ev.role = "t_d_prime";
          else if (after_exit_to_A) ev.role = "t_g";
          else ev.role = "t_a";
          saw_hit = true;
          break;
      }
    }
  }

  // phase intervals: I until the strip is first reached, II inside it, III in
  // the upper boundary band after leaving it, back to I on an A-return
  {
    std::string label = "I";
    double t_open = trace.t.front();
    bool had_phase_II = false;
    auto close_at = [&](double t, const std::string& next) {
      if (t > t_open) tl.phases.push_back({label, t_open, t, 0.0});
      label = next;
      t_open = t;
    };
    for (const auto& ev : tl.events) {
      switch (ev.kind) {
        case PhaseEventKind::EnterBL:
        case PhaseEventKind::ReenterBL:
          if (label != "II") {
            if (had_phase_II) ++tl.repeat_count;
            close_at(ev.t, "II");
            had_phase_II = true;
          }
          break;
        case PhaseEventKind::ExitBLToBU:
          if (label == "II") close_at(ev.t, "III");
          break;
        case PhaseEventKind::ExitBToA:
          if (label == "III" || label == "II") close_at(ev.t, "I");
          break;
        default:
          break;
      }
    }
    if (trace.t.back() > t_open || tl.phases.empty())
      tl.phases.push_back({label, t_open, trace.t.back(), 0.0});
  }
  for (auto& ph : tl.phases) {
    double m = 0.0;
    for (std::size_t i = 0; i < trace.samples(); ++i)
      if (trace.t[i] >= ph.t_start && trace.t[i] <= ph.t_end)
        m = std::max(m, std::abs(trace.e[i]));
    ph.max_abs_e = m;
  }

  for (const auto& run : classify_trace(trace, cfg))
    tl.time_in_region[static_cast<std::size_t>(run.region)] += run.t_end - run.t_start;

  // empirical checks of the residence propositions
  {
    PropositionCheck p1i{"prop1_i_e_bounded_on_DeltaT", false, true, 0.0, ledger.e_bar};
    PropositionCheck p1ii{"prop1_ii_strip_reached_within_DeltaT", false, true, 0.0, ledger.Delta_T};
    const PhaseEvent* t_a = nullptr;
    for (const auto& ev : tl.events)
      if (ev.kind == PhaseEventKind::EThresholdHit && ev.role == "t_a") {
        t_a = &ev;
        break;
      }
    if (t_a) {
      p1i.applicable = p1ii.applicable = true;
      double m = 0.0;
      for (std::size_t i = 0; i < trace.samples(); ++i)
        if (trace.t[i] >= t_a->t && trace.t[i] <= t_a->t + ledger.Delta_T)
          m = std::max(m, std::abs(trace.e[i]));
      p1i.observed = m;
      p1i.pass = m <= ledger.e_bar;
      p1ii.pass = false;
      for (const auto& ev : tl.events)
        if ((ev.kind == PhaseEventKind::EnterBL || ev.kind == PhaseEventKind::ReenterBL) &&
            ev.t > t_a->t && ev.t < t_a->t + ledger.Delta_T) {
          p1ii.pass = true;
          p1ii.observed = ev.t - t_a->t;
          break;
        }
    }
    tl.prop_checks.push_back(p1i);
    tl.prop_checks.push_back(p1ii);

    PropositionCheck p2{"prop2_e_at_strip_exit", false, true, 0.0, ledger.x_m_bar};
    for (const auto& ev : tl.events)
      if (ev.kind == PhaseEventKind::ExitBLToBU) {
        p2.applicable = true;
        const double obs = std::abs(ev.e_value);
        if (obs > p2.observed) p2.observed = obs;
        // linear interpolation of e is accurate to the local sample step
        if (obs > ledger.x_m_bar + ev.local_e_step) p2.pass = false;
      }
    tl.prop_checks.push_back(p2);

    PropositionCheck p3{"prop3_e_small_until_A_return", false, true, 0.0, ledger.x_m_bar};
    double last_t_d = -1.0;
    for (const auto& ev : tl.events) {
      if (ev.kind == PhaseEventKind::ExitBLToBU) last_t_d = ev.t;
      if (ev.kind == PhaseEventKind::ExitBToA && last_t_d >= 0.0) {
        p3.applicable = true;
        double m = 0.0;
        for (std::size_t i = 0; i < trace.samples(); ++i)
          if (trace.t[i] > last_t_d && trace.t[i] <= ev.t) m = std::max(m, std::abs(trace.e[i]));
        p3.observed = std::max(p3.observed, m);
        if (m >= ledger.x_m_bar + ev.local_e_step) p3.pass = false;
      }
    }
    tl.prop_checks.push_back(p3);

    tl.prop_checks.push_back({"theorem1_final_bound", true, tl.final_bound_ok, tl.max_abs_e,
                              tl.final_bound});
  }
  return tl;
}

LimitCycleSummary detect_limit_cycle(const PhaseTimeline& timeline) {
  std::vector<double> enters;
  for (const auto& ev : timeline.events)
    if (ev.kind == PhaseEventKind::EnterB) enters.push_back(ev.t);

  LimitCycleSummary s;
  if (enters.size() < 3) return s;
  std::vector<double> gaps(enters.size() - 1);
  for (std::size_t i = 0; i + 1 < enters.size(); ++i) gaps[i] = enters[i + 1] - enters[i];

  // longest run of consecutive gaps whose spread stays within 5% of the mean
  std::size_t best_start = 0, best_len = 0;
  for (std::size_t start = 0; start < gaps.size(); ++start) {
    double lo = gaps[start], hi = gaps[start], sum = gaps[start];
    for (std::size_t end = start; end < gaps.size(); ++end) {
      if (end > start) {
        lo = std::min(lo, gaps[end]);
        hi = std::max(hi, gaps[end]);
        sum += gaps[end];
      }
      const double mean = sum / static_cast<double>(end - start + 1);
      if ((hi - lo) / mean > 0.05) break;
      if (end - start + 1 > best_len) {
        best_len = end - start + 1;
        best_start = start;
      }
    }
  }
  if (best_len < 2) return s;  // need >= 3 events

  double sum = 0.0, lo = gaps[best_start], hi = gaps[best_start];
  for (std::size_t i = best_start; i < best_start + best_len; ++i) {
    sum += gaps[i];
    lo = std::min(lo, gaps[i]);
    hi = std::max(hi, gaps[i]);
  }
  s.found = true;
  s.period = sum / static_cast<double>(best_len);
  s.consistent_enters = static_cast<int>(best_len) + 1;
  s.first_enter_t = enters[best_start];
  s.spread = (hi - lo) / s.period;
  return s;
}

}  // namespace rmrac

#pragma once

#include <array>
#include <optional>

#include "pdnkit/etee.hpp"
#include "pdnkit/platform.hpp"

namespace pdnkit {

/// Mode-switch latency budget. The defaults follow the measured C6-entry /
/// VR-adjust / C6-exit flow and total 94 us.
struct SwitchLatency {
  double enter_c6_s = 45e-6;
  double vr_adjust_s = 19e-6;
  double exit_c6_s = 30e-6;
  double total() const { return enter_c6_s + vr_adjust_s + exit_c6_s; }
};

/// Firmware-style ETEE lookup tables for both hybrid modes: a grid over
/// (tdp, workload type, ar) plus one curve over package power states.
/// Grid axes are strictly increasing; lookups interpolate linearly in tdp
/// and ar (exact at grid points), exact-match in workload type and state,
/// and clamp out-of-range inputs.
class EteeTable {
 public:
  struct Axes {
    std::vector<double> tdp;
    std::vector<double> ar;
    std::vector<WorkloadType> workloads;
  };

  EteeTable() = default;
  EteeTable(Axes axes, std::vector<PackagePowerState> states);

  std::vector<Violation> validate() const;

  void set(FlexMode m, int tdp_idx, int wl_idx, int ar_idx, double etee);
  void set_state(FlexMode m, PackagePowerState s, double etee);

  double at(FlexMode m, int tdp_idx, int wl_idx, int ar_idx) const;
  double state_etee(FlexMode m, PackagePowerState s) const;

  struct LookupResult {
    double etee = 0.0;
    bool clamped = false;
  };
  LookupResult lookup(FlexMode m, double tdp, WorkloadType wl, double ar) const;

  const Axes& axes() const { return axes_; }
  const std::vector<PackagePowerState>& states() const { return states_; }

 private:
  int index(int mode, int tdp_idx, int wl_idx, int ar_idx) const;
  Axes axes_;
  std::vector<PackagePowerState> states_;
  std::vector<double> values_;       // [mode][tdp][wl][ar]
  std::vector<double> state_values_; // [mode][state]
};

/// Populates the table by evaluating the FlexWatts topology in both modes at
/// every grid point (via the platform load model) and at every package-state
/// operating point. Deterministic.
EteeTable build_etee_table(const PdnTopology& flexwatts, const CurveSet& curves,
                           const PlatformModel& platform,
                           const EteeTable::Axes& axes,
                           const std::vector<PackagePowerState>& states);

struct ModePrediction {
  FlexMode mode = FlexMode::IvrMode;
  double ivr_etee = 0.0;
  double ldo_etee = 0.0;
  bool clamped = false;
};

/// The runtime mode choice: look up both modes' ETEE for the operating point
/// and return IvrMode iff ivr_etee >= ldo_etee. Active states (C0, C0_MIN)
/// use the main grid; package C-states use the state curve.
ModePrediction predict_mode(const EteeTable& table, double tdp, double ar,
                            WorkloadType wl, PackagePowerState ps);

/// One phase of a workload trace.
struct TracePhase {
  double duration_s = 0.0;
  WorkloadType wl_type = WorkloadType::SingleThread;
  double ar = 0.56;
  // Residencies over {C0_MIN, C2, C3, C6, C7, C8}; must sum to 1.
  std::array<double, 6> residencies{};
  DomainLoads loads;  // active-state per-domain nominal power / voltage

  double residency(PackagePowerState s) const;
  /// State with the largest residency (ties to the shallower state).
  PackagePowerState dominant_state() const;
};

std::vector<Violation> validate_phase(const TracePhase& p, int row);

struct SimPolicy {
  double interval_s = 0.01;
  bool hysteresis = true;          // switch only if the predicted one-interval
                                   // energy saving exceeds the switch energy
  double min_dwell_s = 0.0;        // minimum time between switches
  bool absorb_switch_into_idle = false;  // don't count the stall as lost time
  std::optional<FlexMode> forced_mode;   // fixed-mode run (no prediction)
};

struct SimInterval {
  double t_start_s = 0.0;
  double dt_s = 0.0;
  FlexMode mode = FlexMode::IvrMode;
  bool switched = false;
  double supply_w = 0.0;
  double energy_j = 0.0;
};

struct SimReport {
  std::vector<SimInterval> intervals;
  double duration_s = 0.0;
  double energy_j = 0.0;          // includes switch energy
  double switch_energy_j = 0.0;
  int switches = 0;
  double stall_s = 0.0;
  double oracle_energy_j = 0.0;   // clairvoyant per-interval best mode, free switches
  double regret_j = 0.0;          // energy_j - oracle_energy_j
};

/// Walks the trace in evaluation intervals. Each interval predicts the mode
/// from the table (TDP coordinate estimated by inverting the platform's
/// nominal-power curve), charges the 94 us switch flow on mode changes
/// (stall time plus energy at the C6 operating point of the new mode), and
/// accumulates energy with the active mode's full evaluator: active-state
/// residencies use the phase loads, package C-states the platform's
/// residual-state points. Throws EmptyTrace for an empty trace.
SimReport simulate_trace(const std::vector<TracePhase>& trace,
                         const EteeTable& table, const PdnTopology& flexwatts,
                         const CurveSet& curves, const PlatformModel& platform,
                         const SwitchLatency& latency, const SimPolicy& policy = {});

}  // namespace pdnkit

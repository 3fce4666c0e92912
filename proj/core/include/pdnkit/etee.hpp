#pragma once

#include <functional>
#include <optional>

#include "pdnkit/domain.hpp"
#include "pdnkit/efficiency_curve.hpp"
#include "pdnkit/topology.hpp"
#include "pdnkit/vr_primitives.hpp"

namespace pdnkit {

/// Loss totals by category. Together with the nominal power they close the
/// supply-power balance exactly:
///   supply = sum(p_nom) + guardband + power_gate + load_line_i2r
///            + on_chip_vr + off_chip_vr
struct LossBreakdown {
  double guardband = 0.0;
  double power_gate = 0.0;
  double load_line_i2r = 0.0;
  double on_chip_vr = 0.0;
  double off_chip_vr = 0.0;
  double total() const {
    return guardband + power_gate + load_line_i2r + on_chip_vr + off_chip_vr;
  }
};

/// Per-domain conversion chain, nominal power through the on-chip stage.
struct DomainChainReport {
  DomainId domain;
  double p_nom = 0.0;
  double p_gb = 0.0;              // after tolerance-band guardband
  double p_pg = 0.0;              // after power-gate drop
  double p_after_on_chip = 0.0;   // after on-chip VR (== p_pg when none)
  double v_eff = 0.0;             // effective domain voltage
  double on_chip_eta = 1.0;
  bool extrapolated = false;
};

/// Per-off-chip-VR aggregation: load-line positioning and conversion. For a
/// shared first stage (IVR/LDO/hybrid paths) p_d/v_d are the rail's p_in and
/// v_in, and v_d_ll/p_d_ll are v_in_ll/p_in_ll.
struct GroupReport {
  std::string stage_id;
  bool shared_first_stage = false;
  double p_d = 0.0;
  double v_d = 0.0;
  double ar = 1.0;        // power-weighted member AR
  double p_peak = 0.0;
  double v_d_ll = 0.0;
  double p_d_ll = 0.0;
  VrPowerState ps = VrPowerState::PS0;
  double eta = 1.0;       // off-chip VR efficiency at this point
  double supply = 0.0;    // p_d_ll / eta
  bool extrapolated = false;
};

struct EteeReport {
  std::string topology;
  std::optional<FlexMode> mode;  // set for FlexWatts evaluations
  std::vector<DomainChainReport> domains;
  std::vector<GroupReport> groups;
  double p_nom_total = 0.0;
  double supply_w = 0.0;
  double etee = 0.0;
  LossBreakdown losses;
  bool extrapolated = false;
};

/// Evaluation context: the package power state selects VR power states on
/// the off-chip curves (active states pick PS0/PS1 by the curve crossover,
/// C2/C3 pick PS1, deeper states the lowest-power state present).
struct EvalContext {
  PackagePowerState package_state = PackagePowerState::C0;
};

/// Architecture-specific evaluators. Each validates that the topology has
/// the expected structure, then composes the conversion primitives:
/// guardband -> power-gate -> (on-chip VR) -> group load-line -> off-chip VR.
EteeReport eval_mbvr(const PdnTopology& t, const DomainLoads& loads,
                     const CurveSet& curves, const EvalContext& ctx = {});
EteeReport eval_ivr(const PdnTopology& t, const DomainLoads& loads,
                    const CurveSet& curves, const EvalContext& ctx = {});
EteeReport eval_ldo(const PdnTopology& t, const DomainLoads& loads,
                    const CurveSet& curves, const EvalContext& ctx = {});
EteeReport eval_i_mbvr(const PdnTopology& t, const DomainLoads& loads,
                       const CurveSet& curves, const EvalContext& ctx = {});
EteeReport eval_flexwatts(const PdnTopology& t, const DomainLoads& loads,
                          FlexMode mode, const CurveSet& curves,
                          const EvalContext& ctx = {});

/// Dispatch by topology name; FlexWatts evaluates both modes and reports
/// the one with the higher ETEE (the controller's argmax rule).
EteeReport evaluate(const PdnTopology& t, const DomainLoads& loads,
                    const CurveSet& curves, const EvalContext& ctx = {});

/// One package-state phase for the power-state mix: state, residency and
/// the nominal power spent in it.
struct StatePhase {
  PackagePowerState state;
  double residency = 0.0;
  double p_nom = 0.0;
};

/// Per-state ETEE provider: maps (state, nominal power) -> ETEE.
using StateEteeSource = std::function<double(PackagePowerState, double)>;

/// Residency-weighted average supply power over package states:
///   sum p_state * r_state / etee_state.
/// Residencies must sum to 1 within 1e-9 (ResidencyMismatch otherwise).
double eval_power_state_mix(const std::vector<StatePhase>& phases,
                            const StateEteeSource& etee_source);

}  // namespace pdnkit

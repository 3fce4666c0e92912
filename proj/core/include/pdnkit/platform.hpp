#pragma once

#include <map>
#include <vector>

#include "pdnkit/domain.hpp"
#include "pdnkit/types.hpp"

namespace pdnkit {

/// Linear anchor pair: value at tdp_min and at tdp_max.
struct Anchor {
  double lo = 0.0;
  double hi = 0.0;
};

/// Residual-power operating point of one package state: total power and its
/// split across domains (fractions summing to 1), at fixed voltages.
struct StatePoint {
  double power_w = 0.0;
  std::map<DomainId, double> split;
  std::map<DomainId, double> voltages;
};

/// Bundled platform model: maps a workload operating point
/// (tdp, workload type, AR) to per-domain loads, package states to residual
/// operating points, and carries the budget constants and sweep grid.
///
/// Power anchors interpolate linearly in TDP; voltages interpolate with the
/// configured exponent (frequency/voltage scaling flattens toward high TDP).
class PlatformModel {
 public:
  /// Parses the platform config (key/value sections, see data/platform.cfg).
  static PlatformModel parse(const std::string& text, std::vector<Violation>& violations);

  DomainLoads loads_for(double tdp_w, WorkloadType wl, double ar) const;

  /// Worst-case (power-virus, AR = 1) loads: every domain at its ceiling
  /// for this TDP, all ceilings scaled proportionally along TDP.
  DomainLoads virus_loads(double tdp_w) const;

  /// Loads for a package-state operating point carrying `power_w` total.
  /// Compute domains are power-gated (zero) in C2 and deeper.
  DomainLoads state_loads(PackagePowerState s, double power_w) const;

  /// Residual power of an idle package state (C2..C8) from the bundled
  /// state table; C0/C0_MIN take their power from the workload instead.
  double state_power(PackagePowerState s) const;

  /// Total nominal power of loads_for(tdp, wl, ar) — monotone in tdp.
  double nominal_power(double tdp_w, WorkloadType wl, double ar) const;
  /// Inverse of nominal_power along tdp (clamped to the model's TDP range);
  /// used by the trace simulator to estimate the TDP-axis coordinate from
  /// observed phase power.
  double tdp_for_power(double p_nom_w, WorkloadType wl, double ar) const;

  double tdp_min() const { return tdp_min_; }
  double tdp_max() const { return tdp_max_; }

  /// Budget constants for the performance model.
  double sa_io_budget_w() const { return sa_io_budget_w_; }
  double graphics_core_share() const { return graphics_core_share_; }

  /// Default sweep/table grid.
  const std::vector<double>& grid_tdp() const { return grid_tdp_; }
  std::vector<double> grid_ar() const;
  const std::vector<WorkloadType>& grid_workloads() const { return grid_wl_; }

 private:
  double interp(const Anchor& a, double tdp, double exp = 1.0) const;

  double tdp_min_ = 4.0, tdp_max_ = 50.0;
  double v_exp_ = 0.75;
  // power anchors
  Anchor cores_p_, llc_p_, gfx_active_p_, gfx_idle_p_, cores_gfxwl_p_, sa_p_, io_p_;
  // voltage anchors
  Anchor v_cores_, v_gfx_active_, v_gfx_idle_, v_cores_gfxwl_, v_llc_gfxwl_;
  double v_sa_ = 0.8, v_io_ = 1.0;
  double st_core0_share_ = 0.7;
  // package-state table
  std::map<PackagePowerState, StatePoint> states_;
  // budget + grid
  double sa_io_budget_w_ = 1.2;
  double graphics_core_share_ = 0.15;
  std::vector<double> grid_tdp_;
  double ar_min_ = 0.40, ar_max_ = 0.80, ar_step_ = 0.05;
  std::vector<WorkloadType> grid_wl_;
};

}  // namespace pdnkit

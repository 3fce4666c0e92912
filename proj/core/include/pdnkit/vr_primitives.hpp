#pragma once

#include "pdnkit/domain.hpp"

namespace pdnkit {

/// Power after applying a voltage guardband, and the resulting effective
/// voltage at the load.
struct GuardbandResult {
  double p_gb = 0.0;   // W
  double v_eff = 0.0;  // V
};

/// Conversion efficiency of a VR from its output power and loss:
/// p_out / (p_out + p_loss). Throws ZeroPower when both are zero.
double conversion_efficiency(double p_out_w, double p_loss_w);

/// Scales nominal power for a voltage guardband v_gb on top of v_nom.
/// Leakage scales with exponent delta, dynamic power quadratically:
///   p_gb = p_nom * [f_leak*((v+g)/v)^delta + (1-f_leak)*((v+g)/v)^2]
/// Throws NegativeGuardband for v_gb < 0.
GuardbandResult guardband_power(const DomainLoad& load, double v_gb_v);

/// Additional scaling for the voltage drop across a power-gate of impedance
/// r_pg. The drop is v_pg = r_pg * (p_gb / v_eff); the guardband scaling is
/// then reapplied with (v_pg, p_gb, v_eff) taking the roles of
/// (v_gb, p_nom, v_nom). r_pg = 0 is the identity. f_leak and delta come
/// from the originating load.
GuardbandResult power_gate_drop(const GuardbandResult& gb, double r_pg_ohm,
                                const DomainLoad& load);

/// Rail voltage and power after compensating the load-line drop for a group
/// drawing p_d at v_d with peak power p_d / ar:
///   v_d_ll = v_d + (p_peak / v_d) * r_ll,   p_d_ll = v_d_ll * (p_d / v_d)
/// Throws ZeroAr for ar <= 0.
struct LoadLineResult {
  double p_peak = 0.0;  // W
  double v_d_ll = 0.0;  // V
  double p_d_ll = 0.0;  // W
};
LoadLineResult load_line_position(double p_d_w, double v_d_v, double ar, double r_ll_ohm);

/// Linear-regulator efficiency (v_out / v_in) * i_effi. Equal to i_effi in
/// bypass mode (v_out == v_in). Throws DropoutViolation when v_out > v_in.
double ldo_efficiency(double v_out_v, double v_in_v, double i_effi);

}  // namespace pdnkit

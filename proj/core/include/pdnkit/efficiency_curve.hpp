#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdnkit/types.hpp"

namespace pdnkit {

/// One measured/synthetic efficiency sample.
struct CurveSample {
  double v_in = 0.0;    // V
  double v_out = 0.0;   // V
  double i_out = 0.0;   // A
  VrPowerState ps = VrPowerState::PS0;
  double eta = 0.0;     // (0,1]
};

struct CurveLookup {
  double eta = 0.0;
  bool extrapolated = false;  // query was clamped to the curve boundary
};

/// Sampled VR efficiency over (v_in, v_out, i_out, power-state).
///
/// Lookup semantics: piecewise-linear interpolation along i_out on the
/// matching (v_in, v_out, ps) grid line, linear blending across the two
/// bracketing v_out lines, nearest-match in v_in, exact-match in power
/// state. Out-of-domain queries clamp to the boundary and tag the result
/// as extrapolated; they never throw.
class EfficiencyCurve {
 public:
  EfficiencyCurve() = default;
  explicit EfficiencyCurve(std::vector<CurveSample> samples);

  /// Invariant check: every eta in (0,1], and at least 2 distinct i_out
  /// samples per (v_in, v_out, ps) grid line.
  std::vector<Violation> validate() const;

  CurveLookup efficiency(double v_in, double v_out, double i_out, VrPowerState ps) const;

  bool has_power_state(VrPowerState ps) const;
  /// Power states present, ordered PS0..PS4.
  std::vector<VrPowerState> power_states() const;
  /// Lowest-power (highest-numbered) state present.
  VrPowerState lowest_power_state() const;

  /// Current above which PS0 matches or beats PS1 at (v_in, v_out), scanned
  /// over the sampled current grid. Returns nullopt unless both states are
  /// present. Used by the package-state -> VR-state mapping for active
  /// states.
  std::optional<double> ps0_ps1_crossover(double v_in, double v_out) const;

  const std::vector<CurveSample>& samples() const { return samples_; }
  bool empty() const { return samples_.empty(); }

 private:
  struct LineKey {
    double v_in;
    double v_out;
    VrPowerState ps;
    bool operator<(const LineKey& o) const;
  };
  using Line = std::vector<std::pair<double, double>>;  // (i_out, eta), sorted

  double line_eta(const Line& line, double i_out, bool& extrapolated) const;

  std::vector<CurveSample> samples_;
  std::map<LineKey, Line> lines_;
};

/// Named curves referenced by topology stages ("offchip", "ivr", ...).
using CurveSet = std::map<std::string, EfficiencyCurve>;

/// Parses the delimited curve format: header row
/// `vin_V,vout_V,iout_A,power_state,eta`, one sample per row, any order.
/// Parse problems are reported through `violations`; returns the curve
/// built from the rows that parsed.
EfficiencyCurve parse_curve_csv(const std::string& text, const std::string& source_name,
                                std::vector<Violation>& violations);

std::string curve_to_csv(const EfficiencyCurve& curve);

}  // namespace pdnkit

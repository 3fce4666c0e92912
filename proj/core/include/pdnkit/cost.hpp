#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdnkit/efficiency_curve.hpp"
#include "pdnkit/platform.hpp"
#include "pdnkit/topology.hpp"

namespace pdnkit {

/// Regulator class by TDP: integrated PMIC rails up to 18 W, discrete VRMs
/// above.
enum class RegulatorClass { PMIC, VRM };
inline constexpr double kPmicTdpLimitW = 18.0;
RegulatorClass regulator_class_for_tdp(double tdp_w);

/// Peak output current required of each off-chip VR at the worst-case
/// (power-virus) load for one TDP point.
struct IccMaxProfile {
  struct Entry {
    std::string stage_id;
    double icc_max_a = 0.0;
  };
  std::vector<Entry> entries;  // deterministic order: topology group order
  double max() const;
};

/// Evaluates the topology at AR = 1 power-virus loads and takes each
/// off-chip VR's output current p_out_peak / v_out; shared rails sum member
/// currents before the division.
IccMaxProfile icc_max_profile(const PdnTopology& t, double tdp_w,
                              const DomainLoads& virus_loads, const CurveSet& curves);

/// Vendor-style mapping from icc_max to component cost and board area:
/// monotone threshold rows per regulator class. Bundled values are synthetic
/// and calibrated; absolute currency/area numbers are not authoritative.
class CostAreaTable {
 public:
  struct Row {
    double icc_max_a = 0.0;
    double cost = 0.0;
    double area_mm2 = 0.0;
  };

  void add_row(RegulatorClass cls, Row row);
  std::vector<Violation> validate() const;
  const std::vector<Row>& rows(RegulatorClass cls) const;

  /// Smallest row with threshold >= icc; throws CurrentExceedsTable when
  /// none is large enough.
  const Row& bin(RegulatorClass cls, double icc_a) const;

 private:
  std::map<int, std::vector<Row>> rows_;
};

struct CostAreaEstimate {
  RegulatorClass cls = RegulatorClass::PMIC;
  double bom = 0.0;
  double area_mm2 = 0.0;
  std::vector<std::pair<std::string, CostAreaTable::Row>> bins;  // per VR
};

/// Bins every VR of the profile in the TDP's regulator class and sums cost
/// and area.
CostAreaEstimate estimate_cost_area(const IccMaxProfile& profile,
                                    const CostAreaTable& table, double tdp_w);

}  // namespace pdnkit

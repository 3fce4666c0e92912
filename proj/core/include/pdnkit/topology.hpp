#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdnkit/types.hpp"

namespace pdnkit {

/// Where a stage takes its conversion efficiency from.
struct EfficiencySource {
  enum class Kind { None, Curve, AnalyticLdo };
  Kind kind = Kind::None;
  std::string curve;      // curve name in the CurveSet when kind == Curve
  double i_effi = 0.991;  // LDO current efficiency when kind == AnalyticLdo, in (0.9, 1]
};

/// One voltage-regulation (or power-gate) stage.
struct VrStage {
  std::string id;
  VrKind kind = VrKind::OffChipSwitching;
  EfficiencySource efficiency_source;
  double v_tob = 0.0;     // V, tolerance-band guardband this stage imposes
  double r_ll = 0.0;      // ohm, load-line impedance of the segment it drives
  double r_pg = 0.0;      // ohm, power-gate impedance (0 = no power-gate)
  double icc_max = 1.0;   // A, design rating, > 0
};

/// Domains fed by one off-chip VR, each optionally through an on-chip stage.
struct TopologyGroup {
  VrStage first_stage;                       // off-chip switching VR
  std::vector<DomainId> members;
  std::vector<std::optional<VrStage>> member_stages;  // parallel to members
};

/// A named PDN architecture. The five canonical names are MBVR, IVR, LDO,
/// I_MBVR and FlexWatts; any other name is a custom architecture checked
/// against the generic invariants only.
struct PdnTopology {
  std::string name;
  std::vector<TopologyGroup> groups;
  double v_in = 0.0;          // V, shared first-stage rail voltage where present
  std::optional<double> t_j;  // degC, informational annotation only

  bool has_shared_first_stage() const;
  /// Group index feeding `d`, or -1.
  int group_of(const DomainId& d) const;
};

/// Checks all type invariants plus the per-name structural rules:
///  - every domain in exactly one group (DuplicateDomain / OrphanDomain
///    against the canonical six for the named architectures),
///  - IVR/I_MBVR/FlexWatts have exactly one shared first stage feeding
///    on-chip stages (MissingFirstStage),
///  - positive parameters (NonPositiveParameter),
///  - LDO/hybrid stages carry i_effi in (0.9, 1].
/// Returns the complete list of violations; empty means valid.
std::vector<Violation> validate_topology(const PdnTopology& t);

/// Built-in constructors for the five evaluated architectures, carrying the
/// bundled impedance/TOB parameter set. These always validate.
PdnTopology make_mbvr();
PdnTopology make_ivr();
PdnTopology make_ldo();
PdnTopology make_i_mbvr();
PdnTopology make_flexwatts();

/// Preset lookup by canonical name; throws ParseError for unknown names.
PdnTopology make_topology(const std::string& name);
const std::vector<std::string>& topology_names();

}  // namespace pdnkit

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdnkit/cost.hpp"
#include "pdnkit/etee.hpp"
#include "pdnkit/flexwatts.hpp"
#include "pdnkit/perf.hpp"
#include "pdnkit/platform.hpp"

namespace pdnkit::io {

/// Sectioned key/value text ("[section.name]" + "key = value" lines, '#'
/// comments). Section order is preserved; keys within a section too.
struct ConfigSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
  std::optional<std::string> get(const std::string& key) const;
};
struct ConfigTree {
  std::vector<std::pair<std::string, std::string>> root;  // entries before any section
  std::vector<ConfigSection> sections;
  std::optional<std::string> root_get(const std::string& key) const;
};
ConfigTree parse_config_text(const std::string& text, const std::string& source,
                             std::vector<Violation>& violations);

// ---- topology config ---------------------------------------------------
PdnTopology topology_from_config(const ConfigTree& tree, const std::string& source,
                                 std::vector<Violation>& violations);
std::string topology_to_config(const PdnTopology& t);

// ---- delimited loaders ---------------------------------------------------
CostAreaTable parse_cost_table_csv(const std::string& text, const std::string& source,
                                   std::vector<Violation>& violations);
PowerFrequencyCurve parse_pf_curves_csv(const std::string& text, const std::string& source,
                                        std::vector<Violation>& violations);
std::vector<Workload> parse_workloads_csv(const std::string& text, const std::string& source,
                                          std::vector<Violation>& violations);
std::vector<TracePhase> parse_trace_csv(const std::string& text, const std::string& source,
                                        std::vector<Violation>& violations);

// ---- report serialization ------------------------------------------------
/// Column order of the flat report row (stable, documented in the README).
const std::vector<std::string>& etee_row_fields();
std::string etee_row_header();
std::string etee_report_row(const EteeReport& r, double tdp_w, WorkloadType wl, double ar);
/// Structured key/value document for single runs, including the per-domain
/// and per-group breakdown.
std::string etee_report_document(const EteeReport& r);

std::string sim_report_csv(const SimReport& r);
std::string sim_report_summary(const SimReport& r);

/// Fixed-precision numeric formatting used by every emitter (deterministic,
/// round-trippable).
std::string format_number(double v);

// ---- data pack / run configuration ----------------------------------------
/// Everything cmd_* needs, resolved from a data directory and its config.
struct DataPack {
  std::filesystem::path root;
  std::vector<PdnTopology> topologies;
  CurveSet curves;
  CostAreaTable cost_table;
  PowerFrequencyCurve pf_curves;
  std::vector<Workload> workloads;
  PlatformModel platform;

  const PdnTopology* topology(const std::string& name) const;
};

/// Compiled-in default data directory (the installed/bundled pack).
std::filesystem::path default_data_dir();

/// Loads and validates every file of a data pack. All problems are appended
/// to `violations`; the pack is usable iff none are appended.
DataPack load_data_pack(const std::filesystem::path& dir, std::vector<Violation>& violations);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

}  // namespace pdnkit::io

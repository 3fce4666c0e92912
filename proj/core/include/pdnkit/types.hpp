#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Units are fixed across the library and all file formats:
// watts, volts, amperes, ohms, seconds. File headers restate this.

namespace pdnkit {

/// Processor domain identifier. The six canonical domains of a client
/// processor are listed in `domains::`; topologies may add custom names.
using DomainId = std::string;

namespace domains {
inline const DomainId kCore0 = "core0";
inline const DomainId kCore1 = "core1";
inline const DomainId kLlc = "llc";
inline const DomainId kGfx = "gfx";
inline const DomainId kSa = "sa";
inline const DomainId kIo = "io";

/// Canonical order used by reports and the trace file columns.
const std::vector<DomainId>& canonical();
}  // namespace domains

/// Package-level power states, active (C0, C0_MIN) through deep idle (C8).
enum class PackagePowerState { C0, C0_MIN, C2, C3, C6, C7, C8 };

/// Voltage-regulator power states as tagged in efficiency-curve files.
/// Higher-numbered states shed phases / reduce switching activity and are
/// more efficient at light load.
enum class VrPowerState { PS0, PS1, PS2, PS3, PS4 };

enum class WorkloadType { SingleThread, MultiThread, Graphics };

/// Operating mode of a hybrid (IVR+LDO) stage.
enum class FlexMode { IvrMode, LdoMode };

enum class VrKind {
  OffChipSwitching,
  OnChipIvr,
  OnChipLdo,
  PowerGateOnly,
  HybridIvrLdo,
};

enum class ErrorCode {
  DuplicateDomain,
  OrphanDomain,
  MissingFirstStage,
  NonPositiveParameter,
  ZeroPower,
  NegativeGuardband,
  ZeroAr,
  DropoutViolation,
  NoMatchingPowerState,
  EmptyCurve,
  BudgetUnderflow,
  UnknownTdp,
  CurrentExceedsTable,
  ResidencyMismatch,
  EmptyTrace,
  ParseError,
};

const char* to_string(ErrorCode c);
const char* to_string(PackagePowerState s);
const char* to_string(VrPowerState s);
const char* to_string(WorkloadType t);
const char* to_string(FlexMode m);
const char* to_string(VrKind k);

bool parse_package_power_state(const std::string& s, PackagePowerState& out);
bool parse_vr_power_state(const std::string& s, VrPowerState& out);
bool parse_workload_type(const std::string& s, WorkloadType& out);
bool parse_vr_kind(const std::string& s, VrKind& out);

/// Exception carrying a typed error code; thrown by evaluators and parsers
/// for conditions that make a result meaningless.
class PdnError : public std::runtime_error {
 public:
  PdnError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One validation finding: where, what, and the typed code.
struct Violation {
  ErrorCode code;
  std::string where;    // e.g. "stage.v_cores" or "file.csv:17"
  std::string message;
};

std::string format_violations(const std::vector<Violation>& v);

}  // namespace pdnkit

#pragma once

#include <map>

#include "pdnkit/types.hpp"

namespace pdnkit {

/// Fitted leakage-voltage exponent shared by all domains unless overridden.
inline constexpr double kDefaultLeakageExponent = 2.8;
/// Default leakage fractions: graphics runs hotter structures, the rest of
/// the chip sits near 0.22.
inline constexpr double kLeakageFractionGfx = 0.45;
inline constexpr double kLeakageFractionOther = 0.22;

/// One domain's nominal operating point for a single evaluation.
struct DomainLoad {
  DomainId domain;
  double p_nom = 0.0;   // W, >= 0
  double v_nom = 0.0;   // V, > 0
  double f_leak = kLeakageFractionOther;  // leakage fraction in [0,1]
  double delta = kDefaultLeakageExponent; // leakage voltage exponent, > 0
  double ar = 1.0;      // application ratio in (0,1]
};

/// Per-domain loads for one evaluation, keyed (and ordered) by domain name.
using DomainLoads = std::map<DomainId, DomainLoad>;

/// Default leakage fraction for a canonical domain name.
double default_leakage_fraction(const DomainId& d);

/// Checks the DomainLoad invariants; returns violations (empty when valid).
std::vector<Violation> validate_load(const DomainLoad& load);

}  // namespace pdnkit

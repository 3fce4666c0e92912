#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdnkit/types.hpp"

namespace pdnkit {

/// Core and graphics frequency bounds (GHz).
inline constexpr double kCoresFreqMin = 0.8;
inline constexpr double kCoresFreqMax = 4.0;
inline constexpr double kGfxFreqMin = 0.1;
inline constexpr double kGfxFreqMax = 1.2;

enum class PerfDomain { Cores, Gfx };

/// Power-frequency curve: per (TDP, domain), the incremental power cost of
/// raising frequency by 1% of the baseline, as a step function of frequency.
/// The first row's frequency is the TDP's baseline.
class PowerFrequencyCurve {
 public:
  struct Row {
    double freq_ghz = 0.0;
    double w_per_percent = 0.0;  // W per 1% frequency step
  };

  void add_row(double tdp_w, PerfDomain domain, Row row);
  std::vector<Violation> validate() const;

  bool has_tdp(double tdp_w, PerfDomain domain) const;
  /// Rows for an exact TDP index; throws UnknownTdp when absent.
  const std::vector<Row>& rows(double tdp_w, PerfDomain domain) const;
  double baseline_freq(double tdp_w, PerfDomain domain) const;

  /// Signed number of whole 1%-of-baseline frequency steps purchasable with
  /// `budget_w` (negative budget steps down, refunding the same costs).
  /// Steps stop at the domain frequency bounds; `unspent_w` reports budget
  /// left at saturation.
  int frequency_steps(double budget_w, double tdp_w, PerfDomain domain,
                      double* unspent_w = nullptr) const;

 private:
  std::map<std::pair<double, int>, std::vector<Row>> rows_;
};

/// TDP budget split between PDN loss, the SA/IO allocation and the compute
/// domains.
struct BudgetSplit {
  double tdp_w = 0.0;
  double pdn_loss_w = 0.0;
  double sa_io_budget_w = 0.0;
  double compute_budget_w = 0.0;
  double core_share = 1.0;  // of the compute budget
  double gfx_share = 0.0;
};

/// pdn_loss = tdp*(1 - etee); sa_io from the platform constant; the rest is
/// compute, split 100/0 for CPU-intensive and 15/85 (configurable) for
/// graphics workloads. Throws BudgetUnderflow when sa_io + pdn_loss > tdp.
BudgetSplit split_budget(double tdp_w, double etee, WorkloadType wl,
                         double sa_io_budget_w, double graphics_core_share = 0.15);

/// Performance delta from spending `extra_budget_w` on frequency steps:
/// steps * 1% * scalability. Monotone nondecreasing in the budget, exactly
/// zero at zero.
double perf_gain(double extra_budget_w, const PowerFrequencyCurve& curve,
                 double tdp_w, PerfDomain domain, double scalability);

/// A named workload from the manifest.
struct Workload {
  std::string name;
  WorkloadType type = WorkloadType::SingleThread;
  double ar = 0.56;
  double scalability = 1.0;
};

struct TopologyPerf {
  std::string topology;
  double etee = 0.0;
  double extra_budget_w = 0.0;   // tdp * (etee - etee_ref)
  double perf_delta = 0.0;       // signed fraction vs the reference
  double normalized = 100.0;     // reference == 100
};

/// Converts per-topology ETEE at one operating point into normalized
/// performance vs `reference`: the ETEE differential frees (or costs)
/// tdp * d_etee of compute budget, which buys frequency steps on the
/// workload's domain. etee_by_topology must contain the reference.
std::vector<TopologyPerf> compare_performance(
    const std::map<std::string, double>& etee_by_topology,
    const std::string& reference, double tdp_w, const Workload& wl,
    const PowerFrequencyCurve& curve);

}  // namespace pdnkit

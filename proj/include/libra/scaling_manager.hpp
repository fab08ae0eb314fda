#pragma once

// Converts a traffic estimate into a target VM fleet size and the request
// rate (vm_reqs) the fleet is provisioned for. Below the cost-indifference
// point the whole fleet is released and everything runs serverless.

#include <cstdint>

namespace libra {

struct ScalingConfig {
  double phi = 1.0;        // deviations above average used when sizing
  double cip = 0.0;        // requests/s below which VMs are not worth keeping
  int r_max_int = 1;       // integer per-VM capacity, requests/s
  double rho = 0.8;        // fraction of vm_reqs the router actually directs

  void validate() const;
};

enum class ScaleDirection { Out, In, None };

struct ScalingDecision {
  int target_instances = 0;
  double vm_reqs = 0.0;     // requests/s the target fleet is sized for
  int delta = 0;            // target - active at decision time
  double effective_at = 0.0;  // when the router may apply the new vm_reqs

  ScaleDirection direction() const {
    return delta > 0 ? ScaleDirection::Out
                     : (delta < 0 ? ScaleDirection::In : ScaleDirection::None);
  }
};

// One scaling step. avg/std are requests per SECOND (callers divide
// per-epoch estimates by the epoch length). If avg < cip all instances go;
// otherwise the fleet is sized to ceil((avg + phi*std) / r_max_int).
ScalingDecision decide(double avg, double std, int active_vms, const ScalingConfig& cfg);

// Scale-out decisions take effect once the new VMs are ready; scale-in and
// no-change decisions take effect immediately.
double effective_time(const ScalingDecision& decision, double now, double cold_start_s,
                      ScaleDirection direction);

}  // namespace libra

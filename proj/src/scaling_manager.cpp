#include "libra/scaling_manager.hpp"

#include <cmath>
#include <stdexcept>

namespace libra {

void ScalingConfig::validate() const {
  if (r_max_int < 1) throw std::invalid_argument("per-VM capacity must be >= 1 request/s");
  if (cip < 0.0) throw std::invalid_argument("cip must be >= 0");
  if (rho <= 0.0 || rho > 1.0) throw std::invalid_argument("rho must be in (0,1]");
}

ScalingDecision decide(double avg, double std, int active_vms, const ScalingConfig& cfg) {
  if (avg < 0.0 || std < 0.0 || active_vms < 0)
    throw std::domain_error("decide requires avg, std, active_vms >= 0");
  ScalingDecision d;
  if (avg < cfg.cip) {
    d.vm_reqs = 0.0;
    d.target_instances = 0;
  } else {
    d.vm_reqs = avg + cfg.phi * std;
    d.target_instances = static_cast<int>(std::ceil(d.vm_reqs / cfg.r_max_int));
  }
  d.delta = d.target_instances - active_vms;
  return d;
}

double effective_time(const ScalingDecision&, double now, double cold_start_s,
                      ScaleDirection direction) {
  return direction == ScaleDirection::Out ? now + cold_start_s : now;
}

}  // namespace libra

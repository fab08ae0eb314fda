#pragma once

// Economic model for hybrid VM + serverless provisioning: function execution
// time as a function of memory, per-request FaaS billing, per-instance IaaS
// billing, VM capacity via Little's law, the cost-indifference point, and
// hybrid split cost curves.
//
// All functions here are pure; rates are requests/second, money is dollars.

#include <iosfwd>
#include <string>
#include <vector>

namespace libra {

// Execution-time model of one application function. Execution time decays
// exponentially from t_min (at m_min MB) toward t_at_max_mem (at m_max MB).
// tau rescales the VM-side execution time relative to the FaaS side.
struct ExecutionModel {
  double t_min = 1.0;          // seconds at m_min
  double t_at_max_mem = 1.0;   // seconds at m_max
  double m_min_mb = 128.0;
  double m_max_mb = 3008.0;
  double lambda_per_mb = 0.0;  // decay constant, 1/MB
  double tau = 1.0;            // vm exec time = tau * faas exec time

  void validate() const;
};

struct VMType {
  std::string name;
  double memory_mb = 0.0;
  double cost_per_hour = 0.0;
  double cold_start_s = 0.0;

  double cost_per_second() const { return cost_per_hour / 3600.0; }
  void validate() const;
};

struct PricingConfig {
  double faas_cost_per_mb_second = 0.0;  // $/(MB*s)
  double faas_fixed_per_request = 0.0;   // $ per invocation (gateway fee etc.)
  double faas_billing_quantum_s = 0.001; // billed time is rounded up to this
  std::vector<VMType> vm_types;

  // $/s of keeping memory m MB allocated to a running function.
  double faas_cost_per_second(double m_mb) const {
    return faas_cost_per_mb_second * m_mb;
  }
  const VMType& vm(const std::string& name) const;  // throws if unknown
  void validate() const;
};

// Round execution time up to the billing quantum.
double quantize_exec_time(double exec_s, double quantum_s);

// Function execution time at memory m under the decay model.
// Throws std::domain_error if m is outside [m_min, m_max].
double faas_exec_time(double m_mb, const ExecutionModel& model);

// VM-side execution time: tau * faas_exec_time.
double vm_exec_time(double m_mb, const ExecutionModel& model);

// Billed cost of one FaaS invocation with the given execution time.
double faas_cost_per_request(double exec_s, double m_mb, const PricingConfig& pricing);

// $/s of serving n requests/s on FaaS. Linear in n.
double faas_cost_rate(double n, double m_mb, const ExecutionModel& model,
                      const PricingConfig& pricing);

// Max requests/s one VM sustains within the service time (Little's law):
// (M/m) concurrent requests, each occupying a slot for t_vm seconds.
// Returned as a real number; the simulator floors it to integer slots.
// Throws std::domain_error if a single request does not fit (m > M).
double r_max(const VMType& vm, double m_mb, double t_vm_s);

// $/s of serving n requests/s on VMs of the given type: ceil(n / r_max)
// instances, each billed regardless of utilization. Step function of n.
double iaas_cost_rate(double n, double r_max_per_vm, const VMType& vm);

struct CipResult {
  double rate = 0.0;            // requests/s where FaaS and IaaS costs cross
  bool exceeds_single_vm = false;  // crossing lies beyond one VM's capacity
};

// Request rate at which per-second FaaS spend equals the cost of one VM
// instance. Below it FaaS is cheaper. exceeds_single_vm flags configurations
// where one instance is cheaper than FaaS across its whole capacity range.
// Throws std::domain_error when the per-request FaaS cost is zero (no finite
// crossing exists).
CipResult cost_indifference_point(double m_mb, const ExecutionModel& model,
                                  const PricingConfig& pricing, const VMType& vm);

// Same crossing, but with the per-request execution time given directly
// (e.g. a measured service time) instead of the decay model.
CipResult cost_indifference_point_for_exec(double exec_s, double m_mb,
                                           const PricingConfig& pricing,
                                           const VMType& vm);

struct HybridPoint {
  double faas_fraction = 0.0;
  double cost_rate = 0.0;  // $/s
};

struct HybridCurve {
  std::vector<HybridPoint> points;
  std::size_t argmin = 0;  // index of the cheapest split; ties -> smaller fraction
};

// Cost of splitting n requests/s between FaaS (fraction f) and IaaS (1-f),
// evaluated over the given fractions. Fractions must lie in [0,1].
HybridCurve hybrid_cost_curve(double n, const std::vector<double>& faas_fractions,
                              double m_mb, const ExecutionModel& model,
                              const PricingConfig& pricing, const VMType& vm);

// Evenly spaced fractions 0, 1/steps, ..., 1.
std::vector<double> fraction_grid(int steps);

// Loads {pricing, execution model} from a JSON config file. Schema is
// documented in the README; validation errors carry the offending key.
struct PricingFile {
  PricingConfig pricing;
  ExecutionModel model;
};
PricingFile load_pricing_file(const std::string& path);
PricingFile parse_pricing_json(const std::string& text);

// Emits CSV rows "rate,cost_faas,cost_iaas_<type>...,hybrid_min" for rates
// 0..max_rate in steps of rate_step. hybrid_min is the cheapest split cost
// against the first VM type, minimised over a 1% fraction grid.
void write_cost_curve_csv(std::ostream& out, double m_mb, const ExecutionModel& model,
                          const PricingConfig& pricing, double max_rate,
                          double rate_step);

}  // namespace libra

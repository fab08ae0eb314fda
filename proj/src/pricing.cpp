#include "libra/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace libra {

namespace {
// Guard against FP noise pushing an exact multiple over the next quantum.
constexpr double kCeilEps = 1e-9;
}  // namespace

void ExecutionModel::validate() const {
  if (t_at_max_mem <= 0.0 || t_min < t_at_max_mem)
    throw std::invalid_argument("execution model requires t_min >= t_at_max_mem > 0");
  if (m_min_mb <= 0.0 || m_max_mb <= m_min_mb)
    throw std::invalid_argument("execution model requires 0 < m_min < m_max");
  if (lambda_per_mb < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (tau <= 0.0) throw std::invalid_argument("tau must be > 0");
}

void VMType::validate() const {
  if (memory_mb <= 0.0) throw std::invalid_argument("vm memory must be > 0: " + name);
  if (cost_per_hour < 0.0) throw std::invalid_argument("vm cost must be >= 0: " + name);
  if (cold_start_s < 0.0) throw std::invalid_argument("vm cold start must be >= 0: " + name);
}

void PricingConfig::validate() const {
  if (faas_cost_per_mb_second < 0.0 || faas_fixed_per_request < 0.0)
    throw std::invalid_argument("monetary fields must be >= 0");
  if (faas_billing_quantum_s <= 0.0)
    throw std::invalid_argument("billing quantum must be > 0");
  for (const auto& v : vm_types) v.validate();
}

const VMType& PricingConfig::vm(const std::string& name) const {
  for (const auto& v : vm_types)
    if (v.name == name) return v;
  throw std::invalid_argument("unknown vm type: " + name);
}

double quantize_exec_time(double exec_s, double quantum_s) {
  if (exec_s <= 0.0) return 0.0;
  return std::ceil(exec_s / quantum_s - kCeilEps) * quantum_s;
}

double faas_exec_time(double m_mb, const ExecutionModel& model) {
  if (m_mb < model.m_min_mb || m_mb > model.m_max_mb)
    throw std::domain_error("memory outside [m_min, m_max]");
  return model.t_at_max_mem +
         (model.t_min - model.t_at_max_mem) *
             std::exp(-model.lambda_per_mb * (m_mb - model.m_min_mb));
}

double vm_exec_time(double m_mb, const ExecutionModel& model) {
  return model.tau * faas_exec_time(m_mb, model);
}

double faas_cost_per_request(double exec_s, double m_mb, const PricingConfig& pricing) {
  return quantize_exec_time(exec_s, pricing.faas_billing_quantum_s) *
             pricing.faas_cost_per_second(m_mb) +
         pricing.faas_fixed_per_request;
}

double faas_cost_rate(double n, double m_mb, const ExecutionModel& model,
                      const PricingConfig& pricing) {
  if (n < 0.0) throw std::domain_error("request rate must be >= 0");
  return n * faas_cost_per_request(faas_exec_time(m_mb, model), m_mb, pricing);
}

double r_max(const VMType& vm, double m_mb, double t_vm_s) {
  if (m_mb <= 0.0 || t_vm_s <= 0.0)
    throw std::domain_error("r_max requires m > 0 and t_vm > 0");
  if (m_mb > vm.memory_mb)
    throw std::domain_error("request memory exceeds vm memory: " + vm.name);
  return (vm.memory_mb / m_mb) / t_vm_s;
}

double iaas_cost_rate(double n, double r_max_per_vm, const VMType& vm) {
  if (n < 0.0) throw std::domain_error("request rate must be >= 0");
  if (r_max_per_vm <= 0.0) throw std::domain_error("r_max must be > 0");
  double instances = std::ceil(n / r_max_per_vm - kCeilEps);
  return instances * vm.cost_per_second();
}

CipResult cost_indifference_point_for_exec(double exec_s, double m_mb,
                                           const PricingConfig& pricing,
                                           const VMType& vm) {
  double per_request = faas_cost_per_request(exec_s, m_mb, pricing);
  if (per_request <= 0.0)
    throw std::domain_error("per-request FaaS cost is zero; no finite crossing");
  CipResult r;
  r.rate = vm.cost_per_second() / per_request;
  double capacity = r_max(vm, m_mb, exec_s);
  r.exceeds_single_vm = r.rate > capacity;
  return r;
}

CipResult cost_indifference_point(double m_mb, const ExecutionModel& model,
                                  const PricingConfig& pricing, const VMType& vm) {
  double t_faas = faas_exec_time(m_mb, model);
  double per_request = faas_cost_per_request(t_faas, m_mb, pricing);
  if (per_request <= 0.0)
    throw std::domain_error("per-request FaaS cost is zero; no finite crossing");
  CipResult r;
  r.rate = vm.cost_per_second() / per_request;
  r.exceeds_single_vm = r.rate > r_max(vm, m_mb, vm_exec_time(m_mb, model));
  return r;
}

HybridCurve hybrid_cost_curve(double n, const std::vector<double>& faas_fractions,
                              double m_mb, const ExecutionModel& model,
                              const PricingConfig& pricing, const VMType& vm) {
  if (n < 0.0) throw std::domain_error("request rate must be >= 0");
  double capacity = r_max(vm, m_mb, vm_exec_time(m_mb, model));
  HybridCurve curve;
  curve.points.reserve(faas_fractions.size());
  for (double f : faas_fractions) {
    if (f < 0.0 || f > 1.0) throw std::domain_error("fractions must lie in [0,1]");
    double cost = faas_cost_rate(f * n, m_mb, model, pricing) +
                  iaas_cost_rate((1.0 - f) * n, capacity, vm);
    if (!curve.points.empty() && cost < curve.points[curve.argmin].cost_rate)
      curve.argmin = curve.points.size();
    curve.points.push_back({f, cost});
  }
  if (curve.points.empty()) throw std::invalid_argument("empty fraction grid");
  return curve;
}

std::vector<double> fraction_grid(int steps) {
  if (steps < 1) throw std::invalid_argument("grid needs at least one step");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) g.push_back(static_cast<double>(i) / steps);
  return g;
}

PricingFile parse_pricing_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("pricing config is not valid JSON: ") + e.what());
  }
  PricingFile out;
  try {
    const auto& faas = j.at("faas");
    out.pricing.faas_cost_per_mb_second = faas.at("cost_per_mb_second").get<double>();
    out.pricing.faas_fixed_per_request = faas.at("fixed_per_request").get<double>();
    out.pricing.faas_billing_quantum_s = faas.at("billing_quantum_s").get<double>();
    const auto& em = j.at("execution_model");
    out.model.t_min = em.at("t_min_s").get<double>();
    out.model.t_at_max_mem = em.at("t_at_max_mem_s").get<double>();
    out.model.m_min_mb = em.at("m_min_mb").get<double>();
    out.model.m_max_mb = em.at("m_max_mb").get<double>();
    out.model.lambda_per_mb = em.at("lambda_per_mb").get<double>();
    out.model.tau = em.value("tau", 1.0);
    for (const auto& v : j.at("vm_types")) {
      VMType t;
      t.name = v.at("name").get<std::string>();
      t.memory_mb = v.at("memory_mb").get<double>();
      t.cost_per_hour = v.at("cost_per_hour").get<double>();
      t.cold_start_s = v.value("cold_start_s", 0.0);
      out.pricing.vm_types.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("pricing config missing/badly typed key: ") + e.what());
  }
  out.pricing.validate();
  out.model.validate();
  if (out.pricing.vm_types.empty())
    throw std::invalid_argument("pricing config lists no vm_types");
  return out;
}

PricingFile load_pricing_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pricing config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pricing_json(ss.str());
}

void write_cost_curve_csv(std::ostream& out, double m_mb, const ExecutionModel& model,
                          const PricingConfig& pricing, double max_rate,
                          double rate_step) {
  if (rate_step <= 0.0 || max_rate < 0.0)
    throw std::invalid_argument("need rate_step > 0 and max_rate >= 0");
  out << "rate,cost_faas";
  for (const auto& vm : pricing.vm_types) out << ",cost_iaas_" << vm.name;
  out << ",hybrid_min\n";
  const auto grid = fraction_grid(100);
  const VMType& hybrid_vm = pricing.vm_types.front();
  for (double rate = 0.0; rate <= max_rate + 1e-12; rate += rate_step) {
    out << rate << ',' << faas_cost_rate(rate, m_mb, model, pricing);
    for (const auto& vm : pricing.vm_types) {
      double cap = r_max(vm, m_mb, vm_exec_time(m_mb, model));
      out << ',' << iaas_cost_rate(rate, cap, vm);
    }
    auto curve = hybrid_cost_curve(rate, grid, m_mb, model, pricing, hybrid_vm);
    out << ',' << curve.points[curve.argmin].cost_rate << '\n';
  }
}

}  // namespace libra

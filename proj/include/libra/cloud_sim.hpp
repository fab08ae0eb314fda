#pragma once

// Deterministic discrete-event engine modeling a VM fleet (cold starts,
// concurrency slots, per-second billing, FIFO queueing), a serverless pool
// (per-invocation billing, unbounded concurrency), the router, SLA
// accounting, and the cost ledger.
//
// Event order is total: time, then kind (completions before arrivals before
// control), then insertion sequence. Identical inputs produce identical
// reports.

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <queue>
#include <string>
#include <vector>

#include "libra/pricing.hpp"
#include "libra/trace.hpp"

namespace libra {

class ProvisioningPolicy;

struct SimConfig {
  VMType vm_type;
  PricingConfig pricing;
  double request_mem_mb = 512.0;
  double service_time_vm_s = 1.0;
  double service_time_faas_s = 1.0;
  double faas_cold_start_s = 0.0;   // constant; zero by default
  double sla_threshold_s = 1.0;
  double sla_grace = 1.0;           // response limit = threshold * grace
  double rho = 0.8;                 // fraction of vm_reqs the router loads
  double epoch_length_s = 1.0;
  double gateway_cost_per_hour = 0.0;  // billed only by gateway-based policies
  std::uint64_t seed = 0;           // synthetic traces only; the engine draws nothing

  // Concurrent requests one VM hosts: floor of its Little's-law capacity.
  int vm_slots() const;
  double sla_limit_s() const { return sla_threshold_s * sla_grace; }
  double vm_cost_per_second() const { return vm_type.cost_per_second(); }
  double faas_cost_per_request() const;
  void validate() const;
};

enum class VMState : std::uint8_t { Provisioning, Ready, Draining, Terminated };

struct VMInstance {
  int id = 0;
  VMState state = VMState::Provisioning;
  double provisioned_at = 0.0;
  double ready_at = 0.0;
  double billed_until = 0.0;  // set at termination (or run end)
  int slots_total = 0;
  int slots_busy = 0;
  std::int64_t served = 0;

  bool has_free_slot() const { return state == VMState::Ready && slots_busy < slots_total; }
};

// served_by: vm id, kServedByFaas, or kUnserved (still queued at run end).
inline constexpr std::int32_t kUnserved = -1;
inline constexpr std::int32_t kServedByFaas = -2;

struct RequestRecord {
  double arrival_t = 0.0;
  double start_t = 0.0;
  double finish_t = 0.0;
  std::int32_t served_by = kUnserved;
  bool violated_sla = false;
};

enum class RoutingMode : std::uint8_t {
  VmWithQueue,       // round-robin over ready VMs; queue when saturated (MAX, AUTO)
  VmSpockOverlay,    // as VmWithQueue, but overflow goes to FaaS while any VM provisions
  FaasOnly,
  LibraCapped,       // at most floor(rho*vm_reqs) VM-directed per second, rest FaaS
};

struct RouterState {
  RoutingMode mode = RoutingMode::VmWithQueue;
  double rho = 1.0;
  double vm_reqs = 0.0;            // rate the router may direct to the fleet
  std::int64_t second = -1;        // current wall-clock second
  std::int64_t directed_this_second = 0;
  std::size_t rr_cursor = 0;
};

struct RouteTarget {
  enum class Kind : std::uint8_t { VM, FaaS, Queue } kind = Kind::FaaS;
  int vm = -1;
};

// One routing decision. Mutates the round-robin cursor and the per-second
// budget counter; does not mutate the fleet.
RouteTarget route(RouterState& st, const std::vector<VMInstance>& fleet, double now);

// Per-second partial billing: the whole lifetime rounded up to full seconds.
double bill_vm(const VMInstance& vm, double cost_per_hour);
// One invocation: quantized execution time at the configured memory plus the
// fixed per-request fee.
double bill_faas_request(double exec_s, double mem_mb, const PricingConfig& pricing);

struct SeriesRow {
  double t = 0.0;            // interval start
  int active_vms = 0;        // ready + provisioning at interval end
  double vm_rate = 0.0;      // requests/s routed to VMs in the interval
  double faas_rate = 0.0;
  double arrival_rate = 0.0;
  double est_avg = 0.0;      // traffic estimate, requests/s (estimating policies)
  double vm_reqs = 0.0;      // router's effective vm_reqs at interval end
};

struct SimReport {
  int schema_version = 1;
  std::string policy;
  std::string trace_label;

  std::int64_t arrivals = 0;
  std::int64_t served_vm = 0;
  std::int64_t served_faas = 0;
  std::int64_t queued_at_end = 0;
  std::int64_t sla_violations = 0;   // completed requests over the limit
  double sla_violation_pct = 0.0;    // of all arrivals

  double iaas_cost = 0.0;
  double faas_cost = 0.0;
  double gateway_cost = 0.0;
  double total_cost = 0.0;           // always the sum of the three above

  double vm_uptime_s = 0.0;          // instance-seconds, real-valued
  int peak_vms = 0;
  int vms_provisioned = 0;
  double sim_end_s = 0.0;

  std::vector<SeriesRow> series;           // one row per epoch
  std::vector<double> response_samples_s;  // completed requests, arrival order

  double response_percentile(double p) const;  // p in [0,100]
};

class Simulator {
 public:
  // The optional event log receives one line per event; see README for the
  // format. The stream must outlive run().
  Simulator(const TraceWorkload& trace, const SimConfig& cfg,
            ProvisioningPolicy& policy, std::ostream* event_log = nullptr);

  SimReport run();

  // --- surface available to policies -------------------------------------
  double now() const { return now_; }
  const SimConfig& config() const { return cfg_; }
  const TraceWorkload& trace() const { return trace_; }
  int active_vms() const;   // provisioning + ready
  int ready_vms() const;
  bool any_provisioning() const;
  // Adds n instances. ready_now skips the cold start (pre-provisioned fleets
  // at run start); otherwise instances become ready after the VM cold start.
  void provision_vms(int n, bool ready_now = false);
  // Terminates the n newest non-terminated instances. Billing stops now;
  // instances with requests in flight drain before being reclaimed.
  void terminate_newest(int n);
  void set_vm_reqs(double v);
  double vm_reqs() const { return router_.vm_reqs; }
  void note_estimate(double avg_per_s, double std_per_s);
  void schedule_control(double t, std::function<void(Simulator&)> fn);

 private:
  enum class EventKind : std::uint8_t { Completion = 0, Arrival = 1, Control = 2 };
  struct Event {
    double t = 0.0;
    EventKind kind = EventKind::Control;
    std::uint64_t seq = 0;
    std::int32_t arg = 0;  // request index or control-handler index
  };
  struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
      if (a.t != b.t) return a.t > b.t;
      if (a.kind != b.kind) return a.kind > b.kind;
      return a.seq > b.seq;
    }
  };

  void push_event(double t, EventKind kind, std::int32_t arg);
  void generate_arrivals(std::int64_t second);
  void handle_arrival(std::int32_t req);
  void handle_completion(std::int32_t req);
  void assign_to_vm(std::int32_t req, int vm_id);
  void assign_to_faas(std::int32_t req);
  void finalize_response(std::int32_t req);
  void drain_queue();
  void on_vm_ready(int vm_id);
  void epoch_tick(std::int64_t epoch_index);
  void second_tick(std::int64_t second);
  void log(const char* kind, double t, std::int64_t a, std::int64_t b);

  const TraceWorkload& trace_;
  SimConfig cfg_;
  ProvisioningPolicy& policy_;
  std::ostream* event_log_ = nullptr;

  std::priority_queue<Event, std::vector<Event>, EventAfter> events_;
  std::uint64_t next_seq_ = 0;
  std::int64_t gen_second_ = 0;
  double now_ = 0.0;
  double max_finish_ = 0.0;
  bool ran_ = false;

  std::vector<VMInstance> fleet_;
  RouterState router_;
  std::deque<std::int32_t> fifo_;
  std::vector<RequestRecord> records_;
  std::vector<std::function<void(Simulator&)>> control_fns_;

  // per-epoch routing counters for the series
  std::int64_t epoch_vm_count_ = 0;
  std::int64_t epoch_faas_count_ = 0;
  double est_avg_ = 0.0;
  double est_std_ = 0.0;

  std::int64_t violations_ = 0;
  std::int64_t served_vm_ = 0;
  std::int64_t served_faas_ = 0;
  int peak_vms_ = 0;
  std::vector<SeriesRow> series_;
};

}  // namespace libra

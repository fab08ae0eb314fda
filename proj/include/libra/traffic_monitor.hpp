#pragma once

// Exponentially weighted tracking of per-epoch request counts. The monitor
// keeps a moving average and a moving absolute deviation and reports them to
// the scaling layer every K epochs.

#include <cstdint>

namespace libra {

struct MonitorConfig {
  double alpha = 0.2;        // weight of the newest count in the average
  double beta = 0.2;         // weight of the newest deviation
  double epoch_length_s = 1.0;
  std::int64_t report_every_k = 300;

  void validate() const;
};

struct TrafficEstimate {
  double avg = 0.0;  // requests per epoch
  double std = 0.0;  // mean absolute deviation, requests per epoch
  std::int64_t epochs_observed = 0;
};

// Folds one epoch's request count into the estimate:
//   avg' = (1-alpha)*avg + alpha*count
//   std' = (1-beta)*std + beta*|count - avg'|   (deviation against avg')
// The first observed epoch seeds avg = count, std = 0.
// Throws std::domain_error on a negative count.
TrafficEstimate record_epoch(double count, const TrafficEstimate& state,
                             const MonitorConfig& cfg);

// True on every positive multiple of K epochs.
bool should_report(std::int64_t epochs_observed, const MonitorConfig& cfg);

// Single-owner convenience wrapper; snapshots are plain values.
class TrafficMonitor {
 public:
  explicit TrafficMonitor(MonitorConfig cfg);

  // Records one epoch and returns true if this epoch closes a K-window.
  bool observe(double count);
  const TrafficEstimate& estimate() const { return state_; }
  const MonitorConfig& config() const { return cfg_; }

 private:
  MonitorConfig cfg_;
  TrafficEstimate state_;
};

}  // namespace libra

#include "libra/traffic_monitor.hpp"

#include <cmath>
#include <stdexcept>

namespace libra {

void MonitorConfig::validate() const {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must be in [0,1]");
  if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("beta must be in [0,1]");
  if (epoch_length_s <= 0.0) throw std::invalid_argument("epoch length must be > 0");
  if (report_every_k < 1) throw std::invalid_argument("report interval K must be >= 1");
}

TrafficEstimate record_epoch(double count, const TrafficEstimate& state,
                             const MonitorConfig& cfg) {
  if (count < 0.0) throw std::domain_error("epoch request count must be >= 0");
  TrafficEstimate next;
  next.epochs_observed = state.epochs_observed + 1;
  if (state.epochs_observed == 0) {
    next.avg = count;
    next.std = 0.0;
    return next;
  }
  next.avg = (1.0 - cfg.alpha) * state.avg + cfg.alpha * count;
  next.std = (1.0 - cfg.beta) * state.std + cfg.beta * std::abs(count - next.avg);
  return next;
}

bool should_report(std::int64_t epochs_observed, const MonitorConfig& cfg) {
  return epochs_observed > 0 && epochs_observed % cfg.report_every_k == 0;
}

TrafficMonitor::TrafficMonitor(MonitorConfig cfg) : cfg_(cfg) { cfg_.validate(); }

bool TrafficMonitor::observe(double count) {
  state_ = record_epoch(count, state_, cfg_);
  return should_report(state_.epochs_observed, cfg_);
}

}  // namespace libra

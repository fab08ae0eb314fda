#pragma once

// Per-second request-count workloads: file ingestion and deterministic
// synthetic generation (constant, step, diurnal sinusoid, bursty).

#include <cstdint>
#include <string>
#include <vector>

namespace libra {

struct TraceWorkload {
  std::vector<std::int64_t> counts;  // requests arriving in each 1 s slot
  std::string label;

  std::int64_t total() const;
  std::int64_t peak() const;
  double duration_s() const { return static_cast<double>(counts.size()); }
  void validate() const;  // non-empty, all counts >= 0
};

// Reads one count per line, or two-column CSV "second,count" (optional
// header row). Scaling maps c -> max(0, round(c / scale_factor)).
// Parse failures name the offending line; an empty file is an error.
TraceWorkload load_trace(const std::string& path, double scale_factor = 1.0);
TraceWorkload parse_trace(const std::string& text, double scale_factor,
                          const std::string& label);

enum class TraceKind { Constant, Step, Diurnal, Bursty };

struct TraceGenParams {
  TraceKind kind = TraceKind::Constant;
  std::int64_t length_s = 3600;
  double base = 5.0;        // constant level / sinusoid midline
  double amplitude = 0.0;   // sinusoid swing (diurnal, bursty)
  double period_s = 3600.0;
  double step_low = 0.0;    // step: level before switch_at
  double step_high = 0.0;   // step: level after switch_at
  std::int64_t switch_at = 0;
  double spike_prob = 0.0;       // bursty: per-second chance a burst starts
  double spike_mag_min = 0.0;    // bursty: extra requests/s during a burst
  double spike_mag_max = 0.0;
  std::int64_t spike_len_min = 1;  // bursty: burst duration bounds, seconds
  std::int64_t spike_len_max = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

// Deterministic for a given params+seed. Bursty = diurnal sinusoid plus
// flat-topped bursts whose start, magnitude and duration are drawn from the
// seeded generator.
TraceWorkload gen_trace(const TraceGenParams& params);

void write_trace(const std::string& path, const TraceWorkload& trace);

// The bursty diurnal profiles the bundled experiments and the acceptance
// suite run on. Pinned so results are reproducible.
TraceGenParams standard_bursty_2h();
TraceGenParams standard_bursty_1h(std::uint64_t seed);

}  // namespace libra

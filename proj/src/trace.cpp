#include "libra/trace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace libra {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Uniform double in [0,1) from the top 53 bits of the engine output, so the
// stream does not depend on library-specific distribution internals.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

double next_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * next_unit(rng);
}

std::int64_t parse_count(const std::string& token, std::size_t line_no) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                ": not an integer: '" + token + "'");
  }
  while (pos < token.size() && (token[pos] == ' ' || token[pos] == '\r' || token[pos] == '\t'))
    ++pos;
  if (pos != token.size())
    throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                ": trailing junk: '" + token + "'");
  if (value < 0)
    throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                ": negative count " + std::to_string(value));
  return value;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

std::int64_t TraceWorkload::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t TraceWorkload::peak() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

void TraceWorkload::validate() const {
  if (counts.empty()) throw std::invalid_argument("trace is empty");
  for (auto c : counts)
    if (c < 0) throw std::invalid_argument("trace has a negative count");
}

TraceWorkload parse_trace(const std::string& text, double scale_factor,
                          const std::string& label) {
  if (scale_factor <= 0.0) throw std::invalid_argument("scale factor must be > 0");
  TraceWorkload trace;
  trace.label = label;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::int64_t expected_second = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    auto comma = body.find(',');
    std::int64_t raw;
    if (comma == std::string::npos) {
      raw = parse_count(body, line_no);
    } else {
      std::string first = trim(body.substr(0, comma));
      std::string second = trim(body.substr(comma + 1));
      if (line_no == 1 && first == "second" && second == "count") continue;
      std::int64_t sec = parse_count(first, line_no);
      if (sec != expected_second)
        throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                    ": non-contiguous second " + std::to_string(sec) +
                                    " (expected " + std::to_string(expected_second) + ")");
      raw = parse_count(second, line_no);
    }
    double scaled = std::round(static_cast<double>(raw) / scale_factor);
    trace.counts.push_back(std::max<std::int64_t>(0, static_cast<std::int64_t>(scaled)));
    ++expected_second;
  }
  if (trace.counts.empty()) throw std::invalid_argument("trace has no data lines");
  return trace;
}

TraceWorkload load_trace(const std::string& path, double scale_factor) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_trace(ss.str(), scale_factor, path);
}

void TraceGenParams::validate() const {
  if (length_s < 1) throw std::invalid_argument("trace length must be >= 1 s");
  switch (kind) {
    case TraceKind::Constant:
      if (base < 0.0) throw std::invalid_argument("constant level must be >= 0");
      break;
    case TraceKind::Step:
      if (step_low < 0.0 || step_high < 0.0)
        throw std::invalid_argument("step levels must be >= 0");
      if (switch_at < 0 || switch_at > length_s)
        throw std::invalid_argument("step switch must lie inside the trace");
      break;
    case TraceKind::Diurnal:
    case TraceKind::Bursty:
      if (base < 0.0 || amplitude < 0.0 || period_s <= 0.0)
        throw std::invalid_argument("sinusoid needs base, amplitude >= 0 and period > 0");
      if (kind == TraceKind::Bursty) {
        if (spike_prob < 0.0 || spike_prob > 1.0)
          throw std::invalid_argument("spike probability must be in [0,1]");
        if (spike_mag_min < 0.0 || spike_mag_max < spike_mag_min)
          throw std::invalid_argument("spike magnitude range invalid");
        if (spike_len_min < 1 || spike_len_max < spike_len_min)
          throw std::invalid_argument("spike length range invalid");
      }
      break;
  }
}

TraceWorkload gen_trace(const TraceGenParams& p) {
  p.validate();
  TraceWorkload trace;
  trace.counts.resize(static_cast<std::size_t>(p.length_s));
  std::mt19937_64 rng(p.seed);

  auto sinusoid = [&](std::int64_t t) {
    // Trough-first so traces start light and crest mid-period.
    return p.base - p.amplitude * std::cos(2.0 * kPi * static_cast<double>(t) / p.period_s);
  };

  std::int64_t burst_left = 0;
  double burst_mag = 0.0;
  for (std::int64_t t = 0; t < p.length_s; ++t) {
    double level = 0.0;
    switch (p.kind) {
      case TraceKind::Constant:
        level = p.base;
        break;
      case TraceKind::Step:
        level = t < p.switch_at ? p.step_low : p.step_high;
        break;
      case TraceKind::Diurnal:
        level = sinusoid(t);
        break;
      case TraceKind::Bursty: {
        level = sinusoid(t);
        if (burst_left > 0) {
          level += burst_mag;
          --burst_left;
        } else if (next_unit(rng) < p.spike_prob) {
          burst_mag = next_in(rng, p.spike_mag_min, p.spike_mag_max);
          std::int64_t range = p.spike_len_max - p.spike_len_min + 1;
          burst_left = p.spike_len_min +
                       static_cast<std::int64_t>(next_unit(rng) * static_cast<double>(range));
          burst_left = std::min(burst_left, p.spike_len_max);
          level += burst_mag;
          --burst_left;
        }
        break;
      }
    }
    trace.counts[static_cast<std::size_t>(t)] =
        std::max<std::int64_t>(0, static_cast<std::int64_t>(std::llround(level)));
  }
  trace.label = "synthetic";
  return trace;
}

void write_trace(const std::string& path, const TraceWorkload& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace: " + path);
  for (auto c : trace.counts) out << c << '\n';
}

TraceGenParams standard_bursty_2h() {
  TraceGenParams p;
  p.kind = TraceKind::Bursty;
  p.length_s = 7200;
  p.base = 40.0;
  p.amplitude = 32.0;
  p.period_s = 7200.0;
  p.spike_prob = 1.0 / 150.0;
  p.spike_mag_min = 40.0;
  p.spike_mag_max = 90.0;
  p.spike_len_min = 4;
  p.spike_len_max = 12;
  p.seed = 20107;
  return p;
}

TraceGenParams standard_bursty_1h(std::uint64_t seed) {
  TraceGenParams p = standard_bursty_2h();
  p.length_s = 3600;
  p.period_s = 3600.0;
  p.seed = seed;
  return p;
}

}  // namespace libra

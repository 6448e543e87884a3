#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pipebot/sensors.hpp"

namespace pipebot::dsp {

struct IQSample {
  std::int64_t t_us = 0;
  double i = 0.0;
  double q = 0.0;
  std::complex<double> value() const { return {i, q}; }
};

struct IQStream {
  std::vector<IQSample> samples;  // timestamps strictly increasing
  double demod_freq_hz = 0.0;
};

struct RealSample {
  std::int64_t t_us = 0;
  double value = 0.0;
};

using RealStream = std::vector<RealSample>;

enum class EventKind { rising, falling, peak };

struct Event {
  std::int64_t t_us = 0;
  EventKind kind = EventKind::rising;
  double value = 0.0;
};

struct EventList {
  std::vector<Event> events;  // sorted by timestamp
};

// Block lock-in: over each block of N samples,
//   i = (2/N) sum s * sin(2 pi f t),  q = (2/N) sum s * cos(2 pi f t)
// so an input A*sin(2 pi f t + phi) yields modulus A and phase phi. The block
// must span an integer number of excitation periods (exact harmonic
// rejection); otherwise BlockAlignmentError. IQ timestamps sit at block
// centers. Trailing samples short of a full block are dropped.
IQStream lock_in_demodulate(const sensors::RawECSignal& raw, double f_demod_hz, int block);

// Per-sample sqrt(i^2 + q^2); timestamps unchanged.
RealStream modulus(const IQStream& stream);

// Causal moving average; the warm-up uses the mean of the available prefix,
// so output length and timestamps match the input. window = 0 ->
// ParameterError.
RealStream moving_average(const RealStream& stream, int window = 15);

// Element-wise complex difference a - b for the differential coil pair.
// Timestamps must match exactly; resample first if they do not.
IQStream differential(const IQStream& a, const IQStream& b);

// Threshold events with hysteresis: rising when the value crosses threshold
// upward, falling when it crosses (threshold - hysteresis) downward, plus a
// peak event at the maximum between the two. Requires threshold > hysteresis
// >= 0.
EventList detect_events(const RealStream& stream, double threshold, double hysteresis);

// Vertex of the parabola through the three points around the middle (local
// max) sample. Collinear points return the center x unchanged.
double refine_peak(const std::vector<std::pair<double, double>>& samples);

}  // namespace pipebot::dsp

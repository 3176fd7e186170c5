// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace tsync {

using Vec3 = std::array<double, 3>;

enum class SensorKind { kPressure, kAccel3 };

/// Uniformly sampled sensor series anchored to the device RTC.
///
/// Sample n lives at device time `start_time_s + n / sample_rate_hz`; no
/// per-sample timestamps are stored. Scalar traces keep one value per
/// sample, 3-axis traces keep interleaved x,y,z triplets.
struct SensorTrace {
  SensorKind kind = SensorKind::kPressure;
  double sample_rate_hz = 0.0;
  double start_time_s = 0.0;
  std::vector<double> data;  // interleaved; channels() values per sample

  int channels() const { return kind == SensorKind::kAccel3 ? 3 : 1; }
  std::size_t sample_count() const {
    return channels() == 1 ? data.size() : data.size() / 3;
  }
  double time_at(std::size_t n) const {
    return start_time_s + static_cast<double>(n) / sample_rate_hz;
  }
  /// Device time of the last sample.
  double end_time_s() const {
    return sample_count() == 0 ? start_time_s : time_at(sample_count() - 1);
  }
  double duration_s() const { return end_time_s() - start_time_s; }

  double scalar(std::size_t n) const { return data[n]; }
  Vec3 vec(std::size_t n) const {
    return {data[3 * n], data[3 * n + 1], data[3 * n + 2]};
  }
  std::span<const double> scalars() const { return {data.data(), data.size()}; }
};

/// One buffered-FIFO readout: RTC timestamp plus the cumulative number of
/// samples retrieved from the sensor since activation.
struct FifoReadout {
  double t_s = 0.0;
  std::uint64_t total_samples = 0;
};

struct PressureChannel {
  SensorTrace trace;  // kind = kPressure, values in Pa
  std::string sensor_name = "baro";
  std::string unit = "Pa";
};

struct AccelChannel {
  SensorTrace trace;  // kind = kAccel3
  std::string sensor_name = "accel";
  std::string unit = "g";
  bool externally_triggered = true;
  int resolution_bits = 0;  // 0 = unspecified
  // Present iff the sensor runs on its internal clock (not RTC-triggered).
  std::vector<FifoReadout> fifo_log;
};

/// Record of an alignment applied by re-stamping, kept in metadata so an
/// aligned copy is distinguishable from an original recording.
struct AppliedAlignment {
  double offset_s = 0.0;
  double skew = 0.0;
  double reference_time_s = 0.0;
};

/// One device's session: a pressure trace, one or more accelerometer traces
/// and device metadata. Value object; safe to copy and share across workers.
struct Recording {
  std::string device_id;
  PressureChannel pressure;
  std::vector<AccelChannel> accel;
  std::optional<AppliedAlignment> applied_alignment;
};

/// Validates the structural invariants of a trace. `where` names the trace in
/// error messages.
void validate_trace(const SensorTrace& trace, const std::string& where);

/// Validates a full recording: exactly one non-empty pressure trace, FIFO
/// logs present iff a sensor is internally clocked, FIFO logs monotone.
void validate_recording(const Recording& rec);

inline void validate_trace(const SensorTrace& trace, const std::string& where) {
  if (trace.sample_rate_hz <= 0.0)
    fail(ErrorKind::kFormat, where, "sample_rate_hz must be positive");
  if (trace.data.empty()) fail(ErrorKind::kFormat, where, "trace has no samples");
  if (trace.kind == SensorKind::kAccel3 && trace.data.size() % 3 != 0)
    fail(ErrorKind::kFormat, where, "3-axis trace length not divisible by 3");
  if (trace.kind == SensorKind::kPressure) {
    for (std::size_t n = 0; n < trace.data.size(); ++n) {
      const double v = trace.data[n];
      if (!(v > 0.0) || !std::isfinite(v))
        fail(ErrorKind::kFormat, where,
             "pressure sample " + std::to_string(n) +
                 " is not finite and strictly positive");
    }
  }
}

inline void validate_recording(const Recording& rec) {
  const std::string scope = "recording '" + rec.device_id + "'";
  if (rec.pressure.trace.data.empty())
    fail(ErrorKind::kFormat, scope, "recording lacks pressure trace");
  if (rec.pressure.trace.kind != SensorKind::kPressure)
    fail(ErrorKind::kFormat, scope, "pressure channel has wrong kind");
  validate_trace(rec.pressure.trace, scope + " pressure");
  for (const auto& ch : rec.accel) {
    const std::string where = scope + " sensor '" + ch.sensor_name + "'";
    if (ch.trace.kind != SensorKind::kAccel3)
      fail(ErrorKind::kFormat, where, "accel channel has wrong kind");
    validate_trace(ch.trace, where);
    if (ch.externally_triggered && !ch.fifo_log.empty())
      fail(ErrorKind::kFormat, where,
           "FIFO log present for an externally triggered sensor");
    if (!ch.externally_triggered && ch.fifo_log.empty())
      fail(ErrorKind::kFormat, where,
           "internally clocked sensor is missing its FIFO log");
    for (std::size_t i = 1; i < ch.fifo_log.size(); ++i) {
      if (!(ch.fifo_log[i].t_s > ch.fifo_log[i - 1].t_s))
        fail(ErrorKind::kFormat, where,
             "FIFO log timestamps not strictly increasing at row " +
                 std::to_string(i));
      if (ch.fifo_log[i].total_samples < ch.fifo_log[i - 1].total_samples)
        fail(ErrorKind::kFormat, where,
             "FIFO log cumulative count decreases at row " + std::to_string(i));
    }
  }
}

}  // namespace tsync

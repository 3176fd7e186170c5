// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/clock_model.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace tsync {

bool ClockModel::valid() const {
  return std::isfinite(offset_s) && std::isfinite(skew) &&
         std::isfinite(reference_time_s) && std::abs(skew) < kMaxAbsSkew;
}

ClockModel ClockModel::inverted() const {
  // Re-stamping maps t -> t*(1-skew) + (skew*ref - offset). Inverting that
  // affine map and writing it again as t -> t - lag'(t) gives:
  ClockModel inv;
  inv.skew = -skew / (1.0 - skew);
  inv.offset_s = -offset_s / (1.0 - skew);
  inv.reference_time_s = reference_time_s;
  return inv;
}

ClockModel ClockModel::with_reference(double new_reference_s) const {
  ClockModel out = *this;
  out.offset_s = lag_at(new_reference_s);
  out.reference_time_s = new_reference_s;
  return out;
}

Recording compose_time_axes(const Recording& rec, const ClockModel& model) {
  if (!model.valid())
    fail(ErrorKind::kInvalidArgument, "compose_time_axes",
         "clock model skew out of range");

  Recording out = rec;
  auto restamp = [&](SensorTrace& trace) {
    trace.start_time_s = trace.start_time_s - model.lag_at(trace.start_time_s);
    trace.sample_rate_hz = trace.sample_rate_hz / (1.0 - model.skew);
  };
  restamp(out.pressure.trace);
  for (auto& ch : out.accel) {
    restamp(ch.trace);
    for (auto& r : ch.fifo_log) r.t_s = r.t_s - model.lag_at(r.t_s);
  }
  out.applied_alignment =
      AppliedAlignment{model.offset_s, model.skew, model.reference_time_s};
  return out;
}

}  // namespace tsync

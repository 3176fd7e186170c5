// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/types.hpp"

namespace tsync {

/// Linear lag model between two device clocks.
///
/// lag_at(t) = offset_s + skew * (t - reference_time_s) is the displacement
/// of the second device's content relative to the first device's content on
/// the shared axis at time t (see LagEstimate for the sign convention). The
/// model is exactly linear; no drift (second-derivative) term exists.
struct ClockModel {
  double offset_s = 0.0;
  double skew = 0.0;  // seconds of lag per second of runtime
  double reference_time_s = 0.0;

  double lag_at(double t) const {
    return offset_s + skew * (t - reference_time_s);
  }

  /// Any skew at or beyond this bound signals a failed fit, three orders of
  /// magnitude above the 20 ppm tolerance of a typical RTC crystal.
  static constexpr double kMaxAbsSkew = 1e-3;
  bool valid() const;

  /// Model m' such that applying this model to a recording's axes and then
  /// m' restores the original stamps exactly (up to rounding).
  ClockModel inverted() const;

  /// Same model re-anchored at a new reference time; lag_at is unchanged.
  ClockModel with_reference(double new_reference_s) const;
};

/// Re-stamps every trace of `rec` onto the other device's time axis:
/// a sample stamped t moves to t - lag_at(t), i.e. each trace's start time
/// shifts by -lag_at(start) and its sample rate is divided by (1 - skew).
/// The applied model is recorded in the result's metadata.
///
/// Fails if the model violates the skew bound.
Recording compose_time_axes(const Recording& rec, const ClockModel& model);

}  // namespace tsync

// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/types.hpp"

namespace tsync {

/// Linear interpolation of a trace onto a uniform grid at target_rate_hz,
/// spanning the same time interval (the first sample is preserved exactly;
/// the last target sample never passes the source's last sample). A target
/// rate equal to the source rate returns the trace unchanged.
SensorTrace resample_linear(const SensorTrace& trace, double target_rate_hz);

}  // namespace tsync

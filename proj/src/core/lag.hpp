// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace tsync {

enum class LagMethod { kXcorr, kXcov, kDeltaError, kDeltaStd, kMeanAbsDiff };
enum class ScanPolarity { kMaximize, kMinimize };

/// A candidate lag with the score that selected it.
///
/// Sign convention, used throughout the project: a positive lag means the
/// second trace's content appears *later* on the shared time axis than the
/// first trace's matching content, when each trace is placed by its own
/// clock. Aligning therefore shifts the second trace earlier by the lag.
struct LagEstimate {
  double lag_s = 0.0;
  double score = 0.0;
  ScanPolarity polarity = ScanPolarity::kMinimize;
  LagMethod method = LagMethod::kDeltaStd;
  double search_min_s = 0.0;
  double search_max_s = 0.0;
};

/// Scores over a contiguous range of integer sample lags. Lag m pairs f[n]
/// with g[n+m]; overlap_lengths[i] is the number of sample pairs scored at
/// lag m_min + i.
struct LagScan {
  int m_min = 0;
  std::vector<double> scores;
  std::vector<std::int64_t> overlap_lengths;
  ScanPolarity polarity = ScanPolarity::kMinimize;
  LagMethod method = LagMethod::kDeltaStd;

  int m_at(std::size_t i) const { return m_min + static_cast<int>(i); }
  int m_max() const { return m_min + static_cast<int>(scores.size()) - 1; }
};

}  // namespace tsync

// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/lag.hpp"

namespace tsync::kernels {

/// Number of sample pairs two traces of lengths n_f and n_g share at lag m:
/// l[m] = min(N_f, N_g - m) - max(0, -m). May be <= 0 for out-of-range m.
std::int64_t overlap_length(std::int64_t n_f, std::int64_t n_g,
                            std::int64_t m);

/// Inclusive range of integer lags to score.
struct LagRange {
  int m_min = 0;
  int m_max = 0;
};

/// All lags at which the shorter trace overlaps the longer one by at least
/// `fraction` of its own length. fraction = 1 is the containment policy
/// (shorter trace fully inside the longer); values down to 0.5 admit
/// partially overlapping placements.
LagRange containment_range(std::size_t n_f, std::size_t n_g,
                           double fraction = 1.0);

/// Implementation route for a scan. kDirect evaluates the defining sums
/// per lag; kTransform uses FFT product sums and prefix-sum statistics.
/// kAuto picks by workload. All routes agree to ~1e-9 relative error; the
/// per-lag loop carries no shared state, so results do not depend on any
/// parallel schedule.
enum class ScanEngine { kAuto, kDirect, kTransform };

/// Overlap-normalized cross-correlation: scores[m] = 1/l[m] * sum f[n]g[n+m].
/// Lags whose overlap falls below min_overlap are dropped from the range;
/// an empty remaining range is an error.
LagScan cross_correlation_scan(std::span<const double> f,
                               std::span<const double> g, LagRange range,
                               std::int64_t min_overlap = 1,
                               ScanEngine engine = ScanEngine::kAuto);

/// As cross_correlation_scan with the global means of f and g subtracted
/// before the product (cross-covariance approximation).
LagScan cross_covariance_scan(std::span<const double> f,
                              std::span<const double> g, LagRange range,
                              std::int64_t min_overlap = 1,
                              ScanEngine engine = ScanEngine::kAuto);

/// Huber loss: x^2/2 for |x| <= delta, else delta*(|x| - delta/2).
/// Continuous and continuously differentiable at |x| = delta.
double huber(double x, double delta);

/// Mean Huber loss of the pointwise difference over the overlap, minimized
/// at the best alignment. No transform decomposition exists for the Huber
/// sum, so every engine evaluates directly.
LagScan delta_error_scan(std::span<const double> f, std::span<const double> g,
                         LagRange range, double delta,
                         std::int64_t min_overlap = 1,
                         ScanEngine engine = ScanEngine::kAuto);

/// Sample standard deviation (1/(l-1) normalization) of the pointwise
/// difference over the overlap; invariant to adding constants to f or g.
/// Requires at least two overlapping samples per scored lag.
LagScan delta_std_scan(std::span<const double> f, std::span<const double> g,
                       LagRange range, std::int64_t min_overlap = 2,
                       ScanEngine engine = ScanEngine::kAuto);

/// Mean absolute pointwise difference over the overlap (the simultaneity
/// rejection statistic).
LagScan mean_abs_diff_scan(std::span<const double> f,
                           std::span<const double> g, LagRange range,
                           std::int64_t min_overlap = 1);

/// Extremal lag of a scan converted to seconds (m / sample_rate_hz). Exact
/// score ties break toward the smallest |m|, then the smaller m. A scan
/// whose scores are all equal appends a flatness warning.
LagEstimate best_lag(const LagScan& scan, double sample_rate_hz,
                     std::vector<std::string>* warnings = nullptr);

}  // namespace tsync::kernels

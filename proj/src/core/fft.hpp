// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

namespace tsync::fft {

/// Product sums c[m] = sum_n f[n] * g[n+m] for every m in [m_min, m_max],
/// computed with zero-padded real FFTs. Out-of-range indices contribute
/// zero, so each c[m] equals the sum over the valid overlap only.
///
/// Returned vector has m_max - m_min + 1 entries, index i holding m_min + i.
std::vector<double> correlation_sums(std::span<const double> f,
                                     std::span<const double> g, int m_min,
                                     int m_max);

}  // namespace tsync::fft

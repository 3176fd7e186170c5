// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/errors.hpp"
#include "core/fft.hpp"

namespace tsync::kernels {
namespace {

constexpr const char* kStage = "kernels";

struct ClippedRange {
  int m_min;
  int m_max;
  std::size_t count() const {
    return static_cast<std::size_t>(m_max - m_min) + 1;
  }
};

// Lags in `range` whose overlap meets min_overlap. The valid set of a
// piecewise-linear l[m] is one contiguous interval.
ClippedRange clip_range(std::span<const double> f, std::span<const double> g,
                        LagRange range, std::int64_t min_overlap) {
  if (f.empty() || g.empty())
    fail(ErrorKind::kInvalidArgument, kStage, "empty input signal");
  const auto nf = static_cast<std::int64_t>(f.size());
  const auto ng = static_cast<std::int64_t>(g.size());
  min_overlap = std::max<std::int64_t>(min_overlap, 1);
  // l[m] >= k  <=>  k - nf <= m <= ng - k.
  const std::int64_t lo = std::max<std::int64_t>(range.m_min, min_overlap - nf);
  const std::int64_t hi = std::min<std::int64_t>(range.m_max, ng - min_overlap);
  if (lo > hi)
    fail(ErrorKind::kInvalidArgument, kStage,
         "empty lag range after overlap filtering");
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

struct OverlapWindow {
  std::int64_t n0;
  std::int64_t n1;  // exclusive
  std::int64_t len() const { return n1 - n0; }
};

OverlapWindow window_at(std::int64_t nf, std::int64_t ng, std::int64_t m) {
  return {std::max<std::int64_t>(0, -m), std::min<std::int64_t>(nf, ng - m)};
}

std::vector<std::int64_t> overlaps_for(std::span<const double> f,
                                       std::span<const double> g,
                                       const ClippedRange& r) {
  std::vector<std::int64_t> out(r.count());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = overlap_length(static_cast<std::int64_t>(f.size()),
                            static_cast<std::int64_t>(g.size()),
                            static_cast<std::int64_t>(r.m_min) +
                                static_cast<std::int64_t>(i));
  return out;
}

bool prefer_transform(const ClippedRange& r,
                      const std::vector<std::int64_t>& overlaps,
                      std::size_t nf, std::size_t ng, ScanEngine engine) {
  if (engine == ScanEngine::kDirect) return false;
  if (engine == ScanEngine::kTransform) return true;
  const double direct_cost = static_cast<double>(
      std::accumulate(overlaps.begin(), overlaps.end(), std::int64_t{0}));
  std::size_t size = 1;
  while (size < nf + ng) size <<= 1;
  const double transform_cost =
      15.0 * static_cast<double>(size) * std::log2(static_cast<double>(size));
  (void)r;
  return direct_cost > 4.0 * transform_cost;
}

std::vector<double> product_sums_direct(std::span<const double> f,
                                        std::span<const double> g,
                                        const ClippedRange& r) {
  std::vector<double> sums(r.count());
  const auto nf = static_cast<std::int64_t>(f.size());
  const auto ng = static_cast<std::int64_t>(g.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const std::int64_t m = r.m_min + static_cast<std::int64_t>(i);
    const auto w = window_at(nf, ng, m);
    double acc = 0.0;
    for (std::int64_t n = w.n0; n < w.n1; ++n) acc += f[n] * g[n + m];
    sums[i] = acc;
  }
  return sums;
}

std::vector<double> demeaned(std::span<const double> x) {
  const double mean =
      std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  std::vector<double> out(x.begin(), x.end());
  for (double& v : out) v -= mean;
  return out;
}

std::vector<double> prefix_sums(std::span<const double> x, bool squared) {
  std::vector<double> out(x.size() + 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i + 1] = out[i] + (squared ? x[i] * x[i] : x[i]);
  return out;
}

LagScan correlation_like_scan(std::span<const double> f,
                              std::span<const double> g, LagRange range,
                              std::int64_t min_overlap, ScanEngine engine,
                              LagMethod method) {
  const ClippedRange r = clip_range(f, g, range, min_overlap);
  LagScan scan;
  scan.m_min = r.m_min;
  scan.polarity = ScanPolarity::kMaximize;
  scan.method = method;
  scan.overlap_lengths = overlaps_for(f, g, r);
  std::vector<double> sums =
      prefer_transform(r, scan.overlap_lengths, f.size(), g.size(), engine)
          ? fft::correlation_sums(f, g, r.m_min, r.m_max)
          : product_sums_direct(f, g, r);
  scan.scores.resize(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i)
    scan.scores[i] = sums[i] / static_cast<double>(scan.overlap_lengths[i]);
  return scan;
}

}  // namespace

std::int64_t overlap_length(std::int64_t n_f, std::int64_t n_g,
                            std::int64_t m) {
  return std::min(n_f, n_g - m) - std::max<std::int64_t>(0, -m);
}

LagRange containment_range(std::size_t n_f, std::size_t n_g, double fraction) {
  fraction = std::clamp(fraction, 0.5, 1.0);
  const auto shorter = static_cast<double>(std::min(n_f, n_g));
  const auto k = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(fraction * shorter)));
  return {static_cast<int>(k - static_cast<std::int64_t>(n_f)),
          static_cast<int>(static_cast<std::int64_t>(n_g) - k)};
}

LagScan cross_correlation_scan(std::span<const double> f,
                               std::span<const double> g, LagRange range,
                               std::int64_t min_overlap, ScanEngine engine) {
  return correlation_like_scan(f, g, range, min_overlap, engine,
                               LagMethod::kXcorr);
}

LagScan cross_covariance_scan(std::span<const double> f,
                              std::span<const double> g, LagRange range,
                              std::int64_t min_overlap, ScanEngine engine) {
  const std::vector<double> fc = demeaned(f);
  const std::vector<double> gc = demeaned(g);
  LagScan scan =
      correlation_like_scan(fc, gc, range, min_overlap, engine, LagMethod::kXcov);
  return scan;
}

double huber(double x, double delta) {
  const double ax = std::abs(x);
  return ax <= delta ? 0.5 * x * x : delta * (ax - 0.5 * delta);
}

LagScan delta_error_scan(std::span<const double> f, std::span<const double> g,
                         LagRange range, double delta,
                         std::int64_t min_overlap, ScanEngine engine) {
  (void)engine;  // no transform decomposition of the Huber sum
  if (!(delta > 0.0))
    fail(ErrorKind::kInvalidArgument, kStage, "huber delta must be positive");
  const ClippedRange r = clip_range(f, g, range, min_overlap);
  LagScan scan;
  scan.m_min = r.m_min;
  scan.polarity = ScanPolarity::kMinimize;
  scan.method = LagMethod::kDeltaError;
  scan.overlap_lengths = overlaps_for(f, g, r);
  scan.scores.resize(r.count());
  const auto nf = static_cast<std::int64_t>(f.size());
  const auto ng = static_cast<std::int64_t>(g.size());
  for (std::size_t i = 0; i < scan.scores.size(); ++i) {
    const std::int64_t m = r.m_min + static_cast<std::int64_t>(i);
    const auto w = window_at(nf, ng, m);
    double acc = 0.0;
    for (std::int64_t n = w.n0; n < w.n1; ++n)
      acc += huber(f[n] - g[n + m], delta);
    scan.scores[i] = acc / static_cast<double>(scan.overlap_lengths[i]);
  }
  return scan;
}

LagScan delta_std_scan(std::span<const double> f, std::span<const double> g,
                       LagRange range, std::int64_t min_overlap,
                       ScanEngine engine) {
  min_overlap = std::max<std::int64_t>(min_overlap, 2);
  const ClippedRange r = clip_range(f, g, range, min_overlap);
  LagScan scan;
  scan.m_min = r.m_min;
  scan.polarity = ScanPolarity::kMinimize;
  scan.method = LagMethod::kDeltaStd;
  scan.overlap_lengths = overlaps_for(f, g, r);
  scan.scores.resize(r.count());
  const auto nf = static_cast<std::int64_t>(f.size());
  const auto ng = static_cast<std::int64_t>(g.size());

  if (prefer_transform(r, scan.overlap_lengths, f.size(), g.size(), engine)) {
    // The score is invariant to adding constants, so both signals are
    // demeaned first; that keeps the decomposed sums well conditioned even
    // for large-offset raw signals.
    const std::vector<double> fc = demeaned(f);
    const std::vector<double> gc = demeaned(g);
    const std::vector<double> cross =
        fft::correlation_sums(fc, gc, r.m_min, r.m_max);
    const auto pf = prefix_sums(fc, false);
    const auto pf2 = prefix_sums(fc, true);
    const auto pg = prefix_sums(gc, false);
    const auto pg2 = prefix_sums(gc, true);
    for (std::size_t i = 0; i < scan.scores.size(); ++i) {
      const std::int64_t m = r.m_min + static_cast<std::int64_t>(i);
      const auto w = window_at(nf, ng, m);
      const double l = static_cast<double>(scan.overlap_lengths[i]);
      const double sf = pf[w.n1] - pf[w.n0];
      const double sg = pg[w.n1 + m] - pg[w.n0 + m];
      const double sf2 = pf2[w.n1] - pf2[w.n0];
      const double sg2 = pg2[w.n1 + m] - pg2[w.n0 + m];
      const double s1 = sf - sg;
      const double s2 = sf2 + sg2 - 2.0 * cross[i];
      const double var = std::max(0.0, (s2 - s1 * s1 / l) / (l - 1.0));
      scan.scores[i] = std::sqrt(var);
    }
    return scan;
  }

  for (std::size_t i = 0; i < scan.scores.size(); ++i) {
    const std::int64_t m = r.m_min + static_cast<std::int64_t>(i);
    const auto w = window_at(nf, ng, m);
    const double l = static_cast<double>(scan.overlap_lengths[i]);
    double mean = 0.0;
    for (std::int64_t n = w.n0; n < w.n1; ++n) mean += f[n] - g[n + m];
    mean /= l;
    double acc = 0.0;
    for (std::int64_t n = w.n0; n < w.n1; ++n) {
      const double d = f[n] - g[n + m] - mean;
      acc += d * d;
    }
    scan.scores[i] = std::sqrt(acc / (l - 1.0));
  }
  return scan;
}

LagScan mean_abs_diff_scan(std::span<const double> f,
                           std::span<const double> g, LagRange range,
                           std::int64_t min_overlap) {
  const ClippedRange r = clip_range(f, g, range, min_overlap);
  LagScan scan;
  scan.m_min = r.m_min;
  scan.polarity = ScanPolarity::kMinimize;
  scan.method = LagMethod::kMeanAbsDiff;
  scan.overlap_lengths = overlaps_for(f, g, r);
  scan.scores.resize(r.count());
  const auto nf = static_cast<std::int64_t>(f.size());
  const auto ng = static_cast<std::int64_t>(g.size());
  for (std::size_t i = 0; i < scan.scores.size(); ++i) {
    const std::int64_t m = r.m_min + static_cast<std::int64_t>(i);
    const auto w = window_at(nf, ng, m);
    double acc = 0.0;
    for (std::int64_t n = w.n0; n < w.n1; ++n)
      acc += std::abs(f[n] - g[n + m]);
    scan.scores[i] = acc / static_cast<double>(scan.overlap_lengths[i]);
  }
  return scan;
}

LagEstimate best_lag(const LagScan& scan, double sample_rate_hz,
                     std::vector<std::string>* warnings) {
  if (scan.scores.empty())
    fail(ErrorKind::kInvalidArgument, kStage, "best_lag on an empty scan");
  if (!(sample_rate_hz > 0.0))
    fail(ErrorKind::kInvalidArgument, kStage, "sample rate must be positive");

  const bool maximize = scan.polarity == ScanPolarity::kMaximize;
  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.scores.size(); ++i) {
    const double s = scan.scores[i];
    const double b = scan.scores[best];
    if (maximize ? s > b : s < b) {
      best = i;
    } else if (s == b) {
      const int mi = scan.m_at(i);
      const int mb = scan.m_at(best);
      if (std::abs(mi) < std::abs(mb) ||
          (std::abs(mi) == std::abs(mb) && mi < mb))
        best = i;
    }
  }

  const bool flat = std::all_of(
      scan.scores.begin(), scan.scores.end(),
      [&](double s) { return s == scan.scores.front(); });
  if (flat && scan.scores.size() > 1 && warnings)
    warnings->push_back("lag scan is flat; alignment is ambiguous");

  LagEstimate est;
  est.lag_s = static_cast<double>(scan.m_at(best)) / sample_rate_hz;
  est.score = scan.scores[best];
  est.polarity = scan.polarity;
  est.method = scan.method;
  est.search_min_s = static_cast<double>(scan.m_min) / sample_rate_hz;
  est.search_max_s = static_cast<double>(scan.m_max()) / sample_rate_hz;
  return est;
}

}  // namespace tsync::kernels

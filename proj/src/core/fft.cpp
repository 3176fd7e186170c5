// Copyright (C) 2026 tracesync contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "core/errors.hpp"

namespace tsync::fft {
namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// FFTW plan creation is not thread safe and plans are tied to their buffers,
// so all transform work happens under one lock. Plans and buffers are cached
// per size; scans reuse a handful of sizes heavily.
struct PlanSet {
  std::size_t n = 0;
  double* real = nullptr;
  fftw_complex* spec_a = nullptr;
  fftw_complex* spec_b = nullptr;
  fftw_plan forward{};
  fftw_plan backward{};

  explicit PlanSet(std::size_t size) : n(size) {
    real = fftw_alloc_real(n);
    spec_a = fftw_alloc_complex(n / 2 + 1);
    spec_b = fftw_alloc_complex(n / 2 + 1);
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(n), real, spec_a,
                                   FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec_a, real,
                                    FFTW_ESTIMATE);
    if (!real || !spec_a || !spec_b || !forward || !backward)
      fail(ErrorKind::kInternal, "fft", "failed to allocate FFT plan");
  }
  ~PlanSet() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(real);
    fftw_free(spec_a);
    fftw_free(spec_b);
  }
  PlanSet(const PlanSet&) = delete;
  PlanSet& operator=(const PlanSet&) = delete;
};

std::mutex g_fft_mutex;
std::map<std::size_t, std::unique_ptr<PlanSet>>& plan_cache() {
  static std::map<std::size_t, std::unique_ptr<PlanSet>> cache;
  return cache;
}

PlanSet& plans_for(std::size_t n) {
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it == cache.end()) {
    if (cache.size() >= 12) cache.clear();
    it = cache.emplace(n, std::make_unique<PlanSet>(n)).first;
  }
  return *it->second;
}

}  // namespace

std::vector<double> correlation_sums(std::span<const double> f,
                                     std::span<const double> g, int m_min,
                                     int m_max) {
  const std::size_t nf = f.size();
  const std::size_t ng = g.size();
  if (nf == 0 || ng == 0 || m_max < m_min)
    fail(ErrorKind::kInvalidArgument, "fft", "empty correlation request");

  const std::size_t size = next_pow2(nf + ng);

  std::vector<double> out(static_cast<std::size_t>(m_max - m_min) + 1, 0.0);

  std::lock_guard<std::mutex> lock(g_fft_mutex);
  PlanSet& p = plans_for(size);

  // Spectrum of f.
  std::memset(p.real, 0, size * sizeof(double));
  std::memcpy(p.real, f.data(), nf * sizeof(double));
  fftw_execute_dft_r2c(p.forward, p.real, p.spec_b);
  std::memcpy(p.spec_a, p.spec_b, (size / 2 + 1) * sizeof(fftw_complex));

  // Spectrum of g, then conj(F) * G in place.
  std::memset(p.real, 0, size * sizeof(double));
  std::memcpy(p.real, g.data(), ng * sizeof(double));
  fftw_execute_dft_r2c(p.forward, p.real, p.spec_b);
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t k = 0; k < size / 2 + 1; ++k) {
    const std::complex<double> a(p.spec_a[k][0], p.spec_a[k][1]);
    const std::complex<double> b(p.spec_b[k][0], p.spec_b[k][1]);
    const std::complex<double> c = std::conj(a) * b * scale;
    p.spec_a[k][0] = c.real();
    p.spec_a[k][1] = c.imag();
  }
  fftw_execute_dft_c2r(p.backward, p.spec_a, p.real);

  // p.real[j] = sum_n f[n] g[(n+j) mod size]; padding makes the circular
  // sum equal the linear one for j in [-(nf-1), ng-1].
  for (int m = m_min; m <= m_max; ++m) {
    const std::size_t j =
        m >= 0 ? static_cast<std::size_t>(m)
               : size - static_cast<std::size_t>(-m);
    out[static_cast<std::size_t>(m - m_min)] = p.real[j];
  }
  return out;
}

}  // namespace tsync::fft

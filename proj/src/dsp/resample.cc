// dsp/resample.cc

// Copyright 2026  The ugp authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "dsp/resample.h"

#include <cmath>

#include "common/error.h"

namespace ugp {
namespace dsp {

namespace {

constexpr double kKaiserBeta = 8.0;
constexpr int kZeroCrossings = 16;

// Modified Bessel function of the first kind, order zero (power series).
double BesselI0(double x) {
  double sum = 1.0, term = 1.0;
  double half = x / 2.0;
  for (int m = 1; m < 64; ++m) {
    term *= (half / m) * (half / m);
    sum += term;
    if (term < sum * 1e-14) break;
  }
  return sum;
}

double Sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  double px = M_PI * x;
  return std::sin(px) / px;
}

}  // namespace

Audio Resample(const Audio &in, int target_rate) {
  if (in.sample_rate <= 0 || target_rate <= 0)
    UGP_RAISE(kInvalidArgument) << "sample rates must be positive";
  for (double v : in.samples)
    if (!std::isfinite(v)) UGP_RAISE(kDomain) << "non-finite audio sample";
  if (target_rate == in.sample_rate) return in;

  const double ratio = static_cast<double>(target_rate) / in.sample_rate;
  // Cutoff relative to the input Nyquist; below 1 when downsampling.
  const double fc = ratio < 1.0 ? ratio : 1.0;
  const double half_width = kZeroCrossings / fc;  // in input samples
  const double i0_beta = BesselI0(kKaiserBeta);

  const int64_t n_in = static_cast<int64_t>(in.samples.size());
  const int64_t n_out = static_cast<int64_t>(std::llround(n_in * ratio));
  Audio out;
  out.sample_rate = target_rate;
  out.samples.resize(n_out);

  for (int64_t n = 0; n < n_out; ++n) {
    const double t = static_cast<double>(n) / ratio;  // input-sample time
    const int64_t k_lo = static_cast<int64_t>(std::ceil(t - half_width));
    const int64_t k_hi = static_cast<int64_t>(std::floor(t + half_width));
    double acc = 0.0;
    for (int64_t k = std::max<int64_t>(k_lo, 0);
         k <= std::min<int64_t>(k_hi, n_in - 1); ++k) {
      const double dt = t - static_cast<double>(k);
      const double u = dt / half_width;  // in [-1, 1]
      const double w = BesselI0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - u * u))) / i0_beta;
      acc += in.samples[k] * fc * Sinc(fc * dt) * w;
    }
    out.samples[n] = acc;
  }
  return out;
}

}  // namespace dsp
}  // namespace ugp

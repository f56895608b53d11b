// dsp/fft.cc

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

#include "dsp/fft.h"

#include <cmath>

#include "common/error.h"

namespace ugp {
namespace dsp {

void Fft(std::vector<std::complex<double>> *a, bool inverse) {
  const size_t n = a->size();
  if (n == 0 || (n & (n - 1)) != 0)
    UGP_RAISE(kInvalidArgument) << "fft size must be a power of two, got " << n;

  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap((*a)[i], (*a)[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = (*a)[i + j];
        std::complex<double> v = (*a)[i + j + len / 2] * w;
        (*a)[i + j] = u + v;
        (*a)[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (auto &x : *a) x /= static_cast<double>(n);
}

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> PowerSpectrum(std::span<const double> frame, int nfft) {
  if (nfft < static_cast<int>(frame.size()))
    UGP_RAISE(kInvalidArgument) << "nfft " << nfft << " < frame size "
                                << frame.size();
  std::vector<std::complex<double>> buf(nfft, {0.0, 0.0});
  for (size_t i = 0; i < frame.size(); ++i) buf[i] = {frame[i], 0.0};
  Fft(&buf, false);
  std::vector<double> power(nfft / 2 + 1);
  for (int k = 0; k <= nfft / 2; ++k) power[k] = std::norm(buf[k]);
  return power;
}

}  // namespace dsp
}  // namespace ugp

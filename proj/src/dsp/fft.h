// dsp/fft.h

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

#ifndef UGP_DSP_FFT_H_
#define UGP_DSP_FFT_H_

#include <complex>
#include <span>
#include <vector>

namespace ugp {
namespace dsp {

// In-place radix-2 Cooley-Tukey; size must be a power of two.
void Fft(std::vector<std::complex<double>> *a, bool inverse);

int NextPowerOfTwo(int n);

// |X_k|^2 for k = 0..nfft/2 of the zero-padded frame. nfft must be a power
// of two >= frame size.
std::vector<double> PowerSpectrum(std::span<const double> frame, int nfft);

}  // namespace dsp
}  // namespace ugp

#endif  // UGP_DSP_FFT_H_

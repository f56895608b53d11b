// dsp/mfcc.h

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

#ifndef UGP_DSP_MFCC_H_
#define UGP_DSP_MFCC_H_

#include <vector>

#include "dsp/features.h"
#include "dsp/wav.h"

namespace ugp {
namespace dsp {

double HzToMel(double hz);
double MelToHz(double mel);

// Triangular filterbank over power-spectrum bins 0..nfft/2, filters equally
// spaced on the mel scale from 0 Hz to Nyquist. Returns n_filters rows of
// nfft/2+1 weights.
Mat MelFilterbank(int n_filters, int nfft, int sample_rate);

// Orthonormal DCT-II matrix, n_out x n_in.
Mat DctMatrix(int n_out, int n_in);

// 25 ms / 10 ms Hamming-window MFCCs with deltas: D = 3 * n_cepstra.
// Audio shorter than one frame yields T = 0 (not an error).
FeatureSequence ComputeMfcc(const Audio &audio, const FramingConfig &cfg);

}  // namespace dsp
}  // namespace ugp

#endif  // UGP_DSP_MFCC_H_
